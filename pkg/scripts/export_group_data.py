#!/usr/bin/env python3
"""Export element lists and Cayley tables for the braid-image group and for
the three-generator family presentation of the same order-162 group.

Usage: python scripts/export_group_data.py [output_dir]
"""

import os
import sys

from su3braid.braidrep import paper_generators
from su3braid.cli import export_group
from su3braid.matgroup import close, find_isomorphism, same_matrix_set
from su3braid.su3families import CParams, DParams, d_generators


def main() -> int:
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "group_data"
    os.makedirs(out_dir, exist_ok=True)

    g1, g2 = paper_generators()
    braid_image = close([g1, g2])
    family = close(d_generators(DParams(CParams(9, 1, 1), 2, 1, 1)))

    export_group(braid_image, "elements", os.path.join(out_dir, "braid_image_elements.json"), ["g1", "g2"])
    export_group(braid_image, "cayley", os.path.join(out_dir, "braid_image_cayley.csv"))
    export_group(family, "elements", os.path.join(out_dir, "family_D91211_elements.json"), ["E", "F", "D"])
    export_group(family, "cayley", os.path.join(out_dir, "family_D91211_cayley.csv"))

    print(f"braid image order:   {braid_image.order}")
    print(f"family group order:  {family.order}")
    print(f"isomorphic:          {find_isomorphism(braid_image, family) is not None}")
    print(f"same matrix set:     {same_matrix_set(braid_image, family)}")
    print(f"files written under {out_dir}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

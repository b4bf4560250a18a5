#!/usr/bin/env python3
"""Run the full order-162 verification checklist and save the JSON report.

Usage: python scripts/run_verification.py [report.json]
"""

import sys

from su3braid.cli import run_theorem1_verification


def main() -> int:
    out_path = sys.argv[1] if len(sys.argv) > 1 else "verification_report.json"
    report = run_theorem1_verification()
    for check in report.checks:
        mark = "ok" if check.passed else "FAIL"
        print(f"[{mark:>4}] {check.id}")
    for key, value in report.info.items():
        print(f"[info] {key} = {value}")
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(report.to_json() + "\n")
    print(f"report written to {out_path}")
    print(f"overall: {'PASS' if report.overall else 'FAIL'}")
    return 0 if report.overall else 1


if __name__ == "__main__":
    raise SystemExit(main())

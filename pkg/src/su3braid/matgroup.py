"""Finite matrix-group engine over exact cyclotomic scalars.

Groups are closed element sets built by breadth-first multiplication from
a generator list.  Equality of elements is byte-exact on canonical scalar
coefficients; no floating point enters any decision.  Inverses are
conjugate transposes, which is exact because every element is unitary.

Element ordering is deterministic (BFS layer, then key), so exports and
reports reproduce byte-for-byte.  Every element carries the shortest
generator word found during closure; words are sequences of signed
1-based generator indices, negative meaning inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .matrix import UnitaryMatrix


class GroupTooLargeError(RuntimeError):
    """Closure exceeded its cap; the input likely generates an infinite group."""


class OrderExceedsCapError(RuntimeError):
    pass


class GeneratorNotInGroupError(ValueError):
    pass


class NotASubgroupError(ValueError):
    pass


class NotAbelianError(ValueError):
    pass


class DecompositionNotFoundError(RuntimeError):
    """No invariant-factor decomposition found; signals a bug at desk scale."""


class NoFactorizationError(ValueError):
    pass


class NonUniqueFactorizationError(ValueError):
    pass


class UnboundNameError(KeyError):
    pass


Word = tuple[int, ...]


@dataclass(frozen=True)
class GpElement:
    """A group element: matrix, canonical byte key, optional generator word."""

    matrix: UnitaryMatrix
    key: bytes
    word: Optional[Word] = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GpElement):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


class FiniteMatrixGroup:
    """A closed set of unitary matrices with a distinguished generator list."""

    def __init__(
        self,
        generators: tuple[GpElement, ...],
        element_list: tuple[GpElement, ...],
        working_order: int,
        dim: int,
        bfs_mult: Optional[tuple[int, ...]] = None,
        bfs_parent: Optional[tuple[int, ...]] = None,
    ):
        self.generators = generators
        self.element_list = element_list
        self.elements: dict[bytes, GpElement] = {e.key: e for e in element_list}
        self.working_order = working_order
        self.dim = dim
        self._bfs_mult = bfs_mult
        self._bfs_parent = bfs_parent
        self._index: dict[bytes, int] = {
            e.key: i for i, e in enumerate(element_list)
        }
        # scalar interning: entry value -> small id; matrix id-tuples -> index
        values: dict = {}
        ids_index: dict[tuple[int, ...], int] = {}
        for i, e in enumerate(element_list):
            ids_index[_id_tuple(e.matrix, values)] = i
        self._values = values
        self._ids_index = ids_index
        self._cayley: Optional[list[list[int]]] = None
        self._inverse_index: Optional[list[int]] = None

    # -- basic queries --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.element_list)

    def __len__(self) -> int:
        return len(self.element_list)

    def __iter__(self):
        return iter(self.element_list)

    def __contains__(self, element: GpElement) -> bool:
        return element.key in self.elements

    @property
    def identity(self) -> GpElement:
        return self.element_list[0]

    def index_of(self, element: GpElement) -> int:
        idx = self._index.get(element.key)
        if idx is None:
            raise GeneratorNotInGroupError("element is not in the group")
        return idx

    def lookup(self, matrix: UnitaryMatrix) -> Optional[GpElement]:
        idx = self._ids_index.get(_id_tuple_checked(matrix, self._values))
        return None if idx is None else self.element_list[idx]

    def _product_index(self, a: UnitaryMatrix, b: UnitaryMatrix) -> int:
        return self._ids_index[_id_tuple_checked(a * b, self._values)]

    # -- structure tables -----------------------------------------------------

    def cayley_table(self) -> list[list[int]]:
        """Full multiplication table; entry [i][j] is the element index of
        element(i) * element(j).  Computed once by actual matrix products."""
        if self._cayley is not None:
            return self._cayley
        mats = [e.matrix for e in self.element_list]
        cols_all = [tuple(zip(*m.rows)) for m in mats]
        values = self._values
        ids_index = self._ids_index
        dim = self.dim
        krange = range(1, dim)
        table: list[list[int]] = []
        for a in mats:
            arows = a.rows
            row_out = []
            for bcols in cols_all:
                ids = []
                for r in range(dim):
                    arow = arows[r]
                    for bcol in bcols:
                        acc = arow[0] * bcol[0]
                        for k in krange:
                            acc = acc + arow[k] * bcol[k]
                        ids.append(values[acc])
                row_out.append(ids_index[tuple(ids)])
            table.append(row_out)
        self._cayley = table
        return table

    def inverse_index(self) -> list[int]:
        if self._inverse_index is None:
            self._inverse_index = [
                self._ids_index[_id_tuple_checked(e.matrix.conj_transpose(), self._values)]
                for e in self.element_list
            ]
        return self._inverse_index


def _id_tuple(matrix: UnitaryMatrix, values: dict) -> tuple[int, ...]:
    ids = []
    for row in matrix.rows:
        for v in row:
            n = values.get(v)
            if n is None:
                n = len(values)
                values[v] = n
            ids.append(n)
    return tuple(ids)


def _id_tuple_checked(matrix: UnitaryMatrix, values: dict) -> tuple[int, ...]:
    # like _id_tuple but never grows the intern table (lookup use)
    ids = []
    for row in matrix.rows:
        for v in row:
            n = values.get(v)
            if n is None:
                return (-1,)
            ids.append(n)
    return tuple(ids)


# ---------------------------------------------------------------------------
# closure


def close(
    generators: Sequence[UnitaryMatrix], cap: int = 100_000
) -> FiniteMatrixGroup:
    """Breadth-first closure of the generators and their inverses under
    left multiplication.  Raises GroupTooLargeError past the cap."""
    if not generators:
        raise ValueError("need at least one generator")
    if cap < 1:
        raise ValueError("cap must be positive")
    dim = generators[0].dim
    order = 1
    for g in generators:
        if g.dim != dim:
            raise ValueError("generators must share a dimension")
        order = math.lcm(order, g.scalar_order())
    gens = [g.embed(order) for g in generators]

    multipliers: list[tuple[int, UnitaryMatrix]] = []
    seen_mult: set[bytes] = set()
    for i, g in enumerate(gens):
        for signed, mat in ((i + 1, g), (-(i + 1), g.conj_transpose())):
            k = mat.key_bytes()
            if k not in seen_mult:
                seen_mult.add(k)
                multipliers.append((signed, mat))

    identity = UnitaryMatrix.identity(dim)
    id_el = GpElement(identity, identity.key_bytes(), ())
    elements: dict[bytes, int] = {id_el.key: 0}
    element_list: list[GpElement] = [id_el]
    bfs_mult: list[int] = [0]
    bfs_parent: list[int] = [-1]

    frontier = [0]
    while frontier:
        layer: dict[bytes, tuple[Word, UnitaryMatrix, int, int]] = {}
        for parent_idx in frontier:
            parent = element_list[parent_idx]
            for signed, mat in multipliers:
                product = mat * parent.matrix
                key = product.key_bytes()
                if key in elements:
                    continue
                word = (signed,) + parent.word
                known = layer.get(key)
                if known is None or word < known[0]:
                    layer[key] = (word, product, signed, parent_idx)
        if len(elements) + len(layer) > cap:
            raise GroupTooLargeError(
                f"closure exceeded cap={cap}; generators may not span a finite group"
            )
        frontier = []
        for key in sorted(layer):
            word, product, signed, parent_idx = layer[key]
            idx = len(element_list)
            elements[key] = idx
            element_list.append(GpElement(product, key, word))
            bfs_mult.append(signed)
            bfs_parent.append(parent_idx)
            frontier.append(idx)

    gen_elements = tuple(
        element_list[elements[g.key_bytes()]] for g in gens
    )
    return FiniteMatrixGroup(
        generators=gen_elements,
        element_list=tuple(element_list),
        working_order=order,
        dim=dim,
        bfs_mult=tuple(bfs_mult),
        bfs_parent=tuple(bfs_parent),
    )


# ---------------------------------------------------------------------------
# element and subgroup operations


def element_order(g: GpElement, cap: int = 1000) -> int:
    """Least n >= 1 with g^n = I."""
    if cap < 1:
        raise ValueError("cap must be positive")
    identity = UnitaryMatrix.identity(g.matrix.dim)
    power = g.matrix
    n = 1
    while power != identity:
        power = power * g.matrix
        n += 1
        if n > cap:
            raise OrderExceedsCapError(f"order exceeds cap={cap}")
    return n


def subgroup(group: FiniteMatrixGroup, gens: Sequence[GpElement]) -> FiniteMatrixGroup:
    """Closure of elements of `group`; asserts Lagrange on the result."""
    for g in gens:
        if g.key not in group.elements:
            raise GeneratorNotInGroupError("subgroup generator outside the group")
    sub = close([g.matrix for g in gens], cap=group.order)
    assert group.order % sub.order == 0, "Lagrange violation: not a subgroup order"
    for e in sub.element_list:
        assert e.key in group.elements, "closure escaped the ambient group"
    return sub


def is_normal(group: FiniteMatrixGroup, sub: FiniteMatrixGroup) -> bool:
    """Whether g n g^-1 stays in `sub` for the generators g of `group`
    (sufficient by generation)."""
    _require_subgroup(group, sub)
    conjugators = group.generators or group.element_list
    for g in conjugators:
        ginv = g.matrix.conj_transpose()
        for n in sub.element_list:
            if (g.matrix * n.matrix * ginv).key_bytes() not in sub.elements:
                return False
    return True


def intersect(s1: FiniteMatrixGroup, s2: FiniteMatrixGroup) -> FiniteMatrixGroup:
    """Key-set intersection, assembled as a group (no BFS provenance)."""
    if s1.dim != s2.dim:
        raise ValueError("groups live in different dimensions")
    common = [e for e in s1.element_list if e.key in s2.elements]
    common.sort(key=lambda e: (e.key != s1.identity.key, e.key))
    gens = tuple(e for e in common if e.key != s1.identity.key)
    return FiniteMatrixGroup(
        generators=gens,
        element_list=tuple(common),
        working_order=s1.working_order,
        dim=s1.dim,
    )


def abelian_invariants(group: FiniteMatrixGroup) -> tuple[int, ...]:
    """Cyclic factor orders, decreasing, by exhaustive search for a pair of
    elements with trivially intersecting cyclic spans covering the order."""
    gens = group.generators or group.element_list
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if a.matrix * b.matrix != b.matrix * a.matrix:
                raise NotAbelianError("group is not abelian")
    n = group.order
    if n == 1:
        return ()
    orders = [element_order(e, cap=n) for e in group.element_list]
    max_order = max(orders)
    if max_order == n:
        return (n,)
    for i, x in enumerate(group.element_list):
        if orders[i] != max_order:
            continue
        x_powers = _cyclic_keys(x)
        for j, y in enumerate(group.element_list):
            if orders[j] != n // max_order:
                continue
            if len(x_powers & _cyclic_keys(y)) == 1:
                return (max_order, n // max_order)
    raise DecompositionNotFoundError(
        "no two-factor decomposition found; unsupported abelian structure"
    )


def _cyclic_keys(g: GpElement) -> set[bytes]:
    identity = UnitaryMatrix.identity(g.matrix.dim)
    keys = {identity.key_bytes()}
    power = g.matrix
    while power != identity:
        keys.add(power.key_bytes())
        power = power * g.matrix
    return keys


@dataclass(frozen=True)
class SemidirectReport:
    """The four facts that certify an inner semidirect product."""

    normal: bool
    trivial_intersection: bool
    order_product: bool
    product_bijective: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.normal
            and self.trivial_intersection
            and self.order_product
            and self.product_bijective
        )


def semidirect_verify(
    group: FiniteMatrixGroup, normal_part: FiniteMatrixGroup, complement: FiniteMatrixGroup
) -> SemidirectReport:
    _require_subgroup(group, normal_part)
    _require_subgroup(group, complement)
    normal = is_normal(group, normal_part)
    trivial = intersect(normal_part, complement).order == 1
    order_product = normal_part.order * complement.order == group.order
    product_keys = set()
    inside = True
    for n in normal_part.element_list:
        for h in complement.element_list:
            key = (n.matrix * h.matrix).key_bytes()
            product_keys.add(key)
            if key not in group.elements:
                inside = False
    bijective = inside and len(product_keys) == group.order
    return SemidirectReport(normal, trivial, order_product, bijective)


def decompose(
    g: GpElement, normal_part: FiniteMatrixGroup, complement: FiniteMatrixGroup
) -> tuple[GpElement, GpElement]:
    """The unique (n, h) with g = n h, n in the normal part, h in the
    complement."""
    matches = []
    for h in complement.element_list:
        n_matrix = g.matrix * h.matrix.conj_transpose()
        n = normal_part.elements.get(n_matrix.key_bytes())
        if n is not None:
            matches.append((n, h))
    if not matches:
        raise NoFactorizationError("element has no n*h factorization")
    if len(matches) > 1:
        raise NonUniqueFactorizationError("factorization is not unique")
    return matches[0]


# ---------------------------------------------------------------------------
# words and relations


def word_eval(word: Sequence[int], gens: Sequence[GpElement]) -> GpElement:
    """Left-to-right product of signed 1-based generator indices."""
    if not gens:
        raise ValueError("need at least one generator")
    dim = gens[0].matrix.dim
    acc = UnitaryMatrix.identity(dim)
    for signed in word:
        if signed == 0 or abs(signed) > len(gens):
            raise IndexError(f"generator index {signed} out of range")
        m = gens[abs(signed) - 1].matrix
        acc = acc * (m.conj_transpose() if signed < 0 else m)
    return GpElement(acc, acc.key_bytes(), tuple(word))


NamedWord = Sequence[tuple[str, int]]


def check_relations(
    gens: Mapping[str, GpElement],
    relations: Sequence[tuple[NamedWord, NamedWord]],
) -> list[bool]:
    """For each pair of named words, whether both sides evaluate equally."""

    def evaluate(side: NamedWord) -> UnitaryMatrix:
        dim = next(iter(gens.values())).matrix.dim
        acc = UnitaryMatrix.identity(dim)
        for name, power in side:
            if name not in gens:
                raise UnboundNameError(name)
            acc = acc * gens[name].matrix ** power
        return acc

    return [evaluate(lhs) == evaluate(rhs) for lhs, rhs in relations]


# ---------------------------------------------------------------------------
# conjugacy and isomorphism


def conjugacy_classes(group: FiniteMatrixGroup) -> tuple[tuple[bytes, ...], ...]:
    """Orbits of the conjugation action, as ordered key tuples."""
    table = group.cayley_table()
    inverse = group.inverse_index()
    conjugators = [group.index_of(g) for g in (group.generators or group.element_list)]
    n = group.order
    assigned = [False] * n
    classes: list[tuple[bytes, ...]] = []
    for start in range(n):
        if assigned[start]:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for g in conjugators:
                for gi in (g, inverse[g]):
                    y = table[table[gi][x]][inverse[gi]]
                    if y not in orbit:
                        orbit.add(y)
                        stack.append(y)
        for idx in orbit:
            assigned[idx] = True
        classes.append(tuple(group.element_list[i].key for i in sorted(orbit)))
    return tuple(classes)


def _table_orders(table: list[list[int]], identity: int = 0) -> list[int]:
    orders = []
    for i in range(len(table)):
        j = i
        n = 1
        while j != identity:
            j = table[j][i]
            n += 1
        orders.append(n)
    return orders


def _class_sizes(group: FiniteMatrixGroup) -> list[int]:
    sizes = [0] * group.order
    for cls in conjugacy_classes(group):
        for key in cls:
            sizes[group._index[key]] = len(cls)
    return sizes


def find_isomorphism(
    source: FiniteMatrixGroup, target: FiniteMatrixGroup
) -> Optional[list[GpElement]]:
    """Search for generator images of `source` in `target` inducing an
    isomorphism; candidates are pruned by element order and conjugacy-class
    size, and any hit is verified on the full multiplication table.

    Returns the image list aligned with source.generators, or None.
    """
    if source.order != target.order:
        return None
    if source._bfs_parent is None:
        raise ValueError("source group needs closure provenance")
    t_source = source.cayley_table()
    t_target = target.cayley_table()
    inv_target = target.inverse_index()
    orders_s = _table_orders(t_source)
    orders_t = _table_orders(t_target)
    sizes_s = _class_sizes(source)
    sizes_t = _class_sizes(target)

    gen_indices = [source.index_of(g) for g in source.generators]
    candidate_sets = []
    for gi in gen_indices:
        profile = (orders_s[gi], sizes_s[gi])
        candidates = [
            j
            for j in range(target.order)
            if (orders_t[j], sizes_t[j]) == profile
        ]
        # try structurally identical elements first (helps the G == G case)
        gen_key = source.element_list[gi].key
        candidates.sort(key=lambda j: (target.element_list[j].key != gen_key, j))
        if not candidates:
            return None
        candidate_sets.append(candidates)

    n = source.order
    mult_signs = source._bfs_mult
    parents = source._bfs_parent

    def build_map(images: list[int]) -> Optional[list[int]]:
        phi = [0] * n
        for i in range(1, n):
            signed = mult_signs[i]
            m = images[abs(signed) - 1]
            if signed < 0:
                m = inv_target[m]
            phi[i] = t_target[m][phi[parents[i]]]
        if len(set(phi)) != n:
            return None
        return phi

    def verify(phi: list[int]) -> bool:
        for i in range(n):
            target_row = t_target[phi[i]]
            source_row = t_source[i]
            for j in range(n):
                if target_row[phi[j]] != phi[source_row[j]]:
                    return False
        return True

    def backtrack(images: list[int]) -> Optional[list[int]]:
        if len(images) == len(candidate_sets):
            phi = build_map(images)
            if phi is not None and verify(phi):
                return phi
            return None
        for candidate in candidate_sets[len(images)]:
            result = backtrack(images + [candidate])
            if result is not None:
                return result
        return None

    phi = backtrack([])
    if phi is None:
        return None
    return [target.element_list[phi[gi]] for gi in gen_indices]


def same_matrix_set(a: FiniteMatrixGroup, b: FiniteMatrixGroup) -> bool:
    """Whether the two groups coincide as matrix sets once embedded into a
    common cyclotomic order (an extra report; isomorphism does not need it)."""
    if a.dim != b.dim or a.order != b.order:
        return False
    common = math.lcm(a.working_order, b.working_order)
    keys_a = {e.matrix.embed(common).key_bytes() for e in a.element_list}
    keys_b = {e.matrix.embed(common).key_bytes() for e in b.element_list}
    return keys_a == keys_b


# ---------------------------------------------------------------------------
# exports


def render_word(word: Optional[Word], names: Sequence[str]) -> str:
    """Human form of a signed-index word, e.g. (1, 2, 2, -1) -> g1*g2^2*g1^-1."""
    if word is None:
        return ""
    if not word:
        return "e"
    parts: list[tuple[int, int]] = []  # (signed index, run length)
    for signed in word:
        if parts and parts[-1][0] == signed:
            parts[-1] = (signed, parts[-1][1] + 1)
        else:
            parts.append((signed, 1))
    rendered = []
    for signed, run in parts:
        name = names[abs(signed) - 1]
        power = run if signed > 0 else -run
        rendered.append(name if power == 1 else f"{name}^{power}")
    return "*".join(rendered)


def element_records(
    group: FiniteMatrixGroup, names: Optional[Sequence[str]] = None
) -> list[dict]:
    """Deterministic per-element export records."""
    if names is None:
        names = [f"g{i+1}" for i in range(len(group.generators))]
    return [
        {
            "index": i,
            "key": e.key.decode("ascii"),
            "word": render_word(e.word, names),
            "matrix": e.matrix.to_dict(),
        }
        for i, e in enumerate(group.element_list)
    ]


def cayley_csv(group: FiniteMatrixGroup) -> str:
    table = group.cayley_table()
    return "\n".join(",".join(str(v) for v in row) for row in table) + "\n"


def _require_subgroup(group: FiniteMatrixGroup, sub: FiniteMatrixGroup) -> None:
    for e in sub.element_list:
        if e.key not in group.elements:
            raise NotASubgroupError("claimed subgroup has an element outside the group")

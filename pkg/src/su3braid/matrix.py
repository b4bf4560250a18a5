"""Square matrices over exact cyclotomic scalars, specialized to unitaries.

Matrices are immutable tuples of :class:`~su3braid.cyclo.Cyclo` entries.
:meth:`UnitaryMatrix.from_rows` checks exact unitarity (M M* = I) and that
the determinant has modulus one; internal products skip the re-check since
products of unitaries stay unitary under exact arithmetic.  Inverses are
conjugate transposes, which keeps group computations division-free.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .cyclo import Cyclo, CycloLike, _coerce


class NotUnitaryError(ValueError):
    """Raised when a matrix fails the exact unitarity invariant."""


class UnitaryMatrix:
    __slots__ = ("dim", "rows")

    dim: int
    rows: tuple[tuple[Cyclo, ...], ...]

    def __init__(self, rows: tuple[tuple[Cyclo, ...], ...], _raw: bool = False):
        if not _raw:
            raise TypeError("use UnitaryMatrix.from_rows")
        self.rows = rows
        self.dim = len(rows)

    @staticmethod
    def _make(rows: tuple[tuple[Cyclo, ...], ...]) -> "UnitaryMatrix":
        return UnitaryMatrix(rows, _raw=True)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[CycloLike]]) -> "UnitaryMatrix":
        """Validating constructor: square shape, exact unitarity, |det| = 1."""
        dim = len(rows)
        conv: list[tuple[Cyclo, ...]] = []
        for row in rows:
            if len(row) != dim:
                raise ValueError("matrix must be square")
            coerced = [_coerce(v) for v in row]
            if NotImplemented in coerced:
                raise TypeError("matrix entries must be Cyclo, int, or Fraction")
            conv.append(tuple(coerced))
        m = UnitaryMatrix._make(tuple(conv))
        if not m.is_unitary():
            raise NotUnitaryError("matrix is not exactly unitary")
        d = m.det()
        if d * d.conj() != 1:
            raise NotUnitaryError("determinant does not have modulus one")
        return m

    @staticmethod
    def identity(dim: int) -> "UnitaryMatrix":
        one = Cyclo.one()
        zero = Cyclo.zero()
        return UnitaryMatrix._make(
            tuple(
                tuple(one if i == j else zero for j in range(dim))
                for i in range(dim)
            )
        )

    @staticmethod
    def diagonal(entries: Sequence[CycloLike]) -> "UnitaryMatrix":
        zero = Cyclo.zero()
        vals = [_coerce(v) for v in entries]
        return UnitaryMatrix.from_rows(
            [
                [vals[i] if i == j else zero for j in range(len(vals))]
                for i in range(len(vals))
            ]
        )

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other: "UnitaryMatrix") -> "UnitaryMatrix":
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        bcols = tuple(zip(*other.rows))
        out = []
        for arow in self.rows:
            line = []
            for bcol in bcols:
                acc = arow[0] * bcol[0]
                for a, b in zip(arow[1:], bcol[1:]):
                    acc = acc + a * b
                line.append(acc)
            out.append(tuple(line))
        return UnitaryMatrix._make(tuple(out))

    def __pow__(self, exponent: int) -> "UnitaryMatrix":
        base = self if exponent >= 0 else self.conj_transpose()
        e = abs(exponent)
        result = UnitaryMatrix.identity(self.dim)
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def scale(self, factor: CycloLike) -> "UnitaryMatrix":
        f = _coerce(factor)
        return UnitaryMatrix._make(
            tuple(tuple(f * v for v in row) for row in self.rows)
        )

    def __rmul__(self, factor: CycloLike) -> "UnitaryMatrix":
        if isinstance(factor, UnitaryMatrix):
            return NotImplemented
        return self.scale(factor)

    def conj_transpose(self) -> "UnitaryMatrix":
        return UnitaryMatrix._make(
            tuple(
                tuple(self.rows[j][i].conj() for j in range(self.dim))
                for i in range(self.dim)
            )
        )

    inverse = conj_transpose

    # -- scalar invariants ----------------------------------------------------

    def trace(self) -> Cyclo:
        acc = self.rows[0][0]
        for i in range(1, self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def det(self) -> Cyclo:
        acc = Cyclo.zero()
        for perm in permutations(range(self.dim)):
            term = self.rows[0][perm[0]]
            for i in range(1, self.dim):
                term = term * self.rows[i][perm[i]]
            acc = acc + term if _perm_sign(perm) > 0 else acc - term
        return acc

    def charpoly(self) -> tuple[Cyclo, ...]:
        """Monic characteristic polynomial coefficients, low degree first,
        by the Faddeev-LeVerrier recursion (exact; divisions are by
        integers only)."""
        n = self.dim
        coeffs = [Cyclo.zero()] * (n + 1)
        coeffs[n] = Cyclo.one()
        mk = self
        for k in range(1, n + 1):
            bk = -(mk.trace() / k)
            coeffs[n - k] = bk
            if k < n:
                mk = self * _add_scalar(mk, bk)
        return tuple(coeffs)

    def is_unitary(self) -> bool:
        return self * self.conj_transpose() == UnitaryMatrix.identity(self.dim)

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    # -- comparisons / conversion ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    __hash__ = None  # use GpElement keys for hashing in group contexts

    def scalar_order(self) -> int:
        """Smallest cyclotomic order containing every entry."""
        import math

        order = 1
        for row in self.rows:
            for v in row:
                order = math.lcm(order, v.order)
        return order

    def embed(self, order: int) -> "UnitaryMatrix":
        return UnitaryMatrix._make(
            tuple(tuple(v.embed(order) if v.order > 1 else v for v in row) for row in self.rows)
        )

    def key_bytes(self) -> bytes:
        """Canonical byte key: entry representations are unique per value,
        so equal matrices built from a common working order share keys."""
        parts = []
        for row in self.rows:
            for v in row:
                parts.append(
                    b"%d:%s/%d" % (v.order, b",".join(b"%d" % n for n in v.nums), v.den)
                )
        return b"%d|" % self.dim + b";".join(parts)

    def to_dict(self) -> dict:
        floats = [[v.to_complex() for v in row] for row in self.rows]
        return {
            "dim": self.dim,
            "rows": [[v.to_dict() for v in row] for row in self.rows],
            "float_rows": [[[z.real, z.imag] for z in row] for row in floats],
        }

    def __repr__(self) -> str:
        lines = [" ".join(repr(v) for v in row) for row in self.rows]
        return "UnitaryMatrix(\n  " + "\n  ".join(lines) + "\n)"


def _perm_sign(perm: Iterable[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _add_scalar(m: UnitaryMatrix, c: Cyclo) -> UnitaryMatrix:
    rows = [list(row) for row in m.rows]
    for i in range(m.dim):
        rows[i][i] = rows[i][i] + c
    return UnitaryMatrix._make(tuple(tuple(r) for r in rows))

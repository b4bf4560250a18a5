"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is stored as an integer coefficient vector of length phi(N) (the
canonical remainder modulo the N-th cyclotomic polynomial Phi_N) together
with a positive common denominator.  That representation is unique, so
equality and hashing are plain structural comparisons.  One global
canonicalization applies: a value that happens to be rational is always
stored at order 1, whatever order it was computed in.

Arithmetic between values of different orders promotes both to the lcm
order first.  Hashing is representation-based, so values meant to share a
dict should share a working order (see :func:`embed`); the group-theory
layer enforces that by embedding every matrix entry up front.

Nothing here ever touches floating point except :meth:`Cyclo.to_complex`,
which exists for display and cross-checking only.

Values are immutable and all operations are pure, so sharing across
threads is safe; the per-order tables and operation memos are insert-only
dicts whose entries are idempotent, safe for concurrent reads once built.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

RationalLike = Union[int, Fraction]
CycloLike = Union["Cyclo", int, Fraction]


class NonDivisibleOrderError(ValueError):
    """Embedding requested between incompatible cyclotomic orders."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials and per-order tables


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # num, den: int coefficients low-to-high, den monic; division is exact.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, d in enumerate(den):
                num[i - dd + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


_PHI_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first, computed by dividing
    x^n - 1 by Phi_d over all proper divisors d of n."""
    if n in _PHI_CACHE:
        return _PHI_CACHE[n]
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    result = tuple(poly)
    _PHI_CACHE[n] = result
    return result


class _Context:
    """Per-order tables: Phi_N, its reduction rule, and canonical
    representations of every power zeta_N^e for e < N."""

    __slots__ = ("order", "deg", "tail", "powrep")

    def __init__(self, order: int):
        phi = cyclotomic_polynomial(order)
        deg = len(phi) - 1
        # x^deg == -(sum of tail terms); folding rule used by reduction.
        tail = tuple((i, c) for i, c in enumerate(phi[:deg]) if c)
        powrep: list[tuple[int, ...]] = []
        vec = [0] * deg
        for e in range(order):
            if e == 0:
                vec = [1] + [0] * (deg - 1)
            else:
                lead = vec[deg - 1]
                vec = [0] + vec[: deg - 1]
                if lead:
                    for i, c in tail:
                        vec[i] -= lead * c
            powrep.append(tuple(vec))
        self.order = order
        self.deg = deg
        self.tail = tail
        self.powrep = tuple(powrep)

    def reduce(self, coeffs: list[int]) -> list[int]:
        deg = self.deg
        tail = self.tail
        for e in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[e]
            if c:
                coeffs[e] = 0
                base = e - deg
                for i, t in tail:
                    coeffs[base + i] -= c * t
        return coeffs[:deg]


_CONTEXTS: dict[int, _Context] = {}


def _context(order: int) -> _Context:
    ctx = _CONTEXTS.get(order)
    if ctx is None:
        ctx = _Context(order)
        _CONTEXTS[order] = ctx
    return ctx


# ---------------------------------------------------------------------------
# the field element


class Cyclo:
    """An element of Q(zeta_N), immutable and exactly canonical."""

    __slots__ = ("order", "nums", "den", "_hash")

    order: int
    nums: tuple[int, ...]
    den: int

    def __init__(self, order: int, nums: tuple[int, ...], den: int, _raw: bool = False):
        if not _raw:
            raise TypeError("use the Cyclo constructors (rational, root_of_unity, ...)")
        self.order = order
        self.nums = nums
        self.den = den
        self._hash = hash((order, nums, den))

    # -- construction -------------------------------------------------------

    @staticmethod
    def _make(order: int, nums: Iterable[int], den: int) -> "Cyclo":
        nums = list(nums)
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        if order > 1 and not any(nums[1:]):
            order, nums = 1, nums[:1]
        g = math.gcd(den, *nums)
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        return Cyclo(order, tuple(nums), den, _raw=True)

    @staticmethod
    def rational(value: RationalLike) -> "Cyclo":
        f = Fraction(value)
        return Cyclo._make(1, [f.numerator], f.denominator)

    @staticmethod
    def zero() -> "Cyclo":
        return _ZERO

    @staticmethod
    def one() -> "Cyclo":
        return _ONE

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.den == 1 and not any(self.nums)

    def is_rational(self) -> bool:
        return self.order == 1

    def rational_value(self) -> Fraction:
        if self.order != 1:
            raise ValueError("not a rational value")
        return Fraction(self.nums[0], self.den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients of the canonical remainder mod Phi_N, as fractions."""
        return tuple(Fraction(n, self.den) for n in self.nums)

    # -- arithmetic ----------------------------------------------------------

    def _lift_vec(self, order: int) -> list[int]:
        """Coefficient vector of this value re-indexed at a multiple order
        (no canonicalization); denominator is unchanged."""
        if self.order == order:
            return list(self.nums)
        deg = _context(order).deg
        if self.order == 1:
            return [self.nums[0]] + [0] * (deg - 1)
        scale = order // self.order
        powrep = _context(order).powrep
        out = [0] * deg
        for e, c in enumerate(self.nums):
            if c:
                for i, r in enumerate(powrep[e * scale]):
                    if r:
                        out[i] += c * r
        return out

    def __add__(self, other: CycloLike) -> "Cyclo":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        key = (self, other)
        hit = _ADD_MEMO.get(key)
        if hit is not None:
            return hit
        a, b = self, other
        order = a.order if a.order == b.order else math.lcm(a.order, b.order)
        av = a._lift_vec(order)
        bv = b._lift_vec(order)
        if a.den == b.den:
            result = Cyclo._make(order, [x + y for x, y in zip(av, bv)], a.den)
        else:
            g = math.gcd(a.den, b.den)
            sa = b.den // g
            sb = a.den // g
            nums = [x * sa + y * sb for x, y in zip(av, bv)]
            result = Cyclo._make(order, nums, a.den * sa)
        _ADD_MEMO[key] = result
        return result

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo._make(self.order, [-c for c in self.nums], self.den)

    def __sub__(self, other: CycloLike) -> "Cyclo":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: CycloLike) -> "Cyclo":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: CycloLike) -> "Cyclo":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        key = (self, other)
        hit = _MUL_MEMO.get(key)
        if hit is not None:
            return hit
        a, b = self, other
        if a.order == 1:
            c = a.nums[0]
            result = Cyclo._make(b.order, [c * x for x in b.nums], a.den * b.den)
        elif b.order == 1:
            c = b.nums[0]
            result = Cyclo._make(a.order, [c * x for x in a.nums], a.den * b.den)
        else:
            order = a.order if a.order == b.order else math.lcm(a.order, b.order)
            an = a._lift_vec(order)
            bn = b._lift_vec(order)
            conv = [0] * (2 * len(an) - 1)
            for i, ai in enumerate(an):
                if ai:
                    for j, bj in enumerate(bn):
                        if bj:
                            conv[i + j] += ai * bj
            ctx = _context(order)
            result = Cyclo._make(order, ctx.reduce(conv), a.den * b.den)
        _MUL_MEMO[key] = result
        return result

    __rmul__ = __mul__

    def inv(self) -> "Cyclo":
        """Exact inverse via the extended Euclidean algorithm on the
        coefficient polynomial and Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.order == 1:
            return Cyclo._make(1, [self.den * (1 if self.nums[0] > 0 else -1)], abs(self.nums[0]))
        p = [Fraction(c, self.den) for c in self.nums]
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        g, s = _poly_xgcd(p, phi)
        # Phi_N is irreducible over Q, so g is a nonzero constant.
        scale = Fraction(1) / g[0]
        s = [c * scale for c in s]
        den = math.lcm(*(c.denominator for c in s)) if s else 1
        nums = [int(c * den) for c in s]
        nums += [0] * (_context(self.order).deg - len(nums))
        return Cyclo._make(self.order, nums, den)

    def __truediv__(self, other: CycloLike) -> "Cyclo":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.order == 1:
            if other.is_zero():
                raise ZeroDivisionError("division by zero")
            return self * Cyclo._make(1, [other.den * (1 if other.nums[0] > 0 else -1)], abs(other.nums[0]))
        return self * other.inv()

    def __rtruediv__(self, other: CycloLike) -> "Cyclo":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "Cyclo":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def conj(self) -> "Cyclo":
        """Complex conjugation, i.e. the automorphism zeta |-> zeta^(N-1)."""
        if self.order == 1:
            return self
        ctx = _context(self.order)
        out = [0] * ctx.deg
        out[0] = self.nums[0]
        for e in range(1, ctx.deg):
            c = self.nums[e]
            if c:
                rep = ctx.powrep[self.order - e]
                for i, r in enumerate(rep):
                    if r:
                        out[i] += c * r
        return Cyclo._make(self.order, out, self.den)

    def galois(self, j: int) -> "Cyclo":
        """Image under zeta |-> zeta^j (j coprime to the order)."""
        if self.order == 1:
            return self
        if math.gcd(j, self.order) != 1:
            raise ValueError("galois exponent must be coprime to the order")
        ctx = _context(self.order)
        out = [0] * ctx.deg
        for e, c in enumerate(self.nums):
            if c:
                rep = ctx.powrep[(e * j) % self.order]
                for i, r in enumerate(rep):
                    if r:
                        out[i] += c * r
        return Cyclo._make(self.order, out, self.den)

    # -- embeddings ----------------------------------------------------------

    def embed(self, target_order: int) -> "Cyclo":
        """The same field element expressed in Q(zeta_M).

        Going up (order divides M) is a re-indexing of the power basis.
        Going down (M divides order) solves a small exact linear system and
        fails when the value does not lie in the subfield.
        """
        if target_order < 1:
            raise ValueError("order must be positive")
        if self.order == target_order or self.order == 1:
            return self
        if target_order % self.order == 0:
            ctx = _context(target_order)
            scale = target_order // self.order
            out = [0] * ctx.deg
            for e, c in enumerate(self.nums):
                if c:
                    rep = ctx.powrep[e * scale]
                    for i, r in enumerate(rep):
                        if r:
                            out[i] += c * r
            return Cyclo._make(target_order, out, self.den)
        if self.order % target_order == 0:
            down = _subfield_rep(self, target_order)
            if down is None:
                raise NonDivisibleOrderError(
                    f"value does not lie in Q(zeta_{target_order})"
                )
            return down
        raise NonDivisibleOrderError(
            f"no embedding between orders {self.order} and {target_order}"
        )

    # -- comparisons / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclo.rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.order == other.order:
            return self.nums == other.nums and self.den == other.den
        if self.order == 1 or other.order == 1:
            # rationals are canonically order 1; any order > 1 value is irrational
            return False
        t = math.lcm(self.order, other.order)
        av = self._lift_vec(t)
        bv = other._lift_vec(t)
        if self.den == other.den:
            return av == bv
        return [x * other.den for x in av] == [y * self.den for y in bv]

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_complex(self) -> complex:
        """Float embedding sum c_e * exp(2*pi*i*e/N); display only."""
        import cmath

        tau = 2j * math.pi / self.order
        acc = 0j
        for e, c in enumerate(self.nums):
            if c:
                acc += (c / self.den) * cmath.exp(tau * e)
        return acc

    def to_dict(self) -> dict:
        approx = self.to_complex()
        return {
            "order": self.order,
            "coeffs": [str(Fraction(n, self.den)) for n in self.nums],
            "approx": [approx.real, approx.imag],
        }

    def __repr__(self) -> str:
        if self.order == 1:
            return str(Fraction(self.nums[0], self.den))
        terms = []
        for e, c in enumerate(self.nums):
            if c:
                coeff = Fraction(c, self.den)
                if e == 0:
                    terms.append(str(coeff))
                elif coeff == 1:
                    terms.append(f"z{self.order}^{e}")
                else:
                    terms.append(f"{coeff}*z{self.order}^{e}")
        return " + ".join(terms) if terms else "0"


def _coerce(value: CycloLike) -> "Cyclo":
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclo.rational(value)
    return NotImplemented


_MUL_MEMO: dict[tuple[Cyclo, Cyclo], Cyclo] = {}
_ADD_MEMO: dict[tuple[Cyclo, Cyclo], Cyclo] = {}


# ---------------------------------------------------------------------------
# named constructors


def root_of_unity(order: int, k: int = 1) -> Cyclo:
    """zeta_order^k in canonical reduced form."""
    if order < 1:
        raise ValueError("order must be positive")
    ctx = _context(order)
    return Cyclo._make(order, ctx.powrep[k % order], 1)


def sqrt2(order: int) -> Cyclo:
    """sqrt(2) = zeta_8 + zeta_8^-1 (positive real embedding); the working
    order must be divisible by 8."""
    if order % 8:
        raise ValueError("sqrt2 needs a working order divisible by 8")
    return root_of_unity(order, order // 8) + root_of_unity(order, order - order // 8)


def sqrt3(order: int) -> Cyclo:
    """sqrt(3) = zeta_12 + zeta_12^-1; the working order must be divisible
    by 12."""
    if order % 12:
        raise ValueError("sqrt3 needs a working order divisible by 12")
    return root_of_unity(order, order // 12) + root_of_unity(order, order - order // 12)


_ZERO = Cyclo._make(1, [0], 1)
_ONE = Cyclo._make(1, [1], 1)


# ---------------------------------------------------------------------------
# polynomial helpers over Q (used only by inv and subfield descent)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _poly_trim(a)


def _poly_xgcd(p: list[Fraction], m: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, s) with s*p == g mod m for polynomials over Q."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(p))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = _poly_mul_frac(q, s1)
        s0, s1 = s1, _poly_trim([a - b for a, b in _zip_pad(s0, prod)])
    return r0, s0


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _zip_pad(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _subfield_rep(x: Cyclo, target: int) -> Cyclo | None:
    """Solve for x in the power basis of Q(zeta_target) inside Q(zeta_N);
    None when x is not in the subfield."""
    ctx = _context(x.order)
    deg_t = _context(target).deg
    scale = x.order // target
    cols = [ctx.powrep[t * scale] for t in range(deg_t)]
    n, m = ctx.deg, deg_t
    rows = [
        [Fraction(cols[j][i]) for j in range(m)] + [Fraction(x.nums[i], x.den)]
        for i in range(n)
    ]
    rank = 0
    pivots: list[int] = []
    for col in range(m):
        pivot = next((i for i in range(rank, n) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for i in range(n):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, n):
        if rows[i][m]:
            return None
    sol = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        sol[col] = rows[r][m]
    den = math.lcm(*(c.denominator for c in sol)) if sol else 1
    return Cyclo._make(target, [int(c * den) for c in sol], den)

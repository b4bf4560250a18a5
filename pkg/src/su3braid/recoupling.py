"""Temperley-Lieb recoupling quantities at a root of unity.

Everything is evaluated exactly in Q(zeta_N).  The theory at index r >= 3
(level k = r - 2) uses the Kauffman variable A = i * e^(-2*pi*i/(4r)), loop
value d = -A^2 - A^(-2), and quantum integers taken at q = A^2:

    [n] = (A^(2n) - A^(-2n)) / (A^2 - A^(-2))

Closed trivalent networks are evaluated through the standard quantum-
factorial closed forms.  For an admissible triple (a, b, c) with vertex
exponents m = (a+c-b)/2, n = (a+b-c)/2, p = (b+c-a)/2:

    theta(a, b, c) = (-1)^(m+n+p) [m+n+p+1]! [m]! [n]! [p]! / ([a]! [b]! [c]!)

The tetrahedral net tet(a, b, e, c, d, f) uses the vertex triples
(a, d, e), (b, c, e), (a, b, f), (c, d, f); with half-sums a_i of the four
triples and b_j of the three label "squares" it equals

    (prod_ij [b_j - a_i]! / ([a]![b]![c]![d]![e]![f]!))
        * sum_s (-1)^s [s+1]! / (prod_i [s - a_i]! prod_j [b_j - s]!)

summed over max(a_i) <= s <= min(b_j).  The 6j-symbol combines the two:

    sixj(a, b, k, c, d, i) = tet(a, b, k, c, d, i) * delta_i
                             / (theta(a, d, i) * theta(c, b, k))

Sign conventions are pinned by golden tests against the level-4 values
(theta(2,2,2) = 2/sqrt(3), tet table entries, R-value anchors).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclo import Cyclo, root_of_unity


class InadmissibleTripleError(ValueError):
    """A trivalent vertex violates parity, triangle, or level bounds."""


class ZeroDenominatorError(ZeroDivisionError):
    """A net evaluation hit a vanishing theta or quantum factorial."""


# the constants of the level-4 theory (Kauffman variable, SU(3) phase,
# sqrt2, sqrt3) all live in Q(zeta_72); other r promote their own 4r
_BASE_ORDER = 72


@dataclass(frozen=True)
class TheoryParams:
    """Level data fixing the recoupling theory."""

    r: int
    k: int
    order: int
    A: Cyclo
    d: Cyclo
    label_set: tuple[int, ...]
    a_exponent: int  # A == zeta_order ** a_exponent

    def __repr__(self) -> str:
        return f"TheoryParams(r={self.r}, k={self.k}, order={self.order})"


def theory(r: int) -> TheoryParams:
    """Recoupling theory at index r (level k = r - 2), with exact A and d."""
    if r < 3:
        raise ValueError("theory index r must be at least 3")
    order = math.lcm(4 * r, _BASE_ORDER)
    # A = i * e^(-2*pi*i/(4r)) = zeta_4 * zeta_{4r}^(-1)
    a_exponent = (order // 4 - order // (4 * r)) % order
    a = root_of_unity(order, a_exponent)
    d = -(a * a) - root_of_unity(order, (-2 * a_exponent) % order)
    return TheoryParams(
        r=r,
        k=r - 2,
        order=order,
        A=a,
        d=d,
        label_set=tuple(range(r - 1)),
        a_exponent=a_exponent,
    )


@dataclass(frozen=True)
class VertexExponents:
    """Strand counts m = (a+c-b)/2, n = (a+b-c)/2, p = (b+c-a)/2 at an
    admissible vertex."""

    m: int
    n: int
    p: int


def vertex_exponents(a: int, b: int, c: int) -> VertexExponents:
    m, n, p = (a + c - b) // 2, (a + b - c) // 2, (b + c - a) // 2
    if min(m, n, p) < 0 or (a + b + c) % 2:
        raise InadmissibleTripleError(f"({a},{b},{c}) is not a valid vertex")
    return VertexExponents(m, n, p)


def admissible(t: TheoryParams, a: int, b: int, c: int) -> bool:
    """Parity, triangle, and level conditions for a trivalent vertex."""
    if min(a, b, c) < 0:
        raise ValueError("labels must be nonnegative")
    if (a + b + c) % 2:
        return False
    if a > b + c or b > a + c or c > a + b:
        return False
    return a + b + c <= 2 * t.k


def _zeta_pow(t: TheoryParams, e: int) -> Cyclo:
    return root_of_unity(t.order, e % t.order)


def quantum_int(t: TheoryParams, n: int) -> Cyclo:
    """[n] at q = A^2, computed as the geometric sum q^(n-1) + q^(n-3) + ...
    + q^(1-n), which avoids any division."""
    if n < 0:
        return -quantum_int(t, -n)
    acc = Cyclo.zero()
    for j in range(n):
        acc = acc + _zeta_pow(t, 2 * t.a_exponent * (n - 1 - 2 * j))
    return acc


@lru_cache(maxsize=None)
def quantum_fact(t: TheoryParams, n: int) -> Cyclo:
    """[n]! = [n][n-1]...[1] with [0]! = 1."""
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    if n == 0:
        return Cyclo.one()
    return quantum_fact(t, n - 1) * quantum_int(t, n)


def delta_n(t: TheoryParams, n: int) -> Cyclo:
    """Loop value of the closed n-strand projector: (-1)^n [n+1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = quantum_int(t, n + 1)
    return -value if n % 2 else value


def r_value(t: TheoryParams, a: int, b: int, c: int) -> Cyclo:
    """Twist eigenvalue R_a^{b,c} = (-1)^((b+c-a)/2) A^((b(b+2)+c(c+2)-a(a+2))/2)."""
    if not admissible(t, b, c, a):
        raise InadmissibleTripleError(f"(b,c,a)=({b},{c},{a}) is not admissible")
    half_sum = (b + c - a) // 2
    exponent = (b * (b + 2) + c * (c + 2) - a * (a + 2)) // 2
    value = _zeta_pow(t, t.a_exponent * exponent)
    return -value if half_sum % 2 else value


def theta(t: TheoryParams, a: int, b: int, c: int) -> Cyclo:
    """Exact theta-net value of the closed two-vertex network."""
    if not admissible(t, a, b, c):
        raise InadmissibleTripleError(f"({a},{b},{c}) is not admissible")
    v = vertex_exponents(a, b, c)
    s = v.m + v.n + v.p
    num = (
        quantum_fact(t, s + 1)
        * quantum_fact(t, v.m)
        * quantum_fact(t, v.n)
        * quantum_fact(t, v.p)
    )
    den = quantum_fact(t, a) * quantum_fact(t, b) * quantum_fact(t, c)
    if den.is_zero():
        raise ZeroDenominatorError(f"vanishing factorial in theta({a},{b},{c})")
    value = num / den
    return -value if s % 2 else value


def tet(t: TheoryParams, a: int, b: int, e: int, c: int, d: int, f: int) -> Cyclo:
    """Exact tetrahedral-net value T[a b e; c d f]; see the module docstring
    for the vertex convention."""
    triples = ((a, d, e), (b, c, e), (a, b, f), (c, d, f))
    for triple in triples:
        if not admissible(t, *triple):
            raise InadmissibleTripleError(f"vertex {triple} is not admissible")
    half = [(x + y + z) // 2 for x, y, z in triples]
    squares = [(b + d + e + f) // 2, (a + c + e + f) // 2, (a + b + c + d) // 2]
    lo, hi = max(half), min(squares)
    interior = Cyclo.one()
    for bj in squares:
        for ai in half:
            interior = interior * quantum_fact(t, bj - ai)
    exterior = Cyclo.one()
    for edge in (a, b, c, d, e, f):
        exterior = exterior * quantum_fact(t, edge)
    if exterior.is_zero():
        raise ZeroDenominatorError("vanishing edge factorial in tet")
    acc = Cyclo.zero()
    for s in range(lo, hi + 1):
        den = Cyclo.one()
        for ai in half:
            den = den * quantum_fact(t, s - ai)
        for bj in squares:
            den = den * quantum_fact(t, bj - s)
        if den.is_zero():
            raise ZeroDenominatorError("vanishing factorial in tet summand")
        term = quantum_fact(t, s + 1) / den
        acc = acc - term if s % 2 else acc + term
    return interior / exterior * acc


def sixj(t: TheoryParams, a: int, b: int, k: int, c: int, d: int, i: int) -> Cyclo:
    """6j-symbol {a b k; c d i} = T[a b k; c d i] * delta_i / (theta(a,d,i) theta(c,b,k))."""
    value = tet(t, a, b, k, c, d, i)
    th1 = theta(t, a, d, i)
    th2 = theta(t, c, b, k)
    if th1.is_zero() or th2.is_zero():
        raise ZeroDenominatorError("vanishing theta in 6j-symbol")
    return value * delta_n(t, i) / (th1 * th2)

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from su3braid import recoupling as rc
from su3braid.cyclo import root_of_unity, sqrt3


# Independent float oracle at r = 6: q = A^2 = e^(5 i pi/6), so
# [n] = sin(5 n pi/6) / sin(5 pi/6).
def qint_oracle(n: int) -> float:
    return math.sin(5 * n * math.pi / 6) / math.sin(5 * math.pi / 6)


@pytest.fixture(scope="module")
def t6():
    return rc.theory(6)


def test_theory_level4(t6):
    assert t6.k == 4
    assert t6.label_set == (0, 1, 2, 3, 4)
    assert t6.A == root_of_unity(24, 5).embed(72)
    assert t6.d == sqrt3(t6.order)
    # cross-check: delta_1 equals the loop value d
    assert rc.delta_n(t6, 1) == t6.d


def test_theory_small_levels():
    t3 = rc.theory(3)
    assert t3.k == 1 and t3.d == 1
    with pytest.raises(ValueError):
        rc.theory(2)


def test_quantum_int_values(t6):
    assert rc.quantum_int(t6, 1) == 1
    assert rc.quantum_int(t6, 3) == 2
    assert rc.quantum_int(t6, 2) == -sqrt3(t6.order)
    for n in range(0, 12):
        assert abs(rc.quantum_int(t6, n).to_complex() - qint_oracle(n)) < 1e-9


def test_quantum_int_chebyshev_recursion(t6):
    two = rc.quantum_int(t6, 2)
    for n in range(1, 11):
        lhs = rc.quantum_int(t6, n + 1)
        rhs = two * rc.quantum_int(t6, n) - rc.quantum_int(t6, n - 1)
        assert lhs == rhs


def test_quantum_fact(t6):
    assert rc.quantum_fact(t6, 0) == 1
    assert rc.quantum_fact(t6, 3) == -2 * sqrt3(t6.order)
    assert rc.quantum_fact(t6, 4) == 6


def test_delta_values(t6):
    assert rc.delta_n(t6, 0) == 1
    assert rc.delta_n(t6, 4) == 1
    assert rc.delta_n(t6, 2) == 2
    assert rc.delta_n(t6, 1) == sqrt3(t6.order)
    assert rc.delta_n(t6, 5) == 0  # level truncation


def test_admissible(t6):
    assert rc.admissible(t6, 2, 2, 0)
    assert not rc.admissible(t6, 2, 2, 5)
    assert not rc.admissible(t6, 4, 4, 4)
    with pytest.raises(ValueError):
        rc.admissible(t6, -1, 2, 2)


def test_vertex_exponents():
    v = rc.vertex_exponents(2, 2, 2)
    assert (v.m, v.n, v.p) == (1, 1, 1)
    v = rc.vertex_exponents(4, 2, 2)
    assert (v.m, v.n, v.p) == (2, 2, 0)
    with pytest.raises(rc.InadmissibleTripleError):
        rc.vertex_exponents(4, 1, 1)


def test_r_values(t6):
    assert rc.r_value(t6, 0, 2, 2).conj() == root_of_unity(72, 24)    # e^(2 i pi/3)
    assert rc.r_value(t6, 2, 2, 2).conj() == -root_of_unity(72, 12)   # -e^(i pi/3)
    assert rc.r_value(t6, 4, 2, 2).conj() == root_of_unity(72, 60)    # e^(-i pi/3)
    with pytest.raises(rc.InadmissibleTripleError):
        rc.r_value(t6, 1, 2, 2)


def test_theta_values(t6):
    rt3 = sqrt3(t6.order)
    assert rc.theta(t6, 2, 2, 0) == 2
    assert rc.theta(t6, 2, 2, 0) == rc.delta_n(t6, 2)
    assert rc.theta(t6, 2, 2, 2) == 2 / rt3
    assert rc.theta(t6, 2, 2, 4) == 1
    with pytest.raises(rc.InadmissibleTripleError):
        rc.theta(t6, 2, 2, 1)


def test_tet_table(t6):
    rt3 = sqrt3(t6.order)
    table = {
        (0, 0): rc.quantum_int(t6, 3),     # 2
        (2, 0): 2 / rt3,
        (2, 2): rc.quantum_int(t6, 0),     # 0
        (4, 0): rc.quantum_int(t6, 1),     # 1
        (4, 2): -1 / rt3,
        (4, 4): Fraction(1, 2),
    }
    for (i, j), expected in table.items():
        assert rc.tet(t6, 2, 2, j, 2, 2, i) == expected, (i, j)


def test_tet_symmetry_and_theta_identity(t6):
    for i in (0, 2, 4):
        for j in (0, 2, 4):
            assert rc.tet(t6, 2, 2, j, 2, 2, i) == rc.tet(t6, 2, 2, i, 2, 2, j)
        assert rc.theta(t6, 2, 2, i) == rc.tet(t6, 2, 2, i, 2, 2, 0)


def test_tet_inadmissible(t6):
    with pytest.raises(rc.InadmissibleTripleError):
        rc.tet(t6, 2, 2, 1, 2, 2, 0)


def test_sixj_values(t6):
    # frozen from the composition rule applied to the tet/theta table:
    #   {2 2 0; 2 2 0} = 2 * 1 / (2 * 2)             = 1/2
    #   {2 2 0; 2 2 2} = (2/sqrt3) * 2 / ((2/sqrt3)*2) = 1
    #   {2 2 2; 2 2 2} = 0 * 2 / ((2/sqrt3)^2)        = 0
    assert rc.sixj(t6, 2, 2, 0, 2, 2, 0) == Fraction(1, 2)
    assert rc.sixj(t6, 2, 2, 0, 2, 2, 2) == 1
    assert rc.sixj(t6, 2, 2, 2, 2, 2, 2) == 0


admissible_triples = st.tuples(
    st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)
)


@given(admissible_triples)
def test_r_values_have_unit_modulus(triple):
    t = rc.theory(6)
    b, c, a = triple
    assume(rc.admissible(t, b, c, a))
    value = rc.r_value(t, a, b, c)
    assert value * value.conj() == 1


@given(admissible_triples)
def test_theta_is_symmetric(triple):
    t = rc.theory(6)
    a, b, c = triple
    assume(rc.admissible(t, a, b, c))
    base = rc.theta(t, a, b, c)
    assert rc.theta(t, b, a, c) == base
    assert rc.theta(t, c, b, a) == base


@given(st.integers(3, 8))
def test_level_truncation(r):
    t = rc.theory(r)
    assert rc.delta_n(t, t.k + 1) == 0

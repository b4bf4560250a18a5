import random

import pytest

from su3braid import matgroup as mg
from su3braid.cyclo import root_of_unity
from su3braid.matrix import UnitaryMatrix


def test_close_small_groups():
    d = mg.close([UnitaryMatrix.diagonal([-1, -1, 1])])
    assert d.order == 2
    assert d.identity.matrix == UnitaryMatrix.identity(3)
    c4 = mg.close([UnitaryMatrix.diagonal([root_of_unity(4), root_of_unity(4, 3)])])
    assert c4.order == 4


def test_close_generator_orders(paper_group, paper_matrices):
    g1, _ = paper_matrices
    assert mg.close([g1]).order == 18
    assert paper_group.order == 162


def test_close_cap():
    z = UnitaryMatrix.diagonal([root_of_unity(36), root_of_unity(36, 35)])
    with pytest.raises(mg.GroupTooLargeError):
        mg.close([z], cap=10)


def test_closure_soundness_sampled(paper_group):
    rng = random.Random(7)
    elements = paper_group.element_list
    for _ in range(40):
        a = rng.choice(elements)
        b = rng.choice(elements)
        assert (a.matrix * b.matrix).key_bytes() in paper_group.elements
        assert a.matrix.conj_transpose().key_bytes() in paper_group.elements


def test_word_provenance(paper_group):
    gens = list(paper_group.generators)
    for element in paper_group.element_list:
        assert mg.word_eval(element.word, gens).key == element.key


def test_element_order(paper_group, named_elements):
    assert mg.element_order(paper_group.identity) == 1
    assert mg.element_order(named_elements["A"]) == 9
    assert mg.element_order(named_elements["B"]) == 3
    assert mg.element_order(named_elements["T1"]) == 2
    with pytest.raises(mg.OrderExceedsCapError):
        mg.element_order(named_elements["A"], cap=5)


def test_subgroup_orders(paper_group, named_elements, subgroup_n, subgroup_h):
    assert subgroup_n.order == 27
    assert subgroup_h.order == 6
    trivial = mg.subgroup(paper_group, [paper_group.identity])
    assert trivial.order == 1
    # Lagrange on every subgroup we build
    for sub in (subgroup_n, subgroup_h, trivial):
        assert paper_group.order % sub.order == 0


def test_subgroup_rejects_outsiders(paper_group):
    stranger = UnitaryMatrix.diagonal([root_of_unity(5), root_of_unity(5, 4), 1])
    el = mg.GpElement(stranger, stranger.key_bytes())
    with pytest.raises(mg.GeneratorNotInGroupError):
        mg.subgroup(paper_group, [el])


def test_is_normal(paper_group, subgroup_n, subgroup_h):
    assert mg.is_normal(paper_group, subgroup_n)
    assert not mg.is_normal(paper_group, subgroup_h)
    assert mg.is_normal(paper_group, paper_group)
    with pytest.raises(mg.NotASubgroupError):
        outside = mg.close([UnitaryMatrix.diagonal([root_of_unity(5), root_of_unity(5, 4), 1])])
        mg.is_normal(paper_group, outside)


def test_intersect(paper_group, named_elements, subgroup_n, subgroup_h):
    cyc_a = mg.subgroup(paper_group, [named_elements["A"]])
    cyc_b = mg.subgroup(paper_group, [named_elements["B"]])
    assert mg.intersect(cyc_a, cyc_b).order == 1
    assert mg.intersect(subgroup_h, subgroup_n).order == 1
    assert mg.intersect(subgroup_n, subgroup_n).order == subgroup_n.order


def test_abelian_invariants(paper_group, named_elements, subgroup_n, subgroup_h):
    assert mg.abelian_invariants(subgroup_n) == (9, 3)
    cyc_a = mg.subgroup(paper_group, [named_elements["A"]])
    assert mg.abelian_invariants(cyc_a) == (9,)
    trivial = mg.subgroup(paper_group, [paper_group.identity])
    assert mg.abelian_invariants(trivial) == ()
    with pytest.raises(mg.NotAbelianError):
        mg.abelian_invariants(subgroup_h)


def test_semidirect_verify(paper_group, named_elements, subgroup_n, subgroup_h):
    report = mg.semidirect_verify(paper_group, subgroup_n, subgroup_h)
    assert report.all_ok
    # N against itself: the intersection is N, not trivial
    self_report = mg.semidirect_verify(paper_group, subgroup_n, subgroup_n)
    assert not self_report.trivial_intersection
    # <A> is too small: 9 * 6 != 162
    cyc_a = mg.subgroup(paper_group, [named_elements["A"]])
    small = mg.semidirect_verify(paper_group, cyc_a, subgroup_h)
    assert not small.order_product


def test_decompose(paper_group, named_elements, subgroup_n, subgroup_h):
    a = named_elements["A"].matrix
    b = named_elements["B"].matrix
    t3 = named_elements["T3"].matrix
    t1 = named_elements["T1"].matrix
    g1, g2 = paper_group.generators
    n, h = mg.decompose(g1, subgroup_n, subgroup_h)
    assert n.matrix == a ** 5 * b ** 2 and h.matrix == t3
    n, h = mg.decompose(g2, subgroup_n, subgroup_h)
    assert n.matrix == a ** -1 * b and h.matrix == t3 * t1 * t3
    n, h = mg.decompose(paper_group.identity, subgroup_n, subgroup_h)
    assert n.matrix == UnitaryMatrix.identity(3)
    assert h.matrix == UnitaryMatrix.identity(3)


def test_decompose_is_a_bijection(paper_group, subgroup_n, subgroup_h):
    pairs = set()
    for element in paper_group.element_list:
        n, h = mg.decompose(element, subgroup_n, subgroup_h)
        pairs.add((n.key, h.key))
    assert len(pairs) == 162
    assert pairs == {
        (n.key, h.key)
        for n in subgroup_n.element_list
        for h in subgroup_h.element_list
    }


def test_product_map_homomorphism_on_samples(paper_group, subgroup_n, subgroup_h):
    # psi(n1 * (h1 n2 h1^-1), h1 h2) == psi(n1, h1) * psi(n2, h2)
    rng = random.Random(11)
    for _ in range(25):
        n1, n2 = (rng.choice(subgroup_n.element_list).matrix for _ in range(2))
        h1, h2 = (rng.choice(subgroup_h.element_list).matrix for _ in range(2))
        twisted = n1 * (h1 * n2 * h1.conj_transpose())
        assert twisted * (h1 * h2) == (n1 * h1) * (n2 * h2)


def test_word_eval(paper_group, named_elements):
    gens = list(paper_group.generators)
    f = mg.word_eval((1, 2, -1, -1), gens)
    assert f.key == named_elements["F"].key
    assert mg.word_eval((), gens).matrix == UnitaryMatrix.identity(3)
    t3 = named_elements["T3"]
    assert t3.matrix == UnitaryMatrix.diagonal([-1, -1, 1])
    with pytest.raises(IndexError):
        mg.word_eval((3,), gens)


def test_check_relations(named_elements):
    gens = {k: named_elements[k] for k in ("A", "B", "T1", "T3")}
    eye = ()
    good = [
        ((("A", 9),), eye),
        ((("B", 3),), eye),
        ((("T1", 2),), eye),
        ((("T3", 2),), eye),
        ((("T1", 1), ("T3", 1)) * 3, eye),
        ((("T3", 1), ("T1", 1)) * 3, eye),
        ((("T1", 1), ("A", 1), ("T1", -1)), (("A", 1),)),
        ((("T3", 1), ("A", 1), ("T3", -1)), (("A", 7), ("B", 2))),
        ((("T1", 1), ("B", 1), ("T1", -1)), (("A", 6), ("B", 2))),
        ((("T3", 1), ("B", 1), ("T3", -1)), (("A", 3), ("B", 2))),
    ]
    assert mg.check_relations(gens, good) == [True] * 10
    assert mg.check_relations(gens, [((("A", 8),), eye)]) == [False]
    with pytest.raises(KeyError):
        mg.check_relations(gens, [((("X", 1),), eye)])


def test_conjugacy_classes(paper_group, subgroup_n):
    classes = mg.conjugacy_classes(subgroup_n)
    assert all(len(c) == 1 for c in classes)  # abelian: singletons
    classes = mg.conjugacy_classes(paper_group)
    assert sum(len(c) for c in classes) == 162
    assert all(162 % len(c) == 0 for c in classes)
    identity_class = [c for c in classes if paper_group.identity.key in c]
    assert identity_class == [(paper_group.identity.key,)]


def test_cayley_table_shape(paper_group):
    table = paper_group.cayley_table()
    assert table[0] == list(range(162))
    assert [row[0] for row in table] == list(range(162))
    # every row and column is a permutation
    full = set(range(162))
    assert all(set(row) == full for row in table)


def test_find_isomorphism_positive(paper_group, family_group):
    images = mg.find_isomorphism(paper_group, family_group)
    assert images is not None
    assert all(img.key in family_group.elements for img in images)


def test_find_isomorphism_self(paper_group):
    images = mg.find_isomorphism(paper_group, paper_group)
    assert images is not None
    assert [e.key for e in images] == [g.key for g in paper_group.generators]


def test_find_isomorphism_order_mismatch(paper_group, named_elements):
    # the direct-product-style subgroup <A, B, T3> has order 54, not 162
    product_54 = mg.subgroup(
        paper_group,
        [named_elements["A"], named_elements["B"], named_elements["T3"]],
    )
    assert product_54.order == 54
    assert mg.find_isomorphism(paper_group, product_54) is None


def test_decompose_error_cases(paper_group, named_elements, subgroup_h):
    cyc_a = mg.subgroup(paper_group, [named_elements["A"]])
    # only 9 * 6 = 54 of the 162 elements factor through <A> * H
    missing = 0
    for element in paper_group.element_list:
        try:
            mg.decompose(element, cyc_a, subgroup_h)
        except mg.NoFactorizationError:
            missing += 1
    assert missing == 162 - 54
    # identity = I*I = T3*T3 inside <T3> * <T3>
    cyc_t3 = mg.subgroup(paper_group, [named_elements["T3"]])
    with pytest.raises(mg.NonUniqueFactorizationError):
        mg.decompose(paper_group.identity, cyc_t3, cyc_t3)


def test_find_isomorphism_negative():
    c2 = mg.close([UnitaryMatrix.diagonal([-1, -1, 1])])
    c4 = mg.close([UnitaryMatrix.diagonal([root_of_unity(4), root_of_unity(4, 3)])])
    assert mg.find_isomorphism(c2, c4) is None  # order mismatch
    # same order 4, different structure: C4 vs the Klein group
    klein = mg.close(
        [UnitaryMatrix.diagonal([-1, -1, 1]), UnitaryMatrix.diagonal([1, -1, -1])]
    )
    assert klein.order == 4
    assert mg.find_isomorphism(c4, klein) is None
    assert mg.find_isomorphism(klein, c4) is None


def test_same_matrix_set(paper_group, family_group, subgroup_n):
    assert not mg.same_matrix_set(paper_group, family_group)
    assert mg.same_matrix_set(paper_group, paper_group)
    assert not mg.same_matrix_set(paper_group, subgroup_n)


def test_render_word():
    assert mg.render_word((), ["g1", "g2"]) == "e"
    assert mg.render_word((1, 2, 2, -1, -1), ["g1", "g2"]) == "g1*g2^2*g1^-2"
    assert mg.render_word(None, ["g1"]) == ""


def test_deterministic_ordering(paper_matrices):
    g1, g2 = paper_matrices
    first = mg.close([g1, g2])
    second = mg.close([g1, g2])
    assert [e.key for e in first.element_list] == [e.key for e in second.element_list]
    assert [e.word for e in first.element_list] == [e.word for e in second.element_list]

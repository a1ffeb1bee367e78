import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumploci import load
from jumploci.constructors import (ArrangementIncidence, InvalidIncidence, TreeGraphManifold,
                                   boundary_manifold, check_boundary_formality,
                                   connected_sum_form, connected_sum_loci, iterated_sum,
                                   s1_x_s2_table, sphere_table, table_from_manifold,
                                   tree_graph_manifold_form, tree_table)
from jumploci.ideals.varieties import AFFINE, LinearSubspace, VarietyDescription, varieties_equal
from jumploci.symbolic import LaurentPoly, associated, parse_poly, t_names, x_names
from jumploci.threeman import (ClosedThreeManifoldData, TriForm, random_triform, resonance_3m,
                               turaev_det_pf)

small_forms = st.tuples(st.integers(1, 4), st.integers(0, 10 ** 6)).map(
    lambda a: random_triform(a[0], random.Random(a[1]), density=0.7))


@given(small_forms, small_forms)
def test_connected_sum_resonance_matches_direct_sum(mu1, mu2):
    t1 = table_from_manifold(ClosedThreeManifoldData(mu1))
    t2 = table_from_manifold(ClosedThreeManifoldData(mu2))
    direct = connected_sum_form(mu1, mu2)
    for k in range(1, direct.n + 1):
        assert varieties_equal(connected_sum_loci(t1, t2, 1, k, "res"),
                               resonance_3m(direct, k)) is True


@pytest.mark.parametrize("n", [2, 3, 4])
def test_iterated_s1xs2(n):
    table = iterated_sum([s1_x_s2_table()] * n)
    for k in range(1, n + 1):
        direct = resonance_3m(TriForm(n), k)
        assert varieties_equal(table.get("res", 1, k), direct) is True
    assert table.get("res", 1, n - 1).is_full()
    assert table.get("char", 1, 1).is_full()


def test_sum_with_sphere_is_neutral():
    sig = table_from_manifold(load("sigma2-x-s1"))
    for k in range(1, 6):
        assert varieties_equal(connected_sum_loci(sig, sphere_table(), 1, k, "res"),
                               sig.get("res", 1, k)) is True


def test_sum_of_positive_b1_is_full():
    a = table_from_manifold(load("sigma2-x-s1"))
    b = table_from_manifold(load("torus-3"))
    assert connected_sum_loci(a, b, 1, 1, "res").is_full()
    assert connected_sum_loci(a, b, 1, 1, "char").is_full()


def test_tree_graph_manifolds():
    t = TreeGraphManifold((1, 1), ((0, 1),))
    assert tree_graph_manifold_form(t).n == 6
    res2 = tree_table(t).get("res", 1, 2)
    expect = VarietyDescription.of(AFFINE, 6, [LinearSubspace.coordinate([0, 1, 2], 6),
                                               LinearSubspace.coordinate([3, 4, 5], 6)])
    assert varieties_equal(res2, expect) is True
    assert varieties_equal(res2, resonance_3m(tree_graph_manifold_form(t), 2)) is True
    with pytest.raises(ValueError):
        TreeGraphManifold((1, 1, 1), ((0, 1), (1, 0)))


@given(st.lists(st.integers(0, 2), min_size=1, max_size=3).filter(
    lambda gs: sum(2 * g + 1 for g in gs) <= 9))
def test_tree_table_matches_direct_form(genera):
    edges = tuple((i, i + 1) for i in range(len(genera) - 1))
    t = TreeGraphManifold(tuple(genera), edges)
    mu = tree_graph_manifold_form(t)
    if mu.n == 0:
        return
    for k in range(1, min(mu.n, 4) + 1):
        assert varieties_equal(tree_table(t).get("res", 1, k), resonance_3m(mu, k)) is True


def test_arrangement_graph_degrees():
    for a in (ArrangementIncidence.general_position(5), ArrangementIncidence.near_pencil(5),
              load("arr-pencil-4")):
        g = a.graph()
        assert sum(g.degree(v) for v in g.vertices) == 2 * len(g.edges)
        assert len(a.basis_pairs()) == g.betti1


def test_incidence_validation():
    with pytest.raises(InvalidIncidence):
        ArrangementIncidence.build(4, [[0, 1]])
    with pytest.raises(InvalidIncidence):
        ArrangementIncidence.build(5, [[0, 1, 2], [0, 1, 3]])
    with pytest.raises(InvalidIncidence):
        ArrangementIncidence.build(3, [[0, 1, 7]])


def test_pencil_boundary():
    bm = boundary_manifold(ArrangementIncidence.pencil(4))
    assert bm.b1 == 3 and bm.triform.is_zero()
    assert bm.alexander.is_zero() and bm.char_variety.is_full() and bm.formal


def test_near_pencil_boundary_is_surface_times_circle():
    bm = boundary_manifold(ArrangementIncidence.near_pencil(5))
    assert bm.b1 == 7 and bm.formal
    ell = parse_poly("x1 + x2 + x3 + x4", x_names(7))
    assert associated(turaev_det_pf(bm.triform)[1], ell ** 2)
    hyper = VarietyDescription.of(AFFINE, 7, [LinearSubspace.from_forms([ell], 7)])
    for k in range(1, 5):
        assert varieties_equal(resonance_3m(bm.triform, k), hyper) is True
    assert resonance_3m(bm.triform, 5).is_point()
    assert associated(bm.alexander, parse_poly("(t1*t2*t3*t4 - 1)^4", t_names(7)))


def test_general_position_boundary():
    bm = boundary_manifold(ArrangementIncidence.general_position(4))
    tn = t_names(6)
    expect = parse_poly("(t1-1)*(t2-1)*(t3-1)*(t1*t2*t3-1)", tn)
    assert associated(bm.alexander, expect)
    subtori = [parse_poly(f, tn) for f in ("t1-1", "t2-1", "t3-1", "t1*t2*t3-1")]
    from jumploci.ideals.varieties import TORUS, describe
    cv = describe(subtori[:1], 6, TORUS)
    for f in subtori[1:]:
        cv = cv.union(describe([f], 6, TORUS))
    assert varieties_equal(bm.char_variety, cv.with_identity()) is True
    assert not bm.formal
    chk = check_boundary_formality(bm)
    assert chk.tc_equals_resonance is False and chk.consistent
    assert resonance_3m(bm.triform, 1).is_full()

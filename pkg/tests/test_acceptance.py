"""Acceptance gate: twelve end-to-end criteria, one PASS/FAIL line each.

Run under pytest (lines are printed even with output capture on) or directly
with ``python tests/test_acceptance.py``.
"""
import itertools
import random
import sys
import traceback

import pytest

from jumploci import load
from jumploci.cdga import resonance as cdga_resonance
from jumploci.cli import _as_manifold
from jumploci.constructors import (ArrangementIncidence, boundary_manifold, connected_sum_loci,
                                   iterated_sum, s1_x_s2_table, table_from_manifold)
from jumploci.fixtures import fixture_names, load_fixture
from jumploci.groups import (alexander_polynomial, alexander_variety, char_variety_deg1,
                             elementary_ideal)
from jumploci.ideals.matrices import det, pfaffian
from jumploci.ideals.varieties import (AFFINE, TORUS, LinearSubspace, VarietyDescription,
                                       TorsionTranslate, describe, variety_in)
from jumploci.links import LinkData, link_resonance, torres_check, two_component_verdict
from jumploci.symbolic import (LaurentPoly, associated, exact_quotient, gcd_list, initial_form,
                               parse_poly, shift_to_origin, symmetric, t_names, x_names)
from jumploci.threeman import (TriForm, delta_matrix, det_ratio, random_triform, resonance_3m,
                               turaev_det_pf)
from jumploci.verdicts import (FAILS, FORMAL, FULL_TCF, HOLDS, MODEL, ONE_FORMAL,
                               boundary_verdict, link_verdict, manifold_verdict,
                               rational_linear_union_check, tangent_cones)


def planes(n, specs):
    xs = x_names(n)
    return VarietyDescription.of(AFFINE, n, [
        LinearSubspace.from_forms([parse_poly(f, xs) for f in spec], n) for spec in specs])


def same(a, b):
    """Exact equality, checked as containment in both directions."""
    return variety_in(a, b) is True and variety_in(b, a) is True


def surface_form(g):
    n = 2 * g + 1
    return TriForm.from_terms(n, {(2 * i + 1, 2 * i + 2, n): 1 for i in range(g)})


# ---------------------------------------------------------------------------


def criterion_1():
    for g in (2, 3):
        n = 2 * g + 1
        mu = surface_form(g)
        assert turaev_det_pf(mu)[1] == LaurentPoly.var(n - 1, n, x_names(n), power=g - 1)
        hyper = planes(n, [[f"x{n}"]])
        for k in range(1, 2 * g - 1):
            assert same(resonance_3m(mu, k), hyper), (g, k)
        assert same(resonance_3m(mu, 2 * g - 1), VarietyDescription.point(AFFINE, n))


def criterion_2():
    r = resonance_3m(load("rank6-form-a").triform, 2)
    r2 = resonance_3m(load("rank6-form-b").triform, 2)
    assert same(r, planes(6, [["x1", "x2", "x5"]]))
    assert same(r2, planes(6, [["x1", "x2", "x3"], ["x4", "x5", "x6"]]))
    shape = sorted(c.dim for c in r.components)
    shape2 = sorted(c.dim for c in r2.components)
    assert shape == [3] and shape2 == [3, 3] and shape != shape2


def criterion_3():
    m = load("quadric-cone")
    assert m.n == 2 and m.triform.is_zero()
    tn = t_names(2)
    assert associated(m.alexander, parse_poly("(t1 + t2)*(t1*t2 + 1) - 4*t1*t2", tn))
    v = manifold_verdict(m)
    rep = v.report
    assert rep.tau.is_point()
    quad = parse_poly("x1^2 + x2^2", x_names(2))
    assert same(rep.tc, describe([quad], 2, AFFINE))
    assert rep.res.is_full() and rep.equal_tc_res == FAILS
    assert rational_linear_union_check(quad).status == "no"
    assert v.status(MODEL) == FAILS
    assert v.summary.endswith("no 1-finite 1-model")


def criterion_4():
    m = load("heisenberg")
    assert m.alexander == LaurentPoly.const(1, 2, t_names(2))
    v = manifold_verdict(m)
    assert v.report.tc.is_point()
    assert cdga_resonance(load("heisenberg-model"), 1, 1).is_point()
    assert cdga_resonance(load("heisenberg-cohomology"), 1, 1).is_full()
    assert v.status(ONE_FORMAL) == FAILS
    assert v.summary.startswith("not 1-formal")


def criterion_5():
    rng = random.Random(20240531)
    for _ in range(50):
        n = rng.randint(4, 7)
        mu = random_triform(n, rng, density=0.6)
        ratios = {det_ratio(mu, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
        assert None not in ratios and len(ratios) == 1
        detv, pf = turaev_det_pf(mu)
        assert ratios == {detv}
        assert detv.is_zero() if n % 2 == 0 else detv == pf * pf


def criterion_6():
    origin = VarietyDescription.point(AFFINE, 2)
    for name in ("link-4_2_1", "link-6_2_3"):
        link = load(name)
        assert two_component_verdict(link).formal
        assert link_verdict(link).status(FORMAL) == HOLDS
    assert same(link_resonance(load("link-4_2_1"), 1), origin)
    rep = torres_check(load("link-6_2_3"))
    assert rep.holds and rep.value_at_one == -2

    w = load("whitehead")
    axes = planes(2, [["x1"], ["x2"]])
    wv = link_verdict(w)
    assert wv.status(FORMAL) == FAILS
    assert same(wv.report.tau, axes) and same(wv.report.tc, axes)
    assert wv.report.res.is_full() and wv.report.equal_tc_res == FAILS

    six = link_verdict(load("link-6_3_1"))
    lines = planes(3, [["x1", "x2 + x3"], ["x2", "x1 + x3"], ["x3", "x1 + x2"]])
    plane = planes(3, [["x1 + x2 + x3"]])
    assert same(six.report.tau, lines)
    assert same(six.report.tc, plane) and same(six.report.res, plane)
    assert six.report.equal_tau_tc == FAILS and six.status(MODEL) == FAILS

    eight = link_verdict(load("link-8_4_2"))
    eight_planes = planes(4, [
        ["x1", "x2"], ["x3", "x4"], ["x1", "x3 + x4"], ["x1 + x2", "x4"], ["x1 - x2", "x3"],
        ["x2", "x3 - x4"], ["x1 - x2 + 2*x3", "x2 - x3 + x4"],
        ["x1 - x2 + x3", "2*x2 - x3 + x4"]])
    quadric = describe([parse_poly("(x1 + x2)*x3 - (x1 - x2)*x4", x_names(4))], 4, AFFINE)
    assert len(eight.report.tau.components) == 8
    assert same(eight.report.tau, eight_planes)
    assert same(eight.report.tc, quadric) and same(eight.report.res, quadric)
    assert eight.status(MODEL) == FAILS


def criterion_7():
    for n in (2, 3, 4):
        link = LinkData.build(n, [[int(i != j) for j in range(n)] for i in range(n)])
        res = link_resonance(link, 1)
        if n == 2:
            assert same(res, VarietyDescription.point(AFFINE, 2))
        else:
            assert same(res, planes(n, [["+".join(x_names(n))]]))


def criterion_8():
    pencil = boundary_manifold(ArrangementIncidence.pencil(4))
    assert pencil.triform.is_zero() and pencil.alexander.is_zero()
    pv = boundary_verdict(pencil)
    assert pv.status(FULL_TCF) == HOLDS and pv.status(FORMAL) == HOLDS
    direct = iterated_sum([s1_x_s2_table()] * pencil.b1)
    for k in range(1, pencil.b1 + 1):
        assert same(resonance_3m(pencil.triform, k), direct.get("res", 1, k))

    near = boundary_manifold(ArrangementIncidence.near_pencil(5))
    n = near.b1
    g = (n - 1) // 2
    assert n == 7 and g == 3
    ell = parse_poly("x1 + x2 + x3 + x4", x_names(n))
    assert associated(turaev_det_pf(near.triform)[1], ell ** (g - 1))
    hyper = VarietyDescription.of(AFFINE, n, [LinearSubspace.from_forms([ell], n)])
    for k in range(1, 2 * g - 1):
        assert same(resonance_3m(near.triform, k), hyper)
    assert resonance_3m(near.triform, 2 * g - 1).is_point()
    assert associated(near.alexander,
                      parse_poly(f"(t1*t2*t3*t4 - 1)^{2 * g - 2}", t_names(n)))

    gen = boundary_manifold(ArrangementIncidence.general_position(4))
    tn = t_names(gen.b1)
    subtori = [parse_poly(f, tn) for f in ("t1 - 1", "t2 - 1", "t3 - 1", "t1*t2*t3 - 1")]
    prod = subtori[0] * subtori[1] * subtori[2] * subtori[3]
    assert associated(gen.alexander, prod)
    cv = VarietyDescription.empty(TORUS, gen.b1)
    for f in subtori:
        cv = cv.union(describe([f], gen.b1, TORUS))
    assert same(gen.char_variety, cv.with_identity())
    gv = boundary_verdict(gen)
    assert gv.status(FORMAL) == FAILS


def criterion_9():
    names = [n for n in fixture_names() if load_fixture(n).kind == "manifold"]
    tables = {}
    for name in names:
        m = load(name)
        if m.alexander is not None and 0 < m.n <= 5:
            tables[name] = table_from_manifold(m)
    assert len(tables) >= 4
    for a, b in itertools.combinations_with_replacement(sorted(tables), 2):
        assert connected_sum_loci(tables[a], tables[b], 1, 1, "char").is_full(), (a, b)
        assert connected_sum_loci(tables[a], tables[b], 1, 1, "res").is_full(), (a, b)
    for n in (2, 3, 4):
        table = iterated_sum([s1_x_s2_table()] * n)
        for k in range(1, n + 1):
            assert same(table.get("res", 1, k), resonance_3m(TriForm(n), k)), (n, k)


def criterion_10():
    tref = load("pres-trefoil")
    d = alexander_polynomial(tref)
    assert associated(d, parse_poly("t1^2 - t1 + 1", t_names(1)))
    assert d.at_one() in (1, -1)

    p = load("pres-sigma2-x-s1")
    delta = alexander_polynomial(p)
    assert associated(delta, parse_poly("(t5 - 1)^2", t_names(5)))
    assert same(char_variety_deg1(p, 1), describe([parse_poly("t5 - 1", t_names(5))], 5, TORUS))
    m = load("sigma2-x-s1")
    assert associated(m.alexander, delta)
    detv, _ = turaev_det_pf(m.triform)
    init = initial_form(shift_to_origin(delta, x_names(5)))
    x5sq = parse_poly("x5^2", x_names(5))
    assert associated(init, x5sq) and associated(detv, x5sq)


def _property_cases():
    for name in fixture_names():
        fx = load_fixture(name)
        obj = fx.build()
        if fx.kind == "link" and obj.alexander is not None and obj.n >= 2:
            yield name, link_verdict(obj).report
        elif fx.kind == "arrangement":
            yield name, boundary_verdict(boundary_manifold(obj)).report
        elif fx.kind in ("manifold", "connected-sum"):
            m = _as_manifold(fx.kind, obj)
            if m.alexander is not None:
                yield name, manifold_verdict(m).report
        elif fx.kind == "presentation" and obj.abelianization.free_rank > 0:
            tau, tc, _ = tangent_cones(char_variety_deg1(obj, 1))
            yield name, (tau, tc)


def criterion_11():
    checked = 0
    for name, rep in _property_cases():
        if isinstance(rep, tuple):
            tau, tc = rep
            assert tc is not None and variety_in(tau, tc) is True, name
        else:
            assert rep.tau_in_tc == HOLDS and rep.tc_in_res == HOLDS, name
        checked += 1
    assert checked >= 25
    for name in fixture_names():
        fx = load_fixture(name)
        if fx.kind == "manifold" and fx.build().alexander is not None:
            assert symmetric(fx.build().alexander), name
    # E_k ⊆ E_{k+1}: the zero loci shrink and each order divides the previous one
    for name in ("pres-sigma2-x-s1", "pres-trefoil", "pres-z2", "pres-free-2"):
        p = load(name)
        r = p.abelianization.free_rank
        ideals = [elementary_ideal(p, k) for k in range(4)]
        loci = [describe(e.generators, r, TORUS) for e in ideals]
        orders = [gcd_list(e.generators, r) for e in ideals]
        for k in range(3):
            assert variety_in(loci[k + 1], loci[k]) is True, (name, k)
            if not orders[k].is_zero():
                assert exact_quotient(orders[k], orders[k + 1]) is not None, (name, k)
    rng = random.Random(7)
    for _ in range(20):
        mu = random_triform(rng.randint(3, 6), rng)
        d = delta_matrix(mu)
        if mu.n % 2 == 0:
            assert pfaffian(d) ** 2 == det(d)


def criterion_12():
    p = load("pres-sigma-2-4-8")
    assert p.abelianization.torsion == (4,)
    assert alexander_polynomial(p) == LaurentPoly.const(1, 2, t_names(2))
    assert alexander_variety(p, 1).is_point()
    v = char_variety_deg1(p, 1, torsion=True)
    trans = [c for c in v.components if isinstance(c, TorsionTranslate)]
    # character 2 in Z/4: the primitive fourth root u is sent to u^2 = -1
    assert any(c.character == (2,) and c.orders == (4,) and c.inner.is_full() for c in trans)


CRITERIA = [
    (1, "surface times circle: Pfaffian and resonance depths", criterion_1),
    (2, "rank-6 forms with non-isomorphic depth-2 resonance", criterion_2),
    (3, "quadric tangent cone obstructs a 1-finite 1-model", criterion_3),
    (4, "Heisenberg manifold: model vs cohomology resonance", criterion_4),
    (5, "det ratio independence, Det = 0 or Pf^2 on 50 forms", criterion_5),
    (6, "link corpus: 4^2_1, 6^2_3, Whitehead, 6^3_1, 8^4_2", criterion_6),
    (7, "all-ones linking resonance", criterion_7),
    (8, "boundary manifolds: pencil, near-pencil, general position", criterion_8),
    (9, "connected sums and iterated S^1 x S^2", criterion_9),
    (10, "Fox calculus pipeline and init(Delta) = Det(mu)", criterion_10),
    (11, "property suites on every fixture", criterion_11),
    (12, "torsion-translated component of Sigma(2,4,8)", criterion_12),
]


def _line(num, title, ok):
    return f"acceptance {num:2d} {'PASS' if ok else 'FAIL'}  {title}"


@pytest.mark.parametrize("num,title,body", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(num, title, body, capsys):
    ok = False
    try:
        body()
        ok = True
    finally:
        with capsys.disabled():
            print("\n" + _line(num, title, ok), end="")


if __name__ == "__main__":
    failures = 0
    for num, title, body in CRITERIA:
        try:
            body()
            print(_line(num, title, True))
        except Exception:
            failures += 1
            print(_line(num, title, False))
            traceback.print_exc()
    sys.exit(1 if failures else 0)

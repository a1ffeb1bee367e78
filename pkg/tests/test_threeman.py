import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import contains_point
from jumploci import load
from jumploci.ideals.varieties import AFFINE, LinearSubspace, VarietyDescription, varieties_equal
from jumploci.symbolic import LaurentPoly, parse_poly, t_names, x_names
from jumploci.threeman import (ClosedThreeManifoldData, InvalidManifoldData, TriForm,
                               char_variety_3m, delta_matrix, det_ratio, duality_table,
                               gamma_rank, is_generic, random_triform, resonance_3m,
                               turaev_det_pf)

forms = st.tuples(st.integers(3, 6), st.integers(0, 10 ** 6)).map(
    lambda a: random_triform(a[0], random.Random(a[1])))


def sigma_g(g: int) -> TriForm:
    n = 2 * g + 1
    return TriForm.from_terms(n, {(2 * i + 1, 2 * i + 2, n): 1 for i in range(g)})


@given(forms)
def test_delta_is_skew_and_kills_x(mu):
    d = delta_matrix(mu)
    assert d.is_skew()
    xs = [LaurentPoly.var(i, mu.n, d.names) for i in range(mu.n)]
    for row in d.entries:
        assert sum((e * x for e, x in zip(row, xs)), LaurentPoly.zero(mu.n)).is_zero()


@given(forms, st.lists(st.sampled_from([-1, 0, 0, 1, 2]), min_size=6, max_size=6))
def test_resonance_matches_twisted_cohomology_rank(mu, raw):
    n = mu.n
    pt = [Fraction(x) for x in raw[:n]]
    r = sp.Matrix(delta_matrix(mu).evaluate(pt)).rank()
    h1 = n if not any(pt) else n - 1 - r
    for k in range(1, n + 1):
        assert contains_point(resonance_3m(mu, k), pt) == (h1 >= k)


@given(forms, st.integers(1, 10))
def test_resonance_is_scale_invariant(mu, c):
    scaled = TriForm.from_terms(mu.n, [(k, v * c) for k, v in mu.terms], one_based=False)
    for k in range(1, mu.n + 1):
        assert resonance_3m(scaled, k) == resonance_3m(mu, k)


@given(forms)
def test_resonance_chain_descends_and_pairs(mu):
    n = mu.n
    loci = [resonance_3m(mu, k) for k in range(1, n + 1)]
    from jumploci.ideals.varieties import variety_in
    for a, b in zip(loci[1:], loci):
        assert variety_in(a, b) is True
    # Pfaffian orders come in pairs of depths
    first = 2 if n % 2 == 0 else 1
    for k in range(first, n, 2):
        assert loci[k - 1] == loci[k]


@pytest.mark.parametrize("seed", range(50))
def test_turaev_det_ratio(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 7)
    mu = random_triform(n, rng, density=0.6)
    ratios = {det_ratio(mu, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    assert None not in ratios and len(ratios) == 1
    detv, pf = turaev_det_pf(mu)
    assert ratios == {detv}
    if n % 2 == 0:
        assert detv.is_zero()
    else:
        assert detv == pf * pf


@pytest.mark.parametrize("g", [1, 2, 3])
def test_surface_times_circle_pfaffian(g):
    n = 2 * g + 1
    mu = sigma_g(g)
    detv, pf = turaev_det_pf(mu)
    assert pf == LaurentPoly.var(n - 1, n, x_names(n), power=g - 1)
    hyper = VarietyDescription.of(AFFINE, n, [LinearSubspace.coordinate([n - 1], n)])
    for k in range(1, 2 * g - 1):
        assert varieties_equal(resonance_3m(mu, k), hyper) is True
    assert resonance_3m(mu, 2 * g - 1).is_point()


@given(forms.filter(lambda m: m.n % 2 == 1))
def test_genericity_agrees_with_sampling(mu):
    res = is_generic(mu)
    rng = random.Random(1)
    sampled = any(gamma_rank(mu, [rng.randint(-30, 30) for _ in range(mu.n)]) == mu.n - 1
                  for _ in range(40))
    assert res.generic == sampled
    if res.generic and res.certificate is not None:
        assert gamma_rank(mu, res.certificate) == mu.n - 1


def test_genericity_by_sampling_above_exact_limit():
    mu = sigma_g(6)  # n = 13
    res = is_generic(mu)
    assert res.generic and res.method == "sampling"


def test_closed_manifold_validation():
    bad = ClosedThreeManifoldData(TriForm(2), parse_poly("t1 - 2", t_names(2)))
    with pytest.raises(InvalidManifoldData):
        bad.validate()
    loose = ClosedThreeManifoldData(TriForm(2), parse_poly("t1 - 2", t_names(2)),
                                    closed_manifold=False)
    assert loose.validate()


@pytest.mark.parametrize("name", ["sigma2-x-s1", "sigma3-x-s1", "torus-3", "heisenberg",
                                  "quadric-cone", "s1xs2", "s1xs2-sum-2", "s1xs2-sum-3"])
def test_alexander_polynomials_of_closed_fixtures_are_symmetric(name):
    m = load(name)
    assert m.validate() == []
    assert char_variety_3m(m).contains_identity()


def test_duality_table_shape():
    m = load("sigma2-x-s1")
    cells = duality_table(m)
    assert len(cells) == 4 * (m.n + 2)
    by = {(c.degree, c.depth): c for c in cells}
    assert by[(1, 2)].resonance == by[(2, 2)].resonance
    assert by[(0, 1)].resonance.is_point() and by[(3, 2)].resonance.is_empty()


def test_triform_json_round_trip():
    mu = TriForm.from_terms(4, {(3, 2, 1): 2, (1, 2, 4): -1})
    assert mu.coeff(0, 1, 2) == -2
    assert TriForm.from_json(mu.to_json()) == mu

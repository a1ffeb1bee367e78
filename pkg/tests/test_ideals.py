import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import laurent_polys, to_sympy
from jumploci.ideals.linear import homogeneous_linear_factors, rational_roots
from jumploci.ideals.matrices import (PolyMatrix, det, fitting_ideal, minors_ideal,
                                      order_of_module, pfaffian, pfaffian_ideal)
from jumploci.ideals.modp import varieties_equal_mod_p, variety_in_mod_p
from jumploci.ideals.tangent import exponential_tangent_cone, tangent_cone_hypersurface
from jumploci.ideals.varieties import (AFFINE, TORUS, LinearSubspace, VarietyDescription,
                                       describe, hyperplane_union, varieties_equal, variety_in)
from jumploci.linalg import rank
from jumploci.symbolic import LaurentPoly, parse_poly, t_names, x_names
from jumploci.symbolic import BudgetExceeded

X = sp.symbols("x1 x2 x3")
entries = laurent_polys(3, laurent=False, max_terms=2, height=3)


def square(draw_entries, size):
    return st.lists(draw_entries, min_size=size * size, max_size=size * size).map(
        lambda es: PolyMatrix([es[i * size:(i + 1) * size] for i in range(size)], 3))


def skew(size):
    m = size * (size - 1) // 2
    def build(es):
        z = LaurentPoly.zero(3)
        rows = [[z] * size for _ in range(size)]
        it = iter(es)
        for i in range(size):
            for j in range(i + 1, size):
                e = next(it)
                rows[i][j], rows[j][i] = e, -e
        return PolyMatrix(rows, 3)
    return st.lists(entries, min_size=m, max_size=m).map(build)


@given(square(entries, 3))
def test_det_matches_sympy(m):
    oracle = sp.Matrix([[to_sympy(e, X) for e in r] for r in m.entries]).det()
    assert sp.expand(to_sympy(det(m), X) - oracle) == 0


@given(st.sampled_from([2, 4, 6]).flatmap(skew))
def test_pfaffian_squared_is_det(m):
    assert pfaffian(m) ** 2 == det(m)


@given(skew(5))
def test_odd_skew_det_vanishes(m):
    assert det(m).is_zero()


@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_minor_ideals_detect_rank(r, c, seed):
    rng = random.Random(seed)
    rows = [[LaurentPoly.var(rng.randrange(3), 3) * rng.randint(-2, 2) + rng.randint(-2, 2)
             for _ in range(c)] for _ in range(r)]
    m = PolyMatrix(rows, 3)
    pt = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
    rk = rank(m.evaluate(pt))
    assert rk == sp.Matrix(m.evaluate(pt)).rank()
    for s in range(1, min(r, c) + 1):
        vals = [g.evaluate(pt) for g in minors_ideal(m, s).generators]
        assert any(vals) == (s <= rk)


@given(st.integers(0, 10 ** 6))
def test_fitting_chain_ascends(seed):
    # E_k ⊆ E_{k+1}, so V(E_{k+1}) ⊆ V(E_k)
    rng = random.Random(seed)
    xs = [LaurentPoly.var(i, 3, x_names(3)) for i in range(3)]
    rows = [[sum((xs[i] * rng.randint(-1, 1) for i in range(3)), LaurentPoly.zero(3))
             for _ in range(3)] for _ in range(2)]
    m = PolyMatrix(rows, 3, x_names(3))
    loci = [describe(fitting_ideal(m, k).generators, 3, AFFINE) for k in range(4)]
    for a, b in zip(loci[1:], loci):
        assert variety_in(a, b) is True


def test_order_of_module_presentation():
    t = parse_poly("t1", t_names(1))
    m = PolyMatrix([[t - 1, LaurentPoly.zero(1)], [LaurentPoly.zero(1), (t - 1) * (t + 1)]], 1)
    assert str(order_of_module(m, 0)) == "t1^3 - t1^2 - t1 + 1"
    assert str(order_of_module(m, 1)) == "t1 - 1"
    assert order_of_module(m, 2) == LaurentPoly.const(1, 1)


def test_pfaffian_ideal_orders():
    m = PolyMatrix([[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]], 1)
    assert pfaffian(m) == LaurentPoly.const(1 * 6 - 2 * 5 + 3 * 4, 1)
    assert len(pfaffian_ideal(m, 2).generators) == 6
    with pytest.raises(ValueError):
        pfaffian_ideal(m, 3)


def test_rational_roots_match_sympy():
    coeffs = [6, -5, -2, 1]  # (u-1)(u+2)(u-3) read low to high
    u = sp.Symbol("u")
    oracle = sorted(sp.Rational(r) for r in sp.roots(sum(c * u ** i for i, c in enumerate(coeffs)))
                    if r.is_rational)
    assert sorted(rational_roots(coeffs)) == [Fraction(int(r.p), int(r.q)) for r in oracle]


linear_forms = st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any)


@given(st.lists(linear_forms, min_size=1, max_size=4))
def test_linear_factors_recover_product(forms):
    xs = [LaurentPoly.var(i, 3, x_names(3)) for i in range(3)]
    h = LaurentPoly.const(1, 3, x_names(3))
    for f in forms:
        h = h * sum((xs[i] * c for i, c in enumerate(f)), LaurentPoly.zero(3, x_names(3)))
    factors, rest = homogeneous_linear_factors(h)
    assert rest.is_constant()
    assert sum(m for _, m in factors) == len(forms)
    prod = LaurentPoly.const(rest.constant_term(), 3, x_names(3))
    for ell, m in factors:
        prod = prod * ell ** m
    assert prod == h


def test_linear_factors_leave_irreducible_quadric():
    h = parse_poly("x1*x2*(x1^2 + x2^2 + x3^2)", x_names(3))
    factors, rest = homogeneous_linear_factors(h)
    assert sorted(str(f) for f, _ in factors) == ["x1", "x2"]
    assert str(rest) == "x1^2 + x2^2 + x3^2"


def test_root_budget():
    h = parse_poly("x1^2 - 1000000007*1000000009*x2^2", x_names(2))
    with pytest.raises(BudgetExceeded):
        homogeneous_linear_factors(h, budget=16)


def test_tangent_cone_of_quadric_cone():
    f = parse_poly("t1^2*t2 + t1*t2^2 - 4*t1*t2 + t1 + t2", t_names(2))
    tc = tangent_cone_hypersurface(f)
    assert str(tc) == "V(x1^2 + x2^2)"
    assert exponential_tangent_cone(f, True).is_point()


def test_tangent_cone_away_from_identity():
    f = parse_poly("t1 + t2", t_names(2))
    assert tangent_cone_hypersurface(f).is_point()
    assert tangent_cone_hypersurface(f, False).is_empty()


def test_describe_coordinate_arrangement():
    v = describe([parse_poly("x1*x4", x_names(4)), parse_poly("x2*x4", x_names(4))], 4, AFFINE)
    expect = VarietyDescription.of(AFFINE, 4, [LinearSubspace.coordinate([3], 4),
                                               LinearSubspace.coordinate([0, 1], 4)])
    assert varieties_equal(v, expect) is True


def test_describe_torus_pins_coordinates():
    v = describe([parse_poly("t1 - 1", t_names(2)), parse_poly("(t1-1)*(t2+1)", t_names(2))], 2, TORUS)
    assert str(v) == "V(t1 - 1)"


@given(st.lists(linear_forms, min_size=1, max_size=3), st.lists(linear_forms, min_size=1, max_size=3))
def test_modp_oracle_agrees_with_exact(a, b):
    def arr(forms):
        return hyperplane_union([parse_poly(f"{f[0]}*x1 + {f[1]}*x2 + {f[2]}*x3", x_names(3))
                                 for f in forms], 3)
    va, vb = arr(a), arr(b)
    exact = varieties_equal(va, vb)
    assert exact is not None
    modp = varieties_equal_mod_p(va, vb, primes=(5, 7, 11))
    if exact:
        assert modp.status == "equal"
    inc = variety_in(va, vb)
    if inc is False:
        # a hyperplane not in the union has points off it mod p for all but finitely many p
        assert variety_in_mod_p(va, vb, primes=(101,), budget=10 ** 7).status == "differ"


def test_point_budget():
    v = VarietyDescription.full(AFFINE, 8)
    with pytest.raises(BudgetExceeded):
        varieties_equal_mod_p(v, v, budget=1000)


root_lists = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), max_size=4)


@given(root_lists, st.sampled_from([[1], [1, 0, 1], [-2, 0, 1], [1, 1, 1]]), st.integers(1, 3))
def test_rational_roots_of_constructed_polynomials(roots, extra, mult):
    coeffs = [Fraction(c) for c in extra]
    for r in roots:
        for _ in range(mult):
            # multiply by (u − r)
            coeffs = [(coeffs[i - 1] if i else 0) - r * (coeffs[i] if i < len(coeffs) else 0)
                      for i in range(len(coeffs) + 1)]
    u = sp.Symbol("u")
    oracle = {Fraction(int(z.p), int(z.q)) for z in
              sp.Poly(sum(sp.Rational(c.numerator, c.denominator) * u ** i
                          for i, c in enumerate(coeffs)), u).ground_roots() if z.is_rational}
    assert set(rational_roots(coeffs)) == oracle == set(roots)

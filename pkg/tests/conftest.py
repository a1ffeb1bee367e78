import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from jumploci.symbolic import LaurentPoly

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("repo")


def to_sympy(f: LaurentPoly, syms):
    out = sp.Integer(0)
    for e, c in f.terms.items():
        term = sp.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sp.Integer(c)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sp.expand(out)


def from_sympy(expr, syms, names=None) -> LaurentPoly:
    poly = sp.Poly(sp.expand(expr), *syms)
    terms = {}
    for mono, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(int(x) for x in mono)] = int(c) if c.q == 1 else c
    from fractions import Fraction
    terms = {e: (Fraction(int(c.p), int(c.q)) if isinstance(c, sp.Rational) else c)
             for e, c in terms.items()}
    return LaurentPoly(terms, len(syms), names)


def laurent_polys(nvars: int, laurent: bool = True, max_terms: int = 4, height: int = 4):
    lo = -2 if laurent else 0
    exps = st.tuples(*[st.integers(lo, 2)] * nvars)
    coeffs = st.integers(-height, height).filter(bool)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda d: LaurentPoly(d, nvars))


def contains_point(v, pt) -> bool:
    """Exact membership of a rational point in a variety description."""
    from jumploci.ideals.varieties import defining_polys
    for c in v.components:
        polys = defining_polys(c, v.ambient, v.nvars)
        if polys is None:
            raise ValueError("component has no defining polynomials")
        if all(f.evaluate(pt) == 0 for f in polys):
            return True
    return False

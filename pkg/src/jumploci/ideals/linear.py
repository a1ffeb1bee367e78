"""Detection of rational linear factors of polynomials.

For a homogeneous h the search is a complete decision: after a linear change
of coordinates making the pure power x_v^d appear, every linear factor can be
scaled to x_v + Σ a_j x_j, and each a_j is minus a rational root of the
binary restriction h(x_v=u, x_j=1, others 0).  Candidates are combined by
backtracking with exact divisibility checks on partial restrictions.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from ..symbolic import (BudgetExceeded, LaurentPoly, poly_quotient,
                        primitive_over_z, squarefree_poly)

DEFAULT_ROOT_BUDGET = 4096  # bit length allowed for the root bound of the monic transform

_PRIMES = [p for p in range(3, 2000) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


def _horner(coeffs: Sequence, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gcd_mod_p(a: list, b: list, p: int) -> list:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            f = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - f * c) % p
            _trim(a)
        a, b = b, a
    return a


def _squarefree_part_q(cs: list[Fraction]) -> list[Fraction]:
    """Square-free part of a univariate rational polynomial (low degree first)."""
    def divmod_(a, b):
        a = list(a)
        q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
        while len(a) >= len(b) and any(a):
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            q[shift] = f
            for i, c in enumerate(b):
                a[shift + i] -= f * c
            _trim(a)
        return q, a

    da = [c * k for k, c in enumerate(cs)][1:]
    a, b = list(cs), _trim(da)
    while b:
        a, b = b, divmod_(a, b)[1]
    if len(a) <= 1:
        return list(cs)
    return _trim(divmod_(cs, a)[0])


def rational_roots(coeffs: Sequence, budget: int = DEFAULT_ROOT_BUDGET) -> list[Fraction]:
    """Distinct rational roots of Σ coeffs[k] u^k (low degree first).

    The polynomial is made square-free and monic over Z (u = y / a_d); its
    integer roots are found mod a prime p at which it stays square-free,
    Hensel-lifted past the Cauchy bound and confirmed exactly.
    """
    cs = [Fraction(c) for c in coeffs]
    _trim(cs)
    if not cs:
        raise ValueError("zero polynomial has every number as a root")
    roots = []
    k = 0
    while cs[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
    cs = cs[k:]
    if len(cs) == 1:
        return roots
    cs = _squarefree_part_q(cs)
    den = math.lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    d, lead = len(ints) - 1, ints[-1]
    # g(y) = lead^{d-1} f(y / lead) is monic with integer coefficients
    g = [c * lead ** (d - 1 - i) for i, c in enumerate(ints[:-1])] + [1]
    bound = 1 + max(abs(c) for c in g[:-1])
    if bound.bit_length() > budget:
        raise BudgetExceeded(f"root bound of {bound.bit_length()} bits exceeds the budget {budget}")
    dg = [c * i for i, c in enumerate(g)][1:]
    prime = next((p for p in _PRIMES if len(_gcd_mod_p(g, dg, p)) == 1), None)
    if prime is None:
        raise BudgetExceeded("no prime below 2000 keeps the polynomial square-free")
    for r in (r for r in range(prime) if _horner(g, r) % prime == 0):
        mod = prime
        while mod <= 2 * bound:
            mod *= mod
            r = (r - _horner(g, r) * pow(_horner(dg, r), -1, mod)) % mod
        y = r if r <= mod // 2 else r - mod
        if _horner(g, y) == 0:
            roots.append(Fraction(y, lead))
    return sorted(set(roots))


def _restrict(h: LaurentPoly, keep: set[int]) -> LaurentPoly:
    """Set every variable outside ``keep`` to zero."""
    return h._new({e: c for e, c in h.terms.items()
                   if all(x == 0 or i in keep for i, x in enumerate(e))})


def _pure_power_var(h: LaurentPoly, used: list[int], d: int) -> int | None:
    for v in used:
        e = [0] * h.nvars
        e[v] = d
        if tuple(e) in h.terms:
            return v
    return None


def _binary_coeffs(h: LaurentPoly, v: int, j: int, d: int) -> list:
    coeffs = [0] * (d + 1)
    for e, c in h.terms.items():
        if all(x == 0 for i, x in enumerate(e) if i not in (v, j)):
            coeffs[e[v]] += c
    return coeffs


def _find_factor_with_pure_power(h: LaurentPoly, v: int, used: list[int], d: int,
                                 budget: int) -> LaurentPoly | None:
    n = h.nvars
    others = [j for j in used if j != v]
    cands = {}
    for j in others:
        roots = rational_roots(_binary_coeffs(h, v, j, d), budget)
        if not roots:
            return None
        cands[j] = [-r for r in roots]
    xv = LaurentPoly.var(v, n, h.names)

    def search(idx: int, ell: LaurentPoly) -> LaurentPoly | None:
        if idx == len(others):
            return ell
        j = others[idx]
        keep = {v} | set(others[:idx + 1])
        restricted = _restrict(h, keep)
        for a in cands[j]:
            cand = ell + LaurentPoly.var(j, n, h.names) * a if a else ell
            if restricted.is_zero() or poly_quotient(restricted, cand) is not None:
                found = search(idx + 1, cand)
                if found is not None:
                    return found
        return None

    return search(0, xv)


def _shear_vector(h: LaurentPoly, v: int, others: list[int]):
    n = h.nvars
    for c in itertools.product(range(-2, 3), repeat=len(others)):
        pt = [0] * n
        pt[v] = 1
        for j, cj in zip(others, c):
            pt[j] = cj
        if h.evaluate(pt) != 0:
            return dict(zip(others, c))
    d = h.total_degree() + 1
    for s in itertools.count(2):
        pt = [0] * n
        pt[v] = 1
        for k, j in enumerate(others):
            pt[j] = s ** (d ** k)
        if h.evaluate(pt) != 0:
            return {j: pt[j] for j in others}


def _find_linear_factor(h: LaurentPoly, budget: int) -> LaurentPoly | None:
    used = h.used_variables()
    d = h.total_degree()
    v = _pure_power_var(h, used, d)
    if v is not None:
        return _find_factor_with_pure_power(h, v, used, d, budget)
    n = h.nvars
    v = used[0]
    others = used[1:]
    c = _shear_vector(h, v, others)
    xs = [LaurentPoly.var(i, n, h.names) for i in range(n)]
    fwd = list(xs)
    back = list(xs)
    for j in others:
        fwd[j] = xs[j] + xs[v] * c[j]
        back[j] = xs[j] - xs[v] * c[j]
    sheared = h.substitute(fwd)
    ell = _find_factor_with_pure_power(sheared, v, used, d, budget)
    if ell is None:
        return None
    return ell.substitute(back)


def normalize_linear(ell: LaurentPoly) -> LaurentPoly:
    return primitive_over_z(ell)


def homogeneous_linear_factors(h: LaurentPoly, budget: int = DEFAULT_ROOT_BUDGET
                               ) -> tuple[list[tuple[LaurentPoly, int]], LaurentPoly]:
    """Split a homogeneous polynomial as Π ℓ_i^{m_i} · rest.

    The ℓ_i are distinct primitive rational linear forms; ``rest`` has no
    rational linear factor.  Raises BudgetExceeded if coefficients are too
    large for the rational-root search.
    """
    if h.is_zero():
        raise ValueError("zero polynomial")
    if not h.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    if not h.is_polynomial():
        raise ValueError("expected an ordinary polynomial")
    n = h.nvars
    factors: list[tuple[LaurentPoly, int]] = []
    mins = h.min_exponents()
    for i, k in enumerate(mins):
        if k:
            factors.append((LaurentPoly.var(i, n, h.names), k))
    h = h.shift([-k for k in mins])
    # linear factors of h are those of its square-free part, which has smaller coefficients
    s = squarefree_poly(h) if h.total_degree() > 1 else h
    while s.total_degree() > 0:
        ell = _find_linear_factor(s, budget)
        if ell is None:
            break
        ell = normalize_linear(ell)
        s = poly_quotient(s, ell)
        mult = 0
        while True:
            q = poly_quotient(h, ell)
            if q is None:
                break
            h, mult = q, mult + 1
        assert mult > 0 and s is not None
        factors.append((ell, mult))
    factors.sort(key=lambda fm: fm[0].to_json().__repr__())
    return factors, h


def linear_factors(f: LaurentPoly, budget: int = DEFAULT_ROOT_BUDGET
                   ) -> tuple[list[tuple[LaurentPoly, int]], LaurentPoly]:
    """Rational (affine) linear factors of an ordinary polynomial.

    Works by homogenizing with an extra variable, so factors may carry a
    constant term.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    n = f.nvars
    d = f.total_degree()
    if f.is_homogeneous():
        return homogeneous_linear_factors(f, budget)
    hom = LaurentPoly({e + (d - sum(e),): c for e, c in f.terms.items()}, n + 1)
    facs, rest = homogeneous_linear_factors(hom, budget)
    out = []
    for ell, m in facs:
        deh = LaurentPoly({e[:n]: c for e, c in ell.terms.items()}, n, f.names)
        if deh.is_constant():
            continue
        out.append((normalize_linear(deh), m))
    rest_d = LaurentPoly({e[:n]: c for e, c in rest.terms.items()}, n, f.names)
    out.sort(key=lambda fm: fm[0].to_json().__repr__())
    return out, rest_d

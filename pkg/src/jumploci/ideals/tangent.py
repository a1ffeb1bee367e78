"""Classical and exponential tangent cones at the identity of the torus."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..symbolic import BudgetExceeded, LaurentPoly, initial_form, shift_to_origin
from .varieties import (AFFINE, FullAmbient, LinearSubspace, VarietyDescription,
                        describe, intersect)

DEFAULT_SUPPORT_CAP = 12


def tangent_cone_hypersurface(f: LaurentPoly, includes_identity_extra: bool = True,
                              names=None) -> VarietyDescription:
    """TC at 1 of V(f), or of V(f) ∪ {1} when ``includes_identity_extra``."""
    if f.is_zero():
        raise ValueError("zero polynomial: the variety is the whole torus")
    n = f.nvars
    if f.at_one() == 0:
        g = initial_form(shift_to_origin(f))
        return describe([g], n, AFFINE, names)
    if includes_identity_extra:
        return VarietyDescription.point(AFFINE, n, names)
    return VarietyDescription.empty(AFFINE, n, names)


def tangent_cone_union(factors: Sequence[LaurentPoly], includes_identity_extra: bool = True,
                       names=None) -> VarietyDescription:
    """TC of V(f_1 ⋯ f_r) ∪ {1}: the initial form is multiplicative."""
    if not factors:
        raise ValueError("need at least one factor")
    n = factors[0].nvars
    out = VarietyDescription.empty(AFFINE, n, names)
    for f in factors:
        out = out.union(tangent_cone_hypersurface(f, False, names))
    if includes_identity_extra:
        out = out.with_identity()
    return out


def _zero_sum_masks(coeffs: list) -> tuple[list[bool], list[bool]]:
    m = len(coeffs)
    total = [Fraction(0)] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        total[mask] = total[mask ^ low] + coeffs[low.bit_length() - 1]
    zero = [mask != 0 and total[mask] == 0 for mask in range(1 << m)]
    minimal = [False] * (1 << m)
    for mask in range(1, 1 << m):
        if not zero[mask]:
            continue
        sub = (mask - 1) & mask
        ok = True
        while sub:
            if zero[sub]:
                ok = False
                break
            sub = (sub - 1) & mask
        minimal[mask] = ok
    return zero, minimal


def admissible_partitions(coeffs: list) -> list[list[int]]:
    """Partitions of range(len(coeffs)) into minimal zero-sum blocks (as bitmasks)."""
    m = len(coeffs)
    _, minimal = _zero_sum_masks(coeffs)
    blocks_with_low: dict[int, list[int]] = {}
    for mask in range(1, 1 << m):
        if minimal[mask]:
            low = (mask & -mask).bit_length() - 1
            blocks_with_low.setdefault(low, []).append(mask)
    out: list[list[int]] = []

    def rec(remaining: int, acc: list[int]):
        if not remaining:
            out.append(list(acc))
            return
        low = (remaining & -remaining).bit_length() - 1
        for b in blocks_with_low.get(low, []):
            if b & remaining == b:
                acc.append(b)
                rec(remaining & ~b, acc)
                acc.pop()

    rec((1 << m) - 1, [])
    return out


def _tau_single(f: LaurentPoly, support_cap: int) -> VarietyDescription:
    n = f.nvars
    if f.is_zero():
        return VarietyDescription.full(AFFINE, n)
    terms = sorted(f.terms.items())
    if len(terms) > support_cap:
        raise BudgetExceeded(
            f"support of size {len(terms)} exceeds the cap {support_cap}; raise --budget-support")
    exps = [e for e, _ in terms]
    coeffs = [Fraction(c) for _, c in terms]
    comps = []
    seen = set()
    for part in admissible_partitions(coeffs):
        rows = []
        for b in part:
            idx = [i for i in range(len(terms)) if b >> i & 1]
            a0 = exps[idx[0]]
            for i in idx[1:]:
                rows.append([Fraction(x - y) for x, y in zip(exps[i], a0)] + [Fraction(0)])
        sub = LinearSubspace.from_rows(rows, n)
        if sub.rows and sub not in seen:
            seen.add(sub)
            comps.append(sub)
        elif not sub.rows:
            comps.append(FullAmbient())
    return VarietyDescription.of(AFFINE, n, comps)


def exponential_tangent_cone(f: LaurentPoly | Sequence[LaurentPoly],
                             includes_identity_extra: bool = False,
                             support_cap: int = DEFAULT_SUPPORT_CAP,
                             names=None) -> VarietyDescription:
    """τ_1 of V(f) (or of V(f_1,…,f_r) for a list), optionally with {1} adjoined.

    x lies in τ_1 iff f(exp(λx)) = Σ c_m e^{λ⟨a_m,x⟩} vanishes for all λ, i.e.
    iff the support splits into zero-sum classes of equal ⟨a_m, x⟩.
    """
    gens = [f] if isinstance(f, LaurentPoly) else list(f)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nvars
    result = None
    for g in gens:
        t = _tau_single(g, support_cap)
        result = t if result is None else intersect(result, t)
    if includes_identity_extra:
        result = result.with_identity()
    return VarietyDescription.of(AFFINE, n, result.components, names)


def exponential_tangent_cone_union(factors: Sequence[LaurentPoly],
                                   includes_identity_extra: bool = False,
                                   support_cap: int = DEFAULT_SUPPORT_CAP,
                                   names=None) -> VarietyDescription:
    """τ_1 of V(f_1 ⋯ f_r): τ_1 commutes with finite unions."""
    n = factors[0].nvars
    out = VarietyDescription.empty(AFFINE, n)
    for f in factors:
        out = out.union(_tau_single(f, support_cap))
    if includes_identity_extra:
        out = out.with_identity()
    return VarietyDescription.of(AFFINE, n, out.components, names)

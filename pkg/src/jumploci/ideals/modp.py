"""Brute-force comparison of varieties over small prime fields.

Agreement over a few primes is evidence, not proof: results are labelled
probabilistic.  A differing point is an honest witness only for the reduced
varieties, which is why callers treat it as a hint unless it is confirmed
exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..symbolic import BudgetExceeded, LaurentPoly, coeff_mod_p
from .varieties import (AFFINE, TORUS, FullAmbient, Hypersurface, IdentityPoint,
                        LinearSubspace, TorsionTranslate, VarietyDescription, ZeroSet)

DEFAULT_PRIMES = (5, 7, 11)
DEFAULT_POINT_BUDGET = 10 ** 7
CHUNK = 1 << 18


@dataclass
class ModPResult:
    status: str  # "equal", "differ" or "inconclusive"
    primes: list[int] = field(default_factory=list)
    witness: tuple[int, ...] | None = None
    witness_prime: int | None = None
    reason: str = ""

    @property
    def confidence(self) -> str:
        return "probabilistic"

    def to_json(self) -> dict:
        d = {"status": self.status, "primes": self.primes, "confidence": self.confidence}
        if self.witness is not None:
            d["witness"] = list(self.witness)
            d["witness_prime"] = self.witness_prime
        if self.reason:
            d["reason"] = self.reason
        return d


class _Unsupported(Exception):
    pass


def _poly_mask(f: LaurentPoly, pts: np.ndarray, p: int, inv: np.ndarray | None) -> np.ndarray:
    acc = np.zeros(pts.shape[0], dtype=np.int64)
    for e, c in f.terms.items():
        try:
            term = np.full(pts.shape[0], coeff_mod_p(c, p), dtype=np.int64)
        except (ZeroDivisionError, TypeError) as exc:
            raise _Unsupported(str(exc))
        for i, k in enumerate(e):
            if k == 0:
                continue
            if k < 0:
                if inv is None:
                    raise _Unsupported("negative exponent in affine ambient")
                base = inv[pts[:, i]]
                k = -k
            else:
                base = pts[:, i]
            pw = np.ones_like(base)
            b = base.copy()
            while k:
                if k & 1:
                    pw = pw * b % p
                b = b * b % p
                k >>= 1
            term = term * pw % p
        acc = (acc + term) % p
    return acc == 0


def _linear_mask(c: LinearSubspace, pts: np.ndarray, p: int) -> np.ndarray:
    mask = np.ones(pts.shape[0], dtype=bool)
    n = c.nvars
    for r in c.rows:
        acc = np.zeros(pts.shape[0], dtype=np.int64)
        try:
            for i, a in enumerate(r[:n]):
                if a:
                    acc = (acc + coeff_mod_p(Fraction(a), p) * pts[:, i]) % p
            rhs = coeff_mod_p(Fraction(r[n]), p)
        except ZeroDivisionError as exc:
            raise _Unsupported(str(exc))
        mask &= acc == rhs
    return mask


def membership_mask(v: VarietyDescription, pts: np.ndarray, p: int) -> np.ndarray:
    inv = None
    if v.ambient == TORUS:
        inv = np.zeros(p, dtype=np.int64)
        for a in range(1, p):
            inv[a] = pow(a, -1, p)
    out = np.zeros(pts.shape[0], dtype=bool)
    ident = 1 if v.ambient == TORUS else 0
    for c in v.components:
        if isinstance(c, FullAmbient):
            return np.ones(pts.shape[0], dtype=bool)
        if isinstance(c, IdentityPoint):
            out |= np.all(pts == ident, axis=1)
        elif isinstance(c, LinearSubspace):
            out |= _linear_mask(c, pts, p)
        elif isinstance(c, Hypersurface):
            out |= _poly_mask(c.poly, pts, p, inv)
        elif isinstance(c, ZeroSet):
            m = np.ones(pts.shape[0], dtype=bool)
            for g in c.generators:
                m &= _poly_mask(g, pts, p, inv)
            out |= m
        elif isinstance(c, TorsionTranslate):
            raise _Unsupported("torsion-translated components are not reduced mod p")
        else:
            raise _Unsupported(f"unknown component {c!r}")
    return out


def _point_chunks(n: int, values: np.ndarray):
    """All points of values^n in lexicographic order, in chunks."""
    k = len(values)
    total = k ** n
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        pts = np.empty((idx.shape[0], n), dtype=np.int64)
        for i in range(n - 1, -1, -1):
            pts[:, i] = values[idx % k]
            idx //= k
        yield pts


def varieties_equal_mod_p(a: VarietyDescription, b: VarietyDescription,
                          primes: Sequence[int] = DEFAULT_PRIMES,
                          budget: int = DEFAULT_POINT_BUDGET) -> ModPResult:
    """Compare point sets of a and b over F_p (affine) or F_p^* (torus)."""
    if a.ambient != b.ambient or a.nvars != b.nvars:
        raise ValueError("varieties live in different ambient spaces")
    n = a.nvars
    checked = []
    for p in primes:
        values = np.arange(1, p) if a.ambient == TORUS else np.arange(0, p)
        if len(values) ** n > budget:
            raise BudgetExceeded(
                f"{len(values)}^{n} points over F_{p} exceed the point budget {budget}")
        try:
            for pts in _point_chunks(n, values):
                ma = membership_mask(a, pts, p)
                mb = membership_mask(b, pts, p)
                diff = np.nonzero(ma != mb)[0]
                if diff.size:
                    w = tuple(int(x) for x in pts[diff[0]])
                    return ModPResult("differ", checked + [p], w, p)
        except _Unsupported as exc:
            return ModPResult("inconclusive", checked, reason=str(exc))
        checked.append(p)
    if len(checked) < 2:
        return ModPResult("inconclusive", checked, reason="fewer than two primes agreed")
    return ModPResult("equal", checked)


def variety_in_mod_p(a: VarietyDescription, b: VarietyDescription,
                     primes: Sequence[int] = DEFAULT_PRIMES,
                     budget: int = DEFAULT_POINT_BUDGET) -> ModPResult:
    """Probabilistic check of a ⊆ b; 'equal' here means no counterexample point."""
    n = a.nvars
    checked = []
    for p in primes:
        values = np.arange(1, p) if a.ambient == TORUS else np.arange(0, p)
        if len(values) ** n > budget:
            raise BudgetExceeded(
                f"{len(values)}^{n} points over F_{p} exceed the point budget {budget}")
        try:
            for pts in _point_chunks(n, values):
                bad = np.nonzero(membership_mask(a, pts, p) & ~membership_mask(b, pts, p))[0]
                if bad.size:
                    return ModPResult("differ", checked + [p],
                                      tuple(int(x) for x in pts[bad[0]]), p)
        except _Unsupported as exc:
            return ModPResult("inconclusive", checked, reason=str(exc))
        checked.append(p)
    return ModPResult("equal", checked)


__all__ = ["ModPResult", "varieties_equal_mod_p", "variety_in_mod_p", "DEFAULT_PRIMES",
           "membership_mask"]

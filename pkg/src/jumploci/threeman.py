"""Closed orientable 3-manifolds: intersection 3-forms, δ_M, Pfaffians, jump loci."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .ideals.matrices import PolyMatrix, det, pfaffian, pfaffian_ideal
from .ideals.varieties import AFFINE, TORUS, VarietyDescription, describe
from .linalg import rank
from .symbolic import LaurentPoly, parse_poly, poly_quotient, symmetric, t_names, x_names

GENERIC_EXACT_LIMIT = 11


class InvalidManifoldData(ValueError):
    pass


def _perm_sign(idx: Sequence[int]) -> int:
    s = 1
    idx = list(idx)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                s = -s
    return s


@dataclass(frozen=True)
class TriForm:
    """Alternating integer 3-form Σ μ_{ijk} e_i e_j e_k on Z^n (0-based i<j<k keys)."""

    n: int
    terms: tuple[tuple[tuple[int, int, int], int], ...] = ()

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple[int, int, int], int] | Sequence,
                   one_based: bool = True) -> "TriForm":
        if n < 0:
            raise ValueError("n must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int, int], int] = {}
        off = 1 if one_based else 0
        for key, c in items:
            i, j, k = (int(x) - off for x in key)
            if len({i, j, k}) < 3:
                raise ValueError(f"repeated index in term {key}")
            if not all(0 <= x < n for x in (i, j, k)):
                raise ValueError(f"index out of range in term {key}")
            s = _perm_sign((i, j, k))
            srt = tuple(sorted((i, j, k)))
            acc[srt] = acc.get(srt, 0) + s * int(c)
        return cls(n, tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def from_json(cls, data: Mapping) -> "TriForm":
        n = int(data["n"])
        terms = []
        for t in data.get("terms", []):
            i, j, k = int(t["i"]), int(t["j"]), int(t["k"])
            if not i < j < k:
                raise ValueError(f"TriForm terms need i<j<k, got ({i},{j},{k})")
            terms.append(((i, j, k), int(t["coeff"])))
        return cls.from_terms(n, terms)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"i": i + 1, "j": j + 1, "k": k + 1, "coeff": c}
                                       for (i, j, k), c in self.terms]}

    def as_dict(self) -> dict[tuple[int, int, int], int]:
        return dict(self.terms)

    def coeff(self, i: int, j: int, k: int) -> int:
        """μ_{ijk} with antisymmetric extension (0-based indices)."""
        if len({i, j, k}) < 3:
            return 0
        return _perm_sign((i, j, k)) * dict(self.terms).get(tuple(sorted((i, j, k))), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in self.terms:
            mono = f"e{i + 1}e{j + 1}e{k + 1}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def random_triform(n: int, rng: random.Random, density: float = 0.5, height: int = 2) -> TriForm:
    terms = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if rng.random() < density:
                    c = rng.randint(-height, height)
                    if c:
                        terms[(i, j, k)] = c
    return TriForm.from_terms(n, terms, one_based=False)


@lru_cache(maxsize=256)
def delta_matrix(mu: TriForm) -> PolyMatrix:
    """n x n skew matrix with entry (k, i) = Σ_j μ_{ijk} x_j.

    This is the negative of the convention with μ_{jik}; with it the (1;1)
    Pfaffian of e1e2e3 is +x1 and Pf(Σ_g × S¹) = x_{2g+1}^{g−1} on the nose.
    """
    n = mu.n
    if n < 1:
        raise ValueError("δ_M needs n ≥ 1")
    names = x_names(n)
    xs = [LaurentPoly.var(j, n, names) for j in range(n)]
    zero = LaurentPoly.zero(n, names)
    m = [[zero] * n for _ in range(n)]
    for (a, b, c), v in mu.terms:
        # every permutation (j, i, k) of (a, b, c) contributes to entry (k, i)
        for j, i, k in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            s = -_perm_sign((j, i, k)) * v
            m[k][i] = m[k][i] + xs[j] * s
    return PolyMatrix(m, n, names)


def _pf_order(n: int, k: int) -> int:
    if n % 2 == 0:
        return n - 2 * (k // 2)
    return n - 2 * ((k + 1) // 2) + 1


@lru_cache(maxsize=256)
def _resonance_for_order(mu: TriForm, order: int) -> VarietyDescription:
    n = mu.n
    if order <= 0:
        return VarietyDescription.point(AFFINE, n)
    if order == n - 1 and n % 2 == 1 and n >= 3:
        # the (n-1)-Pfaffians are ±x_i·Pf(μ)
        pf = turaev_det_pf(mu)[1]
        if pf.is_zero():
            return VarietyDescription.full(AFFINE, n)
        return describe([pf], n, AFFINE).with_identity()
    ideal = pfaffian_ideal(delta_matrix(mu), order)
    return describe(ideal.generators, n, AFFINE).with_identity()


def resonance_3m(mu: TriForm, k: int) -> VarietyDescription:
    """R^1_k(M) ⊆ C^n from Pfaffian ideals of δ_M (1 ≤ k ≤ n).

    Depths 2j, 2j+1 (n even) and 2j−1, 2j (n odd) share one Pfaffian ideal and
    return the same object.  The origin always lies in R^1_k since b_1 = n ≥ k.
    """
    n = mu.n
    if not 1 <= k <= max(n, 1) or n == 0:
        raise ValueError(f"depth {k} out of range 1..{n}")
    return _resonance_for_order(mu, _pf_order(n, k))


def resonance_3m_degree(mu: TriForm, i: int, k: int) -> VarietyDescription:
    """R^i_k(M) for all degrees via Poincaré duality bookkeeping."""
    n = mu.n
    if k == 0:
        return VarietyDescription.full(AFFINE, n)
    if i in (1, 2):
        if k > n:
            return VarietyDescription.empty(AFFINE, n)
        return resonance_3m(mu, k)
    if i in (0, 3):
        return VarietyDescription.point(AFFINE, n) if k == 1 else VarietyDescription.empty(AFFINE, n)
    return VarietyDescription.empty(AFFINE, n)


@lru_cache(maxsize=256)
def turaev_det_pf(mu: TriForm) -> tuple[LaurentPoly, LaurentPoly]:
    """Turaev's Det(μ) and Pf(μ) (Pf is 0 for even n).

    Det comes from det δ(1;1) = x_1² Det, cross-checked on δ(1;2); for odd n
    Pf comes from pf δ(1;1) = x_1 Pf and Det = Pf² is asserted.
    """
    n = mu.n
    if n < 3:
        raise ValueError("Det and Pf need n ≥ 3")
    d = delta_matrix(mu)
    names = d.names
    x1 = LaurentPoly.var(0, n, names)
    x2 = LaurentPoly.var(1, n, names)
    zero = LaurentPoly.zero(n, names)
    if n % 2 == 0:
        detv = zero
        # det of an odd-size skew matrix vanishes; check the off-diagonal minor
        d12 = det(d.delete(0, 1))
        if d12.is_zero():
            return zero, zero
        q = poly_quotient(d12, -(x1 * x2))
        if q is None:
            raise ArithmeticError("det δ(1;2) not divisible by x1·x2")
        detv = q
        if not detv.is_zero():
            raise ArithmeticError("Det(μ) should vanish for even n")
        return detv, zero
    sub = d.delete(0, 0)
    pf1 = pfaffian(sub)
    pf = poly_quotient(pf1, x1)
    if pf is None:
        raise ArithmeticError("pf δ(1;1) not divisible by x1")
    detv = pf * pf
    if n <= GENERIC_EXACT_LIMIT:
        d12 = det(d.delete(0, 1))
        if d12 != -(x1 * x2) * detv:
            raise ArithmeticError("det δ(1;2) disagrees with -x1·x2·Det(μ)")
    return detv, pf


def det_ratio(mu: TriForm, i: int, j: int) -> LaurentPoly | None:
    """det δ(i;j) / ((−1)^{i+j} x_i x_j) for 1-based i, j, or None if not exact."""
    d = delta_matrix(mu)
    n = mu.n
    xi = LaurentPoly.var(i - 1, n, d.names)
    xj = LaurentPoly.var(j - 1, n, d.names)
    val = det(d.delete(i - 1, j - 1))
    return poly_quotient(val, xi * xj * (-1) ** (i + j))


@dataclass(frozen=True)
class GenericityResult:
    generic: bool
    certificate: tuple[Fraction, ...] | None
    exact: bool
    method: str


def gamma_rank(mu: TriForm, c: Sequence) -> int:
    """Rank of the contracted 2-form γ_c, i.e. of δ_M evaluated at c."""
    return rank(delta_matrix(mu).evaluate(list(c)))


def is_generic(mu: TriForm, rng: random.Random | None = None, samples: int = 200
               ) -> GenericityResult:
    """Decide genericity of an odd-rank 3-form: μ is generic iff Pf(μ) ≢ 0.

    For n ≤ GENERIC_EXACT_LIMIT the Pfaffian is computed exactly; beyond that,
    random rational points are sampled and a point with rank γ_c = n − 1 is an
    exact certificate, while failure to find one is reported as inexact.
    """
    n = mu.n
    if n % 2 == 0:
        raise ValueError("genericity is defined here for odd n only")
    if n < 3:
        raise ValueError("genericity needs n ≥ 3")
    rng = rng or random.Random(20240101)
    if n <= GENERIC_EXACT_LIMIT:
        pf = turaev_det_pf(mu)[1]
        if pf.is_zero():
            return GenericityResult(False, None, True, "pfaffian")
        for _ in range(samples * 10):
            c = [Fraction(rng.randint(-50, 50)) for _ in range(n)]
            if pf.evaluate(c) != 0 and c[0] != 0:
                assert gamma_rank(mu, c) == n - 1
                return GenericityResult(True, tuple(c), True, "pfaffian")
        return GenericityResult(True, None, True, "pfaffian")
    for _ in range(samples):
        c = [Fraction(rng.randint(-10 ** 6, 10 ** 6)) for _ in range(n)]
        if gamma_rank(mu, c) == n - 1:
            return GenericityResult(True, tuple(c), True, "sampling")
    return GenericityResult(False, None, False, "sampling")


# -- manifold data ----------------------------------------------------------------


@dataclass(frozen=True)
class ClosedThreeManifoldData:
    triform: TriForm
    alexander: LaurentPoly | None = None
    torsion: tuple[int, ...] = ()
    label: str = ""
    closed_manifold: bool = True
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return self.triform.n

    @classmethod
    def from_json(cls, data: Mapping) -> "ClosedThreeManifoldData":
        mu = TriForm.from_json(data["triform"])
        alex = data.get("alexander")
        if isinstance(alex, str):
            alex = parse_poly(alex, t_names(mu.n))
        elif isinstance(alex, list):
            alex = LaurentPoly.from_json(alex, mu.n, t_names(mu.n))
        return cls(mu, alex, tuple(int(x) for x in data.get("torsion", ())),
                   data.get("label", ""), bool(data.get("closed_manifold", True)),
                   tuple(data.get("notes", ())))

    def to_json(self) -> dict:
        d = {"triform": self.triform.to_json(),
             "alexander": None if self.alexander is None else str(self.alexander),
             "torsion": list(self.torsion), "label": self.label,
             "closed_manifold": self.closed_manifold}
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def validate(self) -> list[str]:
        """Check Δ against the closed-manifold constraints; returns diagnostics.

        Violations raise InvalidManifoldData only when the datum claims to be a
        closed 3-manifold.
        """
        msgs = []
        if self.alexander is None:
            return msgs
        if self.alexander.nvars != self.n:
            raise InvalidManifoldData(
                f"Alexander polynomial has {self.alexander.nvars} variables, expected {self.n}")
        if not self.alexander.is_zero() and not symmetric(self.alexander):
            msgs.append("Alexander polynomial is not symmetric up to units")
        if self.n >= 4 and not self.alexander.is_zero() and self.alexander.at_one() != 0:
            msgs.append("b_1 ≥ 4 but Δ(1) ≠ 0")
        if msgs and self.closed_manifold:
            raise InvalidManifoldData("; ".join(msgs))
        return msgs


def char_variety_3m(m: ClosedThreeManifoldData, k: int = 1) -> VarietyDescription:
    """V^1_1(M) = V(Δ) ∪ {1} (depth 1 only, the supported case)."""
    if k != 1:
        raise ValueError("only depth 1 is determined by Δ")
    if m.alexander is None:
        raise InvalidManifoldData("Alexander polynomial required")
    m.validate()
    n = m.n
    names = t_names(n)
    delta = m.alexander
    if delta.is_zero():
        return VarietyDescription.full(TORUS, n, names)
    if n == 0:
        return VarietyDescription.point(TORUS, 0)
    return VarietyDescription.of(TORUS, n, describe([delta], n, TORUS).components,
                                 names).with_identity()


def char_variety_3m_degree(m: ClosedThreeManifoldData, i: int, k: int) -> VarietyDescription | None:
    """V^i_k(M) where Poincaré duality determines it from depth-1 data; None if unknown."""
    n = m.n
    if k == 0:
        return VarietyDescription.full(TORUS, n)
    if i in (0, 3):
        return VarietyDescription.point(TORUS, n) if k == 1 else VarietyDescription.empty(TORUS, n)
    if i in (1, 2) and k == 1:
        return char_variety_3m(m, 1)
    if i in (1, 2) and m.alexander is not None and m.alexander.is_zero() and m.triform.is_zero():
        return None
    return None


@dataclass
class DualityCell:
    degree: int
    depth: int
    char_variety: VarietyDescription | None
    resonance: VarietyDescription | None
    note: str


def duality_table(m: ClosedThreeManifoldData, max_depth: int | None = None) -> list[DualityCell]:
    """V^i_k and R^i_k for 0 ≤ i ≤ 3 and 0 ≤ k ≤ max_depth."""
    n = m.n
    max_depth = n + 1 if max_depth is None else max_depth
    cells = []
    for i in range(4):
        for k in range(max_depth + 1):
            if n == 0:
                res = VarietyDescription.point(AFFINE, 0) if (k == 0 or (k == 1 and i in (0, 3))) \
                    else VarietyDescription.empty(AFFINE, 0)
            else:
                res = resonance_3m_degree(m.triform, i, k)
            cv = None
            if m.alexander is not None:
                cv = char_variety_3m_degree(m, i, k)
            if k == 0:
                note = "depth 0: whole ambient space"
            elif i in (0, 3):
                note = "degrees 0 and 3: the identity in depth 1, empty beyond"
            elif i == 2:
                note = "degree 2 equals degree 1 by Poincaré duality"
            else:
                note = "Pfaffian ideal of δ_M" + ("; from Δ" if k == 1 and cv is not None else "")
            cells.append(DualityCell(i, k, cv, res, note))
    return cells

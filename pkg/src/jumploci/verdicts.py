"""Tangent-cone comparisons and formality / finite-model verdicts.

Every conclusion is a :class:`Claim` carrying a citation key and a tri-state
status.  Statuses are merged through the standard implications

    formal ⇒ 1-formal ⇒ (τ = TC = R)   and   1-formal ⇒ 1-finite 1-model,

so that a verdict can never hold and fail the same statement.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .ideals.linear import homogeneous_linear_factors
from .ideals.modp import DEFAULT_POINT_BUDGET, DEFAULT_PRIMES, variety_in_mod_p
from .ideals.tangent import (DEFAULT_SUPPORT_CAP, exponential_tangent_cone,
                             tangent_cone_hypersurface)
from .ideals.varieties import (AFFINE, TORUS, FullAmbient, Hypersurface, IdentityPoint,
                               LinearSubspace, TorsionTranslate, VarietyDescription, ZeroSet,
                               component_contains_identity, intersect, variety_in,
                               varieties_equal)
from .links import LinkData, link_char_variety, link_resonance
from .symbolic import BudgetExceeded, LaurentPoly, x_names
from .threeman import (ClosedThreeManifoldData, InvalidManifoldData, char_variety_3m,
                       is_generic, resonance_3m)

HOLDS, FAILS, OPEN = "holds", "fails", "open"
EXACT, PROBABILISTIC = "exact", "probabilistic"
DEFAULT_HEIGHT = 50

# citation keys
CITE_CHAIN = "tangent-cone-chain"
CITE_FINITE_MODEL = "finite-model-tangent-cone-formula"
CITE_FORMAL_TC = "formality-implies-tangent-cone-formula"
CITE_EXP_CONE = "finite-model-needs-tau-equals-tc"
CITE_RATIONAL = "finite-model-needs-rational-linear-tc"
CITE_DELTA_ZERO = "3m-vanishing-alexander"
CITE_TC_ODD = "3m-tangent-cone-odd-betti"
CITE_TC_EVEN = "3m-tangent-cone-even-betti"
CITE_SMALL_B1 = "3m-betti-at-most-one-formal"
CITE_EVEN_NONFORMAL = "3m-even-betti-not-1-formal"
CITE_NONRATIONAL = "3m-nonrational-cone-no-finite-model"
CITE_TWO_LINK = "2-link-formal-iff-linked"
CITE_TWO_COMPLEX = "2-complex-formal-iff-1-formal"
CITE_BOUNDARY = "boundary-manifold-formal-iff-near-pencil"
CITE_COMPUTED = "direct-computation"

FORMAL = "formal"
ONE_FORMAL = "1-formal"
MODEL = "admits a 1-finite 1-model"
TAU_TC = "tau_1(V^1_1) = TC_1(V^1_1)"
TC_RES = "TC_1(V^1_1) = R^1_1"
FULL_TCF = "tau_1 = TC_1 = R^1_1 = H^1"


class InconsistentVerdict(ArithmeticError):
    """Two criteria reached opposite conclusions: the input data are inconsistent."""


# ---------------------------------------------------------------------------
# tangent cone comparison


@dataclass
class TangentConeReport:
    tau: VarietyDescription
    tc: VarietyDescription | None
    res: VarietyDescription
    tau_in_tc: str
    tc_in_res: str
    equal_tau_tc: str
    equal_tc_res: str
    confidence: str
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"tau": self.tau.to_json(),
                "tc": None if self.tc is None else self.tc.to_json(),
                "res": self.res.to_json(), "tau_in_tc": self.tau_in_tc,
                "tc_in_res": self.tc_in_res, "equal_tau_tc": self.equal_tau_tc,
                "equal_tc_res": self.equal_tc_res, "confidence": self.confidence,
                "notes": self.notes}


def _component_cones(c, n: int, support_cap: int, notes: list[str]
                     ) -> tuple[VarietyDescription, VarietyDescription | None]:
    """(τ_1, TC_1) of one torus component; TC is None when it cannot be pinned down."""
    empty = VarietyDescription.empty(AFFINE, n)
    if isinstance(c, TorsionTranslate):
        return empty, empty
    if isinstance(c, FullAmbient):
        full = VarietyDescription.full(AFFINE, n)
        return full, full
    if isinstance(c, IdentityPoint):
        pt = VarietyDescription.point(AFFINE, n)
        return pt, pt
    if not component_contains_identity(c, TORUS, n):
        return empty, empty
    if isinstance(c, Hypersurface):
        tau = exponential_tangent_cone(c.poly, support_cap=support_cap)
        return tau, tangent_cone_hypersurface(c.poly, includes_identity_extra=False)
    if isinstance(c, ZeroSet):
        tau = exponential_tangent_cone(list(c.generators), support_cap=support_cap)
        # TC(V(f_1,…,f_r)) ⊆ ∩ TC(V(f_i)); if that bound equals τ the sandwich closes
        upper = None
        for g in c.generators:
            t = tangent_cone_hypersurface(g, includes_identity_extra=False)
            upper = t if upper is None else intersect(upper, t)
        if varieties_equal(tau, upper) is True:
            return tau, tau
        notes.append(f"tangent cone of the non-principal component {c.generators} "
                     "is not determined")
        return tau, None
    raise TypeError(f"unexpected torus component {c!r}")


def tangent_cones(v: VarietyDescription, support_cap: int = DEFAULT_SUPPORT_CAP
                  ) -> tuple[VarietyDescription, VarietyDescription | None, list[str]]:
    """(τ_1(v), TC_1(v), notes) for a torus variety; TC is None if undetermined."""
    if v.ambient != TORUS:
        raise ValueError("expected a torus variety")
    n = v.nvars
    names = x_names(n)
    notes: list[str] = []
    tau = VarietyDescription.empty(AFFINE, n)
    tc: VarietyDescription | None = VarietyDescription.empty(AFFINE, n)
    for c in v.components:
        t, cone = _component_cones(c, n, support_cap, notes)
        tau = tau.union(t)
        tc = None if tc is None or cone is None else tc.union(cone)
    tau = VarietyDescription.of(AFFINE, n, tau.components, names)
    if tc is not None:
        tc = VarietyDescription.of(AFFINE, n, tc.components, names)
    return tau, tc, notes


def _inclusion(a: VarietyDescription, b: VarietyDescription, primes, budget,
               flags: list[str]) -> str:
    r = variety_in(a, b)
    if r is not None:
        return HOLDS if r else FAILS
    try:
        mp = variety_in_mod_p(a, b, primes, budget)
    except BudgetExceeded:
        return OPEN
    if mp.status == "inconclusive":
        return OPEN
    flags.append(PROBABILISTIC)
    return HOLDS if mp.status == "equal" else FAILS


def _exact_dim(c, n: int) -> int | None:
    if isinstance(c, FullAmbient):
        return n
    if isinstance(c, IdentityPoint):
        return 0
    if isinstance(c, LinearSubspace):
        return c.dim
    if isinstance(c, Hypersurface):
        return n - 1
    return None


def _dimension_refutes(small: VarietyDescription, big: VarietyDescription) -> bool:
    """True when some component of ``big`` is exactly larger than every component of ``small``."""
    dims = [_exact_dim(c, small.nvars) for c in small.components]
    if any(d is None for d in dims):
        return False
    top = max(dims, default=-1)
    big_dims = [_exact_dim(c, big.nvars) for c in big.components]
    return any(d is not None and d > top for d in big_dims)


def _equality(a: VarietyDescription, b: VarietyDescription, a_in_b: str, primes, budget,
              flags: list[str]) -> str:
    if a_in_b == FAILS:
        return FAILS
    if _dimension_refutes(a, b):
        return FAILS
    if a_in_b == OPEN:
        return OPEN
    return _inclusion(b, a, primes, budget, flags)


def tangent_cone_compare(v: VarietyDescription, r: VarietyDescription,
                         primes: Sequence[int] = DEFAULT_PRIMES,
                         support_cap: int = DEFAULT_SUPPORT_CAP,
                         point_budget: int = DEFAULT_POINT_BUDGET) -> TangentConeReport:
    """Compute τ_1(v) and TC_1(v) and compare them with each other and with r."""
    if v.ambient != TORUS or r.ambient != AFFINE:
        raise ValueError("expected a torus variety and an affine resonance variety")
    if v.nvars != r.nvars:
        raise ValueError("ambient dimensions differ")
    tau, tc, notes = tangent_cones(v, support_cap)
    flags: list[str] = []
    if tc is None:
        return TangentConeReport(tau, None, r, OPEN, OPEN, OPEN, OPEN, EXACT, notes)
    tau_in_tc = _inclusion(tau, tc, primes, point_budget, flags)
    tc_in_res = _inclusion(tc, r, primes, point_budget, flags)
    eq_tau_tc = _equality(tau, tc, tau_in_tc, primes, point_budget, flags)
    eq_tc_res = _equality(tc, r, tc_in_res, primes, point_budget, flags)
    if tau_in_tc == FAILS:
        notes.append("τ_1 ⊄ TC_1: this contradicts the tangent-cone chain")
    if tc_in_res == FAILS:
        notes.append("TC_1 ⊄ R: characteristic and resonance data are incompatible")
    conf = PROBABILISTIC if flags else EXACT
    return TangentConeReport(tau, tc, r, tau_in_tc, tc_in_res, eq_tau_tc, eq_tc_res, conf, notes)


# ---------------------------------------------------------------------------
# rational linear factorization of a cone


@dataclass
class LinearUnionResult:
    status: str  # "yes", "no" or "unknown"
    factors: list[tuple[LaurentPoly, int]] = field(default_factory=list)
    certificate: str = ""

    def to_json(self) -> dict:
        return {"status": self.status,
                "factors": [[str(f), m] for f, m in self.factors],
                "certificate": self.certificate}


def _binary_splits(q: LaurentPoly) -> bool:
    if q.is_zero() or q.total_degree() == 0:
        return True
    _, rest = homogeneous_linear_factors(q)
    return rest.total_degree() == 0


def rational_linear_union_check(h: LaurentPoly, height: int = DEFAULT_HEIGHT,
                                slices: int = 40, seed: int = 7) -> LinearUnionResult:
    """Is V(h) a union of rationally defined hyperplanes, i.e. does h split into
    rational linear forms?

    In two variables the answer is exact.  Beyond that, a residual factor is
    certified non-split when its restriction to some rational 2-plane through
    0 (with coordinates of height ≤ ``height``) is a binary form that does not
    split over Q.
    """
    if h.is_zero():
        raise ValueError("zero polynomial")
    if not h.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    facs, rest = homogeneous_linear_factors(h)
    if rest.total_degree() == 0:
        return LinearUnionResult("yes", facs)
    n = h.nvars
    if len(rest.used_variables()) <= 2:
        return LinearUnionResult("no", facs, f"binary form {rest} has no rational linear factor")
    rng = random.Random(seed)
    names = ("u", "v")
    u, v = LaurentPoly.var(0, 2, names), LaurentPoly.var(1, 2, names)
    for _ in range(slices):
        a = [rng.randint(-height, height) for _ in range(n)]
        b = [rng.randint(-height, height) for _ in range(n)]
        images = [u * ai + v * bi for ai, bi in zip(a, b)]
        q = rest.substitute(images)
        if q.is_zero() or q.total_degree() < rest.total_degree():
            continue
        if not _binary_splits(q):
            return LinearUnionResult(
                "no", facs, f"restriction of {rest} to span{{{a}, {b}}} is {q}, "
                "which has no complete rational factorization")
    return LinearUnionResult("unknown", facs, f"residual factor {rest} not certified")


def _cone_rationality(tc: VarietyDescription, height: int) -> str:
    """"yes" if every component of TC is rational linear, "no" if one certainly is not."""
    unknown = False
    for c in tc.components:
        if isinstance(c, (FullAmbient, IdentityPoint, LinearSubspace)):
            continue
        if isinstance(c, Hypersurface):
            res = rational_linear_union_check(c.poly, height)
            if res.status == "no":
                return "no"
            if res.status == "yes":
                continue
        unknown = True
    return "unknown" if unknown else "yes"


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class Claim:
    statement: str
    citation: str
    status: str
    evidence: str = ""

    def to_json(self) -> dict:
        d = {"statement": self.statement, "citation": self.citation, "status": self.status}
        if self.evidence:
            d["evidence"] = self.evidence
        return d


@dataclass
class Verdict:
    subject: str
    claims: list[Claim] = field(default_factory=list)
    report: TangentConeReport | None = None
    two_complex: bool = False

    def status(self, statement: str) -> str:
        decided = [c.status for c in self.claims if c.statement == statement and c.status != OPEN]
        return decided[0] if decided else OPEN

    def add(self, statement: str, citation: str, status: str, evidence: str = "") -> None:
        current = self.status(statement)
        if OPEN not in (current, status) and current != status:
            raise InconsistentVerdict(
                f"{statement!r} both {current} and {status} ({citation}); inconsistent input")
        self.claims.append(Claim(statement, citation, status, evidence))

    def _propagate(self) -> None:
        rules = [
            (FORMAL, HOLDS, ONE_FORMAL, HOLDS, "formal spaces are 1-formal"),
            (ONE_FORMAL, HOLDS, MODEL, HOLDS, "the cohomology algebra is a 1-finite 1-model"),
            (ONE_FORMAL, HOLDS, TC_RES, HOLDS, CITE_FORMAL_TC),
            (MODEL, HOLDS, TAU_TC, HOLDS, CITE_FINITE_MODEL),
            (TC_RES, FAILS, ONE_FORMAL, FAILS, CITE_FORMAL_TC),
            (TAU_TC, FAILS, MODEL, FAILS, CITE_EXP_CONE),
            (MODEL, FAILS, ONE_FORMAL, FAILS, "the cohomology algebra is a 1-finite 1-model"),
            (ONE_FORMAL, FAILS, FORMAL, FAILS, "formal spaces are 1-formal"),
        ]
        if self.two_complex:
            rules.append((ONE_FORMAL, HOLDS, FORMAL, HOLDS, CITE_TWO_COMPLEX))
        changed = True
        while changed:
            changed = False
            for src, s_status, dst, d_status, cite in rules:
                if self.status(src) == s_status:
                    current = self.status(dst)
                    if current == OPEN:
                        self.add(dst, cite, d_status, f"from '{src}' {s_status}")
                        changed = True
                    elif current != d_status:
                        raise InconsistentVerdict(
                            f"{dst!r} is {current} but '{src}' {s_status} forces {d_status}")

    @property
    def summary(self) -> str:
        if self.status(FORMAL) == HOLDS:
            formal = "formal"
        elif self.status(ONE_FORMAL) == FAILS:
            formal = "not formal" if self.two_complex else "not 1-formal"
        elif self.status(FORMAL) == FAILS:
            formal = "not formal"
        elif self.status(ONE_FORMAL) == HOLDS:
            formal = "1-formal"
        else:
            formal = "formality: open"
        model = {HOLDS: "1-finite 1-model: exists", FAILS: "no 1-finite 1-model",
                 OPEN: "1-finite 1-model: open"}[self.status(MODEL)]
        return f"{formal}; {model}"

    def to_json(self) -> dict:
        return {"subject": self.subject, "summary": self.summary,
                "claims": [c.to_json() for c in self.claims],
                "tangent_cones": None if self.report is None else self.report.to_json()}


def _record_report(verdict: Verdict, rep: TangentConeReport) -> None:
    how = f"{CITE_COMPUTED} ({rep.confidence})"
    # probabilistic comparisons are evidence only, never conclusions
    if rep.confidence == EXACT:
        if rep.equal_tau_tc != OPEN:
            verdict.add(TAU_TC, how, rep.equal_tau_tc)
        if rep.equal_tc_res != OPEN:
            verdict.add(TC_RES, how, rep.equal_tc_res)


def manifold_verdict(m: ClosedThreeManifoldData, primes: Sequence[int] = DEFAULT_PRIMES,
                     support_cap: int = DEFAULT_SUPPORT_CAP,
                     point_budget: int = DEFAULT_POINT_BUDGET,
                     char_variety: VarietyDescription | None = None,
                     height: int = DEFAULT_HEIGHT) -> Verdict:
    """Formality and finite-model conclusions for a closed orientable 3-manifold."""
    n = m.n
    delta = m.alexander
    verdict = Verdict(m.label or "3-manifold")
    res = resonance_3m(m.triform, 1) if n else VarietyDescription.point(AFFINE, 0)

    if n <= 1:
        verdict.add(FORMAL, CITE_SMALL_B1, HOLDS,
                    "rational homotopy type of " + ("S^3" if n == 0 else "S^1 x S^2"))
        verdict.add(TC_RES, CITE_TC_ODD, HOLDS)

    rep = None
    if delta is not None and n >= 1:
        v = char_variety if char_variety is not None else char_variety_3m(m)
        rep = tangent_cone_compare(v, res, primes, support_cap, point_budget)
        verdict.report = rep
        if rep.tc_in_res == FAILS and rep.confidence == EXACT:
            raise InvalidManifoldData("TC_1(V(Δ)) is not contained in R^1_1(μ): "
                                      "the Alexander polynomial does not match μ")

    if delta is not None and delta.is_zero():
        verdict.add(FULL_TCF, CITE_DELTA_ZERO, HOLDS)
        verdict.add(TAU_TC, CITE_DELTA_ZERO, HOLDS)
        verdict.add(TC_RES, CITE_DELTA_ZERO, HOLDS)

    if n >= 2 and n % 2 == 0:
        if delta is None:
            verdict.add(TC_RES, CITE_TC_EVEN, OPEN, "Δ not supplied")
        elif delta.is_zero():
            verdict.add(TC_RES, CITE_TC_EVEN, HOLDS, "Δ = 0")
        else:
            verdict.add(TC_RES, CITE_TC_EVEN, FAILS, "Δ ≠ 0")
            verdict.add(ONE_FORMAL, CITE_EVEN_NONFORMAL, FAILS, "b_1 even and Δ ≠ 0")
    elif n >= 3:
        gen = is_generic(m.triform)
        if gen.generic and gen.exact:
            verdict.add(TC_RES, CITE_TC_ODD, HOLDS, f"μ generic ({gen.method})")
        else:
            detail = "μ not generic" if gen.exact else "genericity of μ not certified"
            if rep is not None and rep.equal_tc_res != OPEN:
                detail += f"; computed: {rep.equal_tc_res} ({rep.confidence})"
            verdict.add(TC_RES, CITE_TC_ODD, OPEN, f"open case: b_1 odd ≥ 3, {detail}")

    if rep is not None:
        _record_report(verdict, rep)
        if delta is not None and not delta.is_zero() and delta.at_one() == 0 \
                and rep.tc is not None:
            rational = _cone_rationality(rep.tc, height)
            if rational == "no":
                verdict.add(MODEL, CITE_NONRATIONAL, FAILS,
                            "TC_1(V(Δ)) is not a union of rational linear subspaces")
            elif rational == "unknown":
                verdict.add(MODEL, CITE_NONRATIONAL, OPEN, "rationality of TC_1 undecided")

    if delta is None:
        verdict.add(MODEL, CITE_NONRATIONAL, OPEN, "Δ not supplied")
    verdict._propagate()
    return verdict


def link_verdict(link: LinkData, primes: Sequence[int] = DEFAULT_PRIMES,
                 support_cap: int = DEFAULT_SUPPORT_CAP,
                 point_budget: int = DEFAULT_POINT_BUDGET,
                 height: int = DEFAULT_HEIGHT) -> Verdict:
    """Formality and finite-model conclusions for a link complement (a 2-complex)."""
    verdict = Verdict(link.label or f"{link.n}-component link", two_complex=True)
    if link.n == 1:
        verdict.add(FORMAL, CITE_SMALL_B1, HOLDS, "knot complements have b_1 = 1")
        verdict._propagate()
        return verdict
    res = link_resonance(link, 1)
    if link.n == 2:
        ell = link.lk(1, 2)
        verdict.add(FORMAL, CITE_TWO_LINK, HOLDS if ell else FAILS, f"linking number {ell}")
    if link.alexander is not None:
        rep = tangent_cone_compare(link_char_variety(link), res, primes, support_cap,
                                   point_budget)
        verdict.report = rep
        if rep.tc_in_res == FAILS and rep.confidence == EXACT:
            raise InvalidManifoldData("TC_1(V(Δ_L)) is not contained in R^1_1: "
                                      "Alexander polynomial and linking numbers disagree")
        _record_report(verdict, rep)
        if rep.tc is not None and not rep.tc.is_full() and rep.equal_tau_tc != FAILS:
            rational = _cone_rationality(rep.tc, height)
            if rational == "no":
                verdict.add(MODEL, CITE_RATIONAL, FAILS,
                            "TC_1 has a component that is not a rational linear subspace")
    verdict._propagate()
    return verdict


def boundary_verdict(bm, primes: Sequence[int] = DEFAULT_PRIMES,
                     support_cap: int = DEFAULT_SUPPORT_CAP,
                     point_budget: int = DEFAULT_POINT_BUDGET) -> Verdict:
    """manifold_verdict for a boundary manifold, plus the pencil / near-pencil criterion."""
    verdict = manifold_verdict(bm.data(), primes, support_cap, point_budget,
                               char_variety=bm.char_variety)
    verdict.subject = f"boundary manifold ({bm.kind}, {bm.incidence.n} lines)"
    status = HOLDS if bm.formal else FAILS
    verdict.add(FORMAL, CITE_BOUNDARY, status, f"arrangement is {bm.kind}")
    verdict.add(ONE_FORMAL, CITE_BOUNDARY, status)
    verdict.add(TC_RES, CITE_BOUNDARY, status)
    verdict._propagate()
    return verdict


__all__ = ["TangentConeReport", "tangent_cone_compare", "tangent_cones", "LinearUnionResult",
           "rational_linear_union_check", "Claim", "Verdict", "manifold_verdict",
           "link_verdict", "boundary_verdict", "InconsistentVerdict",
           "HOLDS", "FAILS", "OPEN"]

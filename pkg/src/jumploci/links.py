"""Link complements: linking numbers, linearized Alexander matrix, Torres conditions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ideals.matrices import PolyMatrix, fitting_ideal
from .ideals.tangent import tangent_cone_hypersurface
from .ideals.varieties import (AFFINE, TORUS, VarietyDescription, describe, varieties_equal)
from .symbolic import (LaurentPoly, associated, parse_poly, poly_quotient, t_names,
                       unit_normalize, x_names)


class InvalidLinkData(ValueError):
    pass


@dataclass(frozen=True)
class LinkData:
    n: int
    linking: tuple[tuple[int, ...], ...]
    alexander: LaurentPoly | None = None
    components: tuple[LaurentPoly, ...] = ()
    label: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise InvalidLinkData("a link has at least one component")
        if len(self.linking) != self.n or any(len(r) != self.n for r in self.linking):
            raise InvalidLinkData("linking matrix must be n x n")
        for i in range(self.n):
            if self.linking[i][i] != 0:
                raise InvalidLinkData("linking matrix must have zero diagonal")
            for j in range(self.n):
                if self.linking[i][j] != self.linking[j][i]:
                    raise InvalidLinkData("linking matrix must be symmetric")
        if self.alexander is not None and self.alexander.nvars != self.n:
            raise InvalidLinkData(f"Alexander polynomial must have {self.n} variables")

    @classmethod
    def build(cls, n: int, linking: Sequence[Sequence[int]] | Mapping | None = None,
              alexander: LaurentPoly | str | None = None, components: Sequence = (),
              label: str = "") -> "LinkData":
        if isinstance(linking, Mapping):
            mat = [[0] * n for _ in range(n)]
            for (i, j), v in linking.items():
                mat[i - 1][j - 1] = mat[j - 1][i - 1] = int(v)
            linking = mat
        elif linking is None:
            linking = [[0] * n for _ in range(n)]
        if isinstance(alexander, str):
            alexander = parse_poly(alexander, t_names(n))
        comps = tuple(parse_poly(c, ("t",)) if isinstance(c, str) else c for c in components)
        return cls(n, tuple(tuple(int(x) for x in r) for r in linking), alexander, comps, label)

    @classmethod
    def from_json(cls, data: Mapping) -> "LinkData":
        n = int(data["n"])
        alex = data.get("alexander")
        if isinstance(alex, list):
            alex = LaurentPoly.from_json(alex, n, t_names(n))
        return cls.build(n, data.get("linking"), alex, data.get("components", ()),
                         data.get("label", ""))

    def to_json(self) -> dict:
        d = {"n": self.n, "linking": [list(r) for r in self.linking], "label": self.label}
        if self.alexander is not None:
            d["alexander"] = str(self.alexander)
        if self.components:
            d["components"] = [str(c) for c in self.components]
        return d

    def lk(self, i: int, j: int) -> int:
        """Linking number of components i and j (1-based)."""
        return self.linking[i - 1][j - 1]


def linearized_matrix(link: LinkData) -> PolyMatrix:
    """(n−1) x n matrix with entry (i, j) = ℓ_ij x_i − δ_ij Σ_k ℓ_ik x_k."""
    n = link.n
    if n < 2:
        raise ValueError("the linearized matrix needs n ≥ 2")
    names = x_names(n)
    xs = [LaurentPoly.var(i, n, names) for i in range(n)]
    rows = []
    for i in range(n - 1):
        row = []
        for j in range(n):
            e = xs[i] * link.linking[i][j]
            if i == j:
                for k in range(n):
                    e = e - xs[k] * link.linking[i][k]
            row.append(e)
        rows.append(row)
    return PolyMatrix(rows, n, names)


def link_resonance(link: LinkData, k: int = 1) -> VarietyDescription:
    """R^1_k = V(E_k) of the linearized Alexander module, with 0 kept since b_1 = n ≥ k."""
    n = link.n
    if not 1 <= k <= n:
        raise ValueError(f"depth {k} out of range 1..{n}")
    names = x_names(n)
    if n == 1:
        return VarietyDescription.point(AFFINE, 1, names)
    ideal = fitting_ideal(linearized_matrix(link), k, n)
    return describe(ideal.generators, n, AFFINE, names).with_identity()


def link_char_variety(link: LinkData, k: int = 1) -> VarietyDescription:
    """V^1_1 = V(Δ_L) ∪ {1}; for a knot, the roots of Δ together with 1."""
    if k != 1:
        raise ValueError("only depth 1 is determined by Δ_L")
    if link.alexander is None:
        raise InvalidLinkData("Alexander polynomial required")
    n = link.n
    names = t_names(n)
    if link.alexander.is_zero():
        return VarietyDescription.full(TORUS, n, names)
    return describe([link.alexander], n, TORUS, names).with_identity()


def link_tangent_cone(link: LinkData) -> VarietyDescription:
    """TC_1(V(Δ_L) ∪ {1})."""
    if link.alexander is None:
        raise InvalidLinkData("Alexander polynomial required")
    n = link.n
    if link.alexander.is_zero():
        return VarietyDescription.full(AFFINE, n, x_names(n))
    return VarietyDescription.of(AFFINE, n, tangent_cone_hypersurface(link.alexander).components,
                                 x_names(n))


@dataclass
class TorresReport:
    linking_number: int
    specialization_ok: bool
    value_at_one: object
    value_ok: bool
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.specialization_ok and self.value_ok

    def to_json(self) -> dict:
        return {"linking_number": self.linking_number, "Δ(t,1) identity": self.specialization_ok,
                "Δ(1,1)": str(self.value_at_one), "Δ(1,1) = ±ℓ": self.value_ok,
                "notes": self.notes}


def torres_check(link: LinkData) -> TorresReport:
    """Δ_L(t,1) ≐ ((t^ℓ − 1)/(t − 1))·Δ_{L_1}(t) and Δ_L(1,1) = ±ℓ."""
    if link.n != 2:
        raise ValueError("Torres check is implemented for 2-component links")
    if link.alexander is None:
        raise InvalidLinkData("Alexander polynomial required")
    ell = link.lk(1, 2)
    names = ("t",)
    t = LaurentPoly.var(0, 1, names)
    one = LaurentPoly.const(1, 1, names)
    delta1 = link.components[0] if link.components else one
    if delta1.nvars != 1:
        raise InvalidLinkData("component polynomials are univariate")
    spec = link.alexander.substitute([t, one])
    notes = []
    if ell == 0:
        expected = LaurentPoly.zero(1, names)
    else:
        q = poly_quotient(t ** abs(ell) - 1, t - 1)
        expected = q * delta1.with_names(names)
    if expected.is_zero() or spec.is_zero():
        spec_ok = expected.is_zero() and spec.is_zero()
    else:
        spec_ok = associated(spec, expected)
    if not spec_ok:
        notes.append(f"Δ(t,1) = {spec} but the Torres formula gives {unit_normalize(expected)}")
    val = link.alexander.at_one()
    val_ok = val in (ell, -ell)
    if not val_ok:
        notes.append(f"Δ(1,1) = {val}, linking number {ell}")
    return TorresReport(ell, spec_ok, val, val_ok, notes)


@dataclass
class LinkVerdict:
    formal: bool
    resonance: VarietyDescription
    tangent_cone: VarietyDescription | None
    reason: str

    def to_json(self) -> dict:
        return {"formal": self.formal, "resonance": self.resonance.to_json(),
                "tangent_cone": None if self.tangent_cone is None else self.tangent_cone.to_json(),
                "reason": self.reason}


def two_component_verdict(link: LinkData) -> LinkVerdict:
    """Formality of a 2-component link complement: formal iff ℓ ≠ 0."""
    if link.n != 2:
        raise ValueError("the criterion applies to 2-component links")
    ell = link.lk(1, 2)
    res = link_resonance(link, 1)
    tc = link_tangent_cone(link) if link.alexander is not None else None
    if ell != 0:
        if tc is not None and link.alexander.at_one() != 0:
            point = VarietyDescription.point(AFFINE, 2)
            if not (varieties_equal(tc, point) and varieties_equal(res, point)):
                raise ArithmeticError("ℓ ≠ 0 but TC or R is not {0}")
        return LinkVerdict(True, res, tc, f"linking number {ell} ≠ 0")
    reason = "linking number 0: R^1_1 = C^2"
    if tc is not None:
        reason += f" strictly contains TC_1 = {tc}"
    return LinkVerdict(False, res, tc, reason)

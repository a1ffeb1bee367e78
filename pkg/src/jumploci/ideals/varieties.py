"""Varieties as finite unions of tagged components.

A :class:`VarietyDescription` lives either in the torus (C*)^n (characteristic
varieties, coordinates t_i) or in affine space C^n (resonance varieties and
tangent cones, coordinates x_i).  Components are kept irredundant under the
exact containment tests implemented here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ..linalg import rref
from ..symbolic import (LaurentPoly, exact_quotient, gcd_list, poly_gcd, poly_quotient,
                        primitive_over_z, squarefree_part, squarefree_poly, t_names, unit_normalize, x_names)
from .linear import linear_factors, rational_roots

TORUS = "torus"
AFFINE = "affine"


def _fr(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _poly_key(p: LaurentPoly) -> str:
    return repr(p.to_json())


# ---------------------------------------------------------------------------
# components


@dataclass(frozen=True)
class FullAmbient:
    kind = "full"

    def key(self):
        return ("0full",)


@dataclass(frozen=True)
class IdentityPoint:
    """The identity 1 of the torus, or the origin 0 of affine space."""

    kind = "identity"

    def key(self):
        return ("1identity",)


@dataclass(frozen=True)
class LinearSubspace:
    """{x : A x = b}, stored as the RREF of the augmented matrix [A | b]."""

    rows: tuple[tuple[Fraction, ...], ...]
    nvars: int
    kind = "linear"

    @classmethod
    def from_forms(cls, forms: Iterable[LaurentPoly], nvars: int) -> "LinearSubspace | None":
        """Subspace cut out by affine linear forms; None if inconsistent."""
        rows = []
        for f in forms:
            if f.total_degree() > 1 or not f.is_polynomial():
                raise ValueError(f"not a linear form: {f}")
            row = [Fraction(0)] * (nvars + 1)
            for e, c in f.terms.items():
                if any(e):
                    row[e.index(1)] = Fraction(c)
                else:
                    row[nvars] = -Fraction(c)
            rows.append(row)
        return cls.from_rows(rows, nvars)

    @classmethod
    def from_rows(cls, rows, nvars: int) -> "LinearSubspace | None":
        red, piv = rref(rows) if rows else ([], [])
        if nvars in piv:
            return None
        return cls(tuple(tuple(Fraction(x) for x in r) for r in red), nvars)

    @classmethod
    def coordinate(cls, zero_vars: Iterable[int], nvars: int) -> "LinearSubspace":
        rows = []
        for i in sorted(set(zero_vars)):
            r = [0] * (nvars + 1)
            r[i] = 1
            rows.append(r)
        return cls.from_rows(rows, nvars)

    def key(self):
        return ("2linear", len(self.rows), tuple(tuple(r) for r in self.rows))

    @property
    def dim(self) -> int:
        return self.nvars - len(self.rows)

    def is_homogeneous(self) -> bool:
        return all(r[-1] == 0 for r in self.rows)

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(r) if x != 0) for r in self.rows]

    def forms(self, names=None) -> list[LaurentPoly]:
        out = []
        n = self.nvars
        for r in self.rows:
            terms = {}
            for i, c in enumerate(r[:n]):
                if c:
                    e = [0] * n
                    e[i] = 1
                    terms[tuple(e)] = c
            if r[n]:
                terms[(0,) * n] = -r[n]
            out.append(primitive_over_z(LaurentPoly(terms, n, names)))
        return out

    def parametrization(self, names=None) -> list[LaurentPoly]:
        """Images of x_1..x_n under a rational parametrization by the free variables."""
        n = self.nvars
        xs = [LaurentPoly.var(i, n, names) for i in range(n)]
        images = list(xs)
        for r, p in zip(self.rows, self.pivots()):
            img = LaurentPoly.const(r[n], n, names)
            for j in range(p + 1, n):
                if r[j]:
                    img = img - xs[j] * r[j]
            images[p] = img
        return images

    def contains_subspace(self, other: "LinearSubspace") -> bool:
        params = other.parametrization()
        return all(f.substitute(params).is_zero() for f in self.forms())


@dataclass(frozen=True)
class Hypersurface:
    poly: LaurentPoly
    kind = "hypersurface"

    def key(self):
        return ("3hyper", _poly_key(self.poly))


@dataclass(frozen=True)
class ZeroSet:
    generators: tuple[LaurentPoly, ...]
    kind = "zeroset"

    def key(self):
        return ("4zeroset", tuple(_poly_key(g) for g in self.generators))


@dataclass(frozen=True)
class TorsionTranslate:
    """A component ρ·W in the coset of the torsion character ρ.

    ``character`` lists exponents e_i so that ρ sends the i-th torsion
    generator (of order ``orders[i]``) to exp(2πi e_i / orders[i]); ``inner``
    describes W in the identity component.
    """

    character: tuple[int, ...]
    orders: tuple[int, ...]
    inner: "VarietyDescription"
    kind = "torsion-translate"

    def key(self):
        return ("5torsion", self.character, self.orders, repr(self.inner.to_json()))


Component = Union[FullAmbient, IdentityPoint, LinearSubspace, Hypersurface, ZeroSet, TorsionTranslate]


# ---------------------------------------------------------------------------
# the description


@dataclass(frozen=True)
class VarietyDescription:
    ambient: str
    nvars: int
    components: tuple = ()
    names: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.ambient not in (TORUS, AFFINE):
            raise ValueError(f"unknown ambient {self.ambient!r}")

    # constructors
    @classmethod
    def empty(cls, ambient: str, n: int, names=None) -> "VarietyDescription":
        return cls(ambient, n, (), names)

    @classmethod
    def full(cls, ambient: str, n: int, names=None) -> "VarietyDescription":
        return cls(ambient, n, (FullAmbient(),), names)

    @classmethod
    def point(cls, ambient: str, n: int, names=None) -> "VarietyDescription":
        return cls(ambient, n, (IdentityPoint(),), names)

    @classmethod
    def of(cls, ambient: str, n: int, comps: Iterable[Component], names=None) -> "VarietyDescription":
        comps = [normalize_linear_component(c) for c in comps]
        return cls(ambient, n, tuple(irredundant(comps, ambient, n)), names)

    # queries
    def var_names(self):
        if self.names:
            return self.names
        return t_names(self.nvars) if self.ambient == TORUS else x_names(self.nvars)

    def is_empty(self) -> bool:
        return not self.components

    def is_full(self) -> bool:
        return any(isinstance(c, FullAmbient) for c in self.components)

    def is_point(self) -> bool:
        return (len(self.components) == 1 and isinstance(self.components[0], IdentityPoint)) or \
            (self.nvars == 0 and bool(self.components))

    def linear_components(self) -> list[LinearSubspace]:
        return [c for c in self.components if isinstance(c, LinearSubspace)]

    def is_linear_union(self) -> bool:
        """True when every component is a (rational) linear subspace, point or full space."""
        return self.ambient == AFFINE and all(
            isinstance(c, (LinearSubspace, IdentityPoint, FullAmbient)) for c in self.components)

    def union(self, other: "VarietyDescription") -> "VarietyDescription":
        _check_same(self, other)
        return VarietyDescription.of(self.ambient, self.nvars,
                                     list(self.components) + list(other.components),
                                     self.names or other.names)

    def with_identity(self) -> "VarietyDescription":
        return self.union(VarietyDescription.point(self.ambient, self.nvars))

    def contains_identity(self) -> bool:
        return any(component_contains_identity(c, self.ambient, self.nvars) for c in self.components)

    # output
    def to_json(self) -> dict:
        return {"ambient": self.ambient, "nvars": self.nvars,
                "components": [component_json(c) for c in self.components]}

    def __str__(self):
        return format_variety(self)


def _check_same(a: VarietyDescription, b: VarietyDescription):
    if a.ambient != b.ambient or a.nvars != b.nvars:
        raise ValueError("varieties live in different ambient spaces")


def component_json(c: Component) -> dict:
    if isinstance(c, FullAmbient):
        return {"type": "full"}
    if isinstance(c, IdentityPoint):
        return {"type": "identity"}
    if isinstance(c, LinearSubspace):
        return {"type": "linear",
                "equations": [[_fr(x) for x in r[:-1]] for r in c.rows],
                "rhs": [_fr(r[-1]) for r in c.rows]}
    if isinstance(c, Hypersurface):
        return {"type": "hypersurface", "poly": c.poly.to_json()}
    if isinstance(c, ZeroSet):
        return {"type": "zeroset", "generators": [g.to_json() for g in c.generators]}
    if isinstance(c, TorsionTranslate):
        return {"type": "torsion-translate", "character": list(c.character),
                "orders": list(c.orders), "inner": c.inner.to_json()}
    raise TypeError(c)


def component_from_json(d: dict, ambient: str, n: int) -> Component:
    t = d["type"]
    if t == "full":
        return FullAmbient()
    if t == "identity":
        return IdentityPoint()
    if t == "linear":
        rows = [[Fraction(x) for x in eq] + [Fraction(r)] for eq, r in zip(d["equations"], d["rhs"])]
        sub = LinearSubspace.from_rows(rows, n)
        if sub is None:
            raise ValueError("inconsistent linear equations")
        return sub
    if t == "hypersurface":
        return Hypersurface(LaurentPoly.from_json(d["poly"], n))
    if t == "zeroset":
        return ZeroSet(tuple(LaurentPoly.from_json(g, n) for g in d["generators"]))
    if t == "torsion-translate":
        return TorsionTranslate(tuple(d["character"]), tuple(d["orders"]),
                                variety_from_json(d["inner"]))
    raise ValueError(f"unknown component type {t!r}")


def variety_from_json(d: dict) -> VarietyDescription:
    n = int(d["nvars"])
    amb = d["ambient"]
    return VarietyDescription.of(amb, n, [component_from_json(c, amb, n) for c in d["components"]])


def format_variety(v: VarietyDescription) -> str:
    names = v.var_names()
    if v.is_empty():
        return "empty"
    parts = []
    for c in v.components:
        parts.append(format_component(c, v.ambient, v.nvars, names))
    return " ∪ ".join(parts)


def format_component(c: Component, ambient: str, n: int, names) -> str:
    if isinstance(c, FullAmbient):
        return f"(C*)^{n}" if ambient == TORUS else f"C^{n}"
    if isinstance(c, IdentityPoint):
        return "{1}" if ambient == TORUS else "{0}"
    if isinstance(c, LinearSubspace):
        if not c.rows:
            return f"C^{n}"
        if len(c.rows) == n and c.is_homogeneous():
            return "{0}"
        eqs = []
        for f in c.forms(names):
            const = f.constant_term()
            lhs = f - const
            eqs.append(f"{lhs} = {-const}")
        return "{" + ", ".join(eqs) + "}"
    if isinstance(c, Hypersurface):
        return f"V({c.poly.with_names(names)})"
    if isinstance(c, ZeroSet):
        return "V(" + ", ".join(str(g.with_names(names)) for g in c.generators) + ")"
    if isinstance(c, TorsionTranslate):
        ch = ",".join(f"{e}/{o}" for e, o in zip(c.character, c.orders))
        return f"ρ[{ch}]·({c.inner})"
    raise TypeError(c)


# ---------------------------------------------------------------------------
# containment


def defining_polys(c: Component, ambient: str, n: int, names=None) -> list[LaurentPoly] | None:
    if isinstance(c, FullAmbient):
        return []
    if isinstance(c, IdentityPoint):
        if ambient == TORUS:
            return [LaurentPoly.var(i, n, names) - 1 for i in range(n)]
        return [LaurentPoly.var(i, n, names) for i in range(n)]
    if isinstance(c, LinearSubspace):
        return c.forms(names)
    if isinstance(c, Hypersurface):
        return [c.poly]
    if isinstance(c, ZeroSet):
        return list(c.generators)
    return None


def _identity(ambient: str, n: int) -> list:
    return [1] * n if ambient == TORUS else [0] * n


def component_contains_identity(c: Component, ambient: str, n: int) -> bool:
    if isinstance(c, TorsionTranslate):
        return False
    pt = _identity(ambient, n)
    return all(f.evaluate(pt) == 0 for f in defining_polys(c, ambient, n))


def _divides_in_ambient(g: LaurentPoly, f: LaurentPoly, ambient: str) -> bool:
    if ambient == TORUS:
        return exact_quotient(f, g) is not None
    return poly_quotient(f, g) is not None


def _sqf(f: LaurentPoly, ambient: str) -> LaurentPoly:
    return squarefree_part(f) if ambient == TORUS else squarefree_poly(f)


def component_in(a: Component, b: Component, ambient: str, n: int) -> bool | None:
    """Exact test a ⊆ b; None when the available tests cannot decide."""
    if isinstance(a, TorsionTranslate) or isinstance(b, TorsionTranslate):
        if isinstance(a, TorsionTranslate) and isinstance(b, TorsionTranslate):
            if (a.character, a.orders) != (b.character, b.orders):
                return False
            return variety_in(a.inner, b.inner)
        return False
    if isinstance(b, FullAmbient):
        return True
    target = defining_polys(b, ambient, n)
    if isinstance(a, FullAmbient):
        return all(f.is_zero() for f in target)
    if isinstance(a, IdentityPoint):
        pt = _identity(ambient, n)
        return all(f.evaluate(pt) == 0 for f in target)
    if isinstance(a, LinearSubspace):
        if ambient == TORUS:
            return None
        params = a.parametrization()
        return all(f.substitute(params).is_zero() for f in target)
    if isinstance(a, Hypersurface):
        h = _sqf(a.poly, ambient)
        return all(_divides_in_ambient(h, f, ambient) for f in target)
    if isinstance(a, ZeroSet):
        if isinstance(b, ZeroSet) and set(map(_poly_key, b.generators)) <= set(map(_poly_key, a.generators)):
            return True
        for g in a.generators:
            h = _sqf(g, ambient)
            if all(_divides_in_ambient(h, f, ambient) for f in target):
                return True
        return None
    raise TypeError(a)


def _irreducible(c: Component) -> bool:
    return isinstance(c, (FullAmbient, IdentityPoint, LinearSubspace))


def variety_in(a: VarietyDescription, b: VarietyDescription) -> bool | None:
    """Exact test a ⊆ b with union semantics; None when undecided."""
    _check_same(a, b)
    undecided = False
    for c in a.components:
        results = [component_in(c, d, a.ambient, a.nvars) for d in b.components]
        if any(r is True for r in results):
            continue
        if _irreducible(c) and all(r is False for r in results):
            return False
        undecided = True
    return None if undecided else True


def varieties_equal(a: VarietyDescription, b: VarietyDescription) -> bool | None:
    ab = variety_in(a, b)
    if ab is False:
        return False
    ba = variety_in(b, a)
    if ba is False:
        return False
    if ab and ba:
        return True
    return None


def subspace_in_variety(sub: LinearSubspace, v: VarietyDescription) -> bool:
    """Exact: L ⊆ V iff L lies in one component (L is irreducible)."""
    if v.ambient != AFFINE or sub.nvars != v.nvars:
        raise ValueError("subspace and variety must share an affine ambient")
    return any(component_in(sub, c, v.ambient, v.nvars) is True for c in v.components)


def irredundant(comps: list[Component], ambient: str, n: int) -> list[Component]:
    comps = sorted(set(comps), key=lambda c: c.key())
    # bigger pieces first so that smaller ones get absorbed
    order = sorted(comps, key=lambda c: (_rank_size(c, n), c.key()))
    kept: list[Component] = []
    for c in order:
        if any(component_in(c, d, ambient, n) is True for d in kept):
            continue
        kept = [d for d in kept if component_in(d, c, ambient, n) is not True]
        kept.append(c)
    return sorted(kept, key=lambda c: c.key())


def _rank_size(c: Component, n: int) -> int:
    if isinstance(c, FullAmbient):
        return -n
    if isinstance(c, Hypersurface):
        return -(n - 1)
    if isinstance(c, LinearSubspace):
        return -c.dim
    if isinstance(c, IdentityPoint):
        return 0
    return -(n - 1) + 1


# ---------------------------------------------------------------------------
# building descriptions from ideals


def describe(generators: Sequence[LaurentPoly], nvars: int, ambient: str = AFFINE,
             names=None) -> VarietyDescription:
    """Zero locus of an ideal as an irredundant union of components.

    In affine space, linear pieces are split off exactly: the common factor of
    the generators is decomposed into hyperplanes where possible, and the
    residual ideal is branched along any generator that is a product of
    rational linear forms.  Pieces that resist are kept as ZeroSet components.
    """
    gens = [g for g in generators if not g.is_zero()]
    if ambient == TORUS:
        comps = _describe_torus(gens, nvars)
    else:
        comps = _describe_affine(gens, [], nvars)
    return VarietyDescription.of(ambient, nvars, comps, names)


def _describe_torus(gens: list[LaurentPoly], n: int, pins: dict | None = None) -> list[Component]:
    pins = pins or {}
    gens = [g for g in gens if not g.is_zero()]
    if any(g.is_monomial() for g in gens):
        return []
    pinned = _pin_candidate(gens, pins)
    if pinned is not None:
        var, roots = pinned
        comps: list[Component] = []
        for a in roots:
            images = [LaurentPoly.const(a, n) if i == var else LaurentPoly.var(i, n)
                      for i in range(n)]
            comps.extend(_describe_torus([g.substitute(images) for g in gens], n,
                                         {**pins, var: a}))
        return comps
    if not gens:
        return [_pinned_component(None, pins, n)]
    g = gcd_list(gens, n)
    comps = []
    if not g.is_monomial():
        for h in split_coordinate_factors(squarefree_part(g)):
            comps.append(_pinned_component(Hypersurface(h), pins, n))
        rest = [exact_quotient(f, g) for f in gens]
    else:
        rest = gens
    if any(r.is_monomial() for r in rest):
        return comps
    rest_gens = sorted({unit_normalize(r) for r in rest}, key=_poly_key)
    comps.append(_pinned_component(ZeroSet(tuple(rest_gens)), pins, n))
    return comps


def split_coordinate_factors(f: LaurentPoly) -> list[LaurentPoly]:
    """Split off factors t_i − a (a rational) from a squarefree Laurent polynomial."""
    n = f.nvars
    out = []
    rest = f.clear_monomial()
    for i in range(n):
        if rest.degree_in(i) == 0:
            continue
        probe = None
        for val in (2, 3, 5, 7):
            images = [LaurentPoly.var(j, n) if j == i else LaurentPoly.const(val + j, n)
                      for j in range(n)]
            probe = rest.substitute(images)
            if not probe.is_zero():
                break
        if probe.is_zero():
            continue
        coeffs = [0] * (probe.degree_in(i) + 1)
        for e, c in probe.terms.items():
            coeffs[e[i]] = c
        for a in rational_roots(coeffs):
            if a == 0:
                continue
            lin = LaurentPoly.var(i, n) - a
            q = poly_quotient(rest, lin)
            if q is not None:
                out.append(unit_normalize(lin))
                rest = q
    if not rest.is_monomial():
        out.append(unit_normalize(rest))
    return out


def _pin_candidate(gens: list[LaurentPoly], pins: dict):
    """A variable fixed to finitely many rational values by a univariate generator."""
    for g in gens:
        h = g.clear_monomial()
        used = h.used_variables()
        if len(used) != 1 or used[0] in pins:
            continue
        v = used[0]
        coeffs = [0] * (h.degree_in(v) + 1)
        for e, c in h.terms.items():
            coeffs[e[v]] = c
        sqf = squarefree_part(h)
        roots = [r for r in rational_roots(coeffs) if r != 0]
        if len(roots) == sqf.degree_in(v):
            return v, roots
    return None


def _pinned_component(c: Component | None, pins: dict, n: int) -> Component:
    if not pins:
        return FullAmbient() if c is None else c
    xs = [LaurentPoly.var(i, n) for i in range(n)]
    eqs = [xs[i] - a for i, a in sorted(pins.items())]
    if c is None and len(pins) == n and all(a == 1 for a in pins.values()):
        return IdentityPoint()
    extra = [] if c is None else list(defining_polys(c, TORUS, n))
    return ZeroSet(tuple(sorted({unit_normalize(f) for f in extra + eqs}, key=_poly_key)))


def _eliminate(ell: LaurentPoly, n: int) -> list[LaurentPoly]:
    """Substitution images solving the affine linear equation ell = 0 for its last variable."""
    p = max(ell.used_variables())
    e = [0] * n
    e[p] = 1
    a = Fraction(ell.terms[tuple(e)])
    xs = [LaurentPoly.var(i, n) for i in range(n)]
    img = LaurentPoly.zero(n)
    for ex, c in ell.terms.items():
        if ex == tuple(e):
            continue
        if any(ex):
            img = img - xs[ex.index(1)] * (Fraction(c) / a)
        else:
            img = img - Fraction(c) / a
    images = list(xs)
    images[p] = img
    return images


def _subspace(eqs: list[LaurentPoly], n: int) -> LinearSubspace | None:
    return LinearSubspace.from_forms(eqs, n)


def _describe_affine(gens: list[LaurentPoly], eqs: list[LaurentPoly], n: int) -> list[Component]:
    gens = [primitive_over_z(g) for g in gens if not g.is_zero()]
    if any(g.is_constant() for g in gens):
        return []
    if not gens:
        sub = _subspace(eqs, n)
        if sub is None:
            return []
        return [_as_component(sub)]
    g = gens[0]
    for f in gens[1:]:
        if g.is_constant():
            break
        g = poly_gcd(g, f)
    comps: list[Component] = []
    if not g.is_constant():
        facs, rest = linear_factors(g)
        for ell, _ in facs:
            comps.extend(_describe_affine([], eqs + [ell], n))
        if not rest.is_constant():
            comps.append(_nonlinear_piece([squarefree_poly(rest)], eqs, n))
        residual = [poly_quotient(f, g) for f in gens]
        comps.extend(_describe_affine(residual, eqs, n))
        return comps
    best = None
    for f in sorted(gens, key=lambda f: (f.total_degree(), len(f), _poly_key(f))):
        facs, rest = linear_factors(f)
        if rest.is_constant():
            best = facs
            break
    if best is None:
        return [_nonlinear_piece(gens, eqs, n)]
    for ell, _ in best:
        images = _eliminate(ell, n)
        sub_gens = [f.substitute(images) for f in gens]
        comps.extend(_describe_affine(sub_gens, eqs + [ell], n))
    return comps


def _nonlinear_piece(gens: list[LaurentPoly], eqs: list[LaurentPoly], n: int) -> Component:
    gens = sorted({primitive_over_z(g) for g in gens}, key=_poly_key)
    if not eqs and len(gens) == 1:
        return Hypersurface(gens[0])
    sub = _subspace(eqs, n)
    forms = sub.forms() if sub is not None else []
    return ZeroSet(tuple(sorted(set(gens) | set(forms), key=_poly_key)))


def hyperplane_union(polys: Iterable[LaurentPoly], n: int, names=None) -> VarietyDescription:
    return describe([_product(list(polys), n)], n, AFFINE, names)


def _product(polys: list[LaurentPoly], n: int) -> LaurentPoly:
    out = LaurentPoly.const(1, n)
    for p in polys:
        out = out * p
    return out


def intersect(a: VarietyDescription, b: VarietyDescription) -> VarietyDescription:
    """Intersection of two unions of linear subspaces / points / full spaces."""
    _check_same(a, b)
    if not (a.is_linear_union() and b.is_linear_union()):
        raise ValueError("intersection is implemented for linear unions only")
    n = a.nvars
    comps: list[Component] = []
    for c in a.components:
        for d in b.components:
            rows = _rows_of(c, n) + _rows_of(d, n)
            if not rows:
                comps.append(FullAmbient())
                continue
            sub = LinearSubspace.from_rows(rows, n)
            if sub is not None:
                comps.append(_as_component(sub))
    return VarietyDescription.of(AFFINE, n, comps, a.names)


def _rows_of(c: Component, n: int) -> list[list[Fraction]]:
    if isinstance(c, FullAmbient):
        return []
    if isinstance(c, IdentityPoint):
        return [[Fraction(int(i == j)) for j in range(n)] + [Fraction(0)] for i in range(n)]
    return [list(r) for r in c.rows]


def _as_component(sub: LinearSubspace) -> Component:
    if not sub.rows:
        return FullAmbient()
    if len(sub.rows) == sub.nvars and sub.is_homogeneous():
        return IdentityPoint()
    return sub


def normalize_linear_component(c: Component) -> Component:
    return _as_component(c) if isinstance(c, LinearSubspace) else c


def max_linear_dim(v: VarietyDescription) -> int:
    """Largest dimension among components known exactly (-1 when empty)."""
    best = -1
    for c in v.components:
        if isinstance(c, FullAmbient):
            best = max(best, v.nvars)
        elif isinstance(c, IdentityPoint):
            best = max(best, 0)
        elif isinstance(c, LinearSubspace):
            best = max(best, c.dim)
        elif isinstance(c, Hypersurface):
            best = max(best, v.nvars - 1)
        else:
            best = max(best, v.nvars - 1)
    return best


__all__ = [
    "AFFINE", "TORUS", "Component", "FullAmbient", "Hypersurface", "IdentityPoint",
    "LinearSubspace", "TorsionTranslate", "VarietyDescription", "ZeroSet", "describe",
    "component_in", "variety_in", "varieties_equal", "subspace_in_variety", "intersect",
    "hyperplane_union", "max_linear_dim", "variety_from_json"
]

"""Derived manifolds: connected sums, tree graph-manifolds, boundary manifolds of arrangements."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .ideals.tangent import tangent_cone_union
from .ideals.varieties import (AFFINE, TORUS, FullAmbient, Hypersurface, IdentityPoint,
                               LinearSubspace, TorsionTranslate, VarietyDescription, ZeroSet,
                               defining_polys, describe, varieties_equal)
from .symbolic import LaurentPoly, t_names, x_names
from .threeman import (ClosedThreeManifoldData, TriForm, char_variety_3m, is_generic,
                       resonance_3m, resonance_3m_degree)


class InvalidIncidence(ValueError):
    pass


class MissingTableEntry(KeyError):
    pass


# -- jump loci tables and products ---------------------------------------------------------


@dataclass
class JumpLociTable:
    """Jump loci V^i_k (torus) and R^i_k (affine) of a closed m-manifold with b_1 = n.

    Entries are produced lazily by the ``char`` and ``res`` callables, which
    return None for entries that are not known.
    """

    n: int
    dim: int = 3
    char: Callable[[int, int], VarietyDescription | None] | None = None
    res: Callable[[int, int], VarietyDescription | None] | None = None
    label: str = ""

    def get(self, kind: str, i: int, k: int) -> VarietyDescription:
        amb = TORUS if kind == "char" else AFFINE
        if k <= 0:
            return VarietyDescription.full(amb, self.n)
        fn = self.char if kind == "char" else self.res
        out = fn(i, k) if fn is not None else None
        if out is None:
            raise MissingTableEntry(f"{self.label or 'table'}: no {kind} entry for (i={i}, k={k})")
        return out


def table_from_manifold(m: ClosedThreeManifoldData) -> JumpLociTable:
    n = m.n

    def res(i, k):
        if n == 0:
            if i in (0, 3) and k == 1:
                return VarietyDescription.point(AFFINE, 0)
            return VarietyDescription.empty(AFFINE, 0)
        return resonance_3m_degree(m.triform, i, k)

    def char(i, k):
        if i in (0, 3):
            return VarietyDescription.point(TORUS, n) if k == 1 else VarietyDescription.empty(TORUS, n)
        if n == 0:
            return VarietyDescription.empty(TORUS, 0)
        if k == 1 and m.alexander is not None:
            return char_variety_3m(m, 1)
        if k > n:
            return VarietyDescription.empty(TORUS, n)
        return None

    return JumpLociTable(n, 3, char, res, m.label)


def s1_x_s2_table() -> JumpLociTable:
    """S¹×S²: V^1_1 = {1}, R^1_1 = {0}, empty beyond depth 1."""
    return table_from_manifold(ClosedThreeManifoldData(TriForm(1), LaurentPoly.const(1, 1),
                                                      label="S1xS2"))


def sphere_table() -> JumpLociTable:
    return table_from_manifold(ClosedThreeManifoldData(TriForm(0), None, label="S3"))


def _embed(f: LaurentPoly, n: int, offset: int) -> LaurentPoly:
    return f.embed(n, list(range(offset, offset + f.nvars)))


def _component_product(a, b, ambient: str, n1: int, n2: int):
    n = n1 + n2
    for c in (a, b):
        if isinstance(c, TorsionTranslate):
            raise ValueError("products of torsion-translated components are not supported")
    if isinstance(a, FullAmbient) and isinstance(b, FullAmbient):
        return FullAmbient()
    if isinstance(a, IdentityPoint) and isinstance(b, IdentityPoint):
        return IdentityPoint()
    pa = defining_polys(a, ambient, n1)
    pb = defining_polys(b, ambient, n2)
    if ambient == AFFINE and all(isinstance(c, (FullAmbient, IdentityPoint, LinearSubspace))
                                 for c in (a, b)):
        forms = [_embed(f, n, 0) for f in pa] + [_embed(f, n, n1) for f in pb]
        sub = LinearSubspace.from_forms(forms, n)
        if sub is None:
            return None
        return sub
    polys = [_embed(f, n, 0) for f in pa] + [_embed(f, n, n1) for f in pb]
    polys = [p for p in polys if not p.is_zero()]
    if len(polys) == 1:
        return Hypersurface(polys[0])
    return ZeroSet(tuple(polys))


def _is_trivial_point(c, nvars: int) -> bool:
    return isinstance(c, IdentityPoint) or (nvars == 0 and isinstance(c, FullAmbient))


def product_variety(a: VarietyDescription, b: VarietyDescription,
                    drop_trivial: bool = False) -> VarietyDescription:
    """a × b in the product ambient; optionally without factors that are the identity point."""
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    n = a.nvars + b.nvars
    comps = []
    for ca in a.components:
        if drop_trivial and _is_trivial_point(ca, a.nvars):
            continue
        for cb in b.components:
            if drop_trivial and _is_trivial_point(cb, b.nvars):
                continue
            c = _component_product(ca, cb, a.ambient, a.nvars, b.nvars)
            if c is not None:
                comps.append(c)
    names = t_names(n) if a.ambient == TORUS else x_names(n)
    return VarietyDescription.of(a.ambient, n, comps, names)


def connected_sum_loci(m1: JumpLociTable, m2: JumpLociTable, i: int, k: int,
                       kind: str = "char") -> VarietyDescription:
    """V^i_k (kind 'char') or R^i_k (kind 'res') of M1 # M2.

    For i ∈ {1, m−1} this is the union over r+s = k−1 of products, except
    at characters trivial on one summand, where the count drops by one: there
    the locus is {1} × V_{k−b_1(M1)}(M2) and V_{k−b_1(M2)}(M1) × {1}.  For
    1 < i < m−1 the union runs over r+s = k.
    """
    if m1.dim != m2.dim:
        raise ValueError("summands must have the same dimension")
    if kind not in ("char", "res"):
        raise ValueError("kind must be 'char' or 'res'")
    amb = TORUS if kind == "char" else AFFINE
    n = m1.n + m2.n
    names = t_names(n) if amb == TORUS else x_names(n)
    if k <= 0:
        return VarietyDescription.full(amb, n, names)
    if i in (0, m1.dim):
        return VarietyDescription.point(amb, n, names) if k == 1 else \
            VarietyDescription.empty(amb, n, names)
    edge = i in (1, m1.dim - 1)
    total = k - 1 if edge else k
    out = VarietyDescription.empty(amb, n, names)
    for r in range(total + 1):
        s = total - r
        out = out.union(product_variety(m1.get(kind, i, r), m2.get(kind, i, s), drop_trivial=edge))
    if edge:
        pt1 = VarietyDescription.point(amb, m1.n)
        pt2 = VarietyDescription.point(amb, m2.n)
        out = out.union(product_variety(pt1, m2.get(kind, i, k - m1.n)))
        out = out.union(product_variety(m1.get(kind, i, k - m2.n), pt2))
    return VarietyDescription.of(amb, n, out.components, names)


def connected_sum_table(m1: JumpLociTable, m2: JumpLociTable) -> JumpLociTable:
    def make(kind):
        def fn(i, k):
            try:
                return connected_sum_loci(m1, m2, i, k, kind)
            except MissingTableEntry:
                return None
        return fn

    return JumpLociTable(m1.n + m2.n, m1.dim, make("char"), make("res"),
                         f"{m1.label}#{m2.label}")


def iterated_sum(tables: Sequence[JumpLociTable]) -> JumpLociTable:
    if not tables:
        return sphere_table()
    out = tables[0]
    for t in tables[1:]:
        out = connected_sum_table(out, t)
    return out


def connected_sum_form(mu1: TriForm, mu2: TriForm) -> TriForm:
    """Intersection form of M1 # M2: the direct sum of the two forms."""
    terms = dict(mu1.terms)
    for (i, j, k), c in mu2.terms:
        terms[(i + mu1.n, j + mu1.n, k + mu1.n)] = c
    return TriForm.from_terms(mu1.n + mu2.n, terms, one_based=False)


# -- tree graph-manifolds ------------------------------------------------------------------


@dataclass(frozen=True)
class TreeGraphManifold:
    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        v = len(self.genera)
        if v == 0:
            raise ValueError("a tree needs at least one vertex")
        if any(g < 0 for g in self.genera):
            raise ValueError("genera must be non-negative")
        if len(self.edges) != v - 1:
            raise ValueError("a tree on v vertices has v − 1 edges")
        parent = list(range(v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            if not (0 <= a < v and 0 <= b < v) or a == b:
                raise ValueError(f"bad edge {(a, b)}")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("graph has a cycle")
            parent[ra] = rb


    @classmethod
    def from_json(cls, data) -> "TreeGraphManifold":
        return cls(tuple(int(g) for g in data["genera"]),
                   tuple((int(a), int(b)) for a, b in data.get("edges", ())))

    def to_json(self) -> dict:
        return {"genera": list(self.genera), "edges": [list(e) for e in self.edges]}


def tree_graph_manifold_form(t: TreeGraphManifold) -> TriForm:
    """μ = Σ_v Σ_i a_{v,i} b_{v,i} c_v with blocks (a_{v,1}, b_{v,1}, …, c_v) per vertex."""
    terms = {}
    off = 0
    for g in t.genera:
        c = off + 2 * g
        for i in range(g):
            terms[(off + 2 * i, off + 2 * i + 1, c)] = 1
        off += 2 * g + 1
    return TriForm.from_terms(off, terms, one_based=False)


def tree_table(t: TreeGraphManifold) -> JumpLociTable:
    """Resonance table assembled from the vertex pieces Σ_{g_v} × S¹ by connected sums."""
    pieces = []
    for g in t.genera:
        mu = tree_graph_manifold_form(TreeGraphManifold((g,)))
        pieces.append(table_from_manifold(ClosedThreeManifoldData(mu, None, label=f"S1xSigma{g}")))
    return iterated_sum(pieces)


# -- boundary manifolds of line arrangements -----------------------------------------------


@dataclass(frozen=True)
class ArrangementIncidence:
    """Lines 0..n of a projective arrangement with its points of multiplicity ≥ 3."""

    lines: int
    multiple_points: tuple[frozenset, ...] = ()

    @classmethod
    def build(cls, lines: int, multiple_points: Sequence[Sequence[int]] = ()) -> "ArrangementIncidence":
        if lines < 2:
            raise InvalidIncidence("need at least two lines")
        pts = []
        for J in multiple_points:
            s = frozenset(int(j) for j in J)
            if len(s) < 3:
                raise InvalidIncidence(f"multiple point {sorted(s)} has fewer than 3 lines")
            if not all(0 <= j < lines for j in s):
                raise InvalidIncidence(f"multiple point {sorted(s)} names a missing line")
            pts.append(s)
        for a, b in combinations(pts, 2):
            if len(a & b) > 1:
                raise InvalidIncidence(f"points {sorted(a)} and {sorted(b)} share two lines")
        return cls(lines, tuple(sorted(pts, key=sorted)))

    @classmethod
    def from_json(cls, data) -> "ArrangementIncidence":
        return cls.build(int(data["lines"]), data.get("multiple_points", []))

    def to_json(self) -> dict:
        return {"lines": self.lines, "multiple_points": [sorted(J) for J in self.multiple_points]}

    @classmethod
    def pencil(cls, lines: int) -> "ArrangementIncidence":
        return cls.build(lines, [range(lines)] if lines >= 3 else [])

    @classmethod
    def near_pencil(cls, lines: int) -> "ArrangementIncidence":
        return cls.build(lines, [range(1, lines)] if lines >= 4 else [])

    @classmethod
    def general_position(cls, lines: int) -> "ArrangementIncidence":
        return cls.build(lines, [])

    @property
    def n(self) -> int:
        return self.lines - 1

    def point_of(self, i: int, j: int) -> frozenset | None:
        for J in self.multiple_points:
            if i in J and j in J:
                return J
        return None

    def transverse(self, i: int, j: int) -> bool:
        return self.point_of(i, j) is None

    def is_pencil(self) -> bool:
        return self.lines == 2 or any(len(J) == self.lines for J in self.multiple_points)

    def is_near_pencil(self) -> bool:
        if self.lines == 3:
            return True
        return any(len(J) == self.lines - 1 for J in self.multiple_points)

    def graph(self) -> "ArrangementGraph":
        verts: list = [("line", i) for i in range(self.lines)]
        verts += [("point", tuple(sorted(J))) for J in self.multiple_points]
        edges = [(("line", i), ("line", j)) for i, j in combinations(range(self.lines), 2)
                 if self.transverse(i, j)]
        for J in self.multiple_points:
            for i in sorted(J):
                edges.append((("point", tuple(sorted(J))), ("line", i)))
        return ArrangementGraph(tuple(verts), tuple(edges))

    def basis_pairs(self) -> list[tuple[int, int]]:
        """The index set B of the classes f_{i,j} (pairs among lines 1..n)."""
        out = []
        for i, j in combinations(range(1, self.lines), 2):
            J = self.point_of(i, j)
            if J is None or i == min(J):
                out.append((i, j))
        return out

    def lines_through(self, i: int, j: int) -> list[int]:
        """I(i,j): lines ℓ_k (k ≥ 1) through ℓ_i ∩ ℓ_j."""
        J = self.point_of(i, j)
        pts = {i, j} if J is None else set(J)
        return sorted(k for k in pts if k >= 1)


@dataclass(frozen=True)
class ArrangementGraph:
    vertices: tuple
    edges: tuple

    def degree(self, v) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    @property
    def betti1(self) -> int:
        return len(self.edges) - len(self.vertices) + 1


@dataclass
class BoundaryManifold:
    incidence: ArrangementIncidence
    triform: TriForm
    alexander: LaurentPoly
    char_variety: VarietyDescription
    tangent_cone: VarietyDescription
    formal: bool
    kind: str
    basis: list[str] = field(default_factory=list)

    @property
    def b1(self) -> int:
        return self.triform.n

    def data(self) -> ClosedThreeManifoldData:
        return ClosedThreeManifoldData(self.triform, self.alexander, label=f"boundary({self.kind})")

    def to_json(self) -> dict:
        return {"incidence": self.incidence.to_json(), "b1": self.b1, "basis": self.basis,
                "triform": self.triform.to_json(), "alexander": str(self.alexander),
                "char_variety": self.char_variety.to_json(),
                "tangent_cone": self.tangent_cone.to_json(), "formal": self.formal,
                "kind": self.kind}


def _vertex_variable(v, n: int, N: int) -> LaurentPoly:
    """t_v − 1 up to a unit, with t_0 = (t_1⋯t_n)^{-1} eliminated."""
    kind, data = v
    members = [data] if kind == "line" else list(data)
    exps = [0] * N
    for i in members:
        if i == 0:
            for k in range(n):
                exps[k] -= 1
        else:
            exps[i - 1] += 1
    if all(e <= 0 for e in exps):
        exps = [-e for e in exps]
    mono = LaurentPoly.monomial(exps, 1, t_names(N))
    return mono - 1


def boundary_manifold(a: ArrangementIncidence) -> BoundaryManifold:
    n = a.n
    pairs = a.basis_pairs()
    N = n + len(pairs)
    g = a.graph()
    if N != n + g.betti1:
        raise InvalidIncidence("basis size disagrees with n + b_1(Γ)")
    terms = []
    for idx, (i, j) in enumerate(pairs):
        # e_{I(i,j)} e_j f_{i,j}, the k = j summand vanishing
        terms += [((k - 1, j - 1, n + idx), 1) for k in a.lines_through(i, j) if k != j]
    mu = TriForm.from_terms(N, terms, one_based=False)
    basis = [f"e{i}" for i in range(1, n + 1)] + [f"f{i},{j}" for i, j in pairs]
    tn = t_names(N)
    if a.is_pencil():
        kind = "pencil"
        delta = LaurentPoly.const(1 if n <= 1 else 0, N, tn)
        cv = VarietyDescription.point(TORUS, N, tn) if n <= 1 else VarietyDescription.full(TORUS, N, tn)
        tc = VarietyDescription.point(AFFINE, N) if n <= 1 else VarietyDescription.full(AFFINE, N)
        return BoundaryManifold(a, mu, delta, cv, tc, True, kind, basis)
    kind = "near-pencil" if a.is_near_pencil() else "generic"
    delta = LaurentPoly.const(1, N, tn)
    factors = []
    for v in g.vertices:
        d = g.degree(v)
        fv = _vertex_variable(v, n, N)
        if d - 2:
            delta = delta * fv ** (d - 2)
        if d >= 3:
            factors.append(fv)
    if factors:
        cv = describe(factors[:1], N, TORUS, tn)
        for f in factors[1:]:
            cv = cv.union(describe([f], N, TORUS, tn))
        cv = cv.with_identity()
        tc = tangent_cone_union(factors)
    else:
        cv = VarietyDescription.point(TORUS, N, tn)
        tc = VarietyDescription.point(AFFINE, N)
    return BoundaryManifold(a, mu, delta, cv, tc, kind != "generic", kind, basis)


@dataclass
class BoundaryCheck:
    tc_equals_resonance: bool | None
    formal: bool
    consistent: bool
    generic: bool | None


def check_boundary_formality(bm: BoundaryManifold) -> BoundaryCheck:
    """Compare TC_1(V^1_1) with R^1_1 computed from the intersection form."""
    if bm.b1 == 0:
        return BoundaryCheck(True, bm.formal, bm.formal, None)
    res = resonance_3m(bm.triform, 1)
    eq = varieties_equal(bm.tangent_cone, res)
    gen = None
    if bm.b1 % 2 == 1 and bm.b1 >= 3:
        gen = is_generic(bm.triform).generic
    consistent = eq is None or eq == bm.formal
    return BoundaryCheck(eq, bm.formal, consistent, gen)

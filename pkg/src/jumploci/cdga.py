"""Finite commutative differential graded algebras and their resonance varieties."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Sequence

from .ideals.matrices import PolyMatrix, block_minors_ideal
from .ideals.varieties import AFFINE, VarietyDescription, describe
from .linalg import nullspace, rank
from .symbolic import LaurentPoly, x_names


class InvalidCDGA(ValueError):
    pass


def _vec_add(acc: dict, vec: Mapping[int, Fraction], scale) -> None:
    for k, c in vec.items():
        v = acc.get(k, 0) + scale * c
        if v == 0:
            acc.pop(k, None)
        else:
            acc[k] = v


@dataclass(frozen=True)
class FiniteCDGA:
    """A finite-dimensional CDGA given by structure constants.

    ``names[i]`` has degree ``degrees[i]``; ``products[(i, j)]`` maps basis
    indices to coefficients of e_i·e_j, and ``differential[i]`` those of D e_i.
    Products with the unit (the unique degree-0 element) are implicit.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    products: Mapping[tuple[int, int], Mapping[int, Fraction]]
    differential: Mapping[int, Mapping[int, Fraction]]

    # -- construction ----------------------------------------------------
    @classmethod
    def build(cls, names: Sequence[str], degrees: Sequence[int],
              products: Sequence[Sequence] = (), differential: Sequence[Sequence] = (),
              validate: bool = True) -> "FiniteCDGA":
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        if len(names) != len(degrees):
            raise InvalidCDGA("basis names and degrees differ in length")
        if len(set(names)) != len(names):
            raise InvalidCDGA("duplicate basis names")
        index = {n: i for i, n in enumerate(names)}

        def idx(x) -> int:
            if isinstance(x, str):
                if x not in index:
                    raise InvalidCDGA(f"unknown basis element {x!r}")
                return index[x]
            if not 0 <= int(x) < len(names):
                raise InvalidCDGA(f"basis index {x} out of range")
            return int(x)

        prods: dict[tuple[int, int], dict[int, Fraction]] = {}
        given: set[tuple[int, int]] = set()
        for i, j, k, c in products:
            i, j, k = idx(i), idx(j), idx(k)
            c = Fraction(c)
            if degrees[k] != degrees[i] + degrees[j]:
                raise InvalidCDGA(
                    f"product {names[i]}·{names[j]} -> {names[k]} does not add degrees")
            prods.setdefault((i, j), {})
            _vec_add(prods[(i, j)], {k: c}, 1)
            given.add((i, j))
        # fill in the graded-commutative partner of every given product
        for (i, j) in list(given):
            if (j, i) in given:
                continue
            sign = -1 if degrees[i] * degrees[j] % 2 else 1
            prods[(j, i)] = {k: sign * c for k, c in prods[(i, j)].items()}
        diff: dict[int, dict[int, Fraction]] = {}
        for i, k, c in differential:
            i, k = idx(i), idx(k)
            if degrees[k] != degrees[i] + 1:
                raise InvalidCDGA(f"D{names[i]} -> {names[k]} is not of degree +1")
            diff.setdefault(i, {})
            _vec_add(diff[i], {k: Fraction(c)}, 1)
        a = cls(names, degrees, {k: v for k, v in prods.items() if v},
                {k: v for k, v in diff.items() if v})
        if validate:
            a.validate()
        return a

    @classmethod
    def from_json(cls, data: Mapping) -> "FiniteCDGA":
        return cls.build(data["basis"], data["degrees"], data.get("products", []),
                         data.get("differential", []))

    def to_json(self) -> dict:
        prods = []
        for (i, j), vec in sorted(self.products.items()):
            for k, c in sorted(vec.items()):
                prods.append([i, j, k, f"{c.numerator}/{c.denominator}"])
        diff = []
        for i, vec in sorted(self.differential.items()):
            for k, c in sorted(vec.items()):
                diff.append([i, k, f"{c.numerator}/{c.denominator}"])
        return {"basis": list(self.names), "degrees": list(self.degrees),
                "products": prods, "differential": diff}

    # -- structure ---------------------------------------------------------
    @property
    def top(self) -> int:
        return max(self.degrees)

    def basis_in_degree(self, i: int) -> list[int]:
        return [k for k, d in enumerate(self.degrees) if d == i]

    def dim(self, i: int) -> int:
        return len(self.basis_in_degree(i))

    def unit(self) -> int | None:
        deg0 = self.basis_in_degree(0)
        return deg0[0] if len(deg0) == 1 else None

    def mul_basis(self, i: int, j: int) -> dict[int, Fraction]:
        u = self.unit()
        if i == u:
            return {j: Fraction(1)}
        if j == u:
            return {i: Fraction(1)}
        return dict(self.products.get((i, j), {}))

    def mul(self, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, ca in a.items():
            for j, cb in b.items():
                _vec_add(out, self.mul_basis(i, j), ca * cb)
        return out

    def d(self, a: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, c in a.items():
            _vec_add(out, self.differential.get(i, {}), c)
        return out

    def validate(self) -> None:
        u = self.unit()
        if u is None:
            raise InvalidCDGA("degree 0 must be spanned by the unit (connected algebra)")
        if any(d < 0 for d in self.degrees):
            raise InvalidCDGA("negative degree")
        if self.differential.get(u):
            raise InvalidCDGA("D(1) must vanish")
        n = len(self.names)
        for (i, j) in self.products:
            if u in (i, j):
                raise InvalidCDGA("products with the unit are implicit and must not be listed")
        for i in range(n):
            for j in range(n):
                sign = -1 if self.degrees[i] * self.degrees[j] % 2 else 1
                lhs = self.mul_basis(i, j)
                rhs = {k: sign * c for k, c in self.mul_basis(j, i).items()}
                if lhs != rhs:
                    raise InvalidCDGA(
                        f"graded commutativity fails for {self.names[i]}, {self.names[j]}")
        for i, j, k in iproduct(range(n), repeat=3):
            if self.degrees[i] + self.degrees[j] + self.degrees[k] > self.top:
                continue
            left = self.mul(self.mul_basis(i, j), {k: Fraction(1)})
            right = self.mul({i: Fraction(1)}, self.mul_basis(j, k))
            if left != right:
                raise InvalidCDGA(
                    f"associativity fails for {self.names[i]}, {self.names[j]}, {self.names[k]}")
        for i in range(n):
            if self.d(self.d({i: Fraction(1)})):
                raise InvalidCDGA(f"D∘D does not vanish on {self.names[i]}")
        for i in range(n):
            for j in range(n):
                ei, ej = {i: Fraction(1)}, {j: Fraction(1)}
                lhs = self.d(self.mul(ei, ej))
                rhs = self.mul(self.d(ei), ej)
                sign = -1 if self.degrees[i] % 2 else 1
                _vec_add(rhs, self.mul(ei, self.d(ej)), sign)
                if lhs != rhs:
                    raise InvalidCDGA(
                        f"Leibniz rule fails for {self.names[i]}, {self.names[j]}")

    # -- linear algebra ------------------------------------------------------
    def differential_matrix(self, i: int) -> list[list[Fraction]]:
        """Matrix of D: A^i -> A^{i+1} (rows indexed by the target basis)."""
        src, tgt = self.basis_in_degree(i), self.basis_in_degree(i + 1)
        pos = {k: r for r, k in enumerate(tgt)}
        m = [[Fraction(0)] * len(src) for _ in tgt]
        for c, k in enumerate(src):
            for t, v in self.differential.get(k, {}).items():
                m[pos[t]][c] = v
        return m

    def cocycles(self, i: int) -> list[list[Fraction]]:
        """Basis of Z^i as coordinate vectors in the degree-i basis."""
        m = self.differential_matrix(i)
        ncols = self.dim(i)
        if not m:
            return [[Fraction(int(r == c)) for c in range(ncols)] for r in range(ncols)]
        return nullspace(m, ncols)


def _rank_or_zero(m: list[list[Fraction]]) -> int:
    return rank(m) if m and m[0] else 0


@dataclass(frozen=True)
class CohomologyInfo:
    degree: int
    dim: int
    cocycle_basis: tuple[tuple[Fraction, ...], ...]


def cohomology(a: FiniteCDGA, i: int) -> CohomologyInfo:
    """b_i(A) = dim Z^i − dim B^i, with a basis of Z^i for reference."""
    z = a.cocycles(i)
    b = _rank_or_zero(a.differential_matrix(i - 1)) if i >= 1 else 0
    return CohomologyInfo(i, len(z) - b, tuple(tuple(v) for v in z))


def betti_numbers(a: FiniteCDGA) -> list[int]:
    return [cohomology(a, i).dim for i in range(a.top + 1)]


@dataclass
class UniversalComplex:
    """Matrices δ^i over S = Q[x_1..x_r], r = dim H^1 (identified with Z^1)."""

    algebra: FiniteCDGA
    h1_basis: list[list[Fraction]]
    matrices: dict[int, PolyMatrix]
    nvars: int

    def delta(self, i: int) -> PolyMatrix:
        return self.matrices[i]

    def evaluate(self, i: int, point: Sequence) -> list[list]:
        return self.matrices[i].evaluate(point)


def _scaled_integer(v: list[Fraction]) -> list[Fraction]:
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    w = [x * den for x in v]
    g = 0
    for x in w:
        g = math.gcd(g, int(x))
    return [x / g for x in w] if g else w


def universal_complex(a: FiniteCDGA) -> UniversalComplex:
    if a.unit() is None:
        raise InvalidCDGA("the universal complex needs a connected algebra")
    deg1 = a.basis_in_degree(1)
    z1 = [_scaled_integer(v) for v in a.cocycles(1)]
    r = len(z1)
    names = x_names(r)
    xs = [LaurentPoly.var(j, r, names) for j in range(r)]
    zero = LaurentPoly.zero(r, names)
    mats = {}
    for i in range(-1, a.top + 1):
        src = a.basis_in_degree(i) if i >= 0 else []
        tgt = a.basis_in_degree(i + 1)
        pos = {k: row for row, k in enumerate(tgt)}
        m = [[zero] * len(src) for _ in tgt]
        for col, k in enumerate(src):
            entries: dict[int, LaurentPoly] = {}
            for j, vec in enumerate(z1):
                zj = {deg1[p]: c for p, c in enumerate(vec) if c}
                for t, c in a.mul(zj, {k: Fraction(1)}).items():
                    entries[t] = entries.get(t, zero) + xs[j] * c
            for t, c in a.differential.get(k, {}).items():
                entries[t] = entries.get(t, zero) + LaurentPoly.const(c, r, names)
            for t, v in entries.items():
                m[pos[t]][col] = v
        mats[i] = PolyMatrix(m, r, names) if m else PolyMatrix([], r, names)
        mats[i].cols = len(src)
    return UniversalComplex(a, z1, mats, r)


def resonance(a: FiniteCDGA, i: int, k: int, complex_: UniversalComplex | None = None
              ) -> VarietyDescription:
    """R^i_k(A) ⊆ H^1(A) as the zero set of I_{c_i−k+1}(δ^i ⊕ δ^{i−1}).

    A class a lies in R^i_k iff dim H^i(A, δ_a) = c_i − rank δ^i_a − rank δ^{i−1}_a ≥ k.
    """
    if i < 0 or i > a.top:
        raise ValueError(f"degree {i} outside 0..{a.top}")
    if k < 0:
        raise ValueError("depth must be non-negative")
    uc = complex_ or universal_complex(a)
    r = uc.nvars
    c_i = a.dim(i)
    size = c_i - k + 1
    if size <= 0:
        return VarietyDescription.empty(AFFINE, r)
    ideal = block_minors_ideal([uc.delta(i), uc.delta(i - 1)], size, r)
    return describe(ideal.generators, r, AFFINE)


# -- standard models -----------------------------------------------------------


def exterior_algebra(names: Sequence[str], differential: Mapping[str, Sequence[tuple]] | None = None
                     ) -> FiniteCDGA:
    """Exterior algebra on degree-1 generators, with D given on generators.

    ``differential[g]`` lists (coeff, [gens]) pairs: D g = Σ coeff · Π gens.
    D is extended by the Leibniz rule.
    """
    from itertools import combinations
    gens = list(names)
    monos = [()]
    for d in range(1, len(gens) + 1):
        monos.extend(combinations(range(len(gens)), d))
    bname = ["1"] + ["".join(gens[i] for i in m) for m in monos[1:]]
    degrees = [len(m) for m in monos]
    index = {m: i for i, m in enumerate(monos)}

    def wedge(m1, m2):
        if set(m1) & set(m2):
            return None, 0
        seq = list(m1) + list(m2)
        sign = 1
        for x in range(len(seq)):
            for y in range(x + 1, len(seq)):
                if seq[x] > seq[y]:
                    sign = -sign
        return tuple(sorted(seq)), sign

    products = []
    for i, m1 in enumerate(monos):
        for j, m2 in enumerate(monos):
            if not m1 or not m2:
                continue
            m, s = wedge(m1, m2)
            if m is not None:
                products.append((i, j, index[m], s))
    dgen: dict[int, dict[tuple, Fraction]] = {}
    for g, terms in (differential or {}).items():
        gi = gens.index(g)
        for coeff, factors in terms:
            m = ()
            sign = 1
            for f in factors:
                m, s = wedge(m, (gens.index(f),))
                if m is None:
                    break
                sign *= s
            if m is None:
                continue
            dgen.setdefault(gi, {})
            dgen[gi][m] = dgen[gi].get(m, 0) + sign * Fraction(coeff)
    diff = []
    for i, mono in enumerate(monos):
        if not mono:
            continue
        out: dict[tuple, Fraction] = {}
        for pos, g in enumerate(mono):
            if g not in dgen:
                continue
            before, after = mono[:pos], mono[pos + 1:]
            for dm, c in dgen[g].items():
                m1, s1 = wedge(before, dm)
                if m1 is None:
                    continue
                m2, s2 = wedge(m1, after)
                if m2 is None:
                    continue
                # Leibniz sign (-1)^{|before|}
                sgn = (-1) ** len(before) * s1 * s2
                out[m2] = out.get(m2, 0) + sgn * c
        for m, c in out.items():
            if c:
                diff.append((i, index[m], c))
    return FiniteCDGA.build(bname, degrees, products, diff)


def three_manifold_algebra(n: int, mu: Mapping[tuple[int, int, int], int]) -> FiniteCDGA:
    """Poincaré-duality algebra of a closed orientable 3-manifold with 3-form μ.

    Basis 1, e_1..e_n, e_1^∨..e_n^∨, ω with e_i e_j = Σ_k μ_{ijk} e_k^∨ and
    e_i e_k^∨ = δ_{ik} ω.  ``mu`` maps 0-based i<j<k to μ_{ijk}.
    """
    names = ["1"] + [f"e{i + 1}" for i in range(n)] + [f"f{i + 1}" for i in range(n)] + ["w"]
    degrees = [0] + [1] * n + [2] * n + [3]
    e = lambda i: 1 + i  # noqa: E731
    f = lambda i: 1 + n + i  # noqa: E731
    w = 1 + 2 * n
    full: dict[tuple[int, int, int], int] = {}
    for (i, j, k), c in mu.items():
        for (a, b, cc), s in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
                              ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
            full[(a, b, cc)] = s * c
    products = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = full.get((i, j, k), 0)
                if c:
                    products.append((e(i), e(j), f(k), c))
    for i in range(n):
        products.append((e(i), f(i), w, 1))
        products.append((f(i), e(i), w, 1))
    return FiniteCDGA.build(names, degrees, products, [])

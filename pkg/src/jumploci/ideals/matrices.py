"""Polynomial matrices, determinantal and Pfaffian ideals, Fitting ideals."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from ..symbolic import LaurentPoly, gcd_list, primitive_over_z


@dataclass(frozen=True)
class Ideal:
    """Ideal given by generators; zero generators are pruned, () is the zero ideal."""

    generators: tuple[LaurentPoly, ...]
    nvars: int

    def __init__(self, generators: Sequence[LaurentPoly], nvars: int):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator lives in the wrong ring")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "nvars", nvars)

    @classmethod
    def unit(cls, nvars: int) -> "Ideal":
        return cls([LaurentPoly.const(1, nvars)], nvars)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit_obviously(self) -> bool:
        """True when some generator is a unit of the Laurent ring."""
        return any(g.is_monomial() for g in self.generators)

    def normalized_generators(self) -> list[LaurentPoly]:
        """Distinct generators up to rational scalars, in canonical order."""
        seen = {}
        for g in self.generators:
            h = primitive_over_z(g)
            seen[h.to_json().__repr__()] = h
        return [seen[k] for k in sorted(seen)]

    def __len__(self):
        return len(self.generators)


class PolyMatrix:
    """Rectangular matrix of Laurent polynomials over one ring."""

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]], nvars: int | None = None,
                 names=None):
        rows = [list(r) for r in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix is not rectangular")
        if nvars is None:
            probe = next((e for r in rows for e in r if isinstance(e, LaurentPoly)), None)
            if probe is None:
                raise ValueError("cannot infer the ring of an empty or constant matrix")
            nvars = probe.nvars
            names = names or probe.names
        self.nvars = nvars
        self.names = names
        self.entries = [[self._coerce(e) for e in r] for r in rows]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    def _coerce(self, e) -> LaurentPoly:
        if isinstance(e, LaurentPoly):
            if e.nvars != self.nvars:
                raise ValueError("entry ring mismatch")
            return e
        return LaurentPoly.const(e, self.nvars, self.names)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                          self.nvars, self.names)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], self.nvars, self.names)

    def delete(self, i: int, j: int) -> "PolyMatrix":
        """Remove row i and column j (the (i;j) minor matrix)."""
        return self.submatrix([r for r in range(self.rows) if r != i],
                              [c for c in range(self.cols) if c != j])

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        out = [[fn(e) for e in r] for r in self.entries]
        nv = out[0][0].nvars if out and out[0] else self.nvars
        return PolyMatrix(out, nv, out[0][0].names if out and out[0] else self.names)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.entries[i][j] == -self.entries[j][i]
                   for i in range(self.rows) for j in range(i, self.cols))

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        z = LaurentPoly.zero(self.nvars, self.names)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.nvars, self.names)

    def evaluate(self, point, p: int | None = None) -> list[list]:
        return [[e.evaluate(point, p) for e in r] for r in self.entries]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


class _MinorCache:
    """Memoized Laplace expansion along the first row of each submatrix."""

    def __init__(self, m: PolyMatrix):
        self.m = m
        self.memo: dict[tuple, LaurentPoly] = {}
        self.zero = LaurentPoly.zero(m.nvars, m.names)
        self.one = LaurentPoly.const(1, m.nvars, m.names)

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
        if not rows:
            return self.one
        key = (rows, cols)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        r0, rest = rows[0], rows[1:]
        acc = self.zero
        for idx, c in enumerate(cols):
            a = self.m.entries[r0][c]
            if a.is_zero():
                continue
            sub = self.minor(rest, cols[:idx] + cols[idx + 1:])
            if sub.is_zero():
                continue
            term = a * sub
            acc = acc - term if idx % 2 else acc + term
        self.memo[key] = acc
        return acc


def det(m: PolyMatrix) -> LaurentPoly:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    return _MinorCache(m).minor(tuple(range(m.rows)), tuple(range(m.cols)))


def minors(m: PolyMatrix, size: int) -> list[tuple[tuple, tuple, LaurentPoly]]:
    """All size x size minors as (rows, cols, value), rows/cols lexicographic."""
    if size < 0 or size > min(m.rows, m.cols):
        raise ValueError(f"minor size {size} out of range for a {m.rows}x{m.cols} matrix")
    cache = _MinorCache(m)
    out = []
    for rows in combinations(range(m.rows), size):
        for cols in combinations(range(m.cols), size):
            out.append((rows, cols, cache.minor(rows, cols)))
    return out


def minors_ideal(m: PolyMatrix, size: int) -> Ideal:
    """I_size(m); size 0 gives the unit ideal."""
    if size == 0:
        return Ideal.unit(m.nvars)
    return Ideal([v for _, _, v in minors(m, size)], m.nvars)


def block_minors_ideal(blocks: Sequence[PolyMatrix], size: int, nvars: int) -> Ideal:
    """I_size of a block-diagonal matrix, from the minors of its blocks.

    Uses I_s(A ⊕ B) = Σ_{a+b=s} I_a(A)·I_b(B), which avoids expanding the
    (mostly zero) full block matrix.
    """
    if size == 0:
        return Ideal.unit(nvars)
    one = LaurentPoly.const(1, nvars)
    # gens[s] = generators of I_s of the blocks processed so far
    gens: dict[int, list[LaurentPoly]] = {0: [one]}
    for b in blocks:
        cache = _MinorCache(b)
        bmin: dict[int, list[LaurentPoly]] = {0: [one]}
        for s in range(1, min(b.rows, b.cols, size) + 1):
            vals = []
            for rows in combinations(range(b.rows), s):
                for cols in combinations(range(b.cols), s):
                    v = cache.minor(rows, cols)
                    if not v.is_zero():
                        vals.append(v)
            bmin[s] = _dedupe(vals)
        new: dict[int, list[LaurentPoly]] = {}
        for a, ga in gens.items():
            for s, gb in bmin.items():
                if a + s > size or not ga or not gb:
                    continue
                new.setdefault(a + s, []).extend(x * y for x in ga for y in gb)
        gens = {k: _dedupe(v) for k, v in new.items()}
    return Ideal(gens.get(size, []), nvars)


def _dedupe(polys: list[LaurentPoly]) -> list[LaurentPoly]:
    seen = {}
    for p in polys:
        h = primitive_over_z(p)
        seen.setdefault(h, h)
    return list(seen.values())


class _PfaffianCache:
    def __init__(self, m: PolyMatrix):
        self.m = m
        self.memo: dict[tuple, LaurentPoly] = {}
        self.one = LaurentPoly.const(1, m.nvars, m.names)
        self.zero = LaurentPoly.zero(m.nvars, m.names)

    def pf(self, idx: tuple[int, ...]) -> LaurentPoly:
        if not idx:
            return self.one
        if len(idx) % 2:
            return self.zero
        hit = self.memo.get(idx)
        if hit is not None:
            return hit
        i0 = idx[0]
        acc = self.zero
        for pos in range(1, len(idx)):
            a = self.m.entries[i0][idx[pos]]
            if a.is_zero():
                continue
            rest = idx[1:pos] + idx[pos + 1:]
            sub = self.pf(rest)
            if sub.is_zero():
                continue
            # sign (-1)^{pos+1} with pos counted from 0
            acc = acc + a * sub if pos % 2 else acc - a * sub
        self.memo[idx] = acc
        return acc


def pfaffian(m: PolyMatrix) -> LaurentPoly:
    if not m.is_skew():
        raise ValueError("Pfaffian needs a skew-symmetric matrix")
    return _PfaffianCache(m).pf(tuple(range(m.rows)))


def pfaffians(m: PolyMatrix, order: int) -> list[tuple[tuple, LaurentPoly]]:
    if not m.is_skew():
        raise ValueError("Pfaffian ideal needs a skew-symmetric matrix")
    if order % 2:
        raise ValueError("Pfaffian order must be even")
    if order < 0 or order > m.rows:
        raise ValueError(f"Pfaffian order {order} out of range for a {m.rows}x{m.rows} matrix")
    cache = _PfaffianCache(m)
    return [(idx, cache.pf(idx)) for idx in combinations(range(m.rows), order)]


def pfaffian_ideal(m: PolyMatrix, order: int) -> Ideal:
    """Ideal of the order x order Pfaffians of principal submatrices."""
    if order == 0:
        if not m.is_skew():
            raise ValueError("Pfaffian ideal needs a skew-symmetric matrix")
        return Ideal.unit(m.nvars)
    return Ideal([v for _, v in pfaffians(m, order)], m.nvars)


def fitting_ideal(m: PolyMatrix, k: int, q: int | None = None) -> Ideal:
    """E_k of the module presented by the rows of ``m`` on q generators.

    The module is the cokernel of the map whose matrix has one row per
    relation and one column per generator (q defaults to the column count),
    so E_k = I_{q-k}.  Fewer relations than q-k means zero padding, hence the
    zero ideal.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    q = m.cols if q is None else q
    size = q - k
    if size <= 0:
        return Ideal.unit(m.nvars)
    if size > min(m.rows, m.cols):
        return Ideal([], m.nvars)
    return minors_ideal(m, size)


def order_of_module(m: PolyMatrix, k: int, q: int | None = None) -> LaurentPoly:
    """gcd of E_k, unit-normalized; zero iff E_k = 0."""
    ideal = fitting_ideal(m, k, q)
    return gcd_list(ideal.generators, m.nvars)

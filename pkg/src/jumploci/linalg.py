"""Exact linear algebra over fields (rationals by default).

Entries may be any exact field elements supporting ``+ - * /`` and ``== 0``
(ints, Fractions or cyclotomic numbers).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _to_field(x):
    return Fraction(x) if isinstance(x, int) else x


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[_to_field(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not len(rows[0]):
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of {v : rows·v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def canonical_rows(rows: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """RREF rows as tuples of Fractions: a canonical basis of the row space."""
    red, _ = rref(rows)
    return [tuple(Fraction(x) for x in r) for r in red]


class SparseSpan:
    """Incrementally maintained span of sparse vectors (dicts key -> coefficient).

    Each stored vector is reduced against the earlier pivots, so membership
    is one reduction pass.
    """

    def __init__(self):
        self.basis: dict = {}  # pivot key -> vector with coefficient 1 at the pivot

    def reduce(self, vec: dict) -> dict:
        v = {k: _to_field(c) for k, c in vec.items() if c != 0}
        while v:
            hit = next((k for k in sorted(v) if k in self.basis), None)
            if hit is None:
                return v
            f = v[hit]
            for k, c in self.basis[hit].items():
                nv = v.get(k, 0) - f * c
                if nv == 0:
                    v.pop(k, None)
                else:
                    v[k] = nv
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec; returns False when it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        inv = v[piv]
        self.basis[piv] = {k: c / inv for k, c in v.items()}
        return True

    def __contains__(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def __len__(self):
        return len(self.basis)

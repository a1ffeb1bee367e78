from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from jumploci.linalg import SparseSpan, nullspace, rank

matrices = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@given(matrices)
def test_rank_matches_sympy(rows):
    assert rank(rows) == sp.Matrix(rows).rank()


@given(matrices)
def test_nullspace_is_annihilated(rows):
    ns = nullspace(rows, len(rows[0]))
    assert len(ns) == len(rows[0]) - rank(rows)
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices, st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_sparse_span_rank_and_membership(rows, coeffs):
    span = SparseSpan()
    for r in rows:
        span.add({j: c for j, c in enumerate(r)})
    assert len(span) == sp.Matrix(rows).rank()
    combo = {}
    for a, r in zip(coeffs, rows):
        for j, c in enumerate(r):
            combo[j] = combo.get(j, 0) + a * c
    assert combo in span
    width = len(rows[0])
    outside = {j: 1 for j in range(width)}
    assert (outside in span) == (sp.Matrix(rows + [[1] * width]).rank() == len(span))

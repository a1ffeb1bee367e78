import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumploci import load
from jumploci.ideals.tangent import exponential_tangent_cone
from jumploci.ideals.varieties import (AFFINE, LinearSubspace, VarietyDescription,
                                       varieties_equal, variety_in)
from jumploci.links import (InvalidLinkData, LinkData, link_char_variety, link_resonance,
                            link_tangent_cone, linearized_matrix, torres_check,
                            two_component_verdict)
from jumploci.symbolic import LaurentPoly, parse_poly, x_names


def planes(n, specs):
    xs = x_names(n)
    return VarietyDescription.of(AFFINE, n, [
        LinearSubspace.from_forms([parse_poly(f, xs) for f in spec], n) for spec in specs])


def test_linking_matrix_validation():
    with pytest.raises(InvalidLinkData):
        LinkData.build(2, [[0, 1], [2, 0]])
    with pytest.raises(InvalidLinkData):
        LinkData.build(2, [[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        LinkData.build(2, [[0, 1], [1, 0]], "t1 + t2 + t3")


symmetric_linking = st.integers(2, 4).flatmap(lambda n: st.lists(
    st.integers(-3, 3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
    lambda vals: (n, vals)))


def build_linking(n, vals):
    m = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = next(it)
    return LinkData.build(n, m)


@given(symmetric_linking)
def test_linearized_matrix_annihilates_diagonal(data):
    link = build_linking(*data)
    m = linearized_matrix(link)
    n = link.n
    xs = [LaurentPoly.var(i, n, x_names(n)) for i in range(n)]
    # each row of the linearized Alexander matrix is orthogonal to (x_1, …, x_n)
    for row in m.entries:
        assert sum((e * x for e, x in zip(row, xs)), LaurentPoly.zero(n)).is_zero()
    for k in range(1, n):
        assert variety_in(link_resonance(link, k + 1), link_resonance(link, k)) is True


@pytest.mark.parametrize("n", [2, 3, 4])
def test_all_ones_linking(n):
    link = LinkData.build(n, [[int(i != j) for j in range(n)] for i in range(n)])
    res = link_resonance(link, 1)
    if n == 2:
        assert res.is_point()
    else:
        expect = planes(n, [["+".join(x_names(n))]])
        assert varieties_equal(res, expect) is True


def test_two_component_links():
    for name, formal in [("link-hopf", True), ("link-4_2_1", True), ("link-6_2_3", True),
                         ("whitehead", False)]:
        link = load(name)
        v = two_component_verdict(link)
        assert v.formal is formal
        assert torres_check(link).holds


def test_torres_values():
    rep = torres_check(load("link-6_2_3"))
    assert rep.value_at_one == -2 and rep.linking_number == 2
    bad = LinkData.build(2, [[0, 2], [2, 0]], "t1*t2 - 2*t1 - 2*t2 + 2")
    assert not torres_check(bad).holds


def test_whitehead_cones():
    link = load("whitehead")
    axes = planes(2, [["x1"], ["x2"]])
    assert varieties_equal(link_tangent_cone(link), axes) is True
    assert varieties_equal(exponential_tangent_cone(link.alexander, True), axes) is True
    assert link_resonance(link, 1).is_full()


def test_six_three_one():
    link = load("link-6_3_1")
    lines = planes(3, [["x1", "x2 + x3"], ["x2", "x1 + x3"], ["x3", "x1 + x2"]])
    plane = planes(3, [["x1 + x2 + x3"]])
    assert varieties_equal(exponential_tangent_cone(link.alexander, True), lines) is True
    assert varieties_equal(link_tangent_cone(link), plane) is True
    assert varieties_equal(link_resonance(link, 1), plane) is True


def test_knot_char_variety():
    knot = load("knot-trefoil")
    assert knot.n == 1
    assert link_resonance(knot, 1).is_point()
    assert link_char_variety(knot).contains_identity()
    assert len(link_char_variety(knot).components) == 2


def test_link_json_round_trip():
    link = load("link-6_2_3")
    assert LinkData.from_json(link.to_json()) == link

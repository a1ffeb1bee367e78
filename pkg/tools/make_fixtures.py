"""Regenerate the builtin fixture corpus under src/jumploci/data/."""
from __future__ import annotations

import sys
from pathlib import Path

from jumploci.cdga import exterior_algebra, three_manifold_algebra
from jumploci.constructors import ArrangementIncidence, TreeGraphManifold
from jumploci.fixtures import Fixture, data_of
from jumploci.groups import GroupPresentation, seifert_presentation
from jumploci.links import LinkData
from jumploci.symbolic import parse_poly, t_names
from jumploci.threeman import ClosedThreeManifoldData, TriForm


def manifold(n, terms, alexander, label, torsion=()):
    alex = None if alexander is None else parse_poly(alexander, t_names(n))
    return ClosedThreeManifoldData(TriForm.from_terms(n, terms), alex, tuple(torsion), label)


def ones(n):
    return [[int(i != j) for j in range(n)] for i in range(n)]


def corpus():
    out = []

    def add(name, kind, description, obj):
        out.append(Fixture(name, kind, description, data_of(kind, obj)))

    # links
    add("link-hopf", "link", "Hopf link", LinkData.build(2, ones(2), "1", ["1", "1"], "Hopf"))
    add("link-4_2_1", "link", "4^2_1, linking number 2",
        LinkData.build(2, [[0, 2], [2, 0]], "t1 + t2", ["1", "1"], "4^2_1"))
    add("whitehead", "link", "Whitehead link 5^2_1, linking number 0",
        LinkData.build(2, [[0, 0], [0, 0]], "(t1 - 1)*(t2 - 1)", ["1", "1"], "5^2_1"))
    add("link-6_2_3", "link", "6^2_3, linking number 2",
        LinkData.build(2, [[0, 2], [2, 0]], "t1*t2 - 2*t1 - 2*t2 + 1", ["1", "1"], "6^2_3"))
    add("link-6_3_1", "link", "6^3_1, all linking numbers 1",
        LinkData.build(3, ones(3), "t1*t2 + t1*t3 + t2*t3 - t1 - t2 - t3", (), "6^3_1"))
    add("link-8_4_2", "link", "8^4_2",
        LinkData.build(4, {(1, 2): 0, (1, 3): 1, (1, 4): 1, (2, 3): -1, (2, 4): 1, (3, 4): 0},
                       "t1*t2*t3*t4 - t1*t2*t4 - t1*t3*t4 + t1*t3 + t2*t4 - t2 - t3 + 1",
                       (), "8^4_2"))
    add("knot-trefoil", "link", "trefoil knot",
        LinkData.build(1, [[0]], "t1^2 - t1 + 1", (), "3_1"))
    for n in (3, 4):
        add(f"link-all-ones-{n}", "link", f"{n} components, every linking number 1",
            LinkData.build(n, ones(n), None, (), f"all-ones-{n}"))

    # closed 3-manifolds
    add("sigma2-x-s1", "manifold", "product of a genus 2 surface and a circle",
        manifold(5, {(1, 2, 5): 1, (3, 4, 5): 1}, "(t5 - 1)^2", "S1 x Sigma_2"))
    add("sigma3-x-s1", "manifold", "product of a genus 3 surface and a circle",
        manifold(7, {(1, 2, 7): 1, (3, 4, 7): 1, (5, 6, 7): 1}, "(t7 - 1)^4", "S1 x Sigma_3"))
    add("torus-3", "manifold", "3-torus", manifold(3, {(1, 2, 3): 1}, "1", "T^3"))
    add("heisenberg", "manifold", "Heisenberg nilmanifold", manifold(2, {}, "1", "Heisenberg"))
    add("quadric-cone", "manifold",
        "b_1 = 2 with Alexander polynomial whose tangent cone is x1^2 + x2^2",
        manifold(2, {}, "(t1 + t2)*(t1*t2 + 1) - 4*t1*t2", "quadric cone"))
    add("s1xs2", "manifold", "S^1 x S^2", manifold(1, {}, "1", "S1 x S2"))
    for n in (2, 3):
        add(f"s1xs2-sum-{n}", "manifold", f"connected sum of {n} copies of S^1 x S^2",
            manifold(n, {}, "0", f"#{n} S1 x S2"))
    add("rank6-form-a", "manifold", "intersection form e1e2e3 + e1e5e6 + e2e4e5",
        manifold(6, {(1, 2, 3): 1, (1, 5, 6): 1, (2, 4, 5): 1}, None, "rank 6 form a"))
    add("rank6-form-b", "manifold", "intersection form e1e2e3 + e4e5e6",
        manifold(6, {(1, 2, 3): 1, (4, 5, 6): 1}, None, "rank 6 form b"))
    g7 = {(1, 4, 7): 1, (2, 5, 7): 1, (3, 6, 7): 1}
    add("rank7-generic-a", "manifold", "generic form e7(e1e4 + e2e5 + e3e6)",
        manifold(7, g7, None, "rank 7 generic a"))
    add("rank7-generic-b", "manifold", "generic form e7(e1e4 + e2e5 + e3e6) + e4e5e6",
        manifold(7, {**g7, (4, 5, 6): 1}, None, "rank 7 generic b"))

    # presentations
    add("pres-trefoil", "presentation", "trefoil knot group",
        GroupPresentation.build(["x", "y"], ["xyxYXY"], "trefoil"))
    add("pres-z2", "presentation", "free abelian group of rank 2",
        GroupPresentation.build(["x", "y"], ["xyXY"], "Z^2"))
    add("pres-free-2", "presentation", "free group of rank 2",
        GroupPresentation.build(["x", "y"], [], "F_2"))
    p, _ = seifert_presentation(2, 0, ())
    add("pres-sigma2-x-s1", "presentation", "fundamental group of S^1 x Sigma_2",
        GroupPresentation(p.generators, p.relators, "S1 x Sigma_2"))
    p, _ = seifert_presentation(1, 0, ((2, 1), (2, 1)))
    add("pres-sigma-2-4-8", "presentation",
        "Brieskorn manifold Sigma(2,4,8) as a Seifert fibration over the torus "
        "with two fibres of type (2,1); H_1 = Z^2 + Z_4",
        GroupPresentation(p.generators, p.relators, "Sigma(2,4,8)"))

    # arrangements
    add("arr-pencil-4", "arrangement", "pencil of 4 lines", ArrangementIncidence.pencil(4))
    add("arr-near-pencil-5", "arrangement", "near-pencil of 5 lines",
        ArrangementIncidence.near_pencil(5))
    for k in (4, 5, 6):
        add(f"arr-general-{k}", "arrangement", f"{k} lines in general position",
            ArrangementIncidence.general_position(k))

    # graph manifolds and sums
    add("tree-g1-g1", "tree", "two genus 1 vertices joined by an edge",
        TreeGraphManifold((1, 1), ((0, 1),)))
    add("tree-g1-g2-g1", "tree", "path of vertices of genera 1, 2, 1",
        TreeGraphManifold((1, 2, 1), ((0, 1), (1, 2))))
    add("sum-sigma2xs1-torus3", "connected-sum", "(S^1 x Sigma_2) # T^3",
        [manifold(5, {(1, 2, 5): 1, (3, 4, 5): 1}, "(t5 - 1)^2", "S1 x Sigma_2"),
         manifold(3, {(1, 2, 3): 1}, "1", "T^3")])

    # algebraic models
    add("heisenberg-model", "cdga", "finite model of the Heisenberg nilmanifold: dc = ab",
        exterior_algebra(["a", "b", "c"], {"c": [(1, ["a", "b"])]}))
    add("heisenberg-cohomology", "cdga", "cohomology ring of the Heisenberg nilmanifold",
        three_manifold_algebra(2, {}))
    return out


def main(target: str) -> None:
    root = Path(target)
    root.mkdir(parents=True, exist_ok=True)
    for fx in corpus():
        (root / f"{fx.name}.json").write_text(fx.dumps(), encoding="utf-8")
        print(fx.name)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/jumploci/data")

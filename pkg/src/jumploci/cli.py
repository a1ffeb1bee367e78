"""Command-line front end: ``jumploci <command> (--fixture NAME | --input FILE)``."""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import fixtures
from .cdga import InvalidCDGA, betti_numbers, resonance as cdga_resonance
from .constructors import (InvalidIncidence, MissingTableEntry, boundary_manifold,
                           check_boundary_formality, connected_sum_form, connected_sum_table,
                           table_from_manifold, tree_graph_manifold_form, tree_table)
from .fixtures import FixtureError, canonical_json, data_of
from .groups import (PresentationError, abelianize, alexander_polynomial, char_variety_deg1,
                     fox_identity_holds, mcmullen_check)
from .ideals.modp import DEFAULT_POINT_BUDGET
from .ideals.tangent import DEFAULT_SUPPORT_CAP
from .ideals.varieties import VarietyDescription, varieties_equal, variety_in
from .links import InvalidLinkData, link_char_variety, link_resonance, torres_check
from .symbolic import BudgetExceeded, LaurentPoly, associated, initial_form, shift_to_origin, symmetric
from .threeman import (ClosedThreeManifoldData, InvalidManifoldData, char_variety_3m_degree,
                       is_generic, resonance_3m_degree, turaev_det_pf)
from .verdicts import (InconsistentVerdict, boundary_verdict, link_verdict, manifold_verdict,
                       tangent_cones)

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_INVALID, EXIT_INTERNAL = 0, 2, 3, 4, 5

COMMANDS = ("resonance", "charvar", "tcone", "tau", "verdict", "construct", "check", "examples")


class UsageError(Exception):
    """The command does not apply to this kind of input."""


class Options:
    def __init__(self, ns: argparse.Namespace):
        self.degree = ns.degree
        self.depth = ns.depth
        self.primes = ns.primes
        self.support_cap = ns.budget_support
        self.point_budget = ns.budget_points


def _primes(text: str) -> tuple[int, ...]:
    try:
        ps = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    if not ps or any(p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)) for p in ps):
        raise argparse.ArgumentTypeError(f"not a list of primes: {text!r}")
    return ps


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    common.add_argument("--degree", type=int, default=1, help="cohomological degree i")
    common.add_argument("--depth", type=int, default=1, help="depth k")
    common.add_argument("--primes", type=_primes, default=(5, 7, 11),
                        help="primes for the mod-p oracle, e.g. 5,7,11")
    common.add_argument("--budget-support", type=_positive, default=DEFAULT_SUPPORT_CAP,
                        help="largest support handled by the exponential tangent cone")
    common.add_argument("--budget-points", type=_positive, default=DEFAULT_POINT_BUDGET,
                        help="largest point count enumerated by the mod-p oracle")
    parser = argparse.ArgumentParser(prog="jumploci",
                                     description="Cohomology jump loci of 3-manifolds and links.")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd, parents=[common])
        if cmd != "examples":
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--fixture", help="builtin fixture name")
            src.add_argument("--input", help="fixture document (JSON)")
    return parser


# ---------------------------------------------------------------------------
# inputs


def _load(ns) -> fixtures.Fixture:
    if ns.fixture:
        return fixtures.load_fixture(ns.fixture)
    try:
        with open(ns.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FixtureError(f"cannot read {ns.input}: {exc.strerror}") from None
    return fixtures.parse_fixture(text)


def _as_manifold(kind: str, obj) -> ClosedThreeManifoldData:
    if kind == "manifold":
        return obj
    if kind == "arrangement":
        return boundary_manifold(obj).data()
    if kind == "tree":
        return ClosedThreeManifoldData(tree_graph_manifold_form(obj), None, label="tree")
    if kind == "connected-sum":
        mu = obj[0].triform
        for m in obj[1:]:
            mu = connected_sum_form(mu, m.triform)
        # V^1_1 of a sum of two manifolds with b_1 > 0 is the whole torus
        alex = None
        if all(m.n > 0 for m in obj):
            alex = LaurentPoly.zero(mu.n)
        return ClosedThreeManifoldData(mu, alex, label=" # ".join(m.label for m in obj))
    raise UsageError(f"{kind} input does not describe a 3-manifold")


def _sum_table(obj):
    table = table_from_manifold(obj[0])
    for m in obj[1:]:
        table = connected_sum_table(table, table_from_manifold(m))
    return table


def _vjson(v: VarietyDescription | None):
    return None if v is None else {"variety": str(v), "components": v.to_json()}


# ---------------------------------------------------------------------------
# commands


def _resonance(kind, obj, opt) -> VarietyDescription:
    i, k = opt.degree, opt.depth
    if kind == "link":
        if i != 1:
            raise UsageError("link resonance is implemented in degree 1")
        return link_resonance(obj, k)
    if kind == "cdga":
        return cdga_resonance(obj, i, k)
    if kind == "presentation":
        raise UsageError("a presentation carries no cup products; use a manifold or link")
    return resonance_3m_degree(_as_manifold(kind, obj).triform, i, k)


def _charvar(kind, obj, opt) -> VarietyDescription | None:
    i, k = opt.degree, opt.depth
    if kind == "link":
        if (i, k) != (1, 1):
            raise UsageError("link characteristic varieties are implemented for i = k = 1")
        return link_char_variety(obj, 1)
    if kind == "presentation":
        if i != 1:
            raise UsageError("presentations determine degree 1 only")
        return char_variety_deg1(obj, k, torsion=True)
    if kind == "connected-sum":
        try:
            return _sum_table(obj).get("char", i, k)
        except MissingTableEntry:
            return None
    if kind == "arrangement":
        if (i, k) != (1, 1):
            raise UsageError("boundary manifolds are implemented for i = k = 1")
        return boundary_manifold(obj).char_variety
    if kind == "manifold":
        if obj.alexander is None:
            raise UsageError("this manifold fixture has no Alexander polynomial")
        return char_variety_3m_degree(obj, i, k)
    raise UsageError(f"no characteristic variety for {kind} input")


def cmd_resonance(fx, obj, opt) -> tuple[dict, list[str]]:
    v = _resonance(fx.kind, obj, opt)
    head = f"R^{opt.degree}_{opt.depth} = {v}"
    return {"resonance": _vjson(v)}, [head]


def cmd_charvar(fx, obj, opt):
    v = _charvar(fx.kind, obj, opt)
    text = "not determined by the available data" if v is None else str(v)
    return {"char_variety": _vjson(v)}, [f"V^{opt.degree}_{opt.depth} = {text}"]


def _cones(fx, obj, opt):
    v = _charvar(fx.kind, obj, opt)
    if v is None:
        raise UsageError("characteristic variety not determined by the available data")
    return tangent_cones(v, opt.support_cap)


def cmd_tcone(fx, obj, opt):
    _, tc, notes = _cones(fx, obj, opt)
    text = "not determined" if tc is None else str(tc)
    return ({"tangent_cone": _vjson(tc), "notes": notes},
            [f"TC_1(V^{opt.degree}_{opt.depth}) = {text}"] + notes)


def cmd_tau(fx, obj, opt):
    tau, _, _ = _cones(fx, obj, opt)
    lines = [f"tau_1(V^{opt.degree}_{opt.depth}) = {tau}"]
    return {"tau": _vjson(tau)}, lines


def _verdict(kind, obj, opt):
    kw = dict(primes=opt.primes, support_cap=opt.support_cap, point_budget=opt.point_budget)
    if kind == "link":
        return link_verdict(obj, **kw)
    if kind == "arrangement":
        return boundary_verdict(boundary_manifold(obj), **kw)
    if kind == "connected-sum":
        m = _as_manifold(kind, obj)
        cv = _sum_table(obj).get("char", 1, 1) if m.alexander is not None else None
        return manifold_verdict(m, char_variety=cv, **kw)
    if kind in ("presentation", "cdga"):
        raise UsageError(f"verdicts need manifold, link or arrangement data, not {kind}")
    return manifold_verdict(_as_manifold(kind, obj), **kw)


def cmd_verdict(fx, obj, opt):
    v = _verdict(fx.kind, obj, opt)
    lines = [v.summary]
    for c in v.claims:
        extra = f" ({c.evidence})" if c.evidence else ""
        lines.append(f"  [{c.status}] {c.statement}  <{c.citation}>{extra}")
    if v.report is not None:
        r = v.report
        lines += [f"  tau_1 = {r.tau}", f"  TC_1  = {r.tc}", f"  R^1_1 = {r.res}"]
    return v.to_json(), lines


def cmd_construct(fx, obj, opt):
    kind = fx.kind
    if kind == "arrangement":
        bm = boundary_manifold(obj)
        m = bm.data()
        rep = {"manifold": data_of("manifold", m), "basis": bm.basis, "kind": bm.kind,
               "char_variety": _vjson(bm.char_variety), "tangent_cone": _vjson(bm.tangent_cone)}
        lines = [f"boundary manifold of a {bm.kind} arrangement: b_1 = {bm.b1}",
                 f"mu = {m.triform}", f"Delta = {m.alexander}", f"V^1_1 = {bm.char_variety}"]
        return rep, lines
    if kind in ("tree", "connected-sum"):
        m = _as_manifold(kind, obj)
        table = tree_table(obj) if kind == "tree" else _sum_table(obj)
        depths = {}
        for k in range(1, m.n + 1):
            depths[str(k)] = str(table.get("res", 1, k))
        lines = [f"b_1 = {m.n}", f"mu = {m.triform}"] + \
            [f"R^1_{k} = {v}" for k, v in depths.items()]
        return {"manifold": data_of("manifold", m), "resonance_by_depth": depths}, lines
    raise UsageError(f"nothing to construct from {kind} input")


def _check_manifold(m: ClosedThreeManifoldData) -> dict:
    out = {"diagnostics": m.validate()}
    n = m.n
    if n:
        loci = [resonance_3m_degree(m.triform, 1, k) for k in range(1, n + 2)]
        out["resonance_chain_descends"] = all(
            variety_in(b, a) is True for a, b in zip(loci, loci[1:]))
    if m.alexander is not None and not m.alexander.is_zero():
        out["alexander_symmetric"] = symmetric(m.alexander)
    if n >= 3 and n % 2 == 1:
        det_mu, _ = turaev_det_pf(m.triform)
        out["generic"] = is_generic(m.triform).generic
        if m.alexander is not None:
            if m.alexander.is_zero():
                out["init_matches_det"] = det_mu.is_zero()
            else:
                init = initial_form(shift_to_origin(m.alexander))
                out["init_matches_det"] = (not det_mu.is_zero()) and \
                    associated(init.with_names(det_mu.names), det_mu)
    return out


# reported by `check` but not pass/fail conditions
INFO_KEYS = {"generic", "formal", "tc_equals_resonance"}


def cmd_check(fx, obj, opt):
    kind = fx.kind
    if kind == "link":
        rep = {}
        if obj.n == 2 and obj.alexander is not None:
            rep["torres"] = torres_check(obj).to_json()
        if obj.alexander is not None and obj.n >= 2:
            r = link_verdict(obj, primes=opt.primes, support_cap=opt.support_cap,
                             point_budget=opt.point_budget).report
            rep["tau_in_tc"] = r.tau_in_tc == "holds"
            rep["tc_in_res"] = r.tc_in_res == "holds"
    elif kind in ("manifold", "tree", "connected-sum"):
        m = _as_manifold(kind, obj)
        rep = _check_manifold(m)
        if kind in ("tree", "connected-sum"):
            table = tree_table(obj) if kind == "tree" else _sum_table(obj)
            rep["table_matches_form"] = all(
                varieties_equal(table.get("res", 1, k), resonance_3m_degree(m.triform, 1, k))
                is True for k in range(1, m.n + 1))
    elif kind == "presentation":
        ab = abelianize(obj)
        mc = mcmullen_check(obj)
        rep = {"fox_identity": fox_identity_holds(obj), "smith_certificate": ab.smith.verify(
            obj.exponent_matrix()), "abelianization": ab.to_json(),
            "alexander_polynomial": str(alexander_polynomial(obj)), "mcmullen": mc.to_json(),
            "mcmullen_holds": mc.e1_in_delta_aug is not False and mc.aug_sq_delta_in_e1 is not False}
    elif kind == "arrangement":
        bm = boundary_manifold(obj)
        c = check_boundary_formality(bm)
        rep = {"tc_equals_resonance": c.tc_equals_resonance, "formal": c.formal,
               "consistent": c.consistent, "generic": c.generic}
    elif kind == "cdga":
        obj.validate()
        rep = {"betti_numbers": betti_numbers(obj)}
    else:
        raise UsageError(f"no checks for {kind} input")
    failed = sorted(k for k, v in rep.items() if v is False and k not in INFO_KEYS)
    rep["ok"] = not failed and not rep.get("diagnostics")
    lines = [f"{k}: {v}" for k, v in sorted(rep.items())]
    return rep, lines


def _example_line(name: str, opt) -> tuple[dict, str]:
    fx = fixtures.load_fixture(name)
    obj = fx.build()
    if fx.kind in ("link", "manifold", "arrangement", "connected-sum") and not (
            fx.kind == "link" and obj.alexander is None) and not (
            fx.kind == "manifold" and obj.alexander is None):
        v = _verdict(fx.kind, obj, opt)
        return {"name": name, "kind": fx.kind, "summary": v.summary}, v.summary
    if fx.kind == "presentation":
        cv = char_variety_deg1(obj, 1, torsion=True)
        text = f"Delta = {alexander_polynomial(obj)}; V^1_1 = {cv}"
        return {"name": name, "kind": fx.kind, "summary": text}, text
    v = _resonance(fx.kind, obj, opt)
    text = f"R^1_1 = {v}"
    return {"name": name, "kind": fx.kind, "summary": text}, text


def cmd_examples(opt):
    rows, lines = [], []
    for name in fixtures.fixture_names():
        row, text = _example_line(name, opt)
        rows.append(row)
        lines.append(f"{name:24s} {text}")
    return {"examples": rows}, lines


HANDLERS = {"resonance": cmd_resonance, "charvar": cmd_charvar, "tcone": cmd_tcone,
            "tau": cmd_tau, "verdict": cmd_verdict, "construct": cmd_construct,
            "check": cmd_check}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    opt = Options(ns)
    try:
        if opt.depth < 0 or opt.degree < 0:
            raise UsageError("degree and depth must be non-negative")
        if ns.command == "examples":
            report, lines = cmd_examples(opt)
        else:
            fx = _load(ns)
            obj = fx.build()
            report, lines = HANDLERS[ns.command](fx, obj, opt)
            report = {"command": ns.command, "input": fx.name, "kind": fx.kind, **report}
    except (FixtureError, UsageError) as exc:
        print(f"jumploci: {exc}", file=err)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"jumploci: budget exceeded: {exc}", file=err)
        return EXIT_BUDGET
    except InconsistentVerdict as exc:
        print(f"jumploci: internal inconsistency: {exc}", file=err)
        return EXIT_INTERNAL
    except (InvalidLinkData, InvalidManifoldData, InvalidIncidence, PresentationError,
            InvalidCDGA, ValueError, KeyError, TypeError) as exc:
        print(f"jumploci: invalid data: {exc}", file=err)
        return EXIT_INVALID
    except (ArithmeticError, AssertionError) as exc:
        print(f"jumploci: internal invariant violated: {exc}", file=err)
        return EXIT_INTERNAL
    if ns.json:
        out.write(canonical_json(report))
    else:
        out.write("\n".join(lines) + "\n")
    if ns.command == "check" and not report.get("ok", True):
        return EXIT_INVALID
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

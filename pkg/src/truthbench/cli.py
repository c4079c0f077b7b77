"""The ``truthbench`` command line.

Exit codes: 0 success, 1 a boolean query came out false, 2 violations found,
3 other errors, 4 unknown command, 5 unreadable artifact, 6 artifact version
mismatch, 7 parse error, 8 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import artifacts
from .errors import ArtifactError, ParseError, TruthbenchError, UnknownCommand
from .reports import render_machine

OK, FALSE, VIOLATIONS, ERROR = 0, 1, 2, 3


class UsageError(TruthbenchError):
    exit_code = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message:
            raise UnknownCommand(message)
        raise UsageError(message)


class _Ctx:
    def __init__(self, args, out):
        self.args = args
        self.out = out

    def say(self, text):
        print(text, file=self.out)

    def report(self, report, code=OK):
        """Print a report (text, or JSON with --json) and save it with --out."""
        self.say(render_machine(report) if self.args.json else report.render_text())
        if self.args.out:
            artifacts.write(self.args.out, "report", json.loads(render_machine(report)))
        return code


def _formula(text, signature=None):
    from .syntax.sexpr import parse

    return parse(text, signature)


def _formula_file(path):
    """Formulas from a theory/battery artifact or a text file with one s-expression per line."""
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if not isinstance(doc, dict):
            raise ArtifactError(f"{path} is not a truthbench artifact")
        payload = artifacts.loads(text, doc.get("kind"))
        if doc.get("kind") == "theory":
            from .schemes import theory_from_payload

            return list(theory_from_payload(payload).axioms)
        from .schemes import battery_from_payload

        return battery_from_payload(payload)
    lines = [ln.split(";", 1)[0].strip() for ln in text.splitlines()]
    return [_formula(ln) for ln in lines if ln]


def _read_text(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactError(f"cannot read {path}: {exc.strerror}") from None


# -- hf ------------------------------------------------------------------------------


def cmd_hf(ctx, a):
    from . import hf
    from .syntax.sexpr import parse_set_literal

    if a.op == "encode":
        ctx.say(str(parse_set_literal(a.value)))
        return OK
    n = _nat(a.value)
    if a.op == "decode":
        ctx.say(_set_str(n))
    elif a.op == "tc":
        ctx.say(str(hf.transitive_closure_code(n)))
    elif a.op == "rank":
        ctx.say(str(hf.rank_of_code(n)))
    elif a.op == "members":
        ctx.say(" ".join(map(str, hf.members(n))))
    return OK


def _nat(text):
    if not text.isdigit():
        raise ParseError(f"expected a natural number, got {text!r}")
    return int(text)


def _set_str(n):
    from .hf import members

    return "{" + ",".join(_set_str(m) for m in members(n)) + "}"


# -- eval ------------------------------------------------------------------------------


def cmd_eval(ctx, a):
    from .semantics import FiniteStructure, eval_arith, eval_delta0, eval_sentence, eval_term
    from .syntax.sexpr import parse_term

    if a.term:
        ctx.say(str(eval_term(parse_term(a.formula))))
        return OK
    phi = _formula(a.formula)
    if a.delta0:
        value = eval_delta0(phi)
    elif a.arith is not None:
        value = eval_arith(phi, a.arith)
    else:
        value = eval_sentence(phi, FiniteStructure.from_spec(a.domain), memo=True)
    ctx.say("true" if value else "false")
    return OK if value else FALSE


# -- bridge --------------------------------------------------------------------------


def cmd_bridge(ctx, a):
    from . import bridge
    from .syntax.sexpr import to_sexpr

    if a.op == "pa2zf":
        ctx.say(to_sexpr(bridge.pa_to_zf(_formula(a.value, "arith"))))
    elif a.op == "zf2pa":
        ctx.say(to_sexpr(bridge.zf_to_pa(_formula(a.value, "set"))))
    elif a.op == "ordinal":
        ctx.say(str(bridge.nat_to_ordinal(_nat(a.value))))
    elif a.op == "validate":
        rep = bridge.validate_table(a.max_value)
        return ctx.report(rep, OK if rep.ok else VIOLATIONS)
    elif a.op == "transport":
        if a.value == "set":
            rep = bridge.zf_transport(budget_nodes=a.budget_nodes or 6, samples=a.samples, seed=a.seed)
        else:
            rep = bridge.pa_transport(bridge.delta0_corpus(a.samples or 50, seed=a.seed, max_value=a.max_value), a.max_value)
        return ctx.report(rep, OK if rep.ok else VIOLATIONS)
    return OK


# -- truth ---------------------------------------------------------------------------


def cmd_truth(ctx, a):
    from . import truth

    if a.op == "build":
        tower = truth.TruthTower.build(a.domain, a.depth, a.budget_nodes or 5)
        path = a.out or "tower.json"
        truth.save_tower(tower, path)
        ctx.say(f"tower over {a.domain}, reach {a.depth}, table to {tower.budget_nodes} nodes -> {path}")
        return OK
    tower = truth.load_tower(a.tower)
    if a.op == "query":
        member, depth = tower.t_most_membership(_formula(a.formula))
        ctx.say(f"{'true' if member else 'false'} (decided at level {depth})")
        return OK if member else FALSE
    if a.op == "verify-ct":
        rep = truth.verify_ct(tower, a.depth_bound, a.nodes or a.budget_nodes or 7)
        return ctx.report(rep, OK if rep.ok else VIOLATIONS)
    if a.op == "faces":
        rep = truth.faces_audit(tower, seed=a.seed)
        return ctx.report(rep, OK if rep.ok else VIOLATIONS)
    if a.op == "defset":
        ctx.say(" ".join(map(str, truth.definable_set(_formula(a.formula), tower))))
        return OK
    if a.op == "piecewise":
        ctx.say(str(truth.piecewise_code(tower, a.m)))
        return OK
    raise UnknownCommand(f"truth {a.op}")


# -- proof ---------------------------------------------------------------------------


def cmd_proof(ctx, a):
    from . import proofs
    from .syntax.sexpr import to_sexpr

    if a.op == "check":
        proof, assumptions, goal = proofs.load_proof(a.file)
        problems = proofs.audit_proof(proof, assumptions)
        for path, msg in problems:
            ctx.say(f"node {'/'.join(map(str, path)) or 'root'}: {msg}")
        if not problems and not proofs.root_ok(proof, assumptions, goal):
            ctx.say("end sequent is not contained in {goal} ∪ neg(assumptions)")
        ok = proofs.check_proof(proof, assumptions, goal)
        ctx.say(f"{'valid' if ok else 'invalid'}: {proof.nodes} nodes, {proof.cut_count} cuts")
        return OK if ok else FALSE
    if a.op == "cutelim":
        proof, assumptions, goal = proofs.load_proof(a.file)
        if not proofs.check_proof(proof, assumptions, goal):
            ctx.say("input proof does not check")
            return FALSE
        out, stats = proofs.eliminate_cuts_with_stats(proof)
        if a.out:
            proofs.save_proof(a.out, out, assumptions, goal)
        ctx.say(stats.render_text() if a.stats else f"cut-free proof with {out.nodes} nodes")
        return OK
    if a.op == "search":
        assumptions = _formula_file(a.phi) if a.phi else []
        goal = _formula(a.goal)
        proof = proofs.bounded_search(assumptions, goal, a.size)
        if proof is None:
            ctx.say(f"no proof of {to_sexpr(goal)} with at most {a.size} nodes")
            return FALSE
        if a.out:
            proofs.save_proof(a.out, proof, assumptions, goal)
        ctx.say(f"proof found: {proof.nodes} nodes")
        return OK
    if a.op == "fixtures":
        target = Path(a.out or "fixtures")
        target.mkdir(parents=True, exist_ok=True)
        for fx in proofs.corpus():
            proofs.save_proof(target / f"{fx.name}.json", fx.proof, fx.assumptions, fx.goal)
        ctx.say(f"{len(proofs.corpus())} fixture proofs -> {target}")
        return OK
    raise UnknownCommand(f"proof {a.op}")


# -- schemes -------------------------------------------------------------------------


def cmd_schemes(ctx, a):
    from . import schemes
    from .syntax.sexpr import to_sexpr

    if a.op in schemes.GENERATORS:
        ctx.say(to_sexpr(schemes.GENERATORS[a.op](_formula(a.formula))))
        return OK
    if a.op == "ref":
        theory = schemes.load_theory(a.theory) if a.theory else schemes.SAMPLE_ARITH
        battery = schemes.load_battery(a.battery) if a.battery else schemes.SAMPLE_BATTERY
        levels = schemes.ref_tower(theory, battery, a.levels)
        worst = OK
        for level in levels[:-1] if len(levels) > 1 else levels:
            _, rep = schemes.reflection_instances(level, battery, a.size)
            ctx.report(rep)
            worst = max(worst, OK if rep.ok else VIOLATIONS)
        ctx.say("axiom counts by level: " + ", ".join(str(len(t.axioms)) for t in levels))
        return worst
    if a.op == "audit":
        from .truth import load_tower

        tower = load_tower(a.tower)
        battery = schemes.load_battery(a.battery) if a.battery else (
            schemes.REPL_BATTERY if a.kind == "repl" else schemes.EIND_BATTERY
        )
        rep = schemes.audit_internal(tower, a.kind, battery)
        return ctx.report(rep, OK if rep.ok else VIOLATIONS)
    if a.op == "probe":
        rep = schemes.consistency_probe(size=a.size)
        return ctx.report(rep, VIOLATIONS if rep.found else OK)
    if a.op == "samples":
        target = Path(a.out or "samples")
        target.mkdir(parents=True, exist_ok=True)
        for t in (schemes.IDENTITY, schemes.SAMPLE_ARITH, schemes.UNSOUND):
            artifacts.write(target / f"theory-{t.label}.json", "theory", schemes.theory_payload(t))
        for name, bat in (("arith", schemes.SAMPLE_BATTERY), ("repl", schemes.REPL_BATTERY), ("eind", schemes.EIND_BATTERY)):
            artifacts.write(target / f"battery-{name}.json", "battery", schemes.battery_payload(bat))
        ctx.say(f"sample theories and batteries -> {target}")
        return OK
    raise UnknownCommand(f"schemes {a.op}")


# -- parser --------------------------------------------------------------------------


def _globals(defaults):
    p = argparse.ArgumentParser(add_help=False)
    d = argparse.SUPPRESS
    p.add_argument("--seed", type=int, default=0 if defaults else d, help="seed for randomized suites (default 0)")
    p.add_argument("--budget-nodes", type=int, default=None if defaults else d, help="enumeration budget in nodes")
    p.add_argument("--out", default=None if defaults else d, help="write the artifact or report here")
    p.add_argument("--json", action="store_true", default=False if defaults else d, help="print machine-readable reports")
    return p


def build_parser():
    top = _Parser(prog="truthbench", description="Depth-stratified truth classes over hereditarily finite sets.",
                  parents=[_globals(True)])
    shared = _globals(False)
    sub = top.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def command(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, parents=[shared])
        p.set_defaults(fn=fn)
        return p

    def ops(parent):
        return parent.add_subparsers(dest="op", parser_class=_Parser, required=True)

    hf = ops(command("hf", cmd_hf, "Ackermann coding of hereditarily finite sets"))
    for name in ("encode", "decode", "tc", "rank", "members"):
        hf.add_parser(name, parents=[shared]).add_argument("value")

    ev = command("eval", cmd_eval, "evaluate a sentence")
    ev.add_argument("formula")
    ev.add_argument("--domain", default="rank:4")
    ev.add_argument("--delta0", action="store_true", help="bounded sentence, true in all of V_omega")
    ev.add_argument("--term", action="store_true", help="evaluate a closed arithmetic term")
    ev.add_argument("--arith", type=int, metavar="N", help="arithmetic sentence, quantifiers below N")

    br = ops(command("bridge", cmd_bridge, "arithmetic and set theory translations"))
    for name in ("pa2zf", "zf2pa", "ordinal"):
        br.add_parser(name, parents=[shared]).add_argument("value")
    val = br.add_parser("validate", parents=[shared])
    val.add_argument("--max-value", type=int, default=6)
    tr = br.add_parser("transport", parents=[shared])
    tr.add_argument("value", choices=["arith", "set"], nargs="?", default="arith")
    tr.add_argument("--max-value", type=int, default=8)
    tr.add_argument("--samples", type=int, default=0)

    tt = ops(command("truth", cmd_truth, "truth towers and their audits"))
    b = tt.add_parser("build", parents=[shared])
    b.add_argument("--domain", default="rank:4")
    b.add_argument("--depth", type=int, default=6, help="reach of the tower")
    q = tt.add_parser("query", parents=[shared])
    q.add_argument("tower")
    q.add_argument("formula")
    v = tt.add_parser("verify-ct", parents=[shared])
    v.add_argument("tower")
    v.add_argument("--nodes", type=int, default=None)
    v.add_argument("--depth-bound", type=int, default=None)
    f = tt.add_parser("faces", parents=[shared])
    f.add_argument("tower")
    d = tt.add_parser("defset", parents=[shared])
    d.add_argument("tower")
    d.add_argument("formula")
    pw = tt.add_parser("piecewise", parents=[shared])
    pw.add_argument("tower")
    pw.add_argument("--m", type=int, required=True)

    pr = ops(command("proof", cmd_proof, "check, cut-eliminate and search proofs"))
    c = pr.add_parser("check", parents=[shared])
    c.add_argument("file")
    ce = pr.add_parser("cutelim", parents=[shared])
    ce.add_argument("file")
    ce.add_argument("--stats", action="store_true")
    s = pr.add_parser("search", parents=[shared])
    s.add_argument("--phi", help="assumptions: theory or battery artifact, or one s-expression per line")
    s.add_argument("--goal", required=True)
    s.add_argument("--size", type=int, default=20)
    pr.add_parser("fixtures", parents=[shared])

    sc = ops(command("schemes", cmd_schemes, "scheme instances, reflection and internal audits"))
    for name in ("ind", "eind", "repl"):
        sc.add_parser(name, parents=[shared]).add_argument("formula")
    r = sc.add_parser("ref", parents=[shared])
    r.add_argument("--theory")
    r.add_argument("--battery")
    r.add_argument("--levels", type=int, default=1)
    r.add_argument("--size", type=int, default=12)
    au = sc.add_parser("audit", parents=[shared])
    au.add_argument("tower")
    au.add_argument("--kind", choices=["repl", "eind"], default="repl")
    au.add_argument("--battery")
    pb = sc.add_parser("probe", parents=[shared])
    pb.add_argument("--size", type=int, default=20)
    sc.add_parser("samples", parents=[shared])
    return top


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.fn(_Ctx(args, out), args)
    except TruthbenchError as exc:
        print(f"truthbench: error: {exc}", file=err)
        return exc.exit_code
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"truthbench: error: {exc}", file=err)
        return ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

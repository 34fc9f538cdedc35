"""Command-line front end.

    qsitransfer costs   --state F --use-alice I --use-bob J [--channel quantum|classical]
    qsitransfer grid    --state F
    qsitransfer effects --state F --i I --j J [--from I1 J1]
    qsitransfer chain   --state F --target L --chain L1,L2,... [--split K]
    qsitransfer recover --state F --c L... --s1 L... --s2 L...
    qsitransfer catalog --state F

Global flags ``--json``, ``--tol T`` (default 1e-8) and ``--seed S`` may be
given before or after the command. In ``--chain`` groups are separated by
commas and labels inside one group are joined with ``+`` (``q2+q3,q4``).

Exit codes: 0 success, 1 input or usage error, 2 identity check failed.
"""
import argparse
import json
import sys

import numpy as np

from . import catalog as catalog_mod
from . import costs as costs_mod
from . import effects as effects_mod
from .checks import DEFAULT_TOL, BoundCheck, IdentityCheck, all_passed
from .document import DocumentError, build_state, document_digest, load_document
from .hilbert import partial_trace
from .linalg import eig_hermitian
from .recovery import recovery_report, petz_recover

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def num(x):
    """Round to 10 significant digits; normalizes -0.0."""
    return float(f"{float(x):.10g}") + 0.0


def _labels_arg(values):
    out = []
    for v in values:
        out.extend(lab for lab in v.split(",") if lab)
    return tuple(out)


def _check_doc(c):
    if isinstance(c, BoundCheck):
        return {
            "name": c.name,
            "value": num(c.value),
            "bound": num(c.bound),
            "residual": num(c.residual),
            "tolerance": c.tolerance,
            "passed": c.passed,
        }
    return {
        "name": c.name,
        "lhs": num(c.lhs),
        "rhs": num(c.rhs),
        "residual": num(c.residual),
        "tolerance": c.tolerance,
        "passed": c.passed,
    }


def _info(state, partition, i, j):
    t = costs_mod.information_terms(state, partition, (i, j))
    return {"H(C_A)": num(t.h_transfer), "I(C_A;A)": num(t.i_alice), "I(C_A;B)": num(t.i_bob)}


def cmd_costs(state, partition, args, tol):
    i, j = costs_mod.check_usage(partition, (args.use_alice, args.use_bob))
    q = costs_mod.redistribution_costs(state, partition, (i, j))
    m = costs_mod.merging_costs(state, partition, (i, j))
    qcmi_form = costs_mod.redistribution_qcmi(state, partition, (i, j))
    converted = costs_mod.convert_quantum_to_classical(q)
    results = {"usage": [i, j], **_info(state, partition, i, j)}
    kinds = [args.channel] if args.channel else list(costs_mod.CHANNEL_KINDS)
    for kind, v, names in (("quantum", q, ("Q", "E")), ("classical", m, ("c", "e"))):
        if kind in kinds:
            results[kind] = {
                "protocol": catalog_mod.classify((i, j), kind).name,
                names[0]: num(v.channel_rate),
                names[1]: num(v.ebit_rate),
                "summary": v.describe(),
            }
    checks = [
        IdentityCheck("c = 2Q", m.channel_rate, 2 * q.channel_rate, tol),
        IdentityCheck("e = Q + E", m.ebit_rate, q.channel_rate + q.ebit_rate, tol),
        IdentityCheck("Q = I(C_A;R~|B~)/2", q.channel_rate, qcmi_form, tol),
        IdentityCheck("teleported (Q,E) ebits = e", converted.ebit_rate, m.ebit_rate, tol),
    ]
    return results, checks


def cmd_grid(state, partition, args, tol):
    grid = costs_mod.cost_grid(state, partition)
    cells, checks = [], []
    for cell in grid:
        cells.append(
            {"i": cell.i, "j": cell.j, "Q": num(cell.Q), "E": num(cell.E), "c": num(cell.c), "e": num(cell.e)}
        )
        where = f"({cell.i},{cell.j})"
        checks.append(IdentityCheck(f"c = 2Q at {where}", cell.c, 2 * cell.Q, tol))
        checks.append(IdentityCheck(f"e = Q + E at {where}", cell.e, cell.Q + cell.E, tol))
        qform = costs_mod.redistribution_qcmi(state, partition, (cell.i, cell.j))
        checks.append(IdentityCheck(f"Q = I(C_A;R~|B~)/2 at {where}", cell.Q, qform, tol))
    return {"m": partition.m, "n": partition.n, "cells": cells}, checks


def _effect_doc(rep):
    return {
        "by_definition": num(rep.by_definition),
        "closed_form": num(rep.closed_form),
        "alice_part": num(rep.alice_part),
        "bob_part": num(rep.bob_part),
    }


def cmd_effects(state, partition, args, tol):
    end = costs_mod.check_usage(partition, (args.i, args.j))
    start = tuple(args.from_) if args.from_ else None
    reports, checks = {}, []
    for o in effects_mod.RESOURCE_TYPES:
        if start is None:
            rep = effects_mod.effect(state, partition, o, end)
        else:
            rep = effects_mod.additional_effect(state, partition, o, start, end)
        reports[o] = _effect_doc(rep)
        checks.append(IdentityCheck(f"E[{o}] definition = closed form", rep.by_definition, rep.closed_form, tol))
        checks.append(
            IdentityCheck(f"E[{o}] = A[{o}] + B[{o}]", rep.by_definition, rep.alice_part + rep.bob_part, tol)
        )
    if start is None:
        checks += effects_mod.theorem1_check(state, partition, *end, tol=tol)
    else:
        checks += effects_mod.theorem2_check(state, partition, start, end, tol=tol)
    results = {"from": list(start) if start else [0, 0], "to": list(end), "effects": reports}
    return results, checks


def _parse_chain(text):
    groups = [tuple(lab for lab in g.split("+") if lab) for g in text.split(",") if g]
    if not groups or any(not g for g in groups):
        raise UsageError(f"--chain: cannot parse {text!r}; use q2+q3,q4")
    return groups


def cmd_chain(state, partition, args, tol):
    target = _labels_arg([args.target.replace("+", ",")])
    groups = _parse_chain(args.chain)
    n = len(groups)
    splits = [args.split] if args.split is not None else list(range(1, n + 1))
    audits = [effects_mod.chain_rule_audit(state, target, groups, k) for k in splits]
    results = {
        "target": list(target),
        "chain": [list(g) for g in groups],
        "total": num(audits[0].total),
        "telescoped": num(audits[0].telescoped),
        "terms": [num(t) for t in audits[0].terms],
        "splits": [{"split": a.split, "split_sum": num(a.split_sum)} for a in audits],
    }
    checks = [IdentityCheck("total = telescoped sum", audits[0].total, audits[0].telescoped, tol)]
    checks += [IdentityCheck(f"total = split sum at {a.split}", a.total, a.split_sum, tol) for a in audits]
    return results, checks


def cmd_recover(state, partition, args, tol):
    c, s1, s2 = _labels_arg(args.c), _labels_arg(args.s1), _labels_arg(args.s2)
    keep = c + s1 + s2
    for lab in keep:
        state.layout.index(lab)
    dropped = [lab for lab in state.labels if lab not in keep]
    reduced = partial_trace(state, keep)
    rep = recovery_report(reduced, c, s1, s2)
    recovered, _ = petz_recover(reduced, c, s1, s2)
    lam_min = eig_hermitian(recovered.rho).values[0]
    results = {
        "c": list(c),
        "s1": list(s1),
        "s2": list(s2),
        "traced_out": dropped,
        "qcmi": num(rep.qcmi),
        "achieved_fidelity": num(rep.achieved_fidelity),
        "bound": num(rep.bound),
        "bound_satisfied": rep.bound_satisfied,
        "trace_deficiency": num(rep.trace_deficiency),
        "flagged": rep.flagged,
        "markov": bool(rep.qcmi <= tol),
    }
    checks = [
        IdentityCheck("recovered trace = 1", float(np.trace(recovered.rho).real), 1.0, tol),
        BoundCheck("recovered smallest eigenvalue >= 0", float(lam_min), 0.0, 1e-9),
    ]
    return results, checks


def cmd_catalog(state, partition, args, tol):
    rows = catalog_mod.catalog_report(state, partition)
    out = []
    by_usage = {}
    for r in rows:
        rate, ebit = ("Q", "E") if r.tag.channel_kind == costs_mod.QUANTUM else ("c", "e")
        out.append(
            {
                "protocol": r.tag.name,
                "channel": r.tag.channel_kind,
                "usage": list(r.usage),
                rate: num(r.channel_rate),
                ebit: num(r.ebit_rate),
                "note": r.note,
            }
        )
        by_usage.setdefault(r.usage, {})[r.tag.channel_kind] = r
    checks = []
    for usage, pair in by_usage.items():
        q, m = pair[costs_mod.QUANTUM], pair[costs_mod.CLASSICAL]
        label = f"{q.tag.name}/{m.tag.name}"
        checks.append(IdentityCheck(f"{label}: c = 2Q", m.channel_rate, 2 * q.channel_rate, tol))
        checks.append(IdentityCheck(f"{label}: e = Q + E", m.ebit_rate, q.channel_rate + q.ebit_rate, tol))
    return {"rows": out}, checks


COMMANDS = {
    "costs": cmd_costs,
    "grid": cmd_grid,
    "effects": cmd_effects,
    "chain": cmd_chain,
    "recover": cmd_recover,
    "catalog": cmd_catalog,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON document")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="identity tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random states without one")

    parser = _Parser(prog="qsitransfer", parents=[common], description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--state", required=True, help="state document (JSON)")
        return p

    p = add("costs", "optimal costs at one usage")
    p.add_argument("--use-alice", type=int, default=0)
    p.add_argument("--use-bob", type=int, default=0)
    p.add_argument("--channel", choices=costs_mod.CHANNEL_KINDS)
    add("grid", "costs over every usage (i, j)")
    p = add("effects", "effects of side information")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--from", dest="from_", type=int, nargs=2, metavar=("I1", "J1"))
    p = add("chain", "chain-rule audit")
    p.add_argument("--target", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--split", type=int)
    p = add("recover", "Petz recovery report")
    p.add_argument("--c", nargs="+", required=True)
    p.add_argument("--s1", nargs="+", required=True)
    p.add_argument("--s2", nargs="+", required=True)
    add("catalog", "the named protocols and their costs")
    return parser


def _arguments_echo(args):
    skip = {"json", "tol", "seed", "command", "state"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv=None):
    """Execute one command; returns ``(exit_code, report_or_None, as_json)``."""
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    tol = getattr(args, "tol", DEFAULT_TOL)
    seed = getattr(args, "seed", None)
    if not tol >= 0:
        print(f"qsitransfer: error: --tol must be a non-negative number, got {tol!r}", file=sys.stderr)
        return EXIT_INPUT, None, as_json
    try:
        with open(args.state, encoding="utf-8") as fh:
            doc = load_document(fh.read())
        state, partition = build_state(doc, seed)
        results, checks = COMMANDS[args.command](state, partition, args, tol)
    except (OSError, DocumentError, UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"qsitransfer: error: {msg}", file=sys.stderr)
        return EXIT_INPUT, None, as_json
    report = {
        "command": args.command,
        "arguments": _arguments_echo(args),
        "input_digest": document_digest(doc),
        "seed": seed,
        "tolerance": tol,
        "results": results,
        "checks": [_check_doc(c) for c in checks],
        "passed": all_passed(checks),
    }
    return (EXIT_OK if report["passed"] else EXIT_CHECK), report, as_json


def _render_value(v):
    if isinstance(v, float):
        return f"{v:.10g}"
    if isinstance(v, list):
        return "[" + ", ".join(_render_value(x) for x in v) + "]"
    return str(v)


def render_text(report):
    lines = [f"command: {report['command']}", f"input:   {report['input_digest']}", ""]
    results = report["results"]
    tables = {k: v for k, v in results.items() if isinstance(v, list) and v and isinstance(v[0], dict)}
    for key, val in results.items():
        if key in tables:
            continue
        if isinstance(val, dict):
            lines.append(f"{key}:")
            for k2, v2 in val.items():
                if isinstance(v2, dict):
                    inner = "  ".join(f"{a}={_render_value(b)}" for a, b in v2.items())
                    lines.append(f"  {k2:<10} {inner}")
                else:
                    lines.append(f"  {k2:<10} {_render_value(v2)}")
        else:
            lines.append(f"{key:<18} {_render_value(val)}")
    for key, rows in tables.items():
        cols = list(dict.fromkeys(c for r in rows for c in r))
        cols.sort(key=lambda c: c == "note")
        cells = [[_render_value(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(cols)]
        lines.append("")
        lines.append(f"{key}:")
        lines.append("  " + "  ".join(c.ljust(wd) for c, wd in zip(cols, widths)))
        for row in cells:
            lines.append("  " + "  ".join(x.ljust(wd) for x, wd in zip(row, widths)))
    lines.append("")
    lines.append("checks:")
    for c in report["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        lines.append(f"  [{status}] {c['name']}  (residual {c['residual']:.3e}, tol {c['tolerance']:g})")
    lines.append("")
    lines.append("all checks passed" if report["passed"] else "identity check FAILED")
    return "\n".join(lines)


def main(argv=None):
    code, report, as_json = run(argv)
    if report is not None:
        if as_json:
            print(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True))
        else:
            print(render_text(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

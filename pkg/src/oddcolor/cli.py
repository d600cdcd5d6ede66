"""Command line surface: one verb per library capability.

Every run prints a JSON report to stdout and a one-line summary to stderr.
Exit codes: 0 success / SAT / pass, 1 refuted / UNSAT / violations found,
2 input error.  All randomness flows through one seed, echoed in the report
so runs can be reproduced byte for byte (durations aside).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import jsonio
from .audit import audit_graph, full_audit
from .coloring import (
    RelaxedInstance,
    odd_chromatic_number,
    sampled_choosability,
    solve,
    uniform_lists,
)
from .discharge import charge_report, hunt, settle
from .embedding import embed_search, normalize_signatures
from .generate import GenerationBudgetError, generate_girth_instances
from .graphs import girth, hypothesis_check, one_subdivision, r_set_from_indices
from .jsonio import Instance

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2

EMBED_SEARCH_WARN_VERTICES = 12


class InputError(ValueError):
    pass


def _load(args) -> tuple[Instance, str]:
    path = getattr(args, "graph", None) or getattr(args, "instance", None)
    if path is None:
        raise InputError("an input file is required (--graph or --instance)")
    try:
        inst, digest = jsonio.load_instance(path)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load {path}: {exc}") from exc
    if getattr(args, "r", None) is not None:
        try:
            idx = [int(tok) for tok in args.r.split(",") if tok.strip() != ""]
            inst = Instance(
                inst.graph, r_set_from_indices(inst.graph, idx), inst.embedding, inst.lists
            )
        except ValueError as exc:
            raise InputError(f"bad --r value: {exc}") from exc
    return inst, digest


def _need_embedding(inst: Instance) -> None:
    if inst.embedding is None:
        raise InputError("this command needs an instance file with a rotation")


# -- subcommand bodies: return (result_json, exit_code) -------------------------


def cmd_check(args, inst: Instance):
    rep = hypothesis_check(inst.graph, inst.r)
    return rep.to_json(), EXIT_OK if rep.passes else EXIT_REFUTED


def cmd_faces(args, inst: Instance):
    _need_embedding(inst)
    emb = inst.embedding
    return (
        {
            "faces": jsonio.faces_to_json(emb),
            "euler_genus": emb.euler_genus,
            "orientable": emb.is_orientable(),
        },
        EXIT_OK,
    )


def cmd_genus(args, inst: Instance):
    _need_embedding(inst)
    return {"euler_genus": inst.embedding.euler_genus}, EXIT_OK


def cmd_embed(args, inst: Instance):
    if inst.graph.n > EMBED_SEARCH_WARN_VERTICES:
        print(
            f"warning: embedding search is exponential; {inst.graph.n} vertices "
            "may take very long",
            file=sys.stderr,
        )
    emb = embed_search(inst.graph, args.max_genus)
    if emb is None:
        return {"embedding": None, "max_genus": args.max_genus}, EXIT_REFUTED
    emb = normalize_signatures(emb)
    out = jsonio.embedding_to_json(emb, inst.r)
    return (
        {"embedding": out, "euler_genus": emb.euler_genus, "faces": len(emb.faces)},
        EXIT_OK,
    )


def cmd_solve(args, inst: Instance):
    lists = inst.lists
    if lists is None:
        if args.k is None:
            raise InputError("give --k or an instance file with lists")
        lists = uniform_lists(inst.graph.n, args.k)
    coloring = solve(RelaxedInstance(inst.graph, inst.r, lists))
    if coloring is None:
        return {"status": "UNSAT", "k": lists.k}, EXIT_REFUTED
    return {"status": "SAT", "k": lists.k, **jsonio.coloring_to_json(coloring)}, EXIT_OK


def cmd_chromatic(args, inst: Instance):
    return {"odd_chromatic_number": odd_chromatic_number(inst.graph)}, EXIT_OK


def cmd_choosable(args, inst: Instance):
    rep = sampled_choosability(
        inst.graph, args.k, inst.r, args.trials, args.universe, args.seed
    )
    result = {
        "k": rep.k,
        "trials": rep.trials,
        "universe": rep.universe,
        "summary": rep.summary(),
        "refutations": [
            {"trial": t, "lists": [list(l) for l in lists]}
            for t, lists in rep.refutations
        ],
    }
    return result, EXIT_REFUTED if rep.refuted else EXIT_OK


def cmd_audit(args, inst: Instance):
    if inst.embedding is not None:
        rep = full_audit(inst.embedding, inst.r)
    else:
        rep = audit_graph(inst.graph, inst.r)
    return (
        {
            "audit": rep.to_json(),
            "counterexample_shaped": rep.counterexample_shaped,
        },
        EXIT_OK if rep.counterexample_shaped else EXIT_REFUTED,
    )


def cmd_discharge(args, inst: Instance):
    _need_embedding(inst)
    ledger = settle(inst.embedding, inst.r)
    rep = full_audit(inst.embedding, inst.r)
    charges = charge_report(ledger, rep)
    return (
        {"ledger": ledger.to_json(), "charges": charges.to_json()},
        EXIT_OK,
    )


def cmd_hunt(args, inst: Instance):
    rep = hunt(inst.graph, inst.r, args.max_genus)
    code = EXIT_OK if rep.eliminated_at is not None else EXIT_REFUTED
    return rep.to_json(), code


def cmd_subdivide(args, inst: Instance):
    return jsonio.graph_to_json(one_subdivision(inst.graph)), EXIT_OK


def cmd_gen(args, _inst=None):
    try:
        graphs = generate_girth_instances(args.n, args.min_girth, args.count, args.seed)
    except GenerationBudgetError as exc:
        raise InputError(str(exc)) from exc
    return (
        {
            "instances": [jsonio.graph_to_json(g) for g in graphs],
            "girths": [girth(g) for g in graphs],
        },
        EXIT_OK,
    )


COMMANDS = {
    "check": cmd_check,
    "faces": cmd_faces,
    "genus": cmd_genus,
    "embed": cmd_embed,
    "solve": cmd_solve,
    "chromatic": cmd_chromatic,
    "choosable": cmd_choosable,
    "audit": cmd_audit,
    "discharge": cmd_discharge,
    "hunt": cmd_hunt,
    "subdivide": cmd_subdivide,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="oddcolor", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)
    default_seed = int(os.environ.get("ODDCOLOR_SEED", "0"))

    def add(name, needs_input=True, **extra):
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("--graph", help="graph JSON file")
            p.add_argument("--instance", help="instance JSON file (graph + extras)")
            p.add_argument("--r", help="relaxation set as edge indices, e.g. 0,3,5")
        p.add_argument("--seed", type=int, default=default_seed)
        p.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
        for flag, kw in extra.items():
            p.add_argument(flag, **kw)
        return p

    add("check")
    add("faces")
    add("genus")
    add("embed", **{"--max-genus": dict(type=int, choices=(0, 1, 2), default=2)})
    add("solve", **{"--k": dict(type=int)})
    add("chromatic")
    add(
        "choosable",
        **{
            "--k": dict(type=int, required=True),
            "--trials": dict(type=int, default=100),
            "--universe": dict(type=int, default=None),
        },
    )
    add("audit")
    add("discharge")
    add("hunt", **{"--max-genus": dict(type=int, choices=(0, 1, 2), default=2)})
    add("subdivide")
    add(
        "gen",
        needs_input=False,
        **{
            "--n": dict(type=int, required=True),
            "--min-girth": dict(type=int, required=True),
            "--count": dict(type=int, default=1),
        },
    )
    return top


def run_command(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "choosable" and args.universe is None:
        args.universe = 2 * args.k
    started = time.perf_counter()
    try:
        if args.command == "gen":
            inst, digest = None, None
            result, code = cmd_gen(args)
        else:
            inst, digest = _load(args)
            result, code = COMMANDS[args.command](args, inst)
    except (InputError, ValueError) as exc:
        # ValueError is the library's contract-violation type (disconnected
        # input to an embedding command, malformed lists, ...)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {
        "command": args.command,
        "input_digest": digest,
        "seed": args.seed,
        "duration_s": round(time.perf_counter() - started, 6),
        "result": result,
    }
    print(json.dumps(report, sort_keys=True))
    if not args.quiet:
        status = {EXIT_OK: "ok", EXIT_REFUTED: "refuted/violations"}[code]
        print(f"oddcolor {args.command}: {status}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

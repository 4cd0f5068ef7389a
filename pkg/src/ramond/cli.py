"""Command-line interface.

Commands: nf, bracket, act, reduce, verma-singular, whittaker-check, dims,
validate.  Global flags --format text|json (default text), --seed (default
0) and --max-weight (default 8) are accepted after any subcommand.  Exit
status 0 on success, 1 on a domain error (rendered as a structured JSON
object under --format json), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import rendering as rd
from .base_modules import WhittakerData, validate_module
from .errors import RamondError
from .induced import InducedModule, level_dimension, simplicity_certificate, singular_vectors
from .parsing import parse_expression, parse_module_spec, parse_rational, parse_vector
from .pbw import super_commutator


def _common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--max-weight", type=int, default=8, dest="max_weight")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ramond",
        description="Exact computations in smooth modules over the Ramond algebra",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    _common(p)

    p = subs.add_parser("bracket", help="super-bracket of two homogeneous expressions")
    p.add_argument("left")
    p.add_argument("right")
    _common(p)

    p = subs.add_parser("act", help="act by an expression on a module vector")
    p.add_argument("module")
    p.add_argument("expr")
    p.add_argument("vector")
    _common(p)

    p = subs.add_parser("reduce", help="drive a vector into the inducing module")
    p.add_argument("module")
    p.add_argument("vector")
    _common(p)

    p = subs.add_parser("verma-singular", help="singular vectors of a Verma module")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--c", dest="charge", required=True)
    p.add_argument("--level", type=int, required=True)
    _common(p)

    p = subs.add_parser("whittaker-check", help="Whittaker simplicity dichotomy")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--phi", default="")
    p.add_argument("--c", dest="charge", required=True)
    p.add_argument("--max-level", type=int, default=3, dest="max_level")
    p.add_argument("--trials", type=int, default=10)
    _common(p)

    p = subs.add_parser("dims", help="graded dimensions of an induced module")
    p.add_argument("module", nargs="?")
    p.add_argument("--max-level", type=int, default=4, dest="max_level")
    p.add_argument("--spec-file")
    _common(p)

    p = subs.add_parser("validate", help="module-axiom check of a base module")
    p.add_argument("module", nargs="?")
    p.add_argument("--index-bound", type=int, default=4, dest="index_bound")
    p.add_argument("--basis-count", type=int, default=8, dest="basis_count")
    p.add_argument("--spec-file")
    _common(p)

    return parser


def _emit(args, text_lines, json_obj):
    if args.format == "json":
        print(rd.json_dumps(json_obj))
    else:
        for line in text_lines:
            print(line)


def _module_specs(args):
    if getattr(args, "spec_file", None):
        with open(args.spec_file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        return [parse_module_spec(ln) for ln in lines]
    if not args.module:
        raise RamondError("a module spec (or --spec-file) is required")
    return [parse_module_spec(args.module)]


def _cmd_nf(args):
    x = parse_expression(args.expr)
    _emit(args, [rd.element_text(x)], rd.element_json(x))


def _cmd_bracket(args):
    a = parse_expression(args.left)
    b = parse_expression(args.right)
    try:
        x = super_commutator(a, b)
    except ValueError as exc:
        raise RamondError(str(exc)) from None
    _emit(args, [rd.element_text(x)], rd.element_json(x))


def _cmd_act(args):
    base = parse_module_spec(args.module)
    module = InducedModule(base, max_weight=args.max_weight)
    u = parse_expression(args.expr)
    v = parse_vector(args.vector, module)
    out = module.act(u, v)
    _emit(args, [rd.vector_text(out)], rd.vector_json(out))


def _cmd_reduce(args):
    base = parse_module_spec(args.module)
    module = InducedModule(base, max_weight=args.max_weight)
    v = parse_vector(args.vector, module)
    coeffs, transcript = module.reduce_to_base(v)
    lines = rd.transcript_lines(transcript)
    lines.append("result: " + rd.base_combo_text(base, coeffs))
    obj = {
        "transcript": rd.transcript_json(transcript),
        "result": {base.basis_label(i): rd.frac_json(q) for i, q in sorted(coeffs.items())},
    }
    _emit(args, lines, obj)


def _cmd_verma_singular(args):
    lam = parse_rational(args.lam)
    charge = parse_rational(args.charge)
    found = singular_vectors(lam, charge, args.level,
                             max_weight=max(args.max_weight, args.level + 2))
    lines = [f"level {args.level} singular vectors of M({lam},{charge}): {len(found)}"]
    for v in found:
        lines.append("  " + rd.vector_text(v))
    obj = {
        "lambda": rd.frac_json(lam),
        "c": rd.frac_json(charge),
        "level": args.level,
        "count": len(found),
        "vectors": [rd.vector_json(v) for v in found],
    }
    _emit(args, lines, obj)


def _cmd_whittaker_check(args):
    from .base_modules import a_phi_submodule_witness
    from .parsing import parse_module_spec as _pms  # noqa: F401

    charge = parse_rational(args.charge)
    values = {}
    for piece in args.phi.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        key, eq, val = piece.partition("=")
        if not eq or not key.startswith("L"):
            raise RamondError(f"phi entries look like L<k>=<q>, got {piece!r}")
        values[int(key[1:])] = parse_rational(val)
    data = WhittakerData.make(args.t, values, charge)
    probe = a_phi_submodule_witness(data)
    lines = [f"order-{args.t} Whittaker data, central charge {charge}: "
             + "; ".join(f"phi(L{m})={q}" for m, q in data.values) if data.values
             else f"order-{args.t} Whittaker data, central charge {charge}: phi = 0"]
    obj = {
        "t": args.t,
        "c": rd.frac_json(charge),
        "phi": {f"L{m}": rd.frac_json(q) for m, q in data.values},
    }
    if probe.has_witness:
        lines.append("not simple: submodule spanned by u")
        lines.append("  " + probe.detail)
        obj["witness"] = {"span": "u", "detail": probe.detail,
                          "closure": [list(row) for row in probe.certificate]}
        obj["certified"] = False
        obj["summary"] = "not simple: submodule spanned by u"
        _emit(args, lines, obj)
        return
    lines.append("top has no u-submodule: " + probe.detail)
    from .induced import whittaker_module

    module = whittaker_module(data, max_weight=max(args.max_weight, args.max_level))
    report = simplicity_certificate(module, args.max_level, args.trials, args.seed)
    lines.extend(rd.certificate_text(report))
    obj["witness"] = None
    obj["probe"] = probe.detail
    obj["certificate"] = rd.certificate_json(report)
    obj["certified"] = report.certified
    obj["summary"] = report.summary()
    _emit(args, lines, obj)


def _cmd_dims(args):
    blocks_text = []
    blocks_json = []
    for spec in _module_specs(args):
        dims = [level_dimension(spec, n) for n in range(args.max_level + 1)]
        blocks_text.append(f"{spec.label}: " + ", ".join(
            f"level {n}: {d}" for n, d in enumerate(dims)))
        blocks_json.append({"module": spec.label, "dims": dims})
    _emit(args, blocks_text, blocks_json if len(blocks_json) > 1 else blocks_json[0])


def _cmd_validate(args):
    blocks_text = []
    blocks_json = []
    for spec in _module_specs(args):
        rep = validate_module(spec, args.index_bound, args.basis_count)
        blocks_text.extend(rd.validation_text(rep))
        blocks_json.append(rd.validation_json(rep))
    _emit(args, blocks_text, blocks_json if len(blocks_json) > 1 else blocks_json[0])


_HANDLERS = {
    "nf": _cmd_nf,
    "bracket": _cmd_bracket,
    "act": _cmd_act,
    "reduce": _cmd_reduce,
    "verma-singular": _cmd_verma_singular,
    "whittaker-check": _cmd_whittaker_check,
    "dims": _cmd_dims,
    "validate": _cmd_validate,
}


def run(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _HANDLERS[args.command](args)
    except RamondError as exc:
        if args.format == "json":
            print(rd.error_json(exc.kind, exc.detail, exc.witness))
        else:
            print(f"error ({exc.kind}): {exc.detail}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

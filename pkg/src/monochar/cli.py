"""Command line front end.

Exit status: 0 success, 2 input error, 3 language not cyclic, 4 a check
that should always hold has failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .characters import verify_character_identities
from .checks import builtin_characters, check_theorems
from .equivalence import (
    approx_test,
    equiv_closure,
    field_data,
    irr_count,
)
from .errors import InputError, InvariantBreach, MonocharError
from .fields import parse_fields
from .languages import parse_dfa, zeta_report
from .monoid import (
    d_class_idempotent_reps,
    idempotents,
    maximal_subgroup,
    parse_monoid,
    principal_ideal,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_CYCLIC = 3
EXIT_BREACH = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        sys.stdout.write(text)


def _fields(args):
    return parse_fields(args.field or ["Q"])


def _fmt_class(M, cls) -> str:
    idx = " ".join(map(str, cls))
    if M.labels:
        return f"{{{idx}}}  " + " ".join(M.label(m) for m in cls)
    return f"{{{idx}}}"


def cmd_analyze(args) -> int:
    M = parse_monoid(_read(args.input))
    idem = idempotents(M)
    reps = d_class_idempotent_reps(M)
    groups = {e: maximal_subgroup(M, e) for e in reps}
    below = [
        (e, f) for e in reps for f in reps
        if e != f and principal_ideal(M, e) <= principal_ideal(M, f)
    ]
    data = {
        "size": M.size,
        "identity": M.identity,
        "idempotents": idem,
        "d_class_representatives": [
            {
                "idempotent": e,
                "label": M.label(e),
                "ideal_size": len(principal_ideal(M, e)),
                "subgroup": list(groups[e].elements),
                "subgroup_order": len(groups[e]),
            }
            for e in reps
        ],
        "order": [[e, f] for e, f in below],
    }
    lines = [
        f"size: {M.size}",
        f"identity: {M.identity}",
        f"idempotents ({len(idem)}): " + " ".join(M.label(e) for e in idem),
        f"D-class representatives ({len(reps)}):",
    ]
    for e in reps:
        G = groups[e]
        lines.append(
            f"  {M.label(e)}: ideal size {len(principal_ideal(M, e))}, "
            f"maximal subgroup order {len(G)} {{{' '.join(map(str, G.elements))}}}"
        )
    lines.append("order (e below f):")
    lines += [f"  {M.label(e)} < {M.label(f)}" for e, f in below] or ["  (none)"]
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_char_classes(args) -> int:
    M = parse_monoid(_read(args.input))
    out, lines = [], []
    for fs in _fields(args):
        entry = {"field": fs.name}
        p, T = field_data(M, fs)
        lines.append(f"field {fs.name} (p={p}, n={T.modulus}, T={{{' '.join(map(str, T))}}})")
        if args.witness:
            a, b = args.witness
            for v in (a, b):
                if not 0 <= v < M.size:
                    raise InputError(f"element {v} out of range")
            w = approx_test(M, fs, a, b)
            entry["witness"] = None if w is None else w._asdict()
            lines.append(f"  witness {a} {b}: " + ("NONE" if w is None else f"x={w.x} y={w.y} j={w.j}"))
        else:
            part = equiv_closure(M, fs)
            count = irr_count(M, fs)
            entry["classes"] = [list(c) for c in part]
            entry["count"] = len(part)
            entry["irreducible_count"] = count
            for k, cls in enumerate(part):
                lines.append(f"  class {k}: {_fmt_class(M, cls)}")
            lines.append(f"  classes: {len(part)}")
            if count != len(part):
                raise InvariantBreach(f"{len(part)} classes but {count} irreducibles over {fs.name}")
        out.append(entry)
    _emit(args, out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    M = parse_monoid(_read(args.input))
    ok = True
    out, lines = [], []
    for fs in _fields(args):
        for label, chi in builtin_characters(M, fs):
            bad = verify_character_identities(chi, M, fs)
            ok &= not bad
            out.append({"field": fs.name, "character": label, "violations": [str(v) for v in bad]})
            lines.append(f"{'PASS' if not bad else 'FAIL'} {label} [{fs.name}]")
            lines += [f"  {v}" for v in bad]
    _emit(args, out, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_BREACH


def cmd_check(args) -> int:
    M = parse_monoid(_read(args.input))
    results = check_theorems(M, _fields(args))
    _emit(args, [r.as_dict() for r in results], "\n".join(r.line() for r in results) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_BREACH


def cmd_lang(args) -> int:
    dfa = parse_dfa(_read(args.input))
    if args.order < 1 or (args.dmax is not None and args.dmax < 0):
        raise InputError("--order must be positive and --dmax non-negative")
    report = zeta_report(dfa, _fields(args), N=args.order, dmax=args.dmax)
    _emit(args, report.as_dict(), report.format_text())
    return EXIT_OK if report.cyclic else EXIT_NOT_CYCLIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monochar",
        description="Character equivalence of finite monoids, cyclic languages and zeta functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, fields=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--json", action="store_true", help="structured output")
        if fields:
            p.add_argument(
                "--field",
                action="append",
                metavar="SPEC",
                help="comma separated fields: Q, F<q>, AC<p> (repeatable; default Q)",
            )
        p.set_defaults(func=func)
        return p

    add("analyze-monoid", cmd_analyze, "idempotents, D-classes and maximal subgroups", fields=False)
    p = add("char-classes", cmd_char_classes, "character equivalence classes")
    p.add_argument("--witness", nargs=2, type=int, metavar=("A", "B"), help="search a witness for A, B")
    add("verify-characters", cmd_verify, "trace identities for the built-in characters")
    add("check-theorems", cmd_check, "cross-check the classification on one monoid")
    p = add("lang", cmd_lang, "cyclicity, certificates and zeta function of a DFA language")
    p.add_argument("--order", type=int, default=16, metavar="N", help="series order (default 16)")
    p.add_argument("--dmax", type=int, default=None, help="degree bound (default: number of states)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantBreach as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (MonocharError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

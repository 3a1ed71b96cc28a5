"""Command-line interface: ``endw <command> [flags]``.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
usage, parse or input errors.  Session flags may appear before or after the
subcommand.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from .autos import TameAutomorphism, parse_tame_word
from .endaut import (
    CanonicalQuasiInner,
    DecompositionError,
    OracleTable,
    conjugate,
    decompose_blackbox,
    normalize,
    parse_bijection_word,
    standard_probes,
)
from .endo import Endomorphism, compose
from .freealg import DegreeCapError, Kind
from .galois import PrincipalBasicIdeal, in_double_prime
from .parsing import parse_expression
from .sampling import random_canonical
from .scalars import Field
from .verify import SUITES, SessionConfig, format_report, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _session_flags(defaults: bool) -> argparse.ArgumentParser:
    # the subparser copy uses SUPPRESS so a flag given before the subcommand survives
    p = _Parser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--field", default=d(None), help="q or qsqrt:<d> (default: q, suites use qsqrt:2)")
    p.add_argument("--kind", choices=("comm", "assoc"), default=d(None), help="commutative or associative (default: comm)")
    p.add_argument("--vars", type=int, default=d(None), metavar="N", help="number of generators (default: 2)")
    p.add_argument("--max-degree", type=int, default=d(12), metavar="D", help="degree cap for products (default: 12)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled data (default: 0)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="endw", description="Exact computations with automorphisms of End(W).", parents=[_session_flags(True)])
    flags = _session_flags(False)
    sub = parser.add_subparsers(dest="command", metavar="<command>", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("compose", parents=[flags], help="print s o t for endomorphisms s, t")
    p.add_argument("s", help="'x1 -> <expr>; x2 -> <expr>; ...'")
    p.add_argument("t")

    p = sub.add_parser("conjugate", parents=[flags], help="print mu o s o mu^-1")
    p.add_argument("mu", help="bijection word, e.g. 'alpha(conj) . auto[elem 1 x2^2] . mirror'")
    p.add_argument("s")

    p = sub.add_parser("normalize", parents=[flags], help="rewrite a bijection word to canonical form")
    p.add_argument("word")

    p = sub.add_parser("table", parents=[flags], help="emit an oracle table for mu (random from --seed if omitted)")
    p.add_argument("mu", nargs="?")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("decompose", parents=[flags], help="recover the canonical form behind an oracle table")
    p.add_argument("table_file")
    p.add_argument("--witness", action="append", default=[], help="candidate automorphism word (repeatable)")

    p = sub.add_parser("ideal", parents=[flags], help="principal ideals of basic elements")
    isub = p.add_subparsers(dest="ideal_command", metavar="<action>", parser_class=_Parser)
    isub.required = True
    m = isub.add_parser("member", parents=[flags], help="is f in <phi(x_i)>?")
    m.add_argument("--phi", default="id", help="tame word giving the base (default: id)")
    m.add_argument("--index", type=int, default=1, help="generator index i (default: 1)")
    m.add_argument("f")

    p = sub.add_parser("verify", parents=[flags], help="run a seeded verification suite")
    p.add_argument("suite", choices=(*SUITES, "all"))
    return parser


def _config(args) -> SessionConfig:
    try:
        field = Field.parse(args.field) if args.field is not None else None
        kind = Kind.parse(args.kind) if args.kind is not None else None
        return SessionConfig(field, kind, args.vars, args.max_degree, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _canonical_arg(text: str, alg) -> CanonicalQuasiInner:
    return normalize(parse_bijection_word(text, alg))


def _cmd_compose(args, cfg: SessionConfig, out) -> int:
    alg = cfg.algebra()
    s, t = Endomorphism.parse(args.s, alg), Endomorphism.parse(args.t, alg)
    print(compose(s, t), file=out)
    return EXIT_OK


def _cmd_conjugate(args, cfg, out) -> int:
    alg = cfg.algebra()
    mu = _canonical_arg(args.mu, alg)
    s = Endomorphism.parse(args.s, alg)
    print(f"mu: {mu}", file=out)
    print(conjugate(mu, s), file=out)
    return EXIT_OK


def _cmd_normalize(args, cfg, out) -> int:
    print(_canonical_arg(args.word, cfg.algebra()), file=out)
    return EXIT_OK


def _cmd_table(args, cfg, out) -> int:
    alg = cfg.algebra()
    if args.mu is None:
        mu = random_canonical(random.Random(cfg.seed), alg)
    else:
        mu = _canonical_arg(args.mu, alg)
    table = OracleTable.from_map(mu, alg, standard_probes(alg), witnesses=[mu.phi])
    text = f"# source: {mu}\n" + table.dumps()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_decompose(args, cfg, out) -> int:
    alg = cfg.algebra()
    try:
        with open(args.table_file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.table_file}: {exc.strerror}") from exc
    table = OracleTable.loads(text, alg)
    witnesses: list[TameAutomorphism] = [parse_tame_word(w, alg) for w in args.witness]
    try:
        report = decompose_blackbox(table, witnesses)
    except DecompositionError as exc:
        print(f"FAIL decompose {exc}", file=out)
        return EXIT_FAIL
    for line in report.lines():
        print(line, file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_ideal(args, cfg, out) -> int:
    alg = cfg.algebra()
    if not 1 <= args.index <= alg.n:
        raise UsageError(f"--index must be between 1 and {alg.n}")
    ideal = PrincipalBasicIdeal.of(parse_tame_word(args.phi, alg), args.index)
    f = parse_expression(args.f, alg)
    print(f"generator: {ideal.generator}", file=out)
    print(f"member: {'true' if in_double_prime(f, ideal) else 'false'}", file=out)
    return EXIT_OK


def _cmd_verify(args, cfg, out) -> int:
    checks = run_all(cfg) if args.suite == "all" else run_suite(args.suite, cfg)
    out.write(format_report(checks))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


COMMANDS = {
    "compose": _cmd_compose,
    "conjugate": _cmd_conjugate,
    "normalize": _cmd_normalize,
    "table": _cmd_table,
    "decompose": _cmd_decompose,
    "ideal": _cmd_ideal,
    "verify": _cmd_verify,
}


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    """Run one command; return its exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except DegreeCapError as exc:
        print(f"error: {exc} (raise --max-degree)", file=err)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

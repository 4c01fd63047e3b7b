"""Command-line front end.

One command per invocation, chains as ``[3,4,2]`` (bare ``3,4,2`` also
accepted), fractions as ``n/q``.  ``--json`` switches to a single
structured document (one per line in batch mode), ``--trace`` attaches
blow-down traces, ``--input PATH`` reads one argument per line and
emits one result per line in input order.  Exit status: 0 success, 1
domain error, 2 usage error.  Identical argv and input files produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal
from fractions import Fraction

from . import families, geometry, tchains
from .chains import (
    CyclicQuotient,
    dual_fraction,
    evaluate_chain,
    expand_fraction,
    format_chain,
    is_admissible,
    parse_chain,
)
from .contraction import contract_fully, is_admissible_for_chains, surviving_center
from .errors import DomainError
from .render import decimal_str, rational_fields, rational_str


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            return Fraction(text)
        return Fraction(Decimal(text))
    except (ValueError, ArithmeticError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def _parse_fraction_arg(text: str) -> CyclicQuotient:
    return CyclicQuotient.parse(text)


def _parse_chain_arg(text: str):
    chain = parse_chain(text)
    if not chain:
        raise ValueError("empty chain")
    return chain


def _chain_or_fraction(text: str):
    if "/" in text:
        f = CyclicQuotient.parse(text)
        return expand_fraction(f.n, f.q)
    return _parse_chain_arg(text)


def _emit(doc: dict, text_lines: list[str], use_json: bool) -> None:
    if use_json:
        print(json.dumps(doc))
    else:
        for line in text_lines:
            print(line)


def _cmd_expand(args) -> None:
    f = _parse_fraction_arg(args.value)
    chain = expand_fraction(f.n, f.q)
    _emit({"fraction": str(f), "chain": list(chain)}, [format_chain(chain)], args.json)


def _cmd_evaluate(args) -> None:
    chain = _parse_chain_arg(args.value)
    p, q = evaluate_chain(chain)
    _emit(
        {"chain": list(chain), "value": f"{p}/{q}"},
        [f"{p}/{q}"],
        args.json,
    )


def _cmd_dual(args) -> None:
    f = _parse_fraction_arg(args.value)
    chain = dual_fraction(f.n, f.q)
    _emit({"fraction": str(f), "dual": list(chain)}, [format_chain(chain)], args.json)


def _cmd_discrepancies(args) -> None:
    chain = _parse_chain_arg(args.value)
    disc = geometry.discrepancies(chain)
    doc = {
        "chain": list(chain),
        "discrepancies": [rational_str(a) for a in disc.a],
        "discrepancies_decimal": [decimal_str(a) for a in disc.a],
    }
    _emit(doc, ["[" + ",".join(rational_str(a) for a in disc.a) + "]"], args.json)


def _cmd_contract(args) -> None:
    chain = _parse_chain_arg(args.value)
    result, trace = contract_fully(chain)
    doc: dict = {"chain": list(chain), "result": list(result)}
    lines = []
    if args.trace:
        doc["trace"] = trace.to_records()
        if trace.steps:
            lines.append(trace.to_text())
    lines.append(format_chain(result))
    _emit(doc, lines, args.json)


def _cmd_classify(args) -> None:
    chain = _chain_or_fraction(args.value)
    p, q = evaluate_chain(chain)
    strict = all(b >= 2 for b in chain)
    afc = is_admissible_for_chains(chain) if strict else False
    core = tchains.is_core(chain) if strict else False
    doc = {
        "chain": list(chain),
        "value": f"{p}/{q}",
        "strict": strict,
        "admissible": is_admissible(chain),
        "admissible_for_chains": afc,
        "core": core,
        "minimal_core": tchains.is_minimal_core(chain) if core else None,
        "t_singularity": None,
        "decomposition": None,
    }
    if strict and 0 < q < p:
        hit = tchains.recognize_T(p, q)
        if hit is not None:
            d, m, a = hit
            doc["t_singularity"] = {"d": d, "m": m, "a": a}
    dec = tchains.decompose(chain) if strict else None
    if dec is not None:
        doc["decomposition"] = str(dec)
    lines = [f"{key}: {_plain(value)}" for key, value in doc.items()]
    _emit(doc, lines, args.json)


def _plain(value) -> str:
    if isinstance(value, list):
        return format_chain(tuple(value))
    if isinstance(value, dict):
        return ",".join(f"{k}={v}" for k, v in value.items())
    return str(value)


def _cmd_decompose(args) -> None:
    chain = _parse_chain_arg(args.value)
    dec = tchains.decompose(chain)
    if dec is None:
        _emit({"chain": list(chain), "decomposition": None}, ["no decomposition"], args.json)
        return
    doc = {
        "chain": list(chain),
        "core": list(dec.core),
        "u": dec.u,
        "steps": dec.word(),
    }
    _emit(doc, [str(dec)], args.json)


def _cmd_survivors(args) -> None:
    chain = _parse_chain_arg(args.value)
    report = surviving_center(chain)
    doc = {
        "chain": list(chain),
        "positions": list(report.positions),
        "first": report.first,
        "last": report.last,
        "contracted": list(report.contracted),
    }
    lines = [
        f"surviving positions {report.first}..{report.last} of {format_chain(chain)}: "
        f"{','.join(str(p) for p in report.positions)}",
        f"contracted: {format_chain(report.contracted)}",
    ]
    _emit(doc, lines, args.json)


def _cmd_enumerate(args) -> None:
    center = _parse_chain_arg(args.center)
    chains = tchains.enumerate_generalized_T(center, args.max_length)
    if args.json:
        print(json.dumps({"center": list(center), "chains": [list(c) for c in chains]}))
    else:
        for c in chains:
            print(format_chain(c))


def _cmd_accumulate(args) -> None:
    if args.family == "example210":
        if args.n0 is None:
            raise ValueError("example210 needs --n0")
        seq = families.example210_family(args.n0, args.kmax)
    elif args.family == "blowup":
        if args.center is None:
            raise ValueError("blowup needs --center SEED_CHAIN")
        seed = _parse_chain_arg(args.center)
        seq = families.blowup_family(
            seed, args.kmax, ks2=args.ks2, m0=args.m0, witnesses=not args.no_witnesses
        )
    elif args.family == "formation":
        if args.seed is None:
            raise ValueError("formation needs a seed fraction argument")
        f = _parse_fraction_arg(args.seed)
        seq = families.formation_family(f.n, f.q, args.kmax, ks2=args.ks2, m0=args.m0)
    else:
        raise ValueError(f"unknown family {args.family!r}")
    tol = _parse_rational(args.tol)
    report = families.limit_of(seq, tol)
    if args.json:
        doc = {
            "family": seq.family,
            "ks2": seq.ks2,
            "m0": seq.m0,
            "terms": [
                {
                    "k": t.k,
                    "chain": list(t.chain),
                    "fraction": str(t.fraction),
                    **rational_fields("kw2", t.kw2),
                    "delta": t.delta,
                }
                for t in seq.terms
            ],
            "limit": report.to_record(),
        }
        print(json.dumps(doc))
        return
    for line in seq.table_lines():
        print(line)
    print(f"monotone: {report.monotone}")
    print(f"converged: {report.converged}")
    if report.target is not None:
        print(f"target: {rational_str(report.target)} = {decimal_str(report.target)}")
        print(f"gap: {rational_str(report.gap)} = {decimal_str(report.gap)}")


def _cmd_verify_bounds(args) -> None:
    chain = _parse_chain_arg(args.value)
    if args.delta is not None:
        delta = args.delta
    elif args.delta_case is not None:
        case = geometry.DeltaCase(label=args.delta_case, l=args.l, k=args.k)
        delta = geometry.delta_from_case(case)
    else:
        raise ValueError("need --delta N or --delta-case LABEL")
    lam = _parse_rational(args.lam) if args.lam is not None else None
    ledger = geometry.k2_ledger(chain, ks2=args.ks2, m=args.m, lam=lam, chi=args.chi)
    report = geometry.check_main_bounds(chain, ledger, delta)
    extra = geometry.check_genT_delta_bound(chain, delta)
    checks = list(report.checks) + [extra]
    if args.json:
        print(
            json.dumps(
                {
                    "chain": list(chain),
                    "delta": delta,
                    **rational_fields("kw2", ledger.kw2),
                    "checks": [c.to_record() for c in checks],
                }
            )
        )
        return
    for c in checks:
        if c.holds is None:
            print(f"{c.name}: not evaluated")
        else:
            verdict = "holds" if c.holds else "fails"
            print(
                f"{c.name}: lhs={rational_str(c.lhs)} rhs={rational_str(c.rhs)} "
                f"slack={rational_str(c.slack)} verdict={verdict}"
            )


_BATCH_COMMANDS = {
    "expand",
    "evaluate",
    "dual",
    "discrepancies",
    "contract",
    "classify",
    "decompose",
    "survivors",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hjchains",
        description="Exact arithmetic for Hirzebruch-Jung chains and their volume ledgers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, value_meta=None):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(func=func)
        if value_meta is not None:
            p.add_argument("value", nargs="?", metavar=value_meta)
            p.add_argument("--input", metavar="PATH", help="batch: one input per line")
        return p

    add("expand", _cmd_expand, "expand n/q into its chain", "FRACTION")
    add("evaluate", _cmd_evaluate, "evaluate a chain to p/q", "CHAIN")
    add("dual", _cmd_dual, "chain of n/(n-q)", "FRACTION")
    add("discrepancies", _cmd_discrepancies, "exact discrepancy vector", "CHAIN")
    p = add("contract", _cmd_contract, "blow down all 1's", "CHAIN")
    p.add_argument("--trace", action="store_true", help="attach the contraction trace")
    add("classify", _cmd_classify, "admissibility / core / T-type report", "CHAIN-OR-FRACTION")
    add("decompose", _cmd_decompose, "minimal core + insertions + steps", "CHAIN")
    add("survivors", _cmd_survivors, "surviving middle-copy positions", "CHAIN")

    p = add("enumerate", _cmd_enumerate, "list a center's family by length")
    p.add_argument("--center", required=True, metavar="CHAIN")
    p.add_argument("--max-length", type=int, required=True)

    p = add("accumulate", _cmd_accumulate, "generate an accumulation sequence")
    p.add_argument("family", choices=["example210", "blowup", "formation"])
    p.add_argument("seed", nargs="?", help="seed fraction for the formation family")
    p.add_argument("--n0", type=int)
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--ks2", type=int, default=0)
    p.add_argument("--m0", type=int, default=0)
    p.add_argument("--center", metavar="CHAIN", help="seed chain for the blowup family")
    p.add_argument("--tol", default="1e-9", metavar="RATIONAL-OR-DECIMAL")
    p.add_argument("--no-witnesses", action="store_true", help="skip per-step ampleness checks")

    p = add("verify-bounds", _cmd_verify_bounds, "exact bound report for a chain")
    p.add_argument("value", metavar="CHAIN")
    p.add_argument("--ks2", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--lambda", dest="lam", metavar="RAT", default=None)
    p.add_argument("--chi", type=int, default=None)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--delta-case", choices=sorted(geometry._DELTA_PARAMS), default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        batch = getattr(args, "input", None)
        if batch is not None:
            if args.command not in _BATCH_COMMANDS:
                parser.error(f"{args.command} does not support --input")
            if args.value is not None:
                raise ValueError("give either a positional value or --input, not both")
            with open(batch, encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    args.value = line
                    args.func(args)
            return 0
        if hasattr(args, "value") and args.command != "accumulate" and args.value is None:
            raise ValueError(f"{args.command} needs an argument")
        args.func(args)
        return 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))

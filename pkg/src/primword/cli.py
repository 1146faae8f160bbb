"""Command-line front end.

Exit codes: 0 success, 1 disagreement under ``--strict`` (or a failed
``verify``), 2 usage, 3 budget exceeded, 4 domain precondition.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence, TextIO

from . import asymptotics, counting, numtheory, pairs, verification
from .words import parse_word

EXIT_OK, EXIT_STRICT, EXIT_USAGE, EXIT_BUDGET, EXIT_DOMAIN = 0, 1, 2, 3, 4
FORMATS = ("json", "csv", "plain")


class DomainError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _alphabet(text: str) -> int:
    value = _positive(text)
    if value < 2:
        raise argparse.ArgumentTypeError("alphabet size must be at least 2")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _csv_text(fieldnames: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(out: TextIO, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


# -- subcommands -----------------------------------------------------------


def cmd_pi(args, out: TextIO) -> int:
    value = numtheory.count_primitive(args.n, args.l)
    if args.format == "json":
        _emit(out, json.dumps({"n": args.n, "l": args.l, "pi": value}))
    elif args.format == "csv":
        _emit(out, _csv_text(["n", "l", "pi"], [{"n": args.n, "l": args.l, "pi": value}]))
    else:
        _emit(out, str(value))
    return EXIT_OK


def cmd_mobius(args, out: TextIO) -> int:
    values = {v: numtheory.mobius(v) for v in args.values}
    if args.format == "json":
        _emit(out, json.dumps({str(k): v for k, v in values.items()}))
    elif args.format == "csv":
        _emit(out, _csv_text(["value", "mobius"], [{"value": k, "mobius": v} for k, v in values.items()]))
    else:
        _emit(out, "\n".join(str(v) for v in values.values()))
    return EXIT_OK


def _plain_report(report: counting.CountReport) -> str:
    lines = [f"n={report.n} l={report.l}"]
    for quantity, values in report.variants.items():
        cells = " ".join(f"{k}={v}" for k, v in sorted(values.items()))
        lines.append(f"{quantity}: {cells}")
    if report.oracle is not None:
        lines.append("oracle: " + " ".join(f"{k}={v}" for k, v in report.oracle.items()))
    bad = report.disagreements()
    lines.append("all variants agree" if not bad else
                 "disagreements: " + ", ".join(f"{a} != {b}" for a, b, _ in bad))
    lines.extend(f"note: {note}" for note in report.notes)
    return "\n".join(lines)


def cmd_count(args, out: TextIO) -> int:
    budget = args.budget if args.oracle else None
    report = counting.consistency_report(args.n, args.l, oracle_budget=budget)
    if args.variants:
        keep = set(args.variants.split(","))
        unknown = keep - set(counting.VARIANTS)
        if unknown:
            raise argparse.ArgumentTypeError(f"unknown variants {sorted(unknown)}")
        report.variants = {q: {k: v for k, v in vals.items() if k in keep}
                           for q, vals in report.variants.items()}
        report.agreements = [a for a in report.agreements
                             if all(part.split(".")[-1] in keep | {"oracle"} or "+" in part
                                    for part in a[:2])]
    if args.format == "json":
        _emit(out, report.to_json())
    elif args.format == "csv":
        _emit(out, _csv_text(["n", "l", "quantity", "variant", "value"], report.csv_rows()))
    else:
        _emit(out, _plain_report(report))
    if args.strict and not report.all_agree:
        return EXIT_STRICT
    return EXIT_OK


def cmd_enumerate(args, out: TextIO) -> int:
    sets = ("e1", "e2") if args.set == "both" else (args.set,)
    built = {}
    for name in sets:
        if name == "e1":
            built[name] = [] if args.l % 2 else pairs.construct_e1(args.n, args.l, budget=args.budget)
        else:
            built[name] = pairs.construct_e2(args.n, args.l, budget=args.budget)
    summary = {"summary": True, "n": args.n, "l": args.l, "set": args.set}
    summary.update({name: len(built[name]) for name in sets})
    if "e1" in sets and args.l % 2:
        summary["note"] = "E1 is empty for odd l"
    fields = ["p", "q", "case", "x", "alpha", "beta", "s", "root", "k"]
    stream = open(args.out, "w", encoding="utf-8") if args.out else out
    try:
        if args.format == "csv":
            writer = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
        for name in sets:
            for w in built[name]:
                if args.format == "json":
                    stream.write(w.to_json() + "\n")
                elif args.format == "csv":
                    writer.writerow(w.to_dict())
                else:
                    stream.write(f"{w.p} {w.q} {w.case}\n")
        # the trailer makes truncated output detectable in every format
        if args.format == "json":
            stream.write(json.dumps(summary) + "\n")
        else:
            stream.write("# " + " ".join(f"{k}={v}" for k, v in summary.items() if k != "summary") + "\n")
    finally:
        if args.out:
            stream.close()
    return EXIT_OK


def cmd_classify(args, out: TextIO) -> int:
    try:
        p, q = parse_word(args.p, args.n), parse_word(args.q, args.n)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    try:
        witness = pairs.classify_pair(p, q)
    except pairs.PreconditionError as exc:
        _emit(out, json.dumps({"error": "precondition", "reason": exc.reason}))
        return EXIT_DOMAIN
    data = witness.to_dict()
    if args.format == "csv":
        _emit(out, _csv_text(list(data), [data]))
    elif args.format == "plain":
        _emit(out, " ".join(f"{k}={v}" for k, v in data.items() if v is not None))
    else:
        _emit(out, json.dumps(data))
    return EXIT_OK


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + m.replace("_", "-") for m in missing)
        raise argparse.ArgumentTypeError(f"regime {args.regime} requires {flags}")


def _l_values(args) -> list[int]:
    if args.l_values:
        return args.l_values
    _need(args, "l_max")
    return list(range(1, args.l_max + 1))


def cmd_asymptote(args, out: TextIO) -> int:
    regime = args.regime
    try:
        if regime == "n-to-inf-eps2":
            _need(args, "l", "n_values")
            table = asymptotics.ratio_eps2_n(args.l, args.n_values)
        elif regime == "n-to-inf-eps1":
            _need(args, "l", "n_values")
            table = asymptotics.ratio_eps1_n(args.l, args.n_values)
        elif regime == "l-to-inf-eps1":
            _need(args, "n")
            values = args.l_values or list(range(2, (args.l_max or 0) + 1, 2))
            if not values:
                _need(args, "l_max")
            table = asymptotics.ratio_eps1_l(args.n, values)
        elif regime == "l-to-inf-eps2":
            _need(args, "n")
            table = asymptotics.ratio_eps2_l(args.n, _l_values(args))
        elif regime == "bound":
            _need(args, "n")
            table = asymptotics.check_eps2_bound(args.n, _l_values(args))
        else:
            _need(args, "n", "k")
            table = asymptotics.prime_product_table(args.n, args.k)
    except ValueError as exc:
        raise DomainError(str(exc)) from None

    if args.format == "json":
        _emit(out, table.to_json())
    elif args.format == "csv":
        _emit(out, table.to_csv())
    else:
        lines = [f"regime {table.regime}"]
        for r in table.rows:
            verdict = "" if r.verdict is None else ("  pass" if r.verdict else "  FAIL")
            lines.append(f"{r.parameter:>6}  {r.ratio}{verdict}")
        if table.verdicts_present:
            lines.append("all pass" if table.all_pass else "some rows FAIL")
        if table.flagged:
            lines.append("flag: ratio does not approach 1 monotonically over this range")
        _emit(out, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    results = verification.run_all(seed=args.seed)
    if args.format == "json":
        _emit(out, json.dumps([r._asdict() for r in results]))
    elif args.format == "csv":
        _emit(out, _csv_text(["name", "passed", "detail"], [r._asdict() for r in results]))
    else:
        width = max(len(r.name) for r in results)
        _emit(out, "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}"
                             for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_STRICT


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primword",
        description="Primitive words p, q with |p| = 2|q| and pq non-primitive: counts, witnesses, checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, default_format: str = "plain"):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=FORMATS, default=default_format)
        p.set_defaults(func=func)
        return p

    p = add("pi", cmd_pi, "number of primitive words of length l")
    p.add_argument("-n", type=_alphabet, required=True)
    p.add_argument("-l", type=_positive, required=True)

    p = add("mobius", cmd_mobius, "Möbius function values")
    p.add_argument("values", type=_positive, nargs="+")

    budget = pairs.default_budget()

    p = add("count", cmd_count, "all formulations of eps1, eps2, eps", "json")
    p.add_argument("-n", type=_alphabet, required=True)
    p.add_argument("-l", type=_positive, required=True)
    p.add_argument("--oracle", action="store_true", help="run the brute-force oracle when within budget")
    p.add_argument("--budget", type=_positive, default=budget)
    p.add_argument("--variants", help="comma-separated subset of " + ",".join(counting.VARIANTS))
    p.add_argument("--strict", action="store_true", help="exit 1 if any two variants disagree")

    p = add("enumerate", cmd_enumerate, "stream witnesses (JSON lines by default)", "json")
    p.add_argument("-n", type=_alphabet, required=True)
    p.add_argument("-l", type=_positive, required=True)
    p.add_argument("--set", choices=("e1", "e2", "both"), default="both")
    p.add_argument("--out")
    p.add_argument("--budget", type=_positive, default=budget)

    p = add("classify", cmd_classify, "normal form of one pair", "json")
    p.add_argument("-n", type=_alphabet, default=2)
    p.add_argument("-p", required=True)
    p.add_argument("-q", required=True)

    p = add("asymptote", cmd_asymptote, "exact ratio tables for the growth statements")
    p.add_argument("--regime", required=True, choices=(
        "n-to-inf-eps2", "n-to-inf-eps1", "l-to-inf-eps1", "l-to-inf-eps2", "bound", "prime-product"))
    p.add_argument("-n", "--n", dest="n", type=_alphabet)
    p.add_argument("-l", dest="l", type=_positive)
    p.add_argument("--n-values", type=_int_list)
    p.add_argument("--l-values", type=_int_list)
    p.add_argument("--l-max", type=_positive)
    p.add_argument("--k", type=_int_list)

    p = add("verify", cmd_verify, "run the full consistency grid and print a pass/fail matrix")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized classification sample")
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"primword: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except pairs.BudgetExceededError as exc:
        print(f"primword: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, counting.NotEvaluableError) as exc:
        _emit(out, json.dumps({"error": "precondition", "reason": str(exc)}))
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

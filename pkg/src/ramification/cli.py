"""Command line entry point: ``ramification run|sweep|value``."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InvariantViolation, RamificationError
from .parser import parse_element, parse_generator
from .scenario import ScenarioError, load_file, parse_base_spec, render_structured, render_text, run_scenario
from .sweep import SweepParams, check_case, generate, worked_examples, run_sweep
from .tower import Tower, format_vector, value

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2


def int_list(text: str) -> tuple[int, ...]:
    """``"1,3,5"``, ``"1-6"`` or ``"-2..2"``; empty string gives an empty range."""
    out: list[int] = []
    for part in (s.strip() for s in text.split(",")):
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
        elif "-" in part[1:]:
            i = part.index("-", 1)
            lo, hi = part[:i], part[i + 1 :]
        else:
            lo = hi = part
        try:
            out.extend(range(int(lo), int(hi) + 1))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad integer range {part!r}") from None
    return tuple(dict.fromkeys(out))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ramification", description="Ramification data of radical towers.")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    ap.add_argument("--self-check", action="store_true", help="cross-check results against brute-force oracles")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the checks in a scenario file")
    run.add_argument("file")

    sw = sub.add_parser("sweep", help="random scenarios for the unramifiedness criterion")
    sw.add_argument("--primes", type=int_list, default=SweepParams.primes, help="1 stands for Q")
    sw.add_argument("--orders", type=int_list, default=SweepParams.orders)
    sw.add_argument("--exponents", type=int_list, default=SweepParams.exponents)
    sw.add_argument("--dims", type=int_list, default=SweepParams.dims)
    sw.add_argument("--generators", type=int, default=SweepParams.max_generators)
    sw.add_argument("--count", type=int, default=SweepParams.count)
    sw.add_argument("--seed", type=int, default=SweepParams.seed)
    sw.add_argument("--examples", action="store_true", help="only the four worked examples")

    val = sub.add_parser("value", help="valuation of an element, e.g. value 'Q[X,Y]' 'X^2*Y+X^3'")
    val.add_argument("base")
    val.add_argument("expr")
    val.add_argument("--gen", action="append", default=[], help="adjoin a generator (repeatable)")
    return ap


def _run(args, out) -> int:
    scenarios = load_file(args.file)
    named = []
    failed = False
    for sc in scenarios:
        results = run_scenario(sc, self_check=args.self_check)
        failed |= any(r.error for r in results)
        named.append((sc.name, results))
    if args.format == "structured":
        print(render_structured(named), file=out)
    else:
        many = len(named) > 1
        blocks = [render_text(res, name if many else None) for name, res in named]
        text = "\n".join(b for b in blocks if b)
        if text:
            print(text, file=out)
    return EXIT_USAGE if failed else EXIT_OK


def _sweep(args, out) -> int:
    if args.examples:
        rows = []
        bad = False
        for name, case in worked_examples():
            status, v, reason = check_case(case)
            bad |= status == "fail"
            rows.append({"scenario": name, **v.as_dict(), **({"failure": reason} if reason and status == "fail" else {})})
        if args.format == "structured":
            print(json.dumps({"total": len(rows), "scenarios": rows}, indent=2), file=out)
        else:
            for r in rows:
                print(
                    f"[{r['scenario']}] e1={r['e1']} e2={r['e2']} e2p={r['e2p']} lhs={r['lhs']} rhs={r['rhs']} "
                    f"condition={str(r['condition']).lower()} direct={r['direct']}",
                    file=out,
                )
            print(f"total={len(rows)}", file=out)
        return EXIT_INVARIANT if bad else EXIT_OK

    params = SweepParams(
        primes=args.primes,
        orders=args.orders,
        exponents=args.exponents,
        dims=args.dims,
        max_generators=args.generators,
        count=args.count,
        seed=args.seed,
    )
    summary = run_sweep(generate(params), self_check=args.self_check)
    if args.format == "structured":
        doc = summary.as_dict()
        doc["failures"] = [{"scenario": k, "reason": r} for k, r in summary.failures]
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in summary.as_dict().items()), file=out)
        for key, reason in summary.failures:
            print(f"DISAGREEMENT {key}: {reason}", file=out)
    return EXIT_INVARIANT if summary.failures else EXIT_OK


def _value(args, out) -> int:
    base = parse_base_spec(args.base)
    t = Tower(base)
    for text in args.gen:
        t = t.adjoin(parse_generator(text, base, t.next_name()))
    v = format_vector(value(t, parse_element(args.expr, t)))
    if args.format == "structured":
        print(json.dumps({"value": v}), file=out)
    else:
        print(f"value={v}", file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handler = {"run": _run, "sweep": _sweep, "value": _value}[args.command]
    try:
        return handler(args, out)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ScenarioError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RamificationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()

"""Command-line front door.

Subcommands: analyze (one game), seeds (full atlas), theorem (closed-form
oracle vs engine), scan (conjecture sweeps), superpoly (long-period
family), oeis (sequence cross-check), figure (survey data as CSV).
Exit codes: 0 success, 1 counterexamples or mismatches found, 2 usage or
budget errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import closedforms as cf
from . import figures, harness, oeis, patterns, superpoly
from .engine import (
    SQUARES,
    BudgetError,
    MoveSet,
    find_periodicity,
    generate,
    generate_infinite,
    losing_positions,
    normalize_seed,
    period_preperiod,
)
from .enumeration import enumerate_seeds


def _parse_moves(text: str) -> MoveSet:
    try:
        return MoveSet(int(t) for t in text.replace(" ", "").split(","))
    except ValueError as e:
        raise SystemExit(f"error: bad move set {text!r}: {e}")


def _parse_seed(text: str | None) -> str | None:
    """Seed in raw-bit or pattern form ('0110' or '(01)^2 1^4 01^2')."""
    if text is None or text == "":
        return None
    stripped = text.replace(" ", "")
    if set(stripped) <= {"0", "1"}:
        return stripped
    try:
        return patterns.expand(patterns.parse(text))
    except ValueError as e:
        raise SystemExit(f"error: seed is neither bits nor a finite pattern: {e}")


def _emit_rows(header, rows, fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(dict(zip(header, row))) + "\n")
    else:
        w = csv.writer(out)
        w.writerow(header)
        w.writerows(rows)


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args) -> int:
    A = _parse_moves(args.moves)
    seed = _parse_seed(args.seed)
    rep = find_periodicity(A, seed)
    prefix_pat = patterns.render(patterns.from_bits(rep.prefix)) if rep.prefix else ""
    cycle_pat = patterns.render(patterns.from_bits(rep.cycle))
    if args.format == "json":
        payload = json.loads(rep.to_json())
        payload["prefix_pattern"] = prefix_pat
        payload["cycle_pattern"] = cycle_pat
        if args.horizon:
            payload["sequence"] = generate(A, args.horizon, seed)
        print(json.dumps(payload))
    else:
        print(f"moves      {list(A.moves)}")
        print(f"seed       {normalize_seed(seed, A)}")
        print(f"preperiod  {rep.preperiod}")
        print(f"period     {rep.period}")
        print(f"prefix     {rep.prefix or '(empty)'}" + (f"  = {prefix_pat}" if prefix_pat else ""))
        print(f"cycle      {rep.cycle}  = {cycle_pat}")
        if args.horizon:
            print(f"sequence   {generate(A, args.horizon, seed)}")
    return 0


def cmd_seeds(args) -> int:
    A = _parse_moves(args.moves)
    atlas = enumerate_seeds(A, max_alpha=args.max_alpha)
    if args.format == "json":
        print(atlas.to_json())
    elif args.format == "csv":
        sys.stdout.write(atlas.to_csv())
    else:
        print(f"moves    {list(A.moves)}")
        print(f"seeds    {atlas.n_states}")
        print(f"periods  {sorted(atlas.periods)}")
        for length, words in atlas.distinct_periodicities().items():
            print(f"classes of length {length}: {len(words)}")
            for wrd in words:
                print(f"  {wrd}")
    return 0


def _theorem_result(args):
    fam = args.family
    if fam == "single":
        return cf.cf_single(args.a, _parse_seed(args.seed)), (args.a,), _parse_seed(args.seed)
    if fam == "pair":
        return cf.cf_pair(args.a, args.b), (args.a, args.b), None
    if fam == "1bc":
        return cf.cf_1bc(args.b, args.c), (1, args.b, args.c), None
    if fam == "ab-apb":
        return cf.cf_ab_apb(args.a, args.b), (args.a, args.b, args.a + args.b), None
    if fam == "lemma61":
        seed, period = superpoly.lemma_seed(args.n, args.b)
        res = cf.OracleResult(
            family="lemma61",
            params={"n": args.n, "b": args.b},
            pattern=None,
            period=period,
            preperiod=0,
        )
        return res, (1, args.b, args.b + 1), seed
    raise SystemExit(f"error: unknown family {fam!r}")


def cmd_theorem(args) -> int:
    result, moves, seed = _theorem_result(args)
    payload = {
        "family": result.family,
        "params": result.params,
        "period": result.period,
        "preperiod": result.preperiod,
    }
    if result.case:
        payload["case"] = result.case
    if result.pattern is not None:
        payload["pattern"] = result.pattern_text()
    if seed is not None:
        payload["seed"] = seed
    status = 0
    if not args.no_verify:
        N, p = period_preperiod(moves, seed)
        agree = (N, p) == (result.preperiod, result.period)
        if agree and result.pattern is not None:
            horizon = N + 3 * p + max(moves)
            agree = result.expand(horizon) == generate(moves, horizon, seed)
        payload["engine"] = {"preperiod": N, "period": p, "agrees": agree}
        status = 0 if agree else 1
    print(json.dumps(payload) if args.format == "json" else json.dumps(payload, indent=2))
    return status


def cmd_scan(args) -> int:
    target = args.target
    threads = args.threads
    if target == "superlinear":
        max_c = args.max_c or 25
        rows = harness.find_superlinear_exceptions(max_c, threads=threads)
        _emit_rows(
            ["a", "b", "c", "max_period", "witness_seed"],
            [(e.moves[0], e.moves[1], e.moves[2], e.max_period, e.witness_seed) for e in rows],
            args.format,
            sys.stdout,
        )
        return 0
    if target == "linear":
        max_c = args.max_c or (200 if args.full_ranges else 60)
        report = harness.scan_linear_bound(max_c, threads=threads)
    elif target == "quadratic":
        max_c = args.max_c or (25 if args.full_ranges else 12)
        policy = "all" if args.seeds == "all" else int(args.seeds)
        report = harness.scan_quadratic_bound(max_c, policy, threads=threads)
    elif target == "abc-per-bc":
        max_c = args.max_c or (200 if args.full_ranges else 40)
        report = harness.scan_abc_per_bc(max_c, threads=threads)
    elif target == "extension-converse":
        report = harness.scan_extension_converse(args.max_alpha or 8)
    else:
        raise SystemExit(f"error: unknown scan target {target!r}")
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_json())
    return 0 if report.ok else 1


def cmd_superpoly(args) -> int:
    v = superpoly.verify_family(args.n, budget=args.budget)
    payload = {
        "n": v.instance.n,
        "moves": list(v.instance.moves),
        "seed": v.instance.seed,
        "component_periods": list(v.instance.component_periods),
        "component_lcm": v.instance.component_lcm,
        "predicted_period": v.instance.predicted_period,
        "status": v.status,
    }
    if v.status == "exact":
        payload.update(
            period=v.period, preperiod=v.preperiod, matches_predicted=v.matches_predicted
        )
    elif v.status == "divisor-confirmed":
        payload["confirmed_divisor"] = v.divisor
    print(json.dumps(payload, indent=None if args.format == "json" else 2))
    return 0 if v.status != "budget-exceeded" else 1


def _computed_sequence(oeis_id: str, terms: int) -> tuple[int, list[int]]:
    if oeis_id == "A001608":
        return 0, [cf.perrin(i) for i in range(terms)]
    if oeis_id == "A113788":
        return 1, [cf.n_prime(i) for i in range(1, terms + 1)]
    if oeis_id == "A127687":
        return 1, [cf.n_total(i) for i in range(1, terms + 1)]
    if oeis_id == "A030193":
        horizon = 40 * terms + 100
        losing = losing_positions(generate_infinite(SQUARES, horizon))
        return 0, losing[:terms]
    raise SystemExit(f"error: no computation wired for {oeis_id!r}")


def cmd_oeis(args) -> int:
    terms = args.terms
    offset, computed = _computed_sequence(args.id, terms)
    if args.live:
        auth_offset, auth = oeis.fetch_bfile(args.id, cache=args.oeis_cache)
        ok = True
        first = None
        compared = 0
        for i, v in enumerate(computed):
            j = offset + i - auth_offset
            if 0 <= j < len(auth):
                compared += 1
                if auth[j] != v:
                    ok, first = False, offset + i
                    break
        print(json.dumps({"id": args.id, "ok": ok, "compared": compared, "first_mismatch": first}))
        return 0 if ok else 1
    report = oeis.check(args.id, computed, offset=offset)
    print(json.dumps(report.__dict__))
    return 0 if report.ok else 1


def cmd_figure(args) -> int:
    kw = {}
    if args.a is not None:
        kw["a"] = args.a
    if args.b is not None:
        kw["b"] = args.b
    if args.max_b is not None:
        kw["max_b"] = args.max_b
    if args.max_c is not None:
        kw["max_c"] = args.max_c
    if args.budget is not None:
        kw["enum_alpha_limit"] = args.budget
    try:
        header, rows = figures.figure_rows(args.id, **kw)
    except BudgetError as e:
        raise SystemExit(f"error: {e}; raise --budget")
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        _emit_rows(header, rows, args.format, out)
    finally:
        if args.out:
            out.close()
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="seedgames",
        description="Eventual periodicity of seeded subtraction games.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, fmt_default="text"):
        sp.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default)

    sp = sub.add_parser("analyze", help="periodicity report for one game")
    sp.add_argument("-A", "--moves", required=True, help="comma-separated moves, e.g. 2,4,7")
    sp.add_argument("-S", "--seed", help="seed bits or pattern, e.g. 0110 or (01)^2")
    sp.add_argument("--horizon", type=int, help="also print this many sequence bits")
    add_common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("seeds", help="enumerate every seed of a move set")
    sp.add_argument("-A", "--moves", required=True)
    sp.add_argument("--max-alpha", type=int, default=24, help="state-space budget (2^alpha)")
    add_common(sp)
    sp.set_defaults(func=cmd_seeds)

    sp = sub.add_parser("theorem", help="closed-form oracle, cross-checked by the engine")
    sp.add_argument("--family", required=True,
                    choices=("single", "pair", "1bc", "ab-apb", "lemma61"))
    sp.add_argument("-a", type=int)
    sp.add_argument("-b", type=int)
    sp.add_argument("-c", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("-S", "--seed")
    sp.add_argument("--no-verify", action="store_true", help="skip the engine cross-check")
    add_common(sp, "json")
    sp.set_defaults(func=cmd_theorem)

    sp = sub.add_parser("scan", help="conjecture sweeps; exit 1 on counterexamples")
    sp.add_argument("--target", required=True,
                    choices=("linear", "quadratic", "abc-per-bc",
                             "extension-converse", "superlinear"))
    sp.add_argument("--max-c", type=int)
    sp.add_argument("--max-alpha", type=int)
    sp.add_argument("--seeds", default="all", help="'all' or a sample count per set")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--full-ranges", action="store_true",
                    help="use the original survey ranges instead of desk-scale ones")
    add_common(sp, "json")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("superpoly", help="verify the long-period family A_n")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=10**9, help="engine step budget")
    add_common(sp, "json")
    sp.set_defaults(func=cmd_superpoly)

    sp = sub.add_parser("oeis", help="cross-check computed sequences")
    sp.add_argument("--id", required=True)
    sp.add_argument("--terms", type=int, default=20)
    sp.add_argument("--live", action="store_true", help="fetch the b-file instead of the snapshot")
    sp.add_argument("--oeis-cache", help="cache directory for fetched b-files")
    add_common(sp, "json")
    sp.set_defaults(func=cmd_oeis)

    sp = sub.add_parser("figure", help="emit a survey figure's underlying data")
    sp.add_argument("--id", type=int, required=True, choices=figures.FIGURE_IDS)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--max-b", type=int)
    sp.add_argument("--max-c", type=int)
    sp.add_argument("--budget", type=int, help="enumeration alpha limit for atlas-backed rows")
    sp.add_argument("--out", help="write to a file instead of stdout")
    add_common(sp, "csv")
    sp.set_defaults(func=cmd_figure)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Subcommands: ``wlp`` and ``slp`` (single-tuple verdicts), ``classify``
(coverage flags only), ``sweep`` (exhaustive parameter sweeps with a
resumable JSON-lines cache and optional process parallelism), ``apery``
(numerical semigroup report), ``lemma`` (randomized determinant-identity
batches), and ``hilbert`` (Hilbert function tables for family, complete
intersection, or ad-hoc ideals).

Exit codes: 0 success / verdict HOLDS, 2 a FAILS_PROBABLY verdict, 3 usage
or validation problems, 4 an internal invariant violation.  The sweep cache
directory can be set once via the LEFSCHETZ_CACHE_DIR environment variable.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from time import perf_counter

from . import __version__, family, quotient, semigroup
from .polyring import PolyParseError, parse_ideal
from .quotient import FAILS_PROBABLY, HOLDS, GradedQuotient, SearchStrategy

EXIT_OK = 0
EXIT_FAILS = 2
EXIT_USAGE = 3
EXIT_INTERNAL = 4

CACHE_ENV = "LEFSCHETZ_CACHE_DIR"

CSV_COLUMNS = (
    "a",
    "b",
    "c",
    "beta",
    "gamma",
    "D",
    "h",
    "covered",
    "flags",
    "verdict",
    "certificate",
    "ms",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass(frozen=True)
class SweepConfig:
    """Sweep configuration; the cache key is (parameters, strategy)."""

    a_max: int
    a_min: int = 2
    filter: str = "all"
    trials: int = 8
    bound: int = 10_000
    seed: int = 0
    slp: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.a_max < self.a_min or self.a_min < 2:
            raise ValueError("need 2 <= a_min <= a_max")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.filter not in ("all", "covered", "uncovered"):
            raise ValueError(f"unknown filter {self.filter!r}")


def _tuple_seed(seed, params: family.GorensteinParams) -> str:
    # per-tuple seeds keep records independent of sweep order and job count
    p = params
    return f"{seed}|{p.a},{p.b},{p.c},{p.beta},{p.gamma}"


def _compute_record(job) -> dict:
    a, b, c, beta, gamma, trials, bound, seed, with_slp = job
    start = perf_counter()
    params = family.validate(a, b, c, beta, gamma)
    q = GradedQuotient(family.build_ideal(params), degree_cap=a + b + c)
    data = q.hilbert_data()
    coverage = family.classify(params)
    strategy = SearchStrategy(
        trials=trials, bound=bound, seed=_tuple_seed(seed, params)
    )
    report = q.check_wlp(strategy)
    slp_verdict = q.check_slp(strategy).verdict if with_slp else None
    ms = round((perf_counter() - start) * 1000.0, 1)
    return {
        "a": a,
        "b": b,
        "c": c,
        "beta": beta,
        "gamma": gamma,
        "D": data.socle_degree,
        "h": list(data.h),
        "covered": coverage.covered,
        "flags": list(coverage.true_flags()),
        "verdict": report.verdict,
        "certificate": (
            report.certificate_form.as_text()
            if report.certificate_form is not None
            else None
        ),
        "slp_verdict": slp_verdict,
        "ms": ms,
    }


def _record_csv_row(record: dict, with_slp: bool) -> list:
    row = [
        record["a"],
        record["b"],
        record["c"],
        record["beta"],
        record["gamma"],
        record["D"],
        " ".join(str(v) for v in record["h"]),
        "true" if record["covered"] else "false",
        ";".join(record["flags"]),
        record["verdict"],
        record["certificate"] or "",
        f"{record['ms']:.1f}",
    ]
    if with_slp:
        row.append(record["slp_verdict"] or "")
    return row


def _write_records(records, fmt: str, with_slp: bool, stream):
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        header = list(CSV_COLUMNS)
        if with_slp:
            header.append("slp_verdict")
        writer.writerow(header)
        for record in records:
            writer.writerow(_record_csv_row(record, with_slp))
    else:
        for record in records:
            stream.write(json.dumps(record, sort_keys=True) + "\n")


def _cache_key(params: tuple, cfg: SweepConfig) -> tuple:
    return params + (cfg.trials, cfg.bound, cfg.seed, cfg.slp)


def _resolve_cache_path(explicit, cfg: SweepConfig):
    if explicit:
        return Path(explicit)
    env_dir = os.environ.get(CACHE_ENV)
    if env_dir:
        name = (
            f"sweep-a{cfg.a_min}-{cfg.a_max}-{cfg.filter}"
            f"-t{cfg.trials}-b{cfg.bound}-s{cfg.seed}"
            f"{'-slp' if cfg.slp else ''}.jsonl"
        )
        return Path(env_dir) / name
    return None


def _load_cache(path, cfg: SweepConfig) -> dict:
    cached = {}
    if path is None or not path.exists():
        return cached
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
                key = tuple(entry["key"])
            except (ValueError, KeyError, TypeError):
                continue
            if key[5:] == (cfg.trials, cfg.bound, cfg.seed, cfg.slp):
                cached[tuple(key[:5])] = entry["record"]
    return cached


def _run_sweep(cfg: SweepConfig, cache_path) -> tuple:
    """Compute or recall one record per tuple; returns (records, violations).

    Completed tuples are read back verbatim from the cache, so resuming a
    finished sweep performs no rank computations at all.
    """
    if cfg.filter == "covered":
        selected = [
            p
            for p in family.enumerate_params(cfg.a_max, cfg.a_min)
            if family.classify(p).covered
        ]
    elif cfg.filter == "uncovered":
        selected = list(family.uncovered_params(cfg.a_max, cfg.a_min))
    else:
        selected = list(family.enumerate_params(cfg.a_max, cfg.a_min))
    cached = _load_cache(cache_path, cfg)
    jobs = []
    for p in selected:
        if p.as_tuple() not in cached:
            jobs.append(
                p.as_tuple() + (cfg.trials, cfg.bound, cfg.seed, cfg.slp)
            )
    cache_fh = None
    if cache_path is not None and jobs:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        cache_fh = cache_path.open("a", encoding="utf-8")
    try:
        if jobs:
            if cfg.jobs > 1:
                with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                    results = pool.map(_compute_record, jobs, chunksize=4)
                    computed = list(_drain(results, jobs, cfg, cache_fh))
            else:
                computed = list(_drain(map(_compute_record, jobs), jobs, cfg, cache_fh))
            for record in computed:
                key = (
                    record["a"],
                    record["b"],
                    record["c"],
                    record["beta"],
                    record["gamma"],
                )
                cached[key] = record
    finally:
        if cache_fh is not None:
            cache_fh.close()
    records = [cached[p.as_tuple()] for p in selected]
    violations = [
        r for r in records if r["covered"] and r["verdict"] != HOLDS
    ]
    return records, violations


def _drain(results, jobs, cfg: SweepConfig, cache_fh):
    for job, record in zip(jobs, results):
        if cache_fh is not None:
            key = list(job[:5]) + [cfg.trials, cfg.bound, cfg.seed, cfg.slp]
            cache_fh.write(
                json.dumps({"key": key, "record": record}, sort_keys=True)
                + "\n"
            )
            cache_fh.flush()
        yield record


def _add_param_args(parser, require_beta=True, require_gamma=True):
    parser.add_argument("-a", "--a", dest="a", type=int, required=True)
    parser.add_argument("-b", "--b", dest="b", type=int, required=True)
    parser.add_argument("-c", "--c", dest="c", type=int, required=True)
    parser.add_argument(
        "--beta", dest="beta", type=int, required=require_beta
    )
    parser.add_argument(
        "--gamma", dest="gamma", type=int, required=require_gamma
    )


def _add_strategy_args(parser):
    parser.add_argument("--trials", type=int, default=8)
    parser.add_argument("--bound", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="lefschetz",
        description="Exact Lefschetz-property verdicts and related reports.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_wlp = sub.add_parser("wlp", help="weak Lefschetz verdict for one tuple")
    _add_param_args(p_wlp)
    _add_strategy_args(p_wlp)

    p_slp = sub.add_parser("slp", help="strong Lefschetz verdict for one tuple")
    _add_param_args(p_slp)
    _add_strategy_args(p_slp)

    p_cls = sub.add_parser("classify", help="coverage flags for one tuple")
    _add_param_args(p_cls)

    p_sweep = sub.add_parser("sweep", help="verdicts for every valid tuple")
    p_sweep.add_argument("--a-max", type=int, required=True)
    p_sweep.add_argument("--a-min", type=int, default=2)
    p_sweep.add_argument(
        "--filter", choices=("all", "covered", "uncovered"), default="all"
    )
    _add_strategy_args(p_sweep)
    p_sweep.add_argument("--slp", action="store_true")
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--cache", metavar="PATH")
    p_sweep.add_argument("--format", choices=("json", "csv"), default="json")
    p_sweep.add_argument("--out", metavar="PATH")

    p_apery = sub.add_parser("apery", help="numerical semigroup report")
    p_apery.add_argument(
        "generators", help="comma-separated generators, e.g. 5,6,7,8"
    )

    p_lemma = sub.add_parser(
        "lemma", help="randomized determinant-identity batch"
    )
    p_lemma.add_argument("--n", type=int, default=8, help="largest matrix size")
    p_lemma.add_argument("--trials", type=int, default=1000)
    p_lemma.add_argument("--max-entry", type=int, default=9)
    p_lemma.add_argument("--seed", type=int, default=0)

    p_hil = sub.add_parser("hilbert", help="Hilbert function table")
    p_hil.add_argument("-a", "--a", dest="a", type=int)
    p_hil.add_argument("-b", "--b", dest="b", type=int)
    p_hil.add_argument("-c", "--c", dest="c", type=int)
    p_hil.add_argument("--beta", type=int)
    p_hil.add_argument("--gamma", type=int)
    p_hil.add_argument(
        "--ideal", metavar="TEXT", help="comma-separated generators in x, y, z"
    )
    p_hil.add_argument("--cap", type=int, help="degree cap for ad-hoc ideals")
    p_hil.add_argument(
        "--dmax", type=int, help="print h(0..dmax) instead of stopping at zero"
    )
    p_hil.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


def _single_verdict(args, want_slp: bool) -> int:
    start = perf_counter()
    params = family.validate(args.a, args.b, args.c, args.beta, args.gamma)
    q = GradedQuotient(
        family.build_ideal(params), degree_cap=args.a + args.b + args.c
    )
    data = q.hilbert_data()
    coverage = family.classify(params)
    strategy = SearchStrategy(
        trials=args.trials, bound=args.bound, seed=_tuple_seed(args.seed, params)
    )
    report = q.check_wlp(strategy)
    slp_verdict = q.check_slp(strategy).verdict if want_slp else None
    ms = round((perf_counter() - start) * 1000.0, 1)
    record = {
        "a": params.a,
        "b": params.b,
        "c": params.c,
        "beta": params.beta,
        "gamma": params.gamma,
        "D": data.socle_degree,
        "h": list(data.h),
        "covered": coverage.covered,
        "flags": list(coverage.true_flags()),
        "verdict": report.verdict,
        "certificate": (
            report.certificate_form.as_text()
            if report.certificate_form is not None
            else None
        ),
        "slp_verdict": slp_verdict,
        "ms": ms,
    }
    print(json.dumps(record, indent=2, sort_keys=True))
    if coverage.covered and report.verdict != HOLDS:
        print(
            "INTERNAL ERROR: tuple "
            f"{params.as_tuple()} is covered by {coverage.true_flags()} "
            f"but the verdict is {report.verdict}",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    decisive = slp_verdict if want_slp else report.verdict
    return EXIT_OK if decisive == HOLDS else EXIT_FAILS


def _cmd_classify(args) -> int:
    params = family.validate(args.a, args.b, args.c, args.beta, args.gamma)
    coverage = family.classify(params)
    print(
        json.dumps(
            {
                "a": params.a,
                "b": params.b,
                "c": params.c,
                "beta": params.beta,
                "gamma": params.gamma,
                "D": params.socle_degree,
                "flags": coverage.flags(),
                "covered": coverage.covered,
            },
            indent=2,
            sort_keys=True,
        )
    )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(
        a_max=args.a_max,
        a_min=args.a_min,
        filter=args.filter,
        trials=args.trials,
        bound=args.bound,
        seed=args.seed,
        slp=args.slp,
        jobs=args.jobs,
    )
    cache_path = _resolve_cache_path(args.cache, cfg)
    records, violations = _run_sweep(cfg, cache_path)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            _write_records(records, args.format, cfg.slp, fh)
    else:
        _write_records(records, args.format, cfg.slp, sys.stdout)
    if violations:
        for record in violations:
            print(
                "INTERNAL ERROR: covered tuple "
                f"({record['a']}, {record['b']}, {record['c']}, "
                f"{record['beta']}, {record['gamma']}) with flags "
                f"{record['flags']} got verdict {record['verdict']}",
                file=sys.stderr,
            )
        return EXIT_INTERNAL
    if any(r["verdict"] == FAILS_PROBABLY for r in records) or (
        cfg.slp and any(r["slp_verdict"] == FAILS_PROBABLY for r in records)
    ):
        return EXIT_FAILS
    return EXIT_OK


def _cmd_apery(args) -> int:
    try:
        gens = [int(chunk) for chunk in args.generators.split(",") if chunk.strip()]
    except ValueError:
        raise _UsageError(
            f"generators must be comma-separated integers, got "
            f"{args.generators!r}"
        ) from None
    sgp = semigroup.NumericalSemigroup(gens)
    ap = sgp.apery()
    ok, failures = sgp.is_m_pure_symmetric()
    print(
        json.dumps(
            {
                "generators": list(sgp.generators),
                "multiplicity": sgp.multiplicity,
                "apery": list(ap.elements),
                "orders": list(ap.orders),
                "m_pure_symmetric": ok,
                "failures": [list(f) for f in failures],
                "order_histogram": list(sgp.order_histogram()),
            },
            indent=2,
            sort_keys=True,
        )
    )
    return EXIT_OK


def _cmd_lemma(args) -> int:
    if args.n < 2:
        raise _UsageError("--n must be at least 2")
    if args.trials < 0:
        raise _UsageError("--trials must be nonnegative")
    rng = random.Random(args.seed)
    counterexamples = []
    for _ in range(args.trials):
        size = rng.randint(2, args.n)
        matrix = family.random_sn(size, args.max_entry, rng)
        check = family.sn_det_identity(matrix)
        if not (check.equal and check.positive):
            counterexamples.append(
                {
                    "size": matrix.size,
                    "upper": [list(row) for row in matrix.upper],
                    "last_row": list(matrix.last_row),
                    "det": str(check.det),
                    "alpha_last": check.alpha_last,
                }
            )
    print(
        json.dumps(
            {
                "checked": args.trials,
                "max_size": args.n,
                "max_entry": args.max_entry,
                "seed": args.seed,
                "all_equal": not any(
                    ce for ce in counterexamples
                ),
                "all_positive": not counterexamples,
                "counterexamples": counterexamples,
            },
            indent=2,
            sort_keys=True,
        )
    )
    if counterexamples:
        print(
            f"INTERNAL ERROR: {len(counterexamples)} determinant identity "
            "counterexamples found",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_hilbert(args) -> int:
    if args.ideal:
        ideal = parse_ideal(args.ideal)
        cap = args.cap or sum(g.degree for g in ideal.generators)
    elif args.a and args.b and args.c and args.gamma:
        if args.beta is not None:
            params = family.validate(args.a, args.b, args.c, args.beta, args.gamma)
            ideal = family.build_ideal(params)
        else:
            ideal = family.build_ci(args.a, args.b, args.c, args.gamma)
        cap = args.a + args.b + args.c
    else:
        raise _UsageError(
            "provide --ideal TEXT, or -a -b -c --gamma "
            "(plus --beta for the full family)"
        )
    if args.dmax is not None:
        cap = max(cap, args.dmax)
    q = GradedQuotient(ideal, degree_cap=cap)
    if args.dmax is not None:
        values = [q.hilbert(d) for d in range(args.dmax + 1)]
        payload = {"h": values, "socle_degree": None}
    else:
        data = q.hilbert_data()
        values = list(data.h)
        payload = {"h": values, "socle_degree": data.socle_degree}
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["d", "h"])
        for d, h in enumerate(values):
            writer.writerow([d, h])
    else:
        print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as err:  # --help / --version
        return err.code or 0
    try:
        if args.command == "wlp":
            return _single_verdict(args, want_slp=False)
        if args.command == "slp":
            return _single_verdict(args, want_slp=True)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "apery":
            return _cmd_apery(args)
        if args.command == "lemma":
            return _cmd_lemma(args)
        if args.command == "hilbert":
            return _cmd_hilbert(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (
        family.ParameterError,
        PolyParseError,
        quotient.NotArtinianWithinCapError,
        ValueError,
        OSError,
    ) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

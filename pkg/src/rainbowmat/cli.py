"""Command-line front end.

Subcommands: solve, gen, verify, props, bench.  Exit codes: 0 success,
1 bound/validity failure (indicates a bug), 2 input error, 3 generation
budget exhausted.  All randomness flows from --seed, so seeded invocations
are reproducible byte for byte (bench rows additionally carry a wall-time
column, which is the one non-deterministic field).
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .instances import (GenerationError, InstanceError, InstanceMeta,
                        MATROID_CLASSES, ParseError, gen_random_family, parse,
                        random_matroid, serialize)
from .matroids import MatroidError
from .solver import Family, FamilyError, solve
from .verify import bound_floor, brute_force_max, check_bound, check_rainbow, \
    make_report, property_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_GENERATION = 3


def _load_family(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    return parse(text)


def cmd_solve(args) -> int:
    try:
        family, _ = _load_family(args.file)
    except (ParseError, InstanceError, FamilyError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = solve(family, check_claims=args.check_claims)
    valid = check_rainbow(report.rainbow, family)
    bound_ok = check_bound(report.size, report.n)
    print(f"n={report.n} size={report.size}")
    print("picks: " + " ".join(f"{c + 1}->{e}" for c, e in report.rainbow.picks))
    print(f"bound_ok={'true' if bound_ok else 'false'}")
    print(f"valid={'true' if valid else 'false'}")
    if args.certify:
        if report.certificate is None:
            print("certificate: full (size = n)")
        else:
            cert = report.certificate
            sizes = " ".join(str(len(lev.a_set)) for lev in cert.levels)
            print(f"certificate: delta={cert.delta} level_sizes=[{sizes}] "
                  f"t={report.size} >= delta^2={cert.delta ** 2}")
    return EXIT_OK if (valid and bound_ok) else EXIT_FAILED


def cmd_gen(args) -> int:
    try:
        class_m, class_n = args.classes.split(",")
        if class_m not in MATROID_CLASSES or class_n not in MATROID_CLASSES:
            raise InstanceError(
                f"classes must be from {', '.join(MATROID_CLASSES)}")
    except ValueError:
        print("error: --class takes '<m-class>,<n-class>'", file=sys.stderr)
        return EXIT_INPUT
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    n = args.n
    if n < 1:
        print("error: --n must be positive", file=sys.stderr)
        return EXIT_INPUT
    rng = random.Random(args.seed)
    ground = 2 * n * n
    try:
        matroid_m = random_matroid(class_m, n, ground, rng)
        matroid_n = random_matroid(class_n, n, ground, rng)
        family = gen_random_family(matroid_m, matroid_n, n,
                                   rng.randrange(2 ** 32))
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (InstanceError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = serialize(family, InstanceMeta(seed=args.seed,
                                          gen=f"{class_m},{class_n}"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output} (n={n} ground={ground})")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        family, _ = _load_family(args.file)
    except (ParseError, InstanceError, FamilyError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = solve(family)
    vreport = make_report(family, report.rainbow, brute_limit=args.brute_limit)
    print(vreport.render())
    ok = vreport.bound_ok and vreport.valid
    if vreport.optimum is not None and vreport.solver_size > vreport.optimum:
        ok = False
    return EXIT_OK if ok else EXIT_FAILED


def cmd_props(args) -> int:
    report = property_suite(args.seed, args.trials)
    print(report.render())
    return EXIT_OK if report.total_failures == 0 else EXIT_FAILED


def _parse_bench_spec(path: str):
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 4:
                raise ParseError(
                    "expected '<m-class> <n-class> <n> <seed>'", lineno)
            class_m, class_n = fields[0], fields[1]
            if class_m not in MATROID_CLASSES or class_n not in MATROID_CLASSES:
                raise ParseError(f"unknown matroid class on row", lineno)
            rows.append((class_m, class_n, int(fields[2]), int(fields[3])))
    return rows


def cmd_bench(args) -> int:
    try:
        rows = _parse_bench_spec(args.spec)
    except (OSError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out_lines = ["n,seed,class_m,class_n,status,solver_size,bound_floor,"
                 "optimum,wall_time"]
    for class_m, class_n, n, seed in rows:
        rng = random.Random(seed)
        start = time.perf_counter()
        try:
            matroid_m = random_matroid(class_m, n, 2 * n * n, rng)
            matroid_n = random_matroid(class_n, n, 2 * n * n, rng)
            family = gen_random_family(matroid_m, matroid_n, n,
                                       rng.randrange(2 ** 32))
        except GenerationError:
            out_lines.append(f"{n},{seed},{class_m},{class_n},genfail,,,,")
            continue
        report = solve(family)
        optimum = ""
        if n <= args.brute_limit:
            optimum = str(brute_force_max(family, limit=args.brute_limit)[0])
        elapsed = time.perf_counter() - start
        status = "ok" if check_bound(report.size, n) \
            and check_rainbow(report.rainbow, family) else "FAIL"
        out_lines.append(
            f"{n},{seed},{class_m},{class_n},{status},{report.size},"
            f"{bound_floor(n)},{optimum},{elapsed:.4f}")
    text = "\n".join(out_lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output} ({len(rows)} rows)")
    else:
        sys.stdout.write(text)
    failed = any(line.split(",")[4] == "FAIL" for line in out_lines[1:])
    return EXIT_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowmat",
        description="Rainbow independent sets in the intersection of two matroids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument("--certify", action="store_true",
                   help="print the deficiency certificate summary")
    p.add_argument("--check-claims", action="store_true",
                   help="re-verify every alternating-path invariant")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--class", dest="classes", required=True,
                   help="'<m-class>,<n-class>' from "
                        + ", ".join(MATROID_CLASSES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="solve + brute force + bound check")
    p.add_argument("file")
    p.add_argument("--brute-limit", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("props", help="randomized matroid-fact property suite")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("bench", help="run a corpus described by a spec file")
    p.add_argument("--spec", required=True,
                   help="rows of '<m-class> <n-class> <n> <seed>'")
    p.add_argument("--brute-limit", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line frontend.

Exit codes: 0 success; 1 counterexample found, verification failure, or
no witness exists; 2 usage error; 3 capacity limits left unknowns.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .arith import divisors, factorize
from .classify import UNKNOWN, YES, classify_number
from .construct import (
    double_to_half,
    factorial_witness,
    lift_coprime_prime_power,
    lift_same_prime,
)
from .errors import CapacityError, DomainError, SigmaRangeError
from .partition import (
    DEFAULT_SEED,
    PartitionWitness,
    SearchConfig,
    find_half_zumkeller_witness,
    find_zumkeller_witness,
    verify_witness,
)
from .properties import PROPERTY_CHECKS, run_property
from .scan import (
    CONJECTURE2_DESK_CAP,
    DEFAULT_CHUNK,
    PREDICATES,
    default_workers,
    density_report,
    scan_range,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNKNOWNS = 3


def _config_from(args) -> SearchConfig:
    return SearchConfig(
        restarts=args.restarts,
        seed=args.seed,
        max_divisors=args.max_divisors,
    )


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED,
                   help="randomized-engine seed (default 0xC0FFEE)")
    p.add_argument("--restarts", type=int, default=64,
                   help="randomized-engine restart budget (default 64)")
    p.add_argument("--max-divisors", type=int, default=1 << 20,
                   help="divisor-count cap (default 2^20)")
    p.add_argument("--json", action="store_true", default=True,
                   help="JSON output (default)")
    p.add_argument("--csv", action="store_true",
                   help="CSV output instead of JSON")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zumkeller",
        description="Classify integers, produce and verify divisor-partition "
                    "witnesses, lift witnesses to new numbers, and scan ranges.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one integer")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--witness", action="store_true", help="embed witnesses")
    _add_common(p)

    p = sub.add_parser("witness", help="emit a partition witness for n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--kind", choices=("zumkeller", "half"), default="zumkeller")
    _add_common(p)

    p = sub.add_parser("verify-witness", help="check a witness JSON object")
    p.add_argument("file", help="path to witness JSON, or - for stdin")
    _add_common(p)

    p = sub.add_parser("lift", help="lift a witness to a new number")
    p.add_argument("file", help="path to witness JSON, or - for stdin")
    p.add_argument("--op", choices=("coprime", "same-prime", "double"),
                   required=True)
    p.add_argument("--prime", type=int, help="prime for coprime/same-prime lifts")
    p.add_argument("--power", type=int, default=1, help="exponent l (default 1)")
    _add_common(p)

    p = sub.add_parser("scan", help="scan a range for a predicate")
    p.add_argument("--predicate", choices=PREDICATES, required=True)
    p.add_argument("--from", dest="start", type=_positive_int, default=1)
    p.add_argument("--to", dest="stop", type=_positive_int, required=True)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker count (default: available parallelism)")
    p.add_argument("--chunk", type=int, default=DEFAULT_CHUNK)
    _add_common(p)

    p = sub.add_parser("verify", help="run a property sweep")
    p.add_argument("--property", choices=sorted(PROPERTY_CHECKS), required=True)
    p.add_argument("--to", dest="stop", type=_positive_int, default=None,
                   help="range bound where the property takes one")
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("density", help="bucketed density report")
    p.add_argument("--to", dest="stop", type=_positive_int, required=True)
    p.add_argument("--bucket", type=_positive_int, default=DEFAULT_CHUNK)
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)

    return ap


def _read_witness(path: str) -> PartitionWitness:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return PartitionWitness.from_json_dict(json.loads(text))


def _emit(obj: dict, as_csv: bool) -> None:
    if as_csv:
        flat = {k: v for k, v in obj.items() if not isinstance(v, (dict, list))}
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(flat))
        writer.writeheader()
        writer.writerow(flat)
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps(obj, sort_keys=True))


def _cmd_classify(args) -> int:
    record = classify_number(args.n, _config_from(args),
                             with_witnesses=args.witness)
    _emit(record.to_json_dict(with_witnesses=args.witness), args.csv)
    if UNKNOWN in (record.zumkeller, record.half_zumkeller):
        return EXIT_UNKNOWNS
    return EXIT_OK


def _cmd_witness(args) -> int:
    config = _config_from(args)
    d = divisors(factorize(args.n), cap=config.max_divisors)
    try:
        if args.kind == "zumkeller":
            w = find_zumkeller_witness(d, config)
        else:
            w = find_half_zumkeller_witness(d, config)
    except CapacityError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWNS
    if w is None:
        print("no witness exists", file=sys.stderr)
        return EXIT_FAIL
    _emit(w.to_json_dict(), args.csv)
    return EXIT_OK


def _cmd_verify_witness(args) -> int:
    w = _read_witness(args.file)
    ok = verify_witness(w)
    _emit({"n": w.n, "kind": w.kind, "valid": ok}, args.csv)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_lift(args) -> int:
    w = _read_witness(args.file)
    if args.op == "double":
        lifted = double_to_half(w)
    else:
        if args.prime is None:
            raise DomainError("--prime is required for this lift")
        if args.op == "coprime":
            lifted = lift_coprime_prime_power(w, args.prime, args.power)
        else:
            lifted = lift_same_prime(w, args.prime, args.power)
    _emit(lifted.to_json_dict(), args.csv)
    return EXIT_OK


def _cmd_scan(args) -> int:
    workers = args.jobs if args.jobs is not None else default_workers()
    report = scan_range(args.predicate, args.start, args.stop,
                        workers=workers, chunk=args.chunk,
                        config=_config_from(args))
    for n in report.matches:
        record = classify_number(n, _config_from(args))
        _emit(record.to_json_dict(), args.csv)
    print(json.dumps(report.to_json_dict(), sort_keys=True), file=sys.stderr)
    return EXIT_UNKNOWNS if report.unknowns else EXIT_OK


def _cmd_verify(args) -> int:
    workers = args.jobs if args.jobs is not None else default_workers()
    result = run_property(args.property, to=args.stop, workers=workers,
                          config=_config_from(args))
    print(json.dumps(result.to_json_dict(), sort_keys=True))
    if result.unknowns:
        return EXIT_UNKNOWNS
    return EXIT_OK if result.passed else EXIT_FAIL


def _cmd_density(args) -> int:
    workers = args.jobs if args.jobs is not None else default_workers()
    report = density_report(args.stop, args.bucket, workers=workers,
                            config=_config_from(args))
    print(json.dumps(report, sort_keys=True))
    return EXIT_UNKNOWNS if report["unknowns"] else EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "witness": _cmd_witness,
    "verify-witness": _cmd_verify_witness,
    "lift": _cmd_lift,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "density": _cmd_density,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, SigmaRangeError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWNS


if __name__ == "__main__":
    sys.exit(main())

"""Command line surface: witnesses, spectra, counting, verification, reports.

Exit codes: 0 success, 1 invalid request, 2 proven-impossible request,
3 internal construction failure (a bug, not a user error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .core import Square, check, count_commuting, square_from_text
from .errors import (
    ConstructionError,
    ImpossibleTargetError,
    InvalidTargetError,
    ValidationError,
)
from .oracle import commuting_histogram, enumerate_all
from .spectrum import kq, proportion, spectrum_C
from .synthesis import WitnessCertificate, replay, witness

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IMPOSSIBLE = 2
EXIT_INTERNAL = 3


def _default_seed() -> int:
    raw = os.environ.get("QUASICOMM_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def _render_trace(trace: dict, depth: int = 0) -> list:
    params = json.dumps(trace["params"], sort_keys=True)
    lines = [f"{'  ' * depth}{'inner: ' if depth else 'route: '}{trace['rule']} {params}"]
    for child in trace["children"]:
        lines.extend(_render_trace(child, depth + 1))
    return lines


def _certificate_text(cert: WitnessCertificate) -> str:
    head = (
        f"order {cert.n}, target {cert.k_target}, "
        f"recount {cert.k_recounted}, seed {cert.seed}"
    )
    return "\n".join([head, *_render_trace(cert.trace), cert.square.to_text().rstrip()]) + "\n"


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _batch_order(task) -> list:
    n, seed = task
    return [witness(n, k, seed=seed).as_dict() for k in spectrum_C(n).members()]


def cmd_witness(args) -> int:
    if args.all:
        if args.n is not None or args.k is not None:
            print("--all replaces --n/--k", file=sys.stderr)
            return EXIT_INVALID
        out_dir = args.out_dir or "certificates"
        os.makedirs(out_dir, exist_ok=True)
        tasks = [(n, args.seed) for n in range(1, args.max_n + 1)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                groups = list(pool.map(_batch_order, tasks))
        else:
            groups = [_batch_order(task) for task in tasks]
        total = 0
        for group in groups:
            for payload in group:
                name = f"witness_n{payload['n']}_k{payload['k_target']}.json"
                with open(os.path.join(out_dir, name), "w") as fh:
                    json.dump(payload, fh, indent=2)
                    fh.write("\n")
                total += 1
            print(f"order {payload['n']}: {len(group)} certificates")
        print(f"{total} certificates written to {out_dir}")
        return EXIT_OK
    if args.n is None or args.k is None:
        print("witness needs --n and --k (or --all --max-n)", file=sys.stderr)
        return EXIT_INVALID
    cert = witness(args.n, args.k, seed=args.seed)
    if args.format == "json":
        payload = json.dumps(cert.as_dict(), indent=2) + "\n"
    else:
        payload = _certificate_text(cert)
    _emit(payload, args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    n = args.n
    s = spectrum_C(n)
    values = s.members()
    if n <= 5:
        body = "{" + ", ".join(str(v) for v in values) + "}"
        print(f"order {n} attains {body}")
    else:
        print(
            f"order {n} attains {{{n}, {n + 2}, ..., {n * n - 6}}} "
            f"in steps of 2, plus {n * n} ({len(values)} values)"
        )
    if n == 4:
        print("10 is never attained (the order-4 exception)")
    if n == 5:
        print("17 is never attained (the order-5 exception)")
    return EXIT_OK


def _parse_ratio(text: str):
    if "/" in text:
        a_str, b_str = text.split("/", 1)
    else:
        a_str, b_str = text, "1"
    try:
        return int(a_str), int(b_str)
    except ValueError:
        raise ValueError(f"cannot parse proportion {text!r}; expected a/b") from None


def cmd_kq(args) -> int:
    a, b = _parse_ratio(args.ratio)
    result = kq(a, b)
    if a == b:
        print("K(1): every positive order (the commutative square)")
        members_k = list(range(1, args.limit + 1))
        print("K = {" + ",".join(str(n) for n in members_k) + "}")
        return EXIT_OK
    desc = f"q = {a}/{b}: orders n = {result.step}x for x >= {result.x_min}"
    if result.even_only:
        desc += ", x even"
    desc += f"; commuting count at n: {result.k * result.a}x^2"
    if result.excluded:
        desc += "; excluded: " + ", ".join(str(n) for n in result.excluded)
    print(desc)
    members_k = result.members(args.limit)
    members_s = sorted(set(members_k) | {e for e in result.excluded if e <= args.limit})
    print(
        "S = {" + ",".join(str(n) for n in members_s) + "}, "
        "K = {" + ",".join(str(n) for n in members_k) + "}"
    )
    return EXIT_OK


def cmd_count(args) -> int:
    with open(args.file) as fh:
        square = square_from_text(fh.read())
    check(square)
    print(f"C={count_commuting(square)} P={proportion(square)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    required = ("schema_version", "n", "k_target", "k_recounted", "square", "trace", "seed")
    missing = [key for key in required if key not in data]
    if missing:
        print(f"certificate is missing fields: {', '.join(missing)}", file=sys.stderr)
        return EXIT_INVALID
    try:
        square = check(Square(data["square"]))
    except ValidationError as exc:
        print(f"invalid square: {exc}", file=sys.stderr)
        return EXIT_INVALID
    recount = count_commuting(square)
    if recount != data["k_recounted"]:
        print(
            f"recount mismatch: square has {recount} commuting pairs, "
            f"certificate records {data['k_recounted']}",
            file=sys.stderr,
        )
        return EXIT_INVALID
    if data["k_recounted"] != data["k_target"]:
        print(
            f"target mismatch: certificate records recount {data['k_recounted']} "
            f"against target {data['k_target']}",
            file=sys.stderr,
        )
        return EXIT_INVALID
    cert = WitnessCertificate(
        n=data["n"],
        k_target=data["k_target"],
        k_recounted=data["k_recounted"],
        square=square,
        trace=data["trace"],
        seed=data["seed"],
    )
    if not replay(cert):
        print(
            f"trace does not replay: rebuilding from (n={cert.n}, k={cert.k_target}, "
            f"seed={cert.seed}) gives a different certificate",
            file=sys.stderr,
        )
        return EXIT_INVALID
    print(
        f"certificate ok: order {cert.n}, {cert.k_recounted} commuting pairs, "
        f"route {cert.trace['rule']}"
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.histogram:
        hist = commuting_histogram(args.n, order=args.order)
        print(json.dumps({str(k): hist[k] for k in sorted(hist)}, indent=2))
    else:
        total = sum(1 for _ in enumerate_all(args.n, order=args.order))
        print(f"{total} Latin squares of order {args.n}")
    return EXIT_OK


def cmd_report(args) -> int:
    from .report import generate_report

    for path in generate_report(args.out_dir, max_n=args.max_n, seed=args.seed):
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasicomm",
        description="Construct and certify quasigroups with a prescribed "
        "number of commuting pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="build a certified square for (n, k)")
    p.add_argument("--n", type=int, default=None, help="order of the square")
    p.add_argument("--k", type=int, default=None, help="target commuting count")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", default=None, help="write output to this file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--all", action="store_true", help="batch: every target up to --max-n")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--out-dir", default=None, help="batch output directory")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for --all")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("spectrum", help="describe the attainable counts for an order")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("kq", help="orders attaining a commuting proportion a/b")
    p.add_argument("ratio", help="proportion, e.g. 5/8")
    p.add_argument("--limit", type=int, default=40, help="largest order to list")
    p.set_defaults(func=cmd_kq)

    p = sub.add_parser("count", help="count commuting pairs in a square file")
    p.add_argument("file")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="revalidate and replay a certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="exhaustively enumerate small orders")
    p.add_argument("n", type=int)
    p.add_argument("--histogram", action="store_true", help="emit the count histogram as JSON")
    p.add_argument("--order", choices=("row", "column"), default="row")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", help="write the route table and coverage figures")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--out-dir", default="report")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ImpossibleTargetError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IMPOSSIBLE
    except (InvalidTargetError, ValidationError, ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    except ConstructionError as exc:
        print(f"internal construction failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

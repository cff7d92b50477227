"""Command-line front end.

Subcommands
-----------
* ``eval``  -- polynomial of a monomial matrix, closed form by default
* ``power`` -- structured matrix power
* ``parts`` -- residue decomposition of a polynomial
* ``check`` -- nonnegativity-preservation verdict with witnesses
* ``bench`` -- closed form vs dense Horner timing table (CSV)

Matrix files come in two text formats, auto-detected by the first
non-whitespace character (``{`` means structured) unless ``--format``
overrides:

* dense: first line ``n``, then ``n`` rows of ``n`` whitespace-separated
  rationals (``p/q`` or integers);
* structured: a single JSON object ``{"n": ..., "perm": [...], "values":
  [...]}`` with the permutation as a 1-indexed image list and the values as
  integers or ``"p/q"`` strings.

All functional output is exact (integers or ``p/q``); the only floats ever
printed are benchmark timings.  Exit status: 0 for success or a true
verdict, 1 for a false verdict from ``check`` (or an impossible ``--diff``
mismatch), 2 for input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from gmpy2 import mpq

from .evaluator import eval_monomial
from .membership import counterexample, preserves_monomial_nonnegativity
from .monomial import (
    MonomialMatrix,
    NotMonomialError,
    from_dense,
    power,
    to_dense,
)
from .oracle import SplitMix64, dense_horner_eval, dense_power, random_monomial
from .permutation import Permutation
from .polynomial import (
    ParseError,
    Polynomial,
    eval_scalar,
    format_polynomial,
    parse_polynomial,
    part,
    parts_sum,
)
from .rationals import Matrix, as_rational


# -- matrix text formats -------------------------------------------------------


def parse_dense_matrix(text: str) -> Matrix:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty matrix file", 0)
    try:
        n = int(tokens[0])
    except ValueError:
        raise ParseError(f"expected order on the first line, got {tokens[0]!r}", 0)
    if n < 1:
        raise ParseError("order must be positive", 0)
    if len(tokens) != 1 + n * n:
        raise ParseError(
            f"expected {n * n} entries for order {n}, found {len(tokens) - 1}", 0
        )
    try:
        entries = [as_rational(tok) for tok in tokens[1:]]
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad matrix entry: {exc}", 0)
    return tuple(
        tuple(entries[i * n : (i + 1) * n]) for i in range(n)
    )


def parse_structured_matrix(text: str) -> MonomialMatrix:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad structured matrix: {exc}", exc.pos)
    if not isinstance(record, dict):
        raise ParseError("structured matrix must be a JSON object", 0)
    missing = {"n", "perm", "values"} - set(record)
    if missing:
        raise ParseError(f"structured matrix missing fields {sorted(missing)}", 0)
    n = record["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("field 'n' must be a positive integer", 0)
    perm, values = record["perm"], record["values"]
    if not isinstance(perm, list) or not isinstance(values, list):
        raise ParseError("'perm' and 'values' must be lists", 0)
    if len(perm) != n or len(values) != n:
        raise ParseError("'perm' and 'values' must have length n", 0)
    try:
        return MonomialMatrix(
            tuple(as_rational(v) for v in values),
            Permutation(tuple(int(i) for i in perm)),
        )
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad structured matrix: {exc}", 0)


def load_matrix(path: str, fmt: str = "auto") -> MonomialMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "auto":
        stripped = text.lstrip()
        fmt = "structured" if stripped.startswith("{") else "dense"
    if fmt == "structured":
        return parse_structured_matrix(text)
    return from_dense(parse_dense_matrix(text))


def render_dense(matrix: Matrix) -> str:
    lines = [str(len(matrix))]
    lines.extend(" ".join(str(v) for v in row) for row in matrix)
    return "\n".join(lines) + "\n"


def render_structured(a: MonomialMatrix) -> str:
    record = {
        "n": a.n,
        "perm": list(a.perm.images),
        "values": [str(v) for v in a.values],
    }
    return json.dumps(record) + "\n"


def _render_result(dense: Matrix, output_format: str) -> str:
    if output_format == "structured":
        return render_structured(from_dense(dense))
    return render_dense(dense)


# -- subcommands ---------------------------------------------------------------


def _diff_report(label_a: str, a: Matrix, label_b: str, b: Matrix) -> int:
    print(f"{label_a}:")
    print(render_dense(a), end="")
    print(f"{label_b}:")
    print(render_dense(b), end="")
    mismatches = [
        (i + 1, j + 1, x, y)
        for i, (ra, rb) in enumerate(zip(a, b))
        for j, (x, y) in enumerate(zip(ra, rb))
        if x != y
    ]
    if not mismatches:
        print("discrepancy: none")
        return 0
    for i, j, x, y in mismatches:
        print(f"discrepancy at ({i}, {j}): {x} vs {y}")
    return 1


def cmd_eval(args) -> int:
    p = parse_polynomial(args.poly)
    a = load_matrix(args.matrix, args.format)
    if args.diff:
        return _diff_report(
            "closed form", eval_monomial(p, a),
            "dense horner", dense_horner_eval(p, to_dense(a)),
        )
    if args.via == "oracle":
        result = dense_horner_eval(p, to_dense(a))
    else:
        result = eval_monomial(p, a)
    print(_render_result(result, args.output_format), end="")
    return 0


def cmd_power(args) -> int:
    a = load_matrix(args.matrix, args.format)
    if args.diff:
        return _diff_report(
            "structured", to_dense(power(a, args.exponent)),
            "dense repeated product", dense_power(to_dense(a), args.exponent),
        )
    if args.via == "oracle":
        result = dense_power(to_dense(a), args.exponent)
    else:
        result = to_dense(power(a, args.exponent))
    print(_render_result(result, args.output_format), end="")
    return 0


def cmd_parts(args) -> int:
    p = parse_polynomial(args.poly)
    for r in range(args.modulus):
        print(f"r = {r}: {format_polynomial(part(p, r, args.modulus))}")
    if parts_sum(p, args.modulus) != p:
        print("sum check: FAILED", file=sys.stderr)
        return 1
    print("sum check: parts re-sum to the input exactly")
    return 0


def cmd_check(args) -> int:
    p = parse_polynomial(args.poly)
    report = preserves_monomial_nonnegativity(p, args.order)
    witness_entry = None
    if not report.verdict and args.witness_matrix:
        # emit the certificate at the largest failing order: the most
        # specific witness for the order actually tested
        worst = max(report.failures, key=lambda f: (f.k, -f.r))
        cx = counterexample(p, args.order, worst)
        with open(args.witness_matrix, "w", encoding="utf-8") as fh:
            fh.write(render_dense(to_dense(cx.matrix)))
        witness_entry = cx
    if args.json:
        payload = {
            "n": report.n,
            "verdict": report.verdict,
            "failures": [
                {
                    "k": f.k,
                    "r": f.r,
                    "witness": str(f.witness),
                    "part_value": str(eval_scalar(part(p, f.r, f.k), f.witness)),
                }
                for f in report.failures
            ],
        }
        if witness_entry is not None:
            payload["witness_matrix"] = {
                "file": args.witness_matrix,
                "position": list(witness_entry.position),
                "value": str(witness_entry.value),
            }
        print(json.dumps(payload))
    else:
        kind = "preserves" if report.verdict else "does NOT preserve"
        print(
            f"verdict: {format_polynomial(p)} {kind} entrywise nonnegativity "
            f"on nonnegative monomial matrices of order {report.n}"
        )
        for f in report.failures:
            value = eval_scalar(part(p, f.r, f.k), f.witness)
            print(
                f"  failing part r={f.r} mod k={f.k}: "
                f"{format_polynomial(part(p, f.r, f.k))} = {value} < 0 at t = {f.witness}"
            )
        if witness_entry is not None:
            i, j = witness_entry.position
            print(
                f"  witness matrix written to {args.witness_matrix}; "
                f"p(A) has entry {witness_entry.value} at ({i}, {j})"
            )
    return 0 if report.verdict else 1


def _bench_polynomial(rng: SplitMix64, degree: int) -> Polynomial:
    coeffs = [mpq(1 + rng.below(9), 1 + rng.below(9)) for _ in range(degree + 1)]
    return Polynomial(tuple(coeffs))


def _bench_cell(seed: int, n: int, degree: int) -> tuple[int, int, float, float]:
    cell_seed = SplitMix64(seed ^ (n * 1_000_003 + degree)).next_u64()
    a = random_monomial(cell_seed, n)
    p = _bench_polynomial(SplitMix64(cell_seed + 1), degree)
    t0 = time.perf_counter()
    fast = eval_monomial(p, a)
    t1 = time.perf_counter()
    slow = dense_horner_eval(p, to_dense(a))
    t2 = time.perf_counter()
    if fast != slow:
        raise AssertionError(
            f"closed form and dense Horner disagree at n={n}, m={degree}"
        )
    return n, degree, t1 - t0, t2 - t1


def cmd_bench(args) -> int:
    cells = [(n, m) for n in args.sizes for m in args.degrees]
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(
                pool.map(lambda c: _bench_cell(args.seed, *c), cells)
            )
    else:
        rows = [_bench_cell(args.seed, n, m) for n, m in cells]
    rows.sort(key=lambda row: (row[0], row[1]))
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["n", "m", "t_closed_form", "t_dense", "speedup"])
    for n, m, t_fast, t_slow in rows:
        ratio = t_slow / t_fast if t_fast > 0 else float("inf")
        writer.writerow([n, m, f"{t_fast:.6f}", f"{t_slow:.6f}", f"{ratio:.2f}"])
    text = out.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


# -- argument parsing ------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("need positive integers")
    return values


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monomat",
        description="Exact arithmetic on monomial (generalized permutation) matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_opts(sp):
        sp.add_argument("-A", "--matrix", required=True, help="matrix file")
        sp.add_argument(
            "--format",
            choices=("auto", "dense", "structured"),
            default="auto",
            help="matrix file format (default: auto-detect)",
        )
        sp.add_argument(
            "--output-format",
            choices=("dense", "structured"),
            default="dense",
            help="how to render the resulting matrix",
        )
        sp.add_argument(
            "--via",
            choices=("closed", "oracle"),
            default="closed",
            help="computation route: structured closed form or naive dense",
        )
        sp.add_argument(
            "--diff",
            action="store_true",
            help="compute both routes, print both, and report any discrepancy",
        )

    sp = sub.add_parser("eval", help="evaluate a polynomial at a monomial matrix")
    sp.add_argument("-p", "--poly", required=True, help="polynomial, e.g. 't^2 - 3*t + 1/2'")
    add_matrix_opts(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("power", help="matrix power via the structured formula")
    add_matrix_opts(sp)
    sp.add_argument("-j", "--exponent", type=_nonnegative_int, required=True)
    sp.set_defaults(func=cmd_power)

    sp = sub.add_parser("parts", help="residue decomposition of a polynomial")
    sp.add_argument("-p", "--poly", required=True)
    sp.add_argument("-n", "--modulus", type=_positive_int, required=True)
    sp.set_defaults(func=cmd_parts)

    sp = sub.add_parser(
        "check",
        help="decide entrywise-nonnegativity preservation on nonnegative monomial matrices",
    )
    sp.add_argument("-p", "--poly", required=True)
    sp.add_argument("-n", "--order", type=_positive_int, required=True)
    sp.add_argument(
        "--witness-matrix",
        metavar="FILE",
        help="on a false verdict, write a counterexample matrix here",
    )
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("bench", help="time closed form vs dense Horner (CSV)")
    sp.add_argument("--sizes", type=_int_list, default=[1, 4, 16, 64])
    sp.add_argument("--degrees", type=_int_list, default=[20, 200, 1000])
    sp.add_argument("--seed", type=int, default=2024)
    sp.add_argument(
        "--threads",
        type=_positive_int,
        default=1,
        help="shard bench cells across this many threads (timings stay per-cell)",
    )
    sp.add_argument("-o", "--output", help="write CSV here instead of stdout")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NotMonomialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

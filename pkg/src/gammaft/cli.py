"""Command-line front end.

Subcommands: ``transform``, ``partitions``, ``numbers``, ``physics``, ``verify``.

Floating results are emitted as records with the fixed field order
``inputs..., value_re, value_im, method, achieved_tol``. JSON lines use the
shortest round-tripping float repr, so parsing a record gives back the exact
double that was computed. Exit codes: 0 success, 1 verification failure,
2 bad flags, 3 numeric failure.

Grid sweeps run on ``GAMMAFT_WORKERS`` threads (default: logical cores);
records are always printed in grid order.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import numbers, oracle, physics, transform
from .errors import DomainError, GammaFTError
from .partitions import enumerate_partitions, faa_weight

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


@dataclass(frozen=True)
class OutputRecord:
    inputs: dict
    value_re: float
    value_im: float
    method: str
    achieved_tol: float | None

    def as_dict(self) -> dict:
        out = dict(self.inputs)
        out.update(value_re=self.value_re, value_im=self.value_im,
                   method=self.method, achieved_tol=self.achieved_tol)
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _workers() -> int:
    raw = os.environ.get("GAMMAFT_WORKERS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _map_ordered(fn, items):
    items = list(items)
    if len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        return list(pool.map(fn, items))


def _emit(records: list[OutputRecord], fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r.as_dict()) + "\n")
        return
    if not records:
        return
    rows = [r.as_dict() for r in records]
    writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else repr(v) if isinstance(v, float) else v)
                         for k, v in row.items()})


def _frange(spec: str) -> list[float]:
    try:
        start, stop, step = (float(v) for v in spec.split(":"))
    except ValueError as exc:
        raise DomainError(f"grid must be start:stop:step, got {spec!r}") from exc
    if step <= 0 or stop < start:
        raise DomainError("grid needs step > 0 and stop >= start")
    count = int(round((stop - start) / step)) + 1
    return [start + k * step for k in range(count)]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational num/den: {text!r}") from exc


# transform

def _transform_records(alpha, beta, m, lam, with_oracle):
    inputs = {"alpha": alpha, "beta": beta, "m": m, "lambda": lam}
    p = transform.TransformParams(alpha, beta, m, lam)
    v = transform.eval_transform(p)
    recs = [OutputRecord(inputs, v.real, v.imag, "closed_form", None)]
    if with_oracle:
        r = oracle.quad_transform(p)
        recs.append(OutputRecord(inputs, r.value.real, r.value.imag, "quadrature", r.error))
    return recs


def cmd_transform(args) -> int:
    lams = _frange(args.lambda_grid) if args.lambda_grid else [args.lam]
    chunks = _map_ordered(lambda lam: _transform_records(args.alpha, args.beta, args.m, lam, args.oracle), lams)
    _emit([r for chunk in chunks for r in chunk], args.format)
    return EXIT_OK


# partitions

def cmd_partitions(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["M", "multiplicities", "weight"])
    for p in enumerate_partitions(args.m):
        w.writerow([p.M, " ".join(map(str, p.multiplicities)), str(faa_weight(p))])
    return EXIT_OK


# numbers

def _number_rows(args):
    kind = args.kind
    if kind == "bernoulli":
        top = args.max if args.max is not None else args.m
        if top is None:
            raise DomainError("bernoulli needs --max or --m")
        start = 1 if args.max is not None else top
        shift = 1 if args.variant == "eq47" else 0
        return [(m, m + shift, numbers.bernoulli_number(m, args.variant)) for m in range(start, top + 1)]
    ms = range(args.max + 1) if args.max is not None else [args.m] if args.m is not None else None
    if ms is None:
        raise DomainError(f"{kind} needs --max or --m")
    if kind == "euler":
        return [(m, m, numbers.euler_number(m)) for m in ms]
    if kind == "residue":
        return [(m, m, numbers.gamma_residue(m)) for m in ms]
    if args.beta is None:
        raise DomainError(f"{kind} needs --beta num/den")
    beta = _rational(args.beta)
    fn = {"euler-poly": numbers.euler_polynomial, "monomial": numbers.monomial_sum,
          "laguerre": numbers.laguerre_diagonal}[kind]
    return [(m, m, fn(m, beta)) for m in ms]


def cmd_numbers(args) -> int:
    rows = _number_rows(args)
    if args.format == "json":
        for m, index, v in rows:
            print(json.dumps({"m": m, "index": index, "value": str(v),
                              "numerator": v.numerator, "denominator": v.denominator}))
        return EXIT_OK
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["m", "index", "value", "numerator", "denominator"])
    for m, index, v in rows:
        w.writerow([m, index, str(v), v.numerator, v.denominator])
    return EXIT_OK


# physics

def _physics_record(args, l):
    n = args.n
    inputs = {"n": n, "l": l}
    if args.kind == "expectation":
        inputs["observable"] = args.observable
        if args.observable == "mu":
            inputs["q"] = args.q
            v = complex(physics.expectation_mu(args.q, n, l))
        elif args.observable == "pi":
            v = physics.expectation_pi(n, l)
        else:
            v = complex(physics.expectation_pi2(n, l))
        return OutputRecord(inputs, v.real, v.imag, "closed_form", None)
    if args.kind == "uncertainty":
        return OutputRecord(inputs, physics.uncertainty_product(n, l), 0.0, "closed_form", None)
    inputs.update(a=args.a, x=args.x, p=args.p)
    v = physics.wigner(physics.QuantumIndices(n, l, args.a), args.x, args.p)
    return OutputRecord(inputs, v, 0.0, "closed_form", None)


def cmd_physics(args) -> int:
    if args.kind == "wigner" and (args.x is None or args.p is None):
        raise DomainError("wigner needs --x and --p")
    ls = [float(l) for l in range(args.l_max + 1)] if args.l_max is not None else [args.l]
    records = _map_ordered(lambda l: _physics_record(args, l), ls)
    if args.kind == "wigner" and args.oracle:
        extra = []
        for r in records:
            q = oracle.quad_wigner_result(args.n, r.inputs["l"], args.a, args.x, args.p)
            extra.append(OutputRecord(r.inputs, q.value.real, 0.0, "quadrature", q.error))
        records = [x for pair in zip(records, extra) for x in pair]
    _emit(records, args.format)
    return EXIT_OK


# verify

def cmd_verify(args) -> int:
    from . import verification

    floor = 0.0
    if args.tol is not None:
        if not args.tol > 0:
            raise DomainError("--tol must be > 0")
        # every numeric tolerance is raised to at least --tol; exact checks stay exact
        floor = args.tol
    t0 = time.perf_counter()
    results = verification.run_suite(args.suite, floor)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed in {time.perf_counter() - t0:.1f} s")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gammaft", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transform", help="closed-form transform value")
    t.add_argument("--alpha", type=float, required=True)
    t.add_argument("--beta", type=float, required=True)
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--lambda", dest="lam", type=float, default=0.0)
    t.add_argument("--lambda-grid", metavar="START:STOP:STEP")
    t.add_argument("--oracle", action="store_true", help="add a quadrature record per point")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.set_defaults(func=cmd_transform)

    pa = sub.add_parser("partitions", help="list partitions and weights")
    pa.add_argument("--m", type=int, required=True)
    pa.set_defaults(func=cmd_partitions)

    nb = sub.add_parser("numbers", help="exact Bernoulli/Euler tables")
    nb.add_argument("kind", choices=("bernoulli", "euler", "euler-poly", "residue", "monomial", "laguerre"))
    nb.add_argument("--max", type=int)
    nb.add_argument("--m", type=int)
    nb.add_argument("--beta", help="rational as num/den")
    nb.add_argument("--variant", choices=("eq47", "eq48"), default="eq48")
    nb.add_argument("--format", choices=("json", "csv"), default="csv")
    nb.set_defaults(func=cmd_numbers)

    ph = sub.add_parser("physics", help="oscillator observables")
    ph.add_argument("kind", choices=("expectation", "uncertainty", "wigner"))
    ph.add_argument("--n", type=int, default=0)
    ph.add_argument("--l", type=float, default=0.0)
    ph.add_argument("--l-max", type=int)
    ph.add_argument("--q", type=int, choices=(1, 2), default=1)
    ph.add_argument("--observable", choices=("mu", "pi", "pi2"), default="mu")
    ph.add_argument("--a", type=float, default=1.0)
    ph.add_argument("--x", type=float)
    ph.add_argument("--p", type=float)
    ph.add_argument("--oracle", action="store_true")
    ph.add_argument("--format", choices=("json", "csv"), default="json")
    ph.set_defaults(func=cmd_physics)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--suite", choices=("fast", "slow"), default="fast")
    v.add_argument("--tol", type=float)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"gammaft: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GammaFTError, ArithmeticError) as exc:
        print(f"gammaft: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end.

Every subcommand writes one JSON object to stdout (``region`` writes CSV),
diagnostics go to stderr, and the exit status is 0 only on success: 1 for
domain errors such as a non-embeddable matrix, 2 for invalid arguments.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Iterator

from .core import ComponentClass, MarkovMatrix, classify, det, is_stochastic, make_markov, parity_factor
from .decomp import (Decomposition, RateMatrix, compose, decompose, exp_rate, log_markov,
                     stochastic_s_bounds)
from .errors import MarkovError
from .simulate import empirical_transition, mean_jump_count

REGION_HEADER = ("a", "b", "det", "component", "stochastic", "t", "s")
DEFAULT_RANGE = (-2.0, 3.0)
DEFAULT_STEP = 0.05
# argparse's default only knows -1 and -.5; accept -3e-09 as a value too
_NEGATIVE_NUMBER = re.compile(r"^-(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$")
# grid coordinates are snapped to this many decimals so 1.0 prints as 1.0
GRID_DECIMALS = 12


@dataclass(frozen=True)
class RegionSample:
    a: float
    b: float
    det: float
    component: ComponentClass
    stochastic: bool
    t: float | None
    s: float | None


def _ab(M: MarkovMatrix) -> dict:
    return {"a": M.a, "b": M.b}


def matrix_record(M: MarkovMatrix) -> dict:
    """The fixed field set ``a, b, det, lambda, t, s, component, stochastic``."""
    cls = classify(M)
    rec = {"a": M.a, "b": M.b, "det": det(M), "lambda": None, "t": None, "s": None,
           "component": cls.value, "stochastic": is_stochastic(M)}
    if cls is ComponentClass.IDENTITY:
        d = decompose(M)
        rec.update({"lambda": d.lam, "t": d.t, "s": d.s})
    return rec


def grid(lo: float, hi: float, step: float) -> list[float]:
    if not (math.isfinite(lo) and math.isfinite(hi) and math.isfinite(step)):
        raise ValueError("grid bounds and step must be finite")
    if step <= 0:
        raise ValueError(f"step must be positive, got {step!r}")
    n = math.floor((hi - lo) / step + 1e-9) + 1
    if n < 1:
        raise ValueError(f"empty grid: [{lo}, {hi}] with step {step}")
    return [round(lo + i * step, GRID_DECIMALS) + 0.0 for i in range(n)]


def region_samples(a_range=DEFAULT_RANGE, b_range=DEFAULT_RANGE,
                   step=DEFAULT_STEP) -> Iterator[RegionSample]:
    """One sample per grid point, ``a`` varying slowest."""
    a_values = grid(*a_range, step)
    b_values = grid(*b_range, step)
    for a in a_values:
        for b in b_values:
            M = MarkovMatrix(a, b)
            cls = classify(M)
            t = s = None
            if cls is ComponentClass.IDENTITY:
                d = decompose(M)
                t, s = d.t, d.s
            yield RegionSample(a, b, det(M), cls, is_stochastic(M), t, s)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, ComponentClass):
        return v.value
    return repr(float(v))


def write_region_csv(samples, fh) -> int:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(REGION_HEADER)
    count = 0
    for r in samples:
        writer.writerow([_fmt(getattr(r, k)) for k in REGION_HEADER])
        count += 1
    return count


# -- commands ---------------------------------------------------------------

def cmd_convert(args) -> dict:
    if args.from_ab is not None:
        M = make_markov(*args.from_ab)
        rec = matrix_record(M)
        if rec["t"] is None:
            decompose(M)  # raises with the component-specific message
        return rec
    if args.from_ts is not None:
        t, s = args.from_ts
    else:
        lam, s = args.from_ls
        if not lam > 0:
            raise ValueError(f"lambda must be > 0, got {lam!r}")
        t = -math.log(lam)
    return matrix_record(compose(Decomposition(t, s)))


def cmd_classify(args) -> dict:
    M = make_markov(args.a, args.b)
    cls = classify(M)
    rec = {"a": M.a, "b": M.b, "det": det(M), "component": cls.value,
           "stochastic": is_stochastic(M), "parity": None}
    if cls is not ComponentClass.SINGULAR:
        pf = parity_factor(M)
        rec["parity"] = pf.parity
        if pf.parity < 0:
            rec["factor"] = _ab(pf.factor)
    return rec


def cmd_log(args) -> dict:
    M = make_markov(args.a, args.b)
    Q = log_markov(M)
    return {"a": M.a, "b": M.b, "det": det(M), "alpha": Q.alpha, "beta": Q.beta}


def _finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"arguments must be finite, got {v!r}")


def cmd_exp(args) -> dict:
    _finite(args.alpha, args.beta, args.t)
    M = exp_rate(RateMatrix(args.alpha, args.beta), args.t)
    rec = {"alpha": args.alpha, "beta": args.beta, "time": args.t}
    rec.update(matrix_record(M))
    return rec


def cmd_bounds(args) -> dict:
    _finite(args.t)
    lo, hi = stochastic_s_bounds(args.t)
    return {"t": args.t, "lambda": math.exp(-args.t), "s_min": lo, "s_max": hi,
            "at_s_min": _ab(compose(Decomposition(args.t, lo))),
            "at_s_max": _ab(compose(Decomposition(args.t, hi)))}


def cmd_simulate(args) -> dict:
    _finite(args.alpha, args.beta, args.horizon)
    rates = RateMatrix(args.alpha, args.beta)
    emp = empirical_transition(rates, args.horizon, args.n, args.seed, workers=args.workers)
    if args.p0 is not None:
        p0 = tuple(args.p0)
    elif rates.alpha + rates.beta > 0:
        r = rates.alpha + rates.beta
        p0 = (rates.beta / r, rates.alpha / r)  # stationary distribution
    else:
        p0 = (0.5, 0.5)
    jumps = mean_jump_count(rates, args.horizon, p0, max(args.n, 2), args.seed, workers=args.workers)
    analytic = exp_rate(rates, args.horizon)
    est = dict(zip("ab", emp.estimate))
    se = dict(zip("ab", emp.std_err))
    return {
        "alpha": rates.alpha, "beta": rates.beta, "horizon": args.horizon,
        "n_per_state": args.n, "seed": args.seed,
        "counts": emp.counts.tolist(),
        "empirical": est,
        "std_err": se,
        "analytic": _ab(analytic),
        "within_4sigma": {k: abs(est[k] - getattr(analytic, k)) <= 4 * se[k] for k in "ab"},
        "mean_jumps": {"mean": jumps.mean, "std_err": jumps.std_err,
                       "initial_distribution": list(p0)},
    }


def cmd_evolve(args) -> dict:
    _finite(args.alpha, args.beta, args.t)
    p1, p2 = args.p0
    if min(p1, p2) < 0 or abs(p1 + p2 - 1.0) > 1e-9:
        raise ValueError(f"p0 must be a probability distribution, got {[p1, p2]}")
    M = exp_rate(RateMatrix(args.alpha, args.beta), args.t)
    q1 = (1.0 - M.a) * p1 + M.b * p2
    q2 = M.a * p1 + (1.0 - M.b) * p2
    return {"alpha": args.alpha, "beta": args.beta, "t": args.t, "p0": [p1, p2],
            "p": [q1, q2], "norm1": abs(q1) + abs(q2), "matrix": _ab(M)}


def cmd_region(args, out) -> None:
    samples = region_samples(tuple(args.a_range), tuple(args.b_range), args.step)
    write_region_csv(samples, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="liemarkov", description="Lie-geometric tools for 2x2 Markov matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common],
                       help="convert between (a, b), (t, s) and (lambda, s)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--from-ab", nargs=2, type=float, metavar=("A", "B"))
    g.add_argument("--from-ts", nargs=2, type=float, metavar=("T", "S"))
    g.add_argument("--from-ls", nargs=2, type=float, metavar=("L", "S"))
    p.set_defaults(func=cmd_convert)

    for name, func, text in (("classify", cmd_classify, "component and parity factorization"),
                             ("log", cmd_log, "real generator Q with exp(Q) = M")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("a", type=float)
        p.add_argument("b", type=float)
        p.set_defaults(func=func)

    p = sub.add_parser("exp", parents=[common], help="closed-form exp(Qt)")
    p.add_argument("alpha", type=float)
    p.add_argument("beta", type=float)
    p.add_argument("t", type=float)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("bounds", parents=[common], help="stochastic interval of s at time t")
    p.add_argument("t", type=float)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("region", parents=[common], help="CSV grid of the (a, b) plane")
    p.add_argument("--a-range", nargs=2, type=float, default=list(DEFAULT_RANGE), metavar=("LO", "HI"))
    p.add_argument("--b-range", nargs=2, type=float, default=list(DEFAULT_RANGE), metavar=("LO", "HI"))
    p.add_argument("--step", type=float, default=DEFAULT_STEP)
    p.set_defaults(func=None)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo check of exp(Qt)")
    p.add_argument("alpha", type=float)
    p.add_argument("beta", type=float)
    p.add_argument("horizon", type=float)
    p.add_argument("--n", type=int, default=100_000, help="runs per initial state")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p0", nargs=2, type=float, metavar=("P1", "P2"),
                   help="initial distribution for the jump count (default: stationary)")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("evolve", parents=[common], help="apply exp(Qt) to a distribution")
    p.add_argument("alpha", type=float)
    p.add_argument("beta", type=float)
    p.add_argument("t", type=float)
    p.add_argument("--p0", nargs=2, type=float, required=True, metavar=("P1", "P2"))
    p.set_defaults(func=cmd_evolve)

    for p in (parser, *sub.choices.values()):
        p._negative_number_matcher = _NEGATIVE_NUMBER
    return parser


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "region":
            # build the grid before opening the output so bad args leave no file
            grid(*args.a_range, args.step)
            grid(*args.b_range, args.step)
            with _output(args.out) as out:
                cmd_region(args, out)
        else:
            record = args.func(args)
            with _output(args.out) as out:
                out.write(json.dumps(record, allow_nan=False) + "\n")
    except BrokenPipeError:
        sys.stderr.close()  # downstream closed early (e.g. piped to head)
        return 0
    except MarkovError as exc:
        print(f"liemarkov {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"liemarkov {args.command}: invalid input: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Randomized cross-check of every algorithm against the reference oracles.

    python scripts/property_campaign.py --cases 20000 --seed 7
    python scripts/property_campaign.py --suites denest sqrt --max-surd-terms 5
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from dixit import oracle
from dixit.digitboard import board_of_value, board_value
from dixit.medieval_arith import duplicate_multiply, multiply_indian
from dixit.polynomial import Polynomial, divide_tabular, sqrt_poly
from dixit.quantity import Quantity, add, div, mul, sub
from dixit.surd import SurdSum, denest, expand_square

ALL_SUITES = ("multiply", "division", "sqrt", "denest", "quantity")


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 0
    cases: int = 10_000
    suites: tuple[str, ...] = ALL_SUITES
    max_int: int = 10**9
    max_degree: int = 8
    max_terms: int = 5
    max_radicand: int = 50
    max_surd_terms: int = 4


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0


def _poly(rng: random.Random, cfg: CampaignConfig, max_degree: int | None = None) -> Polynomial:
    top = cfg.max_degree if max_degree is None else max_degree
    count = rng.randint(0, min(cfg.max_terms, top + 1))
    return Polynomial({
        d: Quantity(Fraction(rng.choice((-1, 1)) * rng.randint(1, 30), rng.randint(1, 6)))
        for d in rng.sample(range(top + 1), count)
    })


def check_multiply(rng, cfg):
    a, b = rng.randint(0, cfg.max_int), rng.randint(0, cfg.max_int)
    want = oracle.oracle_mul_int(a, b)
    got = {
        "indian": board_value(multiply_indian(board_of_value(a), board_of_value(b), check_invariant=True)[0]),
        "duplication": board_value(duplicate_multiply(board_of_value(a), board_of_value(b))[0]),
    }
    bad = [k for k, v in got.items() if v != want]
    return f"{a} x {b}: {bad}" if bad else None


def check_division(rng, cfg):
    d = _poly(rng, cfg)
    if d.is_zero:
        return None
    q = _poly(rng, cfg)
    r = _poly(rng, cfg, d.degree - 1) if d.degree else Polynomial()
    got = divide_tabular(q * d + r, d)[:2]
    return None if got == (q, r) else f"q={q} d={d} r={r}"


def check_sqrt(rng, cfg):
    s = _poly(rng, cfg)
    if s.is_zero:
        return None
    root = sqrt_poly(s * s)[0]
    return None if root in (s, -s) else f"S={s} root={root}"


def check_denest(rng, cfg):
    s = SurdSum([rng.randint(1, cfg.max_radicand) for _ in range(rng.randint(1, cfg.max_surd_terms))])
    e = expand_square(s)
    root = denest(e)[0]
    return None if expand_square(root) == e else f"{s} -> {root}"


def check_quantity(rng, cfg):
    a = Quantity(Fraction(rng.randint(-100, 100), rng.randint(1, 30)))
    b = Quantity(Fraction(rng.randint(-100, 100), rng.randint(1, 30)))
    x, y = oracle.signed(a), oracle.signed(b)
    ok = (
        oracle.signed(mul(a, b)) == x * y
        and oracle.signed(add(a, b)) == x + y
        and oracle.signed(sub(a, b)) == x - y
        and (b.is_nothing or oracle.signed(div(a, b)) == x / y)
    )
    return None if ok else f"{a!r}, {b!r}"


CHECKS = {
    "multiply": check_multiply,
    "division": check_division,
    "sqrt": check_sqrt,
    "denest": check_denest,
    "quantity": check_quantity,
}


def run_campaign(cfg: CampaignConfig) -> list[SuiteResult]:
    results = []
    for name in cfg.suites:
        rng = random.Random(f"{cfg.seed}-{name}")
        result = SuiteResult(name)
        start = time.perf_counter()
        for _ in range(cfg.cases):
            failure = CHECKS[name](rng, cfg)
            result.cases += 1
            if failure:
                result.failures.append(failure)
        result.seconds = time.perf_counter() - start
        results.append(result)
    return results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = CampaignConfig()
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--cases", type=int, default=defaults.cases)
    parser.add_argument("--suites", nargs="+", choices=ALL_SUITES, default=list(ALL_SUITES))
    parser.add_argument("--max-surd-terms", type=int, default=defaults.max_surd_terms)
    parser.add_argument("--max-radicand", type=int, default=defaults.max_radicand)
    args = parser.parse_args()
    cfg = CampaignConfig(
        seed=args.seed, cases=args.cases, suites=tuple(args.suites),
        max_surd_terms=args.max_surd_terms, max_radicand=args.max_radicand,
    )

    failed = False
    for r in run_campaign(cfg):
        status = "ok" if not r.failures else f"{len(r.failures)} FAILED"
        print(f"{r.name:<10} {r.cases:>7} cases  {r.seconds:7.2f} s  {status}")
        for f in r.failures[:5]:
            print(f"    {f}")
        failed |= bool(r.failures)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()

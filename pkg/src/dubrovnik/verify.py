"""Property suites behind ``dubrovnik verify``.

Each suite yields ``CaseResult`` records in a deterministic order.  ``size``
is the suite's scale knob: crossings for the random suites, p+q for chains,
word length for rational tangles.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .families import (
    ChainSpec,
    CheckFailed,
    RationalWord,
    build_chain,
    conway_sign,
    expected_chain_degree,
    permuted_twists_equal,
    verify_theorem21,
)
from .moves import random_link, random_moves, random_tangle
from .ring import Z, z_degree, z_min_degree
from .skein import SkeinEngine, kidwell_bound

__all__ = ["CaseResult", "SUITES", "DEFAULTS", "run_suite", "simple_chains"]


@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}" + (f" {self.detail}" if self.detail else "")


def _skein(size: int, seed: int, cases: int, engine: SkeinEngine) -> Iterator[CaseResult]:
    rng = random.Random(seed)
    done = 0
    while done < cases:
        d = random_link(rng, size)
        if d.n_crossings == 0:
            continue
        c = rng.randrange(d.n_crossings)
        lhs = engine.evaluate_link(d) - engine.evaluate_link(d.switch(c))
        rhs = Z * (engine.evaluate_link(d.smooth(c, "0")) - engine.evaluate_link(d.smooth(c, "inf")))
        yield CaseResult(f"skein[{done}]", lhs == rhs, f"N={d.n_crossings} c={c}")
        done += 1


def _isotopy(size: int, seed: int, cases: int, engine: SkeinEngine) -> Iterator[CaseResult]:
    rng = random.Random(seed)
    for i in range(cases):
        d = random_link(rng, size)
        moved = random_moves(d, 20, rng.randrange(1 << 30))
        same = engine.evaluate_link(d) == engine.evaluate_link(moved)
        yield CaseResult(f"isotopy[{i}]", same, f"N={d.n_crossings}->{moved.n_crossings}")


def _bounds(size: int, seed: int, cases: int, engine: SkeinEngine) -> Iterator[CaseResult]:
    rng = random.Random(seed)
    for i in range(cases):
        t = random_tangle(rng, size)
        m = engine.decompose(t)
        worst = max(z_degree(f) for f in m.coefficients)
        yield CaseResult(
            f"bounds[{i}]", m.satisfies_bound(), f"N={m.source_N} B={m.source_B} maxdeg={worst}"
        )


def simple_chains(max_components: int) -> Iterator[ChainSpec]:
    """Closed chains of +-2 clasps, one per circular sign arrangement."""
    for k in range(2, max_components + 1):
        seen = set()
        for signs in itertools.product((2, -2), repeat=k):
            key = min(signs[i:] + signs[:i] for i in range(k))
            if key not in seen:
                seen.add(key)
                yield ChainSpec(key)


def _chains(size: int, seed: int, cases: int, engine: SkeinEngine) -> Iterator[CaseResult]:
    for spec in simple_chains(size):
        poly = engine.evaluate_link(build_chain(spec))
        deg, low = z_degree(poly), z_min_degree(poly)
        want = expected_chain_degree(spec.p, spec.q, spec.n_crossings)
        ok = deg == want and low == -(len(spec.twists) - 1)
        name = "chain(" + ",".join(str(m) for m in spec.twists) + ")"
        yield CaseResult(name, ok, f"p={spec.p} q={spec.q} N={spec.n_crossings} degree={deg} expected={want} zmin={low}")


def _rational(size: int, seed: int, cases: int, engine: SkeinEngine) -> Iterator[CaseResult]:
    for sign in ("positive", "negative"):
        for n in range(0, size + 1):
            for letters in itertools.product("VH", repeat=n):
                r = RationalWord(sign, "".join(letters))
                name = f"rational({sign[0]}{r.word or '-'})"
                if conway_sign(r) != sign:
                    yield CaseResult(name, False, "continued fraction has the wrong sign")
                    continue
                if n == 0:
                    yield CaseResult(name, True, "N=1")
                    continue
                try:
                    rep = verify_theorem21(r, engine)
                except CheckFailed as exc:
                    yield CaseResult(name, False, str(exc))
                    continue
                ok = rep.alternating and rep.bridge == 1
                yield CaseResult(name, ok, f"N={rep.n_crossings} reading={rep.reading}")


MUTATION_CASES = ((2, 4, -4, 2), (2, -2, 2, -2))


def _mutation(size: int, seed: int, cases: int, engine: SkeinEngine) -> Iterator[CaseResult]:
    for twists in MUTATION_CASES:
        spec = ChainSpec(twists)
        for perm in sorted(set(itertools.permutations(range(len(twists))))):
            permuted = tuple(twists[i] for i in perm)
            name = f"mutation({','.join(map(str, twists))}->{','.join(map(str, permuted))})"
            try:
                permuted_twists_equal(spec, perm, engine)
            except CheckFailed:
                yield CaseResult(name, False)
                continue
            yield CaseResult(name, True)


Suite = Callable[[int, int, int, SkeinEngine], Iterator[CaseResult]]

SUITES: dict[str, Suite] = {
    "skein": _skein,
    "isotopy": _isotopy,
    "bounds": _bounds,
    "chains": _chains,
    "rational": _rational,
    "mutation": _mutation,
}

# (size, cases)
DEFAULTS = {
    "skein": (10, 200),
    "isotopy": (10, 100),
    "bounds": (10, 500),
    "chains": (7, 0),
    "rational": (6, 0),
    "mutation": (0, 0),
}


def run_suite(
    name: str,
    size: int | None = None,
    seed: int = 0,
    cases: int | None = None,
    engine: SkeinEngine | None = None,
) -> Iterator[CaseResult]:
    if name == "all":
        for sub in SUITES:
            yield from run_suite(sub, size, seed, cases, engine)
        return
    if name not in SUITES:
        raise KeyError(name)
    d_size, d_cases = DEFAULTS[name]
    yield from SUITES[name](
        d_size if size is None else size,
        seed,
        d_cases if cases is None else cases,
        engine or SkeinEngine(),
    )

"""Chains of unknotted circles and sign-coherent rational tangles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .bridges import longest_bridge
from .diagram import BASIS_R1, BASIS_R2, Diagram, glue, hcompose, rebuild, vcompose
from .ring import ZERO, LaurentPoly, lam_power, z_degree
from .skein import BASIS_NAMES, SkeinEngine, default_engine
from .wiring import WiringDiagram, chain_wiring

__all__ = [
    "InvalidSpec",
    "CheckFailed",
    "ChainSpec",
    "RationalWord",
    "twist_tangle",
    "build_chain",
    "chain_as_tangle",
    "expected_chain_degree",
    "split_chain_into_tangles",
    "build_rational",
    "verify_theorem21",
    "conway_sign",
    "permuted_twists_equal",
    "braid_closure",
    "torus_3_4",
]


class InvalidSpec(ValueError):
    pass


class CheckFailed(AssertionError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class ChainSpec:
    twists: tuple[int, ...]
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(m) for m in self.twists))
        if not self.twists:
            raise InvalidSpec("a chain needs at least one twist region")
        for m in self.twists:
            if m == 0 or m % 2:
                raise InvalidSpec(f"twist counts must be nonzero and even, got {m}")
        if self.closed and len(self.twists) < 2:
            raise InvalidSpec("a closed chain needs at least two twist regions")

    @property
    def p(self) -> int:
        return sum(1 for m in self.twists if m > 0)

    @property
    def q(self) -> int:
        return sum(1 for m in self.twists if m < 0)

    @property
    def n_crossings(self) -> int:
        return sum(abs(m) for m in self.twists)

    @property
    def n_components(self) -> int:
        k = len(self.twists)
        return k if self.closed else k + 1


def twist_tangle(m: int) -> Diagram:
    """|m| crossings stacked vertically; two such arcs hook each other m/2 times."""
    piece = BASIS_R2 if m > 0 else BASIS_R1
    return reduce(vcompose, [piece] * abs(m))


def chain_as_tangle(twists) -> Diagram:
    return reduce(hcompose, [twist_tangle(m) for m in twists])


def build_chain(spec: ChainSpec) -> Diagram:
    t = chain_as_tangle(spec.twists)
    if spec.closed:
        return glue([t], [((0, 1), (0, 0)), ((0, 3), (0, 2))])
    # cap both ends of the row
    return glue([t], [((0, 0), (0, 2)), ((0, 1), (0, 3))])


def expected_chain_degree(p: int, q: int, n: int) -> int:
    return n - min(p, q) - 1


def _alternating_order(twists) -> list[int]:
    pos = [m for m in twists if m > 0]
    neg = [m for m in twists if m < 0]
    out = []
    while pos or neg:
        if pos:
            out.append(pos.pop(0))
        if neg:
            out.append(neg.pop(0))
    return out


def _sign_blocks(order: list[int], grouping: str) -> list[list[int]]:
    pos = [m for m in order if m > 0]
    neg = [m for m in order if m < 0]
    if not pos or not neg:
        return [list(order)]
    if grouping == "alternating":
        n = min(len(pos), len(neg))
        blocks = [order[2 * i: 2 * i + 2] for i in range(n - 1)]
        blocks.append(order[2 * (n - 1):])
        return blocks
    a = len(pos) // 2
    b = (len(neg) + 1) // 2
    first = pos[a:] + neg[:b]
    second = neg[b:] + pos[:a]
    return [blk for blk in (first, second) if blk]


def split_chain_into_tangles(spec: ChainSpec, grouping: str = "alternating"):
    """Cut a closed chain into consecutive blocks of twist regions.

    ``alternating`` first interleaves the signs (a mutation of the chain,
    which leaves the polynomial alone) and puts one +/- junction in each of
    min(p, q) blocks.  ``blocked`` lists all positive regions, then all
    negative ones, and cuts inside each run so both blocks hold a junction.
    Returns ``(wiring, tangles, order)`` where ``order`` is the twist sequence
    the tangles realize.
    """
    if not spec.closed:
        raise InvalidSpec("only closed chains are split into wiring slots")
    if grouping == "alternating":
        order = _alternating_order(spec.twists)
    elif grouping == "blocked":
        order = [m for m in spec.twists if m > 0] + [m for m in spec.twists if m < 0]
    else:
        raise InvalidSpec(f"unknown grouping {grouping!r}")
    blocks = _sign_blocks(order, grouping)
    tangles = [chain_as_tangle(blk) for blk in blocks]
    flat = [m for blk in blocks for m in blk]
    if len(blocks) == 1:
        w = WiringDiagram(1, (((0, 1), (0, 0)), ((0, 3), (0, 2)))).validate()
    else:
        w = chain_wiring(len(blocks))
    return w, tangles, tuple(flat)


@dataclass(frozen=True)
class RationalWord:
    sign: str
    word: str = ""

    def __post_init__(self):
        if self.sign not in ("positive", "negative"):
            raise InvalidSpec("sign must be positive or negative")
        w = self.word.upper()
        if set(w) - {"V", "H"}:
            raise InvalidSpec("rational words use only the letters V and H")
        object.__setattr__(self, "word", w)

    @property
    def n_crossings(self) -> int:
        return 1 + len(self.word)

    @property
    def kind(self) -> str | None:
        return self.word[-1] if self.word else None


def build_rational(r: RationalWord) -> Diagram:
    """V adjoins the crossing on the right, H stacks it underneath."""
    piece = BASIS_R1 if r.sign == "positive" else BASIS_R2
    t = piece
    for ch in r.word:
        t = hcompose(t, piece) if ch == "V" else vcompose(t, piece)
    return t


def conway_sign(r: RationalWord) -> str:
    eps = 1 if r.sign == "positive" else -1
    f = Fraction(eps)
    for ch in r.word:
        f = f + eps if ch == "V" else 1 / (1 / f + eps)
    return "positive" if f > 0 else "negative"


# leading z^(N-1) coordinates (P, Q, R1, R2) claimed for each case
_CLAIMED = {
    ("positive", "V"): {"R1": 0, "Q": 1},
    ("positive", "H"): {"R1": 0, "P": -1},
    ("negative", "V"): {"R2": 0, "Q": -1},
    ("negative", "H"): {"R2": 0, "P": 1},
}


def _claimed_vector(sign: str, kind: str, swap_pq: bool) -> tuple[LaurentPoly, ...]:
    out = dict.fromkeys(BASIS_NAMES, ZERO)
    for name, e in _CLAIMED[(sign, kind)].items():
        if swap_pq and name in ("P", "Q"):
            name = "Q" if name == "P" else "P"
        out[name] = lam_power(0) if name in ("R1", "R2") else -lam_power(e)
    return tuple(out[n] for n in BASIS_NAMES)


@dataclass(frozen=True)
class Theorem21Report:
    word: RationalWord
    n_crossings: int
    degree: int | float
    leading: tuple[LaurentPoly, ...]
    matches_as_built: bool
    matches_swapped: bool
    alternating: bool
    bridge: int

    @property
    def passed(self) -> bool:
        return self.degree == self.n_crossings - 1 and (self.matches_as_built or self.matches_swapped)

    @property
    def reading(self) -> str:
        if self.matches_as_built:
            return "as built"
        if self.matches_swapped:
            return "P/Q swapped"
        return "none"


def _equal_up_to_sign(a, b) -> bool:
    return tuple(a) == tuple(b) or tuple(a) == tuple(-x for x in b)


def verify_theorem21(r: RationalWord, engine: SkeinEngine | None = None) -> Theorem21Report:
    if r.n_crossings < 2:
        raise InvalidSpec("the leading-term law needs at least two crossings")
    t = build_rational(r)
    m = (engine or default_engine()).decompose(t)
    n = t.n_crossings
    degree = max(z_degree(f) for f in m.coefficients)
    leading = tuple(f.z_part(n - 1) for f in m.coefficients)
    report = Theorem21Report(
        word=r,
        n_crossings=n,
        degree=degree,
        leading=leading,
        matches_as_built=_equal_up_to_sign(leading, _claimed_vector(r.sign, r.kind, False)),
        matches_swapped=_equal_up_to_sign(leading, _claimed_vector(r.sign, r.kind, True)),
        alternating=t.is_alternating(),
        bridge=longest_bridge(t)[1],
    )
    if not report.passed:
        raise CheckFailed(f"leading part for {r.sign} {r.word!r} does not match", report)
    return report


@dataclass(frozen=True)
class PermutationReport:
    original: tuple[int, ...]
    permuted: tuple[int, ...]
    equal: bool
    polynomial: LaurentPoly


def permuted_twists_equal(spec: ChainSpec, perm, engine: SkeinEngine | None = None) -> PermutationReport:
    if not spec.closed:
        raise InvalidSpec("mutation check is defined for closed chains")
    perm = tuple(perm)
    if sorted(perm) != list(range(len(spec.twists))):
        raise InvalidSpec("perm must be a permutation of the twist indices")
    engine = engine or default_engine()
    other = ChainSpec(tuple(spec.twists[i] for i in perm), True)
    a = engine.evaluate_link(build_chain(spec))
    b = engine.evaluate_link(build_chain(other))
    report = PermutationReport(spec.twists, other.twists, a == b, a)
    if not report.equal:
        raise CheckFailed(f"{spec.twists} and {other.twists} evaluate differently", report)
    return report


def braid_closure(strands: int, word) -> Diagram:
    """Closure of a braid word; generator ``i`` (1-based, signed) crosses strands i, i+1."""
    nxt = [0]

    def fresh():
        nxt[0] += 1
        return nxt[0]

    top = [fresh() for _ in range(strands)]
    cur = list(top)
    crossings = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise InvalidSpec(f"generator {g} out of range for {strands} strands")
        a, b = cur[i], cur[i + 1]
        c, d = fresh(), fresh()
        # counterclockwise: lower-left a, lower-right b, upper-right d, upper-left c
        crossings.append((a, b, d, c, 0 if g > 0 else 1))
        cur[i], cur[i + 1] = c, d
    return rebuild(crossings, None, 0, list(zip(cur, top)))


def torus_3_4() -> Diagram:
    return braid_closure(3, [1, 2] * 4)

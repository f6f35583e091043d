"""Wiring diagrams: k tangle slots in a row joined by non-crossing arcs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import POSITIONS, Diagram, glue
from .bridges import longest_bridge
from .ring import ZERO, LaurentPoly, z_degree
from .skein import BASIS_NAMES, SkeinEngine, basis_diagram, default_engine

__all__ = [
    "WiringDiagram",
    "WiringError",
    "MalformedLine",
    "NotAMatching",
    "CrossingArcs",
    "ArityMismatch",
    "BoundViolated",
    "BoundReport",
    "parse_wiring",
    "format_wiring",
    "chain_wiring",
    "insert_tangles",
    "theorem13_bound",
    "evaluate_by_decomposition",
    "check_bound",
    "random_wiring",
]

_POS = {name: j for j, name in enumerate(POSITIONS)}


class WiringError(ValueError):
    pass


class MalformedLine(WiringError):
    pass


class NotAMatching(WiringError):
    pass


class CrossingArcs(WiringError):
    pass


class ArityMismatch(WiringError):
    pass


class BoundViolated(AssertionError):
    pass


Port = tuple[int, int]  # (slot index from 0, endpoint index)


def _boundary_word(k: int) -> list[Port]:
    # top edges left to right, then bottom edges right to left
    top = [(s, p) for s in range(k) for p in (0, 1)]
    bottom = [(s, p) for s in reversed(range(k)) for p in (3, 2)]
    return top + bottom


@dataclass(frozen=True)
class WiringDiagram:
    k: int
    pairing: tuple[tuple[Port, Port], ...]
    closed_wires: int = 0

    def validate(self) -> "WiringDiagram":
        if self.k < 1:
            raise NotAMatching("a wiring needs at least one slot")
        seen: dict[Port, int] = {}
        for a, b in self.pairing:
            for port in (a, b):
                s, p = port
                if not (0 <= s < self.k and 0 <= p < 4):
                    raise NotAMatching(f"no endpoint {s + 1}.{p} in a {self.k}-slot wiring")
                if port in seen:
                    raise NotAMatching(f"endpoint {s + 1}.{POSITIONS[p]} joined twice")
                seen[port] = 1
            if a == b:
                raise NotAMatching("an endpoint cannot be joined to itself")
        if len(seen) != 4 * self.k:
            raise NotAMatching(f"{4 * self.k - len(seen)} endpoints left unjoined")
        if self.closed_wires < 0:
            raise NotAMatching("negative closed wire count")
        self._check_noncrossing()
        return self

    def _check_noncrossing(self) -> None:
        where = {port: i for i, port in enumerate(_boundary_word(self.k))}
        mate = {}
        for a, b in self.pairing:
            mate[where[a]] = where[b]
            mate[where[b]] = where[a]
        stack = []
        for i in range(4 * self.k):
            j = mate[i]
            if j > i:
                stack.append(j)
            elif not stack or stack.pop() != i:
                raise CrossingArcs("wiring arcs cannot be drawn without crossing")

    def joins(self):
        return list(self.pairing)


def _port(tok: str, k: int, lineno: int) -> Port:
    try:
        s, p = tok.split(".")
        slot = int(s)
        pos = _POS[p.upper()]
    except (ValueError, KeyError):
        raise MalformedLine(f"line {lineno}: bad endpoint {tok!r}") from None
    if not 1 <= slot <= k:
        raise NotAMatching(f"line {lineno}: slot {slot} out of range 1..{k}")
    return slot - 1, pos


def parse_wiring(text: str) -> WiringDiagram:
    k = None
    pairs = []
    circles = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0].upper()
        if head == "SLOTS" and len(parts) == 2 and k is None:
            try:
                k = int(parts[1])
            except ValueError:
                raise MalformedLine(f"line {lineno}: bad slot count") from None
            if k < 1:
                raise MalformedLine(f"line {lineno}: slot count must be positive")
        elif head == "JOIN" and len(parts) == 3 and k is not None:
            pairs.append((_port(parts[1], k, lineno), _port(parts[2], k, lineno)))
        elif head == "O" and len(parts) == 2 and k is not None:
            try:
                circles += int(parts[1])
            except ValueError:
                raise MalformedLine(f"line {lineno}: bad circle count") from None
        else:
            raise MalformedLine(f"line {lineno}: cannot parse {raw.strip()!r}")
    if k is None:
        raise MalformedLine("missing SLOTS line")
    return WiringDiagram(k, tuple(pairs), circles).validate()


def format_wiring(w: WiringDiagram) -> str:
    lines = [f"SLOTS {w.k}"]
    for (s, p), (t, q) in w.pairing:
        lines.append(f"JOIN {s + 1}.{POSITIONS[p]} {t + 1}.{POSITIONS[q]}")
    if w.closed_wires:
        lines.append(f"O {w.closed_wires}")
    return "\n".join(lines) + "\n"


def chain_wiring(k: int) -> WiringDiagram:
    """Slots in a cycle: each slot's east side joins the next slot's west side."""
    pairs = []
    for i in range(k):
        j = (i + 1) % k
        pairs.append(((i, 1), (j, 0)))
        pairs.append(((i, 3), (j, 2)))
    return WiringDiagram(k, tuple(pairs)).validate()


def _check_arity(w: WiringDiagram, tangles) -> None:
    if len(tangles) != w.k:
        raise ArityMismatch(f"wiring has {w.k} slots but {len(tangles)} tangles were given")
    for t in tangles:
        if not t.is_tangle:
            raise ArityMismatch("every slot must hold a four-ended tangle")


def insert_tangles(w: WiringDiagram, tangles) -> Diagram:
    _check_arity(w, tangles)
    joins = [((s, p), (t, q)) for (s, p), (t, q) in w.pairing]
    return glue(list(tangles), joins, None, circles=w.closed_wires)


def theorem13_bound(w: WiringDiagram, tangles) -> int:
    _check_arity(w, tangles)
    total = w.k - 1
    for t in tangles:
        _, b = longest_bridge(t)
        total += t.n_crossings - b
    return total


def evaluate_by_decomposition(
    w: WiringDiagram, tangles, engine: SkeinEngine | None = None
) -> LaurentPoly:
    """Expand each slot in the basis and sum over the basis links."""
    _check_arity(w, tangles)
    engine = engine or default_engine()
    coeffs = [engine.decompose(t).coefficients for t in tangles]
    total = ZERO
    for choice in itertools.product(range(4), repeat=w.k):
        weight = coeffs[0][choice[0]]
        for slot, idx in enumerate(choice[1:], 1):
            if not weight:
                break
            weight = weight * coeffs[slot][idx]
        if not weight:
            continue
        link = insert_tangles(w, [basis_diagram(BASIS_NAMES[i]) for i in choice])
        value = engine.evaluate_link(link)
        if z_degree(value) > w.k - 1:
            raise BoundViolated(f"basis link with {link.n_crossings} crossings has z-degree {z_degree(value)}")
        total = total + weight * value
    return total


@dataclass(frozen=True)
class BoundReport:
    bound: int
    actual_degree: int | float
    slack: int | float
    polynomial: LaurentPoly


def check_bound(w: WiringDiagram, tangles, engine: SkeinEngine | None = None) -> BoundReport:
    bound = theorem13_bound(w, tangles)
    poly = evaluate_by_decomposition(w, tangles, engine)
    deg = z_degree(poly)
    report = BoundReport(bound, deg, bound - deg, poly)
    if report.slack < 0:
        raise BoundViolated(f"z-degree {deg} exceeds the bound {bound}")
    return report



def random_wiring(rng, k: int, max_closed: int = 1) -> WiringDiagram:
    """A random non-crossing wiring on ``k`` slots."""
    word = _boundary_word(k)

    def match(lo: int, hi: int, out: list):
        # pair up word[lo:hi] without crossings
        if lo >= hi:
            return
        j = rng.randrange(lo + 1, hi, 2)
        out.append((word[lo], word[j]))
        match(lo + 1, j, out)
        match(j + 1, hi, out)

    pairs: list = []
    match(0, 4 * k, pairs)
    return WiringDiagram(k, tuple(pairs), rng.randint(0, max_closed)).validate()

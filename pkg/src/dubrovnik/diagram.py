"""Combinatorial link and 2-string tangle diagrams.

A crossing stores four edge labels in counterclockwise order together with a
flag ``u`` telling which opposite pair of slots carries the under-strand
(slots ``u`` and ``u + 2``).  Switching a crossing only flips ``u``, so slot
positions are stable under switches.  The PD text format always writes the
crossing rotated so the under-strand sits in slots 0 and 2.

Slot positions are packed into integers: slot ``k`` of crossing ``c`` is
``4 * c + k``; tangle endpoint ``j`` (0..3 for NW, NE, SW, SE) is ``-(j + 1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "POSITIONS",
    "Diagram",
    "DiagramError",
    "MalformedLine",
    "DuplicateEdgeUse",
    "NonPlanar",
    "BadEndpointSet",
    "BadCrossingIndex",
    "parse_pd",
    "format_pd",
    "canonical_key",
    "canonical_tuple",
    "rebuild",
    "glue",
    "hcompose",
    "vcompose",
    "numerator_closure",
    "denominator_closure",
    "BASIS_P",
    "BASIS_Q",
    "BASIS_R1",
    "BASIS_R2",
]

POSITIONS = ("NW", "NE", "SW", "SE")
NW, NE, SW, SE = range(4)
# cyclic order of the endpoints around the boundary vertex used for face tracing
_BOUNDARY_CYCLE = (NW, NE, SE, SW)
_BOUNDARY_PREV = {
    _BOUNDARY_CYCLE[i]: _BOUNDARY_CYCLE[i - 1] for i in range(4)
}


class DiagramError(ValueError):
    pass


class MalformedLine(DiagramError):
    pass


class DuplicateEdgeUse(DiagramError):
    pass


class NonPlanar(DiagramError):
    pass


class BadEndpointSet(DiagramError):
    pass


class BadCrossingIndex(DiagramError):
    pass


Crossing = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class Diagram:
    """A planar diagram; ``endpoints`` is ``None`` for a link.

    ``crossings[i] = (a, b, c, d, u)``: labels counterclockwise, under-strand
    through slots ``u`` and ``u + 2``.  ``endpoints`` lists the labels at
    NW, NE, SW, SE.
    """

    crossings: tuple[Crossing, ...] = ()
    endpoints: tuple[int, int, int, int] | None = None
    free_circles: int = 0

    # -- basic queries -------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def is_tangle(self) -> bool:
        return self.endpoints is not None

    @cached_property
    def _label_positions(self) -> dict[int, list[int]]:
        where: dict[int, list[int]] = {}
        for ci, cr in enumerate(self.crossings):
            for k in range(4):
                where.setdefault(cr[k], []).append(4 * ci + k)
        if self.endpoints is not None:
            for j, lab in enumerate(self.endpoints):
                where.setdefault(lab, []).append(-(j + 1))
        return where

    @cached_property
    def _partner(self) -> dict[int, int]:
        out = {}
        for lab, ps in self._label_positions.items():
            if len(ps) != 2:
                raise DuplicateEdgeUse(f"edge label {lab} used {len(ps)} times")
            out[ps[0]] = ps[1]
            out[ps[1]] = ps[0]
        return out

    def partner(self, pos: int) -> int:
        return self._partner[pos]

    def label_at(self, pos: int) -> int:
        if pos < 0:
            return self.endpoints[-pos - 1]
        return self.crossings[pos >> 2][pos & 3]

    def is_under(self, pos: int) -> bool:
        """True if crossing slot ``pos`` lies on the under-strand."""
        return (pos & 3) % 2 == self.crossings[pos >> 2][4]

    def over_slots(self, c: int) -> tuple[int, int]:
        u = self.crossings[c][4]
        return ((u + 1) % 4, (u + 3) % 4)

    def standard(self, c: int) -> tuple[int, int, int, int]:
        """Labels of crossing ``c`` rotated so the under-strand is in slots 0, 2."""
        cr = self.crossings[c]
        u = cr[4]
        return tuple(cr[(i + u) % 4] for i in range(4))

    # -- traversal -----------------------------------------------------
    def walk(self, exit_pos: int) -> tuple[list[int], int | None]:
        """Follow the strand leaving ``exit_pos``.

        Returns the crossing entry positions met, and the endpoint index the
        strand stops at (``None`` when it closes up at ``exit_pos``).
        """
        entries = []
        cur = exit_pos
        while True:
            nxt = self._partner[cur]
            if nxt < 0:
                return entries, -nxt - 1
            entries.append(nxt)
            cur = (nxt & ~3) | ((nxt + 2) & 3)
            if cur == exit_pos:
                return entries, None

    @cached_property
    def components(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """Strand components as ``(kind, entry positions)``.

        Arcs come first, started from their lower-indexed endpoint in the
        order NW, NE, SW, SE; closed components follow, each started on the
        passage of its smallest edge label and oriented away from the lower
        of that label's two slot positions.  Free circles are not listed.
        """
        comps = []
        seen: set[int] = set()
        if self.endpoints is not None:
            done = set()
            for j in range(4):
                if j in done:
                    continue
                entries, end = self.walk(-(j + 1))
                done.update((j, end))
                comps.append(("arc", tuple(entries)))
                for e in entries:
                    seen.add(e)
                    seen.add((e & ~3) | ((e + 2) & 3))
        pending = []
        for lab, (p1, p2) in sorted(self._label_positions.items()):
            if p1 < 0 or p1 in seen or p2 in seen:
                continue
            start = min(p1, p2)
            entries, _ = self.walk(start)
            for e in entries:
                seen.add(e)
                seen.add((e & ~3) | ((e + 2) & 3))
            pending.append(("closed", tuple(entries)))
        comps.extend(pending)
        return tuple(comps)

    def n_components(self) -> int:
        return len(self.components) + self.free_circles

    def crossing_sign(self, under_entry: int, over_entry: int) -> int:
        """Writhe sign from the oriented entry slots of the two strands."""
        return 1 if (over_entry & 3) == ((under_entry & 3) - 1) % 4 else -1

    def writhe(self) -> int:
        entries: dict[int, list[int]] = {}
        for _, comp in self.components:
            for e in comp:
                entries.setdefault(e >> 2, []).append(e)
        w = 0
        for c, es in entries.items():
            under = [e for e in es if self.is_under(e)][0]
            over = [e for e in es if not self.is_under(e)][0]
            w += self.crossing_sign(under, over)
        return w

    def is_alternating(self) -> bool:
        for kind, comp in self.components:
            flags = [self.is_under(e) for e in comp]
            if kind == "closed":
                flags.append(flags[0]) if flags else None
                if len(comp) % 2:
                    return False
            if any(flags[i] == flags[i + 1] for i in range(len(flags) - 1)):
                return False
        return True

    # -- structure checks ------------------------------------------------
    def genus(self) -> int:
        part = self._partner
        darts = list(part)
        has_boundary = self.endpoints is not None
        vertices = self.n_crossings + (1 if has_boundary else 0)
        if vertices == 0:
            return 0
        edges = len(darts) // 2

        def prev(pos: int) -> int:
            if pos < 0:
                return -(_BOUNDARY_PREV[-pos - 1] + 1)
            return (pos & ~3) | ((pos - 1) & 3)

        seen = set()
        faces = 0
        for d in darts:
            if d in seen:
                continue
            faces += 1
            x = d
            while x not in seen:
                seen.add(x)
                x = prev(part[x])
        # connected components of the underlying graph
        parent = list(range(vertices))

        def vid(pos: int) -> int:
            return self.n_crossings if pos < 0 else pos >> 2

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for d, e in part.items():
            a, b = find(vid(d)), find(vid(e))
            if a != b:
                parent[a] = b
        conn = len({find(i) for i in range(vertices)})
        twice_genus = 2 * conn - vertices + edges - faces
        return twice_genus // 2

    def validate(self) -> "Diagram":
        counts = Counter()
        for cr in self.crossings:
            if len(cr) != 5 or cr[4] not in (0, 1):
                raise DiagramError(f"bad crossing record {cr!r}")
            counts.update(cr[:4])
        if self.endpoints is not None:
            if len(self.endpoints) != 4:
                raise BadEndpointSet("a tangle needs exactly the endpoints NW, NE, SW, SE")
            counts.update(self.endpoints)
        for lab, n in counts.items():
            if n != 2:
                raise DuplicateEdgeUse(f"edge label {lab} used {n} times")
        if self.free_circles < 0:
            raise DiagramError("negative free circle count")
        if self.genus() != 0:
            raise NonPlanar("rotation system does not embed in the plane")
        return self

    # -- elementary edits ------------------------------------------------
    def switch(self, c: int) -> "Diagram":
        self._check_index(c)
        cs = list(self.crossings)
        a, b, cc, d, u = cs[c]
        cs[c] = (a, b, cc, d, u ^ 1)
        return Diagram(tuple(cs), self.endpoints, self.free_circles)

    def mirror(self) -> "Diagram":
        return Diagram(
            tuple((a, b, c, d, u ^ 1) for a, b, c, d, u in self.crossings),
            self.endpoints,
            self.free_circles,
        )

    def _check_index(self, c: int) -> None:
        if not 0 <= c < self.n_crossings:
            raise BadCrossingIndex(f"no crossing {c} in a diagram with {self.n_crossings}")

    def smooth(self, c: int, kind: str) -> "Diagram":
        """Remove crossing ``c`` by one of its smoothings.

        ``kind="0"`` joins standard slots (0,1) and (2,3); ``kind="inf"``
        joins (0,3) and (1,2).
        """
        self._check_index(c)
        a, b, cc, d = self.standard(c)
        if kind == "0":
            pairs = [(a, b), (cc, d)]
        elif kind == "inf":
            pairs = [(a, d), (b, cc)]
        else:
            raise ValueError(f"unknown smoothing {kind!r}")
        return self.remove_crossings([c], pairs)

    def remove_crossings(
        self,
        removed: Iterable[int],
        unions: Sequence[tuple[int, int]],
        extra: Sequence[Crossing] = (),
        endpoints: tuple[int, int, int, int] | None = None,
    ) -> "Diagram":
        removed = set(removed)
        kept = [cr for i, cr in enumerate(self.crossings) if i not in removed]
        kept.extend(extra)
        ends = self.endpoints if endpoints is None else endpoints
        return rebuild(kept, ends, self.free_circles, unions)

    def pass_through(self, cs: Iterable[int]) -> "Diagram":
        """Delete crossings, letting both strands run straight through."""
        cs = list(cs)
        unions = []
        for c in cs:
            a, b, cc, d, _ = self.crossings[c]
            unions.append((a, cc))
            unions.append((b, d))
        return self.remove_crossings(cs, unions)

    def find_curl(self) -> tuple[int, int] | None:
        """First crossing with a loop joining adjacent slots: ``(c, k)``."""
        for ci, cr in enumerate(self.crossings):
            for k in range(4):
                if cr[k] == cr[(k + 1) % 4]:
                    return ci, k
        return None

    def curl_sign(self, c: int, k: int) -> int:
        """Writhe of the kink at crossing ``c`` whose loop joins slots k, k+1."""
        return 1 if (k - self.crossings[c][4]) % 2 == 0 else -1

    def remove_curl(self, c: int, k: int) -> "Diagram":
        cr = self.crossings[c]
        return self.remove_crossings([c], [(cr[(k + 2) % 4], cr[(k + 3) % 4])])

    def without_circles(self) -> "Diagram":
        return Diagram(self.crossings, self.endpoints, 0)

    def with_circles(self, n: int) -> "Diagram":
        return Diagram(self.crossings, self.endpoints, n)

    def relabel(self, mapping) -> "Diagram":
        f = mapping if callable(mapping) else mapping.__getitem__
        cs = tuple((f(a), f(b), f(c), f(d), u) for a, b, c, d, u in self.crossings)
        ends = None if self.endpoints is None else tuple(f(x) for x in self.endpoints)
        return Diagram(cs, ends, self.free_circles)

    def labels(self) -> set[int]:
        return set(self._label_positions)

    def max_label(self) -> int:
        labs = self._label_positions
        return max(labs) if labs else 0

    def rotate(self) -> "Diagram":
        """Rotate a tangle a quarter turn counterclockwise."""
        nw, ne, sw, se = self.endpoints
        # NW->SW, SW->SE, SE->NE, NE->NW
        return Diagram(self.crossings, (ne, se, nw, sw), self.free_circles)

    def __str__(self) -> str:
        return format_pd(self)


def rebuild(
    crossings: Sequence[Crossing],
    endpoints: tuple[int, int, int, int] | None,
    free_circles: int,
    unions: Sequence[tuple[int, int]],
) -> Diagram:
    """Merge edge labels and count the closed loops that lose every slot."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != root:
            parent[x], x = root, parent[x]
        return root

    for a, b in unions:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    if not parent:
        touched = {find(a) for pair in unions for a in pair}
        cs = tuple(crossings)
        ends = endpoints
    else:
        touched = {find(a) for pair in unions for a in pair}
        cs = tuple(
            (find(a), find(b), find(c), find(d), u) for a, b, c, d, u in crossings
        )
        ends = None if endpoints is None else tuple(find(x) for x in endpoints)
    present = set()
    for cr in cs:
        present.update(cr[:4])
    if ends is not None:
        present.update(ends)
    circles = sum(1 for r in touched if r not in present)
    return Diagram(cs, ends, free_circles + circles)


# -- PD text format ---------------------------------------------------------

def parse_pd(text: str) -> Diagram:
    crossings = []
    ends: dict[str, int] = {}
    circles = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "X" and len(parts) == 5:
                labs = [int(x) for x in parts[1:]]
                if any(x <= 0 for x in labs):
                    raise MalformedLine(f"line {lineno}: labels must be positive")
                crossings.append((*labs, 0))
            elif tag == "E" and len(parts) == 3:
                lab, pos = int(parts[1]), parts[2]
                if pos not in POSITIONS:
                    raise BadEndpointSet(f"line {lineno}: unknown endpoint {pos!r}")
                if pos in ends:
                    raise BadEndpointSet(f"line {lineno}: endpoint {pos} given twice")
                if lab <= 0:
                    raise MalformedLine(f"line {lineno}: labels must be positive")
                ends[pos] = lab
            elif tag == "O" and len(parts) == 2:
                n = int(parts[1])
                if n < 0:
                    raise MalformedLine(f"line {lineno}: negative circle count")
                circles += n
            else:
                raise MalformedLine(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, DiagramError):
                raise
            raise MalformedLine(f"line {lineno}: {exc}") from None
    if ends and len(ends) != 4:
        raise BadEndpointSet(f"tangle endpoints must be exactly NW, NE, SW, SE; got {sorted(ends)}")
    endpoints = tuple(ends[p] for p in POSITIONS) if ends else None
    return Diagram(tuple(crossings), endpoints, circles).validate()


def format_pd(d: Diagram) -> str:
    lines = []
    for c in range(d.n_crossings):
        lines.append("X " + " ".join(str(x) for x in d.standard(c)))
    if d.endpoints is not None:
        for pos, lab in zip(POSITIONS, d.endpoints):
            lines.append(f"E {lab} {pos}")
    if d.free_circles:
        lines.append(f"O {d.free_circles}")
    return "\n".join(lines) + "\n"


# -- canonical form ---------------------------------------------------------

def _code(d: Diagram, roots: list[tuple[int, int]], order_out: list[int] | None = None):
    """BFS code of the map reachable from the given (crossing, slot) roots."""
    part = d._partner
    cs = d.crossings
    idx: dict[int, int] = {}
    rot: dict[int, int] = {}
    order: list[int] = []
    code: list[int] = []
    for c, k in roots:
        if c not in idx:
            idx[c] = len(order)
            rot[c] = k
            order.append(c)
    i = 0
    while i < len(order):
        c = order[i]
        r = rot[c]
        code.append(-100 - ((cs[c][4] - r) & 1))
        base = 4 * c
        for t in range(4):
            p = part[base + ((r + t) & 3)]
            if p < 0:
                code.append(p)
                continue
            c2 = p >> 2
            if c2 not in idx:
                idx[c2] = len(order)
                rot[c2] = p & 3
                order.append(c2)
            code.append(4 * idx[c2] + ((p - rot[c2]) & 3))
        i += 1
    if order_out is not None:
        order_out.extend(order)
    return tuple(code)


def canonical_tuple(d: Diagram) -> tuple:
    """Hashable form equal for diagrams differing only by relabeling."""
    part = d._partner
    n = d.n_crossings
    covered: set[int] = set()
    pieces = []
    head: tuple = ()
    if d.endpoints is not None:
        roots = []
        landing = []
        for j in range(4):
            p = part[-(j + 1)]
            if p < 0:
                landing.append(-p - 1)
            else:
                roots.append((p >> 2, p & 3))
                landing.append(None)
        order: list[int] = []
        code = _code(d, roots, order)
        covered.update(order)
        head = (tuple(landing), code)
    for c in range(n):
        if c in covered:
            continue
        # collect connected component
        stack = [c]
        comp = {c}
        while stack:
            x = stack.pop()
            for k in range(4):
                p = part[4 * x + k]
                if p >= 0 and (p >> 2) not in comp:
                    comp.add(p >> 2)
                    stack.append(p >> 2)
        covered |= comp
        best = None
        for x in comp:
            for k in range(4):
                code = _code(d, [(x, k)])
                if best is None or code < best:
                    best = code
        pieces.append(best)
    pieces.sort()
    return (d.endpoints is not None, head, tuple(pieces), d.free_circles)


def canonical_key(d: Diagram) -> bytes:
    return repr(canonical_tuple(d)).encode()


# -- gluing ---------------------------------------------------------------

def glue(
    parts: Sequence[Diagram],
    joins: Iterable[tuple[tuple[int, int], tuple[int, int]]],
    outer: Sequence[tuple[int, int]] | None = None,
    circles: int = 0,
) -> Diagram:
    """Join endpoints of several tangles.

    ``joins`` pairs ``(part index, endpoint index)``; ``outer`` lists which
    ``(part, endpoint)`` becomes NW, NE, SW, SE of the result (``None`` for
    a closed result).  Every endpoint must be used exactly once.
    """
    crossings = []
    end_labels = []
    offset = 0
    total_circles = circles
    for d in parts:
        shift = offset
        for a, b, c, dd, u in d.crossings:
            crossings.append((a + shift, b + shift, c + shift, dd + shift, u))
        end_labels.append(tuple(x + shift for x in d.endpoints))
        offset += d.max_label() + 1
        total_circles += d.free_circles
    used = Counter()
    unions = []
    for (i, p), (j, q) in joins:
        used[(i, p)] += 1
        used[(j, q)] += 1
        unions.append((end_labels[i][p], end_labels[j][q]))
    ends = None
    if outer is not None:
        for key in outer:
            used[key] += 1
        ends = tuple(end_labels[i][p] for i, p in outer)
    for i in range(len(parts)):
        for p in range(4):
            if used[(i, p)] != 1:
                raise DiagramError(f"endpoint {POSITIONS[p]} of part {i} used {used[(i, p)]} times")
    return rebuild(crossings, ends, total_circles, unions)


def hcompose(a: Diagram, b: Diagram) -> Diagram:
    """``a`` to the left of ``b``."""
    return glue(
        [a, b],
        [((0, NE), (1, NW)), ((0, SE), (1, SW))],
        [(0, NW), (1, NE), (0, SW), (1, SE)],
    )


def vcompose(a: Diagram, b: Diagram) -> Diagram:
    """``a`` stacked above ``b``."""
    return glue(
        [a, b],
        [((0, SW), (1, NW)), ((0, SE), (1, NE))],
        [(0, NW), (0, NE), (1, SW), (1, SE)],
    )


def numerator_closure(t: Diagram) -> Diagram:
    return glue([t], [((0, NW), (0, NE)), ((0, SW), (0, SE))])


def denominator_closure(t: Diagram) -> Diagram:
    return glue([t], [((0, NW), (0, SW)), ((0, NE), (0, SE))])


# P: NW-SW and NE-SE; Q: NW-NE and SW-SE.
BASIS_P = Diagram((), (1, 2, 1, 2))
BASIS_Q = Diagram((), (1, 1, 2, 2))
# single crossing, counterclockwise NW, SW, SE, NE; under-strand NW-SE in R2
BASIS_R2 = Diagram(((1, 3, 4, 2, 0),), (1, 2, 3, 4))
BASIS_R1 = BASIS_R2.switch(0)

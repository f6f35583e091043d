"""Bridges (maximal runs of overcrossings) and the moves that shorten improper ones."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, DiagramError, NW, NE, SW, SE

__all__ = [
    "Bridge",
    "NotImproper",
    "find_bridges",
    "longest_bridge",
    "reduce_improper_bridge",
]

PROPER = "proper"
IMPROPER = ("improper_a", "improper_b", "improper_c", "improper_d")
_DIAGONALS = ({NW, SE}, {NE, SW})


class NotImproper(DiagramError):
    pass


@dataclass(frozen=True)
class Bridge:
    """A maximal strand segment without undercrossings.

    ``start``/``end`` are ``("under", crossing, entry_pos)``, ``("end", j)``
    for tangle endpoint ``j``, or ``None`` when the bridge is a whole circle.
    """

    crossings: tuple[int, ...]
    start: tuple | None
    end: tuple | None
    properness: str

    @property
    def length(self) -> int:
        return len(self.crossings)

    @property
    def is_proper(self) -> bool:
        return self.properness == PROPER

    def interior_ends(self) -> list[int]:
        """Crossings where the bridge stops by passing under."""
        out = []
        for att in (self.start, self.end):
            if att is not None and att[0] == "under":
                out.append(att[1])
        return sorted(set(out))


def _classify(crossings: tuple[int, ...], start, end) -> str:
    n = len(crossings)
    if start is None and end is None:
        return "improper_a"
    ends = {att[1] for att in (start, end) if att[0] == "under"}
    if ends & set(crossings):
        return "improper_b"
    if start[0] == "under" and end[0] == "under" and start[1] == end[1] and n > 1:
        return "improper_c"
    if start[0] == "end" and end[0] == "end" and n > 1:
        return "improper_d"
    return PROPER


def find_bridges(d: Diagram) -> list[Bridge]:
    """All bridges of positive length, in component traversal order."""
    out: list[Bridge] = []
    for kind, comp in d.components:
        flags = [d.is_under(e) for e in comp]
        if kind == "arc":
            # recover the endpoints of this arc
            start_end = _arc_ends(d, comp)
            cur: list[int] = []
            start = ("end", start_end[0])
            for e, under in zip(comp, flags):
                if under:
                    if cur:
                        att = ("under", e >> 2, e)
                        out.append(Bridge(tuple(cur), start, att, _classify(tuple(cur), start, att)))
                    cur = []
                    start = ("under", e >> 2, e)
                else:
                    cur.append(e >> 2)
            if cur:
                att = ("end", start_end[1])
                out.append(Bridge(tuple(cur), start, att, _classify(tuple(cur), start, att)))
            continue
        if not any(flags):
            cs = tuple(e >> 2 for e in comp)
            if cs:
                out.append(Bridge(cs, None, None, "improper_a"))
            continue
        i0 = flags.index(True)
        rot = comp[i0:] + comp[:i0]
        rflags = flags[i0:] + flags[:i0]
        start = ("under", rot[0] >> 2, rot[0])
        cur = []
        for e, under in zip(rot[1:] + rot[:1], rflags[1:] + rflags[:1]):
            if under:
                if cur:
                    att = ("under", e >> 2, e)
                    out.append(Bridge(tuple(cur), start, att, _classify(tuple(cur), start, att)))
                cur = []
                start = ("under", e >> 2, e)
            else:
                cur.append(e >> 2)
    return out


def _arc_ends(d: Diagram, comp: tuple[int, ...]) -> tuple[int, int]:
    for j in range(4):
        entries, end = d.walk(-(j + 1))
        if tuple(entries) == comp:
            return j, end
    raise AssertionError("arc not found")


def longest_bridge(d: Diagram) -> tuple[Bridge | None, int]:
    best = None
    for b in find_bridges(d):
        if best is None or b.length > best.length or (
            b.length == best.length and b.crossings[0] < best.crossings[0]
        ):
            best = b
    return best, (best.length if best else 0)


def _pick_planar(candidates: list[Diagram]) -> Diagram:
    planar = [c for c in candidates if c.genus() == 0]
    if len(planar) != 1:
        raise AssertionError(f"expected one planar completion, found {len(planar)}")
    return planar[0]


def reduce_improper_bridge(d: Diagram, b: Bridge) -> Diagram:
    """Apply the type II/III moves that shorten an improper bridge.

    The result has fewer crossings and its crossing count minus the length of
    the surviving bridge does not exceed that of ``d``.
    """
    kind = b.properness
    if kind == PROPER:
        raise NotImproper("bridge is proper")
    if kind == "improper_a":
        # topmost circle lifts off and becomes a free circle
        return d.pass_through(b.crossings)
    if kind == "improper_b":
        for att, forward in ((b.end, True), (b.start, False)):
            if att is not None and att[0] == "under" and att[1] in b.crossings:
                c = att[1]
                i = b.crossings.index(c)
                loop = b.crossings[i + 1:] if forward else b.crossings[:i]
                if not loop:
                    raise AssertionError("bare kink should have been removed first")
                return d.pass_through(loop)
        raise AssertionError("unreachable")
    if kind == "improper_c":
        return _shrink_hooked_circle(d, b)
    return _pull_arc_aside(d, b)


def _shrink_hooked_circle(d: Diagram, b: Bridge) -> Diagram:
    c = b.start[1]
    removed = set(b.crossings)
    shrunk = d.pass_through(b.crossings)
    ci = c - sum(1 for x in removed if x < c)
    cr = list(shrunk.crossings[ci])
    u = cr[4]
    o = (u + 1) % 4
    top = shrunk.max_label()
    f, ka, kb = top + 1, top + 2, top + 3
    e = cr[o]
    cr[o] = f
    cr[u] = ka
    cr[(u + 2) % 4] = kb
    base = list(shrunk.crossings)
    base[ci] = tuple(cr)
    options = []
    for a1, a2 in ((ka, kb), (kb, ka)):
        extra = (f, a1, e, a2, 0)
        options.append(Diagram(tuple(base) + (extra,), shrunk.endpoints, shrunk.free_circles))
    return _pick_planar(options)


def _pull_arc_aside(d: Diagram, b: Bridge) -> Diagram:
    j1, j2 = b.start[1], b.end[1]
    pulled = d.pass_through(b.crossings)
    if {j1, j2} not in _DIAGONALS:
        return pulled
    j3 = min(j for j in range(4) if j not in (j1, j2))
    ends = list(pulled.endpoints)
    g = ends[j3]
    top = pulled.max_label()
    h, a1, a2 = top + 1, top + 2, top + 3
    ends[j3] = h
    ends[j1] = a1
    ends[j2] = a2
    options = []
    for s1, s2 in ((a1, a2), (a2, a1)):
        extra = (h, s1, g, s2, 0)
        options.append(Diagram(pulled.crossings + (extra,), tuple(ends), pulled.free_circles))
    return _pick_planar(options)

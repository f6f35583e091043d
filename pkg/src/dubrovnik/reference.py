"""Independent reference evaluator.

No bridges, no reductions, no cache: resolve the first crossing met from
below along a fixed traversal until the diagram is descending, then read the
value off directly (a descending diagram is a stack of unknotted pieces whose
only contribution is the kink factor of each piece's self-writhe).
"""

from __future__ import annotations

from .diagram import Diagram
from .ring import ONE, ZERO, Z, LaurentPoly, delta_power, lam_power
from .skein import KINK_EXPONENT, SKEIN_SIGN, NotALink, NotATangle

__all__ = ["first_ascending_crossing", "reference_link", "reference_tangle"]


def first_ascending_crossing(d: Diagram) -> int | None:
    seen = set()
    for _, comp in d.components:
        for e in comp:
            c = e >> 2
            if c not in seen:
                if d.is_under(e):
                    return c
                seen.add(c)
    return None


def _self_writhe(d: Diagram) -> int:
    owner: dict[int, list[tuple[int, int]]] = {}
    for i, (_, comp) in enumerate(d.components):
        for e in comp:
            owner.setdefault(e >> 2, []).append((i, e))
    w = 0
    for (i1, e1), (i2, e2) in owner.values():
        if i1 != i2:
            continue
        under, over = (e1, e2) if d.is_under(e1) else (e2, e1)
        w += d.crossing_sign(under, over)
    return w


def _resolve(d: Diagram, c: int, rec):
    zs = Z if SKEIN_SIGN == 1 else -Z
    return rec(d.switch(c)), rec(d.smooth(c, "0")), rec(d.smooth(c, "inf")), zs


def reference_link(d: Diagram) -> LaurentPoly:
    if d.is_tangle:
        raise NotALink("reference_link needs a closed diagram")
    c = first_ascending_crossing(d)
    if c is None:
        ncomp = len(d.components) + d.free_circles
        return lam_power(KINK_EXPONENT * _self_writhe(d)) * delta_power(ncomp - 1)
    a, b0, binf, zs = _resolve(d, c, reference_link)
    return a + zs * (b0 - binf)


def reference_tangle(d: Diagram) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
    """Coordinates on (P, Q, R1, R2) from the descending-diagram recursion."""
    if not d.is_tangle:
        raise NotATangle("reference_tangle needs four endpoints")
    c = first_ascending_crossing(d)
    if c is None:
        closed = sum(1 for kind, _ in d.components if kind == "closed") + d.free_circles
        f = lam_power(KINK_EXPONENT * _self_writhe(d)) * delta_power(closed)
        _, end = d.walk(-1)  # the arc leaving NW lies on top
        slot = {2: 0, 1: 1, 3: 2}[end]
        out = [ZERO, ZERO, ZERO, ZERO]
        out[slot] = f
        return tuple(out)
    a, b0, binf, zs = _resolve(d, c, reference_tangle)
    return tuple(x + zs * (y - w) for x, y, w in zip(a, b0, binf))

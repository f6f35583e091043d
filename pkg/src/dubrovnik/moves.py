"""Random Reidemeister II and III moves, for isotopy-invariance testing."""

from __future__ import annotations

import itertools
import random

from .diagram import (
    _BOUNDARY_PREV,
    BASIS_P,
    BASIS_Q,
    BASIS_R1,
    BASIS_R2,
    Diagram,
    DiagramError,
    denominator_closure,
    hcompose,
    numerator_closure,
    vcompose,
)

__all__ = [
    "faces",
    "random_moves",
    "random_tangle",
    "random_link",
    "r2_create_options",
    "r2_remove_options",
    "r3_options",
]


def _prev(pos: int) -> int:
    if pos < 0:
        return -(_BOUNDARY_PREV[-pos - 1] + 1)
    return (pos & ~3) | ((pos - 1) & 3)


def faces(d: Diagram) -> list[list[int]]:
    """Faces as cyclic lists of darts; dart ``x`` runs along the edge at ``x``."""
    out = []
    seen = set()
    for x0 in sorted(d._partner):
        if x0 in seen:
            continue
        face = []
        x = x0
        while x not in seen:
            seen.add(x)
            face.append(x)
            x = _prev(d.partner(x))
        out.append(face)
    return out


def _opp(pos: int) -> int:
    return (pos & ~3) | ((pos + 2) & 3)


def _build(d: Diagram, slot_labels: dict[int, int], extra=()) -> Diagram:
    cs = [list(cr) for cr in d.crossings]
    ends = list(d.endpoints) if d.endpoints is not None else None
    for pos, lab in slot_labels.items():
        if pos < 0:
            ends[-pos - 1] = lab
        else:
            cs[pos >> 2][pos & 3] = lab
    cs = [tuple(cr) for cr in cs] + list(extra)
    return Diagram(tuple(cs), tuple(ends) if ends is not None else None, d.free_circles)


def _ok(d: Diagram) -> bool:
    try:
        d.validate()
    except DiagramError:
        return False
    return True


def _has_face(d: Diagram, crossings: set[int], length: int) -> bool:
    for f in faces(d):
        if len(f) == length and all(x >= 0 for x in f) and {x >> 2 for x in f} == crossings:
            return True
    return False


def r2_create_options(d: Diagram, face: list[int], i: int, j: int, top: int) -> list[Diagram]:
    """Push the edge at dart ``face[i]`` across the edge at ``face[j]``.

    ``top`` is 1 when the first edge ends up over, 0 when under.
    """
    x1, x2 = face[i], face[j]
    p1, p2 = d.partner(x1), d.partner(x2)
    if {x1, p1} == {x2, p2}:
        return []
    l1, l2 = d.label_at(x1), d.label_at(x2)
    base = d.max_label()
    s1, m1, t2, m2 = base + 1, base + 2, base + 3, base + 4
    relabeled = {x1: s1, x2: t2}
    n = d.n_crossings
    out = []
    for order, ra, rb in itertools.product((0, 1), repeat=3):
        if order == 0:
            a2, b2 = (t2, m2), (m2, l2)
        else:
            a2, b2 = (m2, l2), (t2, m2)
        qa, wa = a2 if ra == 0 else a2[::-1]
        qb, wb = b2 if rb == 0 else b2[::-1]
        u = 1 if top else 0
        A = (s1, qa, m1, wa, u)
        B = (m1, qb, l1, wb, u)
        cand = _build(d, relabeled, (A, B))
        if _ok(cand) and _has_face(cand, {n, n + 1}, 2):
            out.append(cand)
    return out


def _bigons(d: Diagram) -> list[tuple[int, int]]:
    out = []
    for f in faces(d):
        if len(f) == 2 and f[0] >= 0 and f[1] >= 0:
            a, b = f[0] >> 2, f[1] >> 2
            if a != b:
                out.append((f[0], f[1]))
    return out


def r2_remove_options(d: Diagram) -> list[Diagram]:
    out = []
    for x, y in _bigons(d):
        a, b = x >> 2, y >> 2
        # the strand through dart x at A continues through partner(x) at B
        if d.is_under(x) == d.is_under(d.partner(x)) and d.is_under(y) == d.is_under(d.partner(y)):
            cand = d.pass_through(sorted({a, b}))
            out.append(cand)
    return out


def r3_options(d: Diagram) -> list[Diagram]:
    out = []
    for f in faces(d):
        if len(f) != 3 or any(x < 0 for x in f):
            continue
        verts = [x >> 2 for x in f]
        if len(set(verts)) != 3:
            continue
        # edge i runs from slot f[i] to slot partner(f[i]); one strand each
        edges = [(x, d.partner(x)) for x in f]
        over = [(not d.is_under(a), not d.is_under(b)) for a, b in edges]
        if not any(o1 and o2 for o1, o2 in over):
            continue
        relabel: dict[int, int] = {}
        base = d.max_label()
        for k, (a, b) in enumerate(edges):
            new = base + 1 + k
            ext_a, ext_b = _opp(a), _opp(b)
            la, lb = d.label_at(ext_a), d.label_at(ext_b)
            relabel[ext_a] = new
            relabel[ext_b] = new
            relabel[a] = lb
            relabel[b] = la
        cand = _build(d, relabel)
        if _ok(cand) and _has_face(cand, set(verts), 3):
            out.append(cand)
    return out


def random_moves(d: Diagram, n: int, seed: int) -> Diagram:
    """Apply ``n`` randomly chosen II/III moves (fewer if none apply)."""
    rng = random.Random(seed)
    done = 0
    attempts = 0
    while done < n and attempts < 50 * (n + 1):
        attempts += 1
        kind = rng.choice(("r2+", "r2-", "r3"))
        if kind == "r2+":
            fs = [f for f in faces(d) if len(f) >= 2]
            if not fs:
                continue
            face = rng.choice(fs)
            i, j = rng.sample(range(len(face)), 2)
            opts = r2_create_options(d, face, i, j, rng.randint(0, 1))
        elif kind == "r2-":
            opts = r2_remove_options(d)
        else:
            opts = r3_options(d)
        if not opts:
            continue
        d = rng.choice(opts)
        done += 1
    return d


def _algebraic(rng: random.Random, pieces: int) -> Diagram:
    if pieces <= 1:
        return rng.choice((BASIS_R1, BASIS_R2, BASIS_R1, BASIS_R2, BASIS_P, BASIS_Q))
    k = rng.randint(1, pieces - 1)
    a, b = _algebraic(rng, k), _algebraic(rng, pieces - k)
    t = hcompose(a, b) if rng.random() < 0.5 else vcompose(a, b)
    return t.rotate() if rng.random() < 0.3 else t


def random_tangle(rng: random.Random, max_crossings: int) -> Diagram:
    """A tangle with at most ``max_crossings`` crossings, usually non-algebraic."""
    t = _algebraic(rng, rng.randint(1, max(1, max_crossings)))
    for _ in range(4):
        moved = random_moves(t, rng.randint(1, 6), rng.randrange(1 << 30))
        if moved.n_crossings <= max_crossings:
            return moved
    return t if t.n_crossings <= max_crossings else _algebraic(rng, 1)


def random_link(rng: random.Random, max_crossings: int) -> Diagram:
    close = numerator_closure if rng.random() < 0.5 else denominator_closure
    return close(random_tangle(rng, max_crossings))

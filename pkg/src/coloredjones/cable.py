"""Parallel cables of knot diagrams and their 0-framed corrections.

Strands of a cable are indexed by their offset from the left-hand side of the
oriented companion edge.  Blackboard parallels keep that offset everywhere,
so every crossing of the companion becomes an ``n x n`` grid in which the
cable's over-strands stay over.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional

from .diagram import Diagram, components, writhe
from .errors import MultiComponentInput


class _Labeller:
    def __init__(self) -> None:
        self.ids: dict[Hashable, int] = {}

    def __call__(self, key: Hashable) -> int:
        if key not in self.ids:
            self.ids[key] = len(self.ids) + 1
        return self.ids[key]


def braid_crossings(word: Iterable[int], bottom: list, fresh) -> tuple[list, list]:
    """PD crossings (with hashable labels) for a braid word read bottom to top.

    ``word`` holds signed 1-based generators; ``+k`` is sigma_k, a positive
    crossing of the strands at positions ``k-1`` and ``k`` (0 = leftmost).
    ``fresh()`` supplies new edge keys.  Returns ``(crossings, top_labels)``.
    """
    cur = list(bottom)
    out = []
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < len(cur) - 1:
            raise ValueError(f"generator {g} out of range for {len(cur)} strands")
        sw, se = cur[k], cur[k + 1]
        nw, ne = fresh(), fresh()
        if g > 0:
            out.append((se, ne, nw, sw))
        else:
            out.append((sw, se, ne, nw))
        cur[k], cur[k + 1] = nw, ne
    return out, cur


def full_twist_word(n: int, sign: int = 1) -> list[int]:
    """``(sigma_1 ... sigma_{n-1})^n``, n(n-1) crossings of the given sign."""
    return [sign * k for _ in range(n) for k in range(1, n)]


def braid_closure(word: Iterable[int], strands: int) -> Diagram:
    word = list(word)
    counter = iter(range(10**9))
    bottom = [("b", i) for i in range(strands)]
    crossings, top = braid_crossings(word, bottom, lambda: ("f", next(counter)))
    rename = {t: ("b", i) for i, t in enumerate(top) if t != ("b", i)}
    free = sum(1 for i, t in enumerate(top) if t == ("b", i))
    lab = _Labeller()
    pd = [tuple(lab(rename.get(v, v)) for v in x) for x in crossings]
    return Diagram(pd, free)


def _check_knot(d: Diagram) -> None:
    if components(d) != 1:
        raise MultiComponentInput(f"cabling needs a knot diagram, got {components(d)} components")


def _cable(d: Diagram, n: int, twists: int = 0, twist_edge: Optional[int] = None) -> Diagram:
    _check_knot(d)
    if n == 0:
        return Diagram([], 0)
    if not d.crossings:
        return Diagram([], n)
    host = min(d.edges) if twist_edge is None else twist_edge
    if host not in d.edge_head:
        raise ValueError(f"edge {host} not in diagram")

    counter = iter(range(10**9))

    def fresh():
        return ("t", next(counter))

    twist_pd: list = []
    host_top = [("e", host, i) for i in range(n)]
    if twists and n > 1:
        sign = 1 if twists > 0 else -1
        word = full_twist_word(n, sign) * abs(twists)
        twist_pd, host_top = braid_crossings(word, host_top, fresh)

    def ext(c: int, p: int, offset: int):
        e = d.crossings[c][p]
        if e == host and d.edge_head[e] == (c, p):
            return host_top[offset]
        return ("e", e, offset)

    pd = []
    for c, (sign, x) in enumerate(zip(d.signs, d.crossings)):
        for y in range(n):
            over_offset = n - 1 - y if sign > 0 else y
            for xx in range(n):
                south = ext(c, 0, xx) if y == 0 else ("v", c, xx, y)
                north = ext(c, 2, xx) if y == n - 1 else ("v", c, xx, y + 1)
                east = ext(c, 1, over_offset) if xx == n - 1 else ("h", c, xx + 1, y)
                west = ext(c, 3, over_offset) if xx == 0 else ("h", c, xx, y)
                pd.append((south, east, north, west))
    pd.extend(twist_pd)

    lab = _Labeller()
    for e in d.edges:
        for i in range(n):
            lab(("e", e, i))
    return Diagram([tuple(lab(v) for v in x) for x in pd], 0)


def blackboard_cable(d: Diagram, n: int) -> Diagram:
    """The ``n``-strand blackboard parallel of the knot diagram ``d``."""
    if n < 0:
        raise ValueError("cable size must be nonnegative")
    return _cable(d, n)


def zero_framed_cable(d: Diagram, n: int, twist_edge: Optional[int] = None) -> Diagram:
    """Blackboard cable with ``|w|`` compensating full twists, ``w = writhe(d)``.

    The twists sit on the parallels of ``twist_edge`` (default: lowest label).
    The result has pairwise linking number zero between its strands and total
    writhe ``n * w``.
    """
    if n < 0:
        raise ValueError("cable size must be nonnegative")
    _check_knot(d)
    w = writhe(d) if n > 1 else 0
    return _cable(d, n, -w, twist_edge)

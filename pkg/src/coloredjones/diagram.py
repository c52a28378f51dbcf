"""Planar link diagrams given by PD codes.

Crossing tuples follow the usual knot-table convention: the four edge labels
are listed counterclockwise starting from the incoming under-strand, so the
under-strand runs from position 0 to position 2.  Orientation of the
over-strand and the crossing signs are derived, never read from input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import (
    DisconnectedDiagram,
    EdgeLabelCountError,
    MalformedSyntax,
    OrientationError,
)

Crossing = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing index, position 0..3)


@dataclass(frozen=True)
class Face:
    """A face of the diagram: edges met while walking its boundary.

    ``corners`` lists ``(crossing, k)`` for the corner between positions
    ``k`` and ``k + 1`` of that crossing.
    """

    edges: tuple[int, ...]
    corners: tuple[Slot, ...]

    @property
    def degree(self) -> int:
        return len(self.edges)


class Diagram:
    """An oriented link diagram, validated on construction."""

    def __init__(self, crossings, free_loops: int = 0) -> None:
        self.crossings: tuple[Crossing, ...] = tuple(tuple(int(v) for v in x) for x in crossings)
        if free_loops < 0:
            raise MalformedSyntax("free_loops must be nonnegative")
        self.free_loops = int(free_loops)
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedSyntax(f"crossing {x} does not have 4 labels")
            if any(v <= 0 for v in x):
                raise MalformedSyntax(f"edge labels must be positive integers: {x}")
        self._slots = self._collect_slots()
        self._orient()

    # -- construction helpers -------------------------------------------------

    def _collect_slots(self) -> dict[int, list[Slot]]:
        slots: dict[int, list[Slot]] = {}
        for i, x in enumerate(self.crossings):
            for p, label in enumerate(x):
                slots.setdefault(label, []).append((i, p))
        bad = sorted(label for label, s in slots.items() if len(s) != 2)
        if bad:
            counts = {label: len(slots[label]) for label in bad}
            raise EdgeLabelCountError(f"edge labels must occur exactly twice; offenders: {counts}")
        return slots

    def _other_slot(self, label: int, slot: Slot) -> Slot:
        a, b = self._slots[label]
        return b if a == slot else a

    def _walk(self, label: int, head: Slot) -> Optional[list[tuple[int, Slot]]]:
        """Follow a component starting along ``label`` into ``head``.

        Returns ``[(edge, head_slot), ...]`` or ``None`` if the direction
        contradicts an under-strand.
        """
        out = []
        start = (label, head)
        while True:
            c, p = head
            if p == 2:
                return None
            out.append((label, head))
            tail = (c, (p + 2) % 4)
            if tail[1] == 0:
                return None
            label = self.crossings[c][tail[1]]
            head = self._other_slot(label, tail)
            if (label, head) == start:
                return out

    def _orient(self) -> None:
        self.edge_head: dict[int, Slot] = {}
        self.edge_tail: dict[int, Slot] = {}
        comps: list[tuple[int, ...]] = []
        for label in sorted(self._slots):
            if label in self.edge_head:
                continue
            first, second = sorted(self._slots[label])
            path = self._walk(label, first)
            if path is None:
                path = self._walk(label, second)
            if path is None:
                raise OrientationError(
                    f"component through edge {label} cannot be oriented consistently"
                )
            for e, h in path:
                if e in self.edge_head:
                    raise OrientationError(f"edge {e} traversed twice")
                self.edge_head[e] = h
                self.edge_tail[e] = self._other_slot(e, h)
            comps.append(tuple(e for e, _ in path))
        self.strands: tuple[tuple[int, ...], ...] = tuple(comps)
        signs = []
        for i, x in enumerate(self.crossings):
            # over-strand entering at position 3 runs d -> b: positive
            if self.edge_head[x[3]] == (i, 3):
                signs.append(1)
            elif self.edge_head[x[1]] == (i, 1):
                signs.append(-1)
            else:
                raise OrientationError(f"over-strand at crossing {i} has no incoming end")
        self.signs: tuple[int, ...] = tuple(signs)

    # -- basic queries ----------------------------------------------------------

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> list[int]:
        return sorted(self._slots)

    def slots_of(self, label: int) -> list[Slot]:
        return list(self._slots[label])

    def twin(self, slot: Slot) -> Slot:
        c, p = slot
        return self._other_slot(self.crossings[c][p], slot)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.crossings == other.crossings and self.free_loops == other.free_loops

    def __hash__(self) -> int:
        return hash((self.crossings, self.free_loops))

    def __repr__(self) -> str:
        return f"Diagram({serialize_pd(self)!r})"

    @cached_property
    def is_connected(self) -> bool:
        if not self.crossings:
            return self.free_loops <= 1
        if self.free_loops:
            return False
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for label in self.crossings[c]:
                for nc, _ in self._slots[label]:
                    if nc not in seen:
                        seen.add(nc)
                        stack.append(nc)
        return len(seen) == len(self.crossings)


# -- parsing and serialization ----------------------------------------------

_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_LOOPS = re.compile(r"loops\s*=\s*(\d+)")


def parse_pd(text: str, free_loops: Optional[int] = None) -> Diagram:
    """Parse ``"[loops=k] X(a,b,c,d) X(...) ..."`` into a :class:`Diagram`."""
    if not isinstance(text, str):
        raise MalformedSyntax("PD code must be a string")
    crossings = []
    loops = 0
    tokens = text.split()
    i = 0
    if tokens and tokens[0].startswith("loops"):
        m = _LOOPS.fullmatch(tokens[0])
        if not m:
            raise MalformedSyntax(f"bad loops header {tokens[0]!r}")
        loops = int(m.group(1))
        i = 1
    # re-join so that spaces inside a term are tolerated
    body = " ".join(tokens[i:])
    pos = 0
    for m in _TERM.finditer(body):
        if body[pos:m.start()].strip():
            raise MalformedSyntax(f"unexpected text {body[pos:m.start()].strip()!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if body[pos:].strip():
        raise MalformedSyntax(f"unexpected text {body[pos:].strip()!r}")
    if free_loops is not None:
        loops += free_loops
    return Diagram(crossings, loops)


def serialize_pd(d: Diagram) -> str:
    parts = []
    if d.free_loops:
        parts.append(f"loops={d.free_loops}")
    parts.extend("X({},{},{},{})".format(*x) for x in d.crossings)
    return " ".join(parts)


def diagram_to_json(d: Diagram) -> str:
    return json.dumps({"pd": [list(x) for x in d.crossings], "loops": d.free_loops})


def diagram_from_json(s: str) -> Diagram:
    obj = json.loads(s)
    try:
        return Diagram([tuple(x) for x in obj["pd"]], obj.get("loops", 0))
    except (KeyError, TypeError) as exc:
        raise MalformedSyntax(f"bad diagram JSON: {exc}") from exc


# -- invariants of the diagram itself ----------------------------------------


def writhe(d: Diagram) -> int:
    return sum(d.signs)


def components(d: Diagram) -> int:
    return len(d.strands) + d.free_loops


def faces(d: Diagram) -> list[Face]:
    """Faces of the planar embedding given by the PD rotation system."""
    if not d.crossings:
        if d.free_loops != 1:
            raise DisconnectedDiagram("crossingless diagram with several loops")
        return [Face((), ()), Face((), ())]
    if not d.is_connected:
        raise DisconnectedDiagram("face extraction requires a connected diagram")
    seen: set[Slot] = set()
    out = []
    for c in range(d.num_crossings):
        for p in range(4):
            if (c, p) in seen:
                continue
            edges, corners = [], []
            h = (c, p)
            while h not in seen:
                seen.add(h)
                edges.append(d.crossings[h[0]][h[1]])
                t = d.twin(h)
                corners.append(t)
                h = (t[0], (t[1] + 1) % 4)
            out.append(Face(tuple(edges), tuple(corners)))
    return out


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing."""
    out = []
    for (a, b, c, e), s in zip(d.crossings, d.signs):
        # the old over-strand becomes the under-strand
        out.append((e, a, b, c) if s > 0 else (b, c, e, a))
    return Diagram(out, d.free_loops)


def add_kink(d: Diagram, edge: Optional[int] = None, sign: int = 1) -> Diagram:
    """Insert a Reidemeister-I curl of the given sign on ``edge``.

    On the crossingless unknot the result is the one-crossing curl diagram.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not d.crossings:
        if d.free_loops != 1:
            raise ValueError("can only kink a single crossingless loop")
        return Diagram([(1, 1, 2, 2) if sign > 0 else (1, 2, 2, 1)])
    if edge is None:
        edge = min(d.edges)
    top = max(d.edges)
    loop, out_edge = top + 1, top + 2
    hc, hp = d.edge_head[edge]
    crossings = [list(x) for x in d.crossings]
    crossings[hc][hp] = out_edge
    crossings.append([edge, out_edge, loop, loop] if sign > 0 else [edge, loop, loop, out_edge])
    return Diagram(crossings, d.free_loops)


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    pd: str
    declared_determinant: Optional[int]
    crossing_number: int

    @cached_property
    def diagram(self) -> Diagram:
        return parse_pd(self.pd)



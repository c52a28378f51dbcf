"""Knot determinant from a checkerboard colouring and the Goeritz matrix.

This path shares nothing with the bracket engine beyond the parsed diagram,
so it serves as an independent oracle for ``|V(-1)|``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, Face, faces

WHITE, SHADED = 0, 1


@dataclass(frozen=True)
class CheckerboardColoring:
    faces: tuple[Face, ...]
    colors: tuple[int, ...]
    outer: int
    # +1 if the shaded corners at the crossing are its A-corners (1 and 3)
    crossing_types: tuple[int, ...]
    # per crossing, the indices of the faces in its two shaded corners
    shaded_corners: tuple[tuple[int, int], ...]

    def shaded(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == SHADED]


def checkerboard_color(d: Diagram) -> CheckerboardColoring:
    fs = faces(d)
    outer = max(range(len(fs)), key=lambda i: (fs[i].degree, -i))
    if not d.crossings:
        colors = [SHADED] * len(fs)
        colors[outer] = WHITE
        return CheckerboardColoring(tuple(fs), tuple(colors), outer, (), ())

    face_of_half: dict[tuple[int, int], int] = {}
    corner_face: dict[tuple[int, int], int] = {}
    for i, f in enumerate(fs):
        for c, p in f.corners:
            face_of_half[(c, (p + 1) % 4)] = i
            corner_face[(c, p)] = i
    neighbours: list[set[int]] = [set() for _ in fs]
    for e in d.edges:
        s1, s2 = d.slots_of(e)
        a, b = face_of_half[s1], face_of_half[s2]
        neighbours[a].add(b)
        neighbours[b].add(a)

    colors = [-1] * len(fs)
    colors[outer] = WHITE
    stack = [outer]
    while stack:
        f = stack.pop()
        for g in neighbours[f]:
            if colors[g] < 0:
                colors[g] = 1 - colors[f]
                stack.append(g)
            elif colors[g] == colors[f]:
                raise ValueError("diagram faces are not 2-colourable")

    types, shaded_corners = [], []
    for c in range(d.num_crossings):
        if colors[corner_face[(c, 1)]] == SHADED:
            types.append(1)
            shaded_corners.append((corner_face[(c, 1)], corner_face[(c, 3)]))
        else:
            types.append(-1)
            shaded_corners.append((corner_face[(c, 0)], corner_face[(c, 2)]))
    return CheckerboardColoring(tuple(fs), tuple(colors), outer, tuple(types), tuple(shaded_corners))


def goeritz_matrix(d: Diagram) -> list[list[int]]:
    """Unreduced Goeritz matrix indexed by the shaded faces in face order."""
    col = checkerboard_color(d)
    shaded = col.shaded()
    index = {f: i for i, f in enumerate(shaded)}
    g = [[0] * len(shaded) for _ in shaded]
    for eta, (f1, f2) in zip(col.crossing_types, col.shaded_corners):
        if f1 == f2:
            continue
        i, j = index[f1], index[f2]
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    return g


def bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(d: Diagram) -> int:
    """``|det K|`` from the Goeritz matrix with the last shaded face deleted."""
    g = goeritz_matrix(d)
    reduced = [row[:-1] for row in g[:-1]]
    return abs(bareiss_determinant(reduced))

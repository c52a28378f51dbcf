"""Slow but obviously-correct reference computations used by the tests."""

from __future__ import annotations

import cmath
import itertools
import random

from coloredjones.cable import braid_closure
from coloredjones.diagram import Diagram, add_kink
from coloredjones.laurent import LaurentPoly

DELTA = LaurentPoly({2: -1, -2: -1})


def _count_loops(labels, joins) -> int:
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in labels})


def state_sum_bracket(crossings, free_loops: int = 0) -> LaurentPoly:
    """Sum over all 2^c smoothings; A joins (a,b),(c,d) and B joins (a,d),(b,c)."""
    labels = {x for c in crossings for x in c}
    total = LaurentPoly()
    for state in itertools.product((0, 1), repeat=len(crossings)):
        joins = []
        for (a, b, c, d), s in zip(crossings, state):
            joins += [(a, b), (c, d)] if s == 0 else [(a, d), (b, c)]
        loops = _count_loops(labels, joins) + free_loops if labels else free_loops
        n_a = state.count(0)
        total = total + LaurentPoly.monomial(n_a - (len(crossings) - n_a)) * DELTA ** loops
    return total


def state_sum_jones(d: Diagram) -> LaurentPoly:
    w = sum(d.signs)
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    return (factor * state_sum_bracket(d.crossings, d.free_loops)).divide_exact(DELTA)


def complex_value(p: LaurentPoly, k: int) -> complex:
    return sum(c * cmath.exp(2j * cmath.pi * k * e / 24) for e, c in p.terms.items())


def random_braid_word(rng: random.Random, strands: int, length: int) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]


def random_diagram(rng: random.Random, max_crossings: int = 10) -> Diagram:
    """Closure of a random braid, optionally with a few kinks added."""
    while True:
        strands = rng.randint(2, 4)
        length = rng.randint(1, max_crossings)
        d = braid_closure(random_braid_word(rng, strands, length), strands)
        if not d.is_connected:
            continue
        for _ in range(rng.randint(0, max_crossings - d.num_crossings)):
            d = add_kink(d, rng.choice(d.edges), rng.choice((1, -1)))
        return d

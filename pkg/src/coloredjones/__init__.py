"""Exact colored Jones polynomials of knots via the cabling formula."""

from .bracket import jones, jones_at_root, kauffman_bracket
from .cable import blackboard_cable, zero_framed_cable
from .colored import (
    ColoredJonesResult,
    TheoremReport,
    a_sequence,
    colored_jones,
    eval_colored_at_root,
    verify_theorems,
)
from .config import EngineConfig
from .diagram import Diagram, KnotTableEntry, components, faces, mirror, parse_pd, writhe
from .goeritz import checkerboard_color, determinant
from .knotdata import load_knot_table
from .laurent import CyclotomicElement, LaurentPoly, evaluate_at_root, poly_multiply

__all__ = [
    "ColoredJonesResult", "CyclotomicElement", "Diagram", "EngineConfig", "KnotTableEntry",
    "LaurentPoly", "TheoremReport", "a_sequence", "blackboard_cable", "checkerboard_color",
    "colored_jones", "components", "determinant", "eval_colored_at_root", "evaluate_at_root",
    "faces", "jones", "jones_at_root", "kauffman_bracket", "load_knot_table", "mirror",
    "parse_pd", "poly_multiply", "verify_theorems", "writhe", "zero_framed_cable",
]

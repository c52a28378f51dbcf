"""Knot tables stored as JSON lines: ``{name, pd, determinant, crossings}``."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Union

from .diagram import KnotTableEntry, components, faces, parse_pd
from .errors import KnotEngineError, SchemaError, ValidationError
from .goeritz import determinant

BUILTIN = "builtin"

ALIASES = {"unknot": "0_1", "trefoil": "3_1", "figure-eight": "4_1", "figure8": "4_1"}


def _read_builtin() -> str:
    return resources.files("coloredjones").joinpath("data/knots.jsonl").read_text()


def _parse_line(line: str, lineno: int) -> KnotTableEntry:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict):
        raise SchemaError(f"line {lineno}: expected a JSON object")
    missing = {"name", "pd"} - obj.keys()
    if missing:
        raise SchemaError(f"line {lineno}: missing fields {sorted(missing)}")
    name, pd = obj["name"], obj["pd"]
    det = obj.get("determinant")
    crossings = obj.get("crossings")
    if not isinstance(name, str) or not name:
        raise SchemaError(f"line {lineno}: name must be a nonempty string")
    if not isinstance(pd, str):
        raise SchemaError(f"line {lineno}: pd must be a string")
    if det is not None and (not isinstance(det, int) or det < 0):
        raise SchemaError(f"line {lineno}: determinant must be a nonnegative integer")
    if crossings is not None and not isinstance(crossings, int):
        raise SchemaError(f"line {lineno}: crossings must be an integer")
    if crossings is None:
        crossings = pd.count("X(")
    return KnotTableEntry(name, pd, det, crossings)


def validate_entry(entry: KnotTableEntry, strict: bool = False) -> None:
    try:
        d = parse_pd(entry.pd)
    except KnotEngineError as exc:
        raise ValidationError(f"{entry.name}: bad PD code: {exc}") from exc
    if components(d) != 1:
        raise ValidationError(f"{entry.name}: expected a knot, got {components(d)} components")
    if d.crossings and len(faces(d)) != d.num_crossings + 2:
        raise ValidationError(f"{entry.name}: diagram violates the Euler relation")
    if strict and entry.declared_determinant is not None:
        got = determinant(d)
        if got != entry.declared_determinant:
            raise ValidationError(
                f"{entry.name}: declared determinant {entry.declared_determinant}, Goeritz gives {got}"
            )


def load_knot_table(source: Union[str, Path] = BUILTIN, strict: bool = False) -> list[KnotTableEntry]:
    """Load and validate a knot table; ``source`` is a path or :data:`BUILTIN`.

    With ``strict`` the declared determinants are checked against the Goeritz
    oracle.  Raises ``FileNotFoundError``, :class:`SchemaError` or
    :class:`ValidationError`.
    """
    if str(source) == BUILTIN:
        text = _read_builtin()
    else:
        path = Path(source)
        if not path.is_file():
            raise FileNotFoundError(f"knot table not found: {path}")
        text = path.read_text()
    entries = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        entry = _parse_line(line, lineno)
        if entry.name in seen:
            raise ValidationError(f"duplicate knot name {entry.name!r}")
        seen.add(entry.name)
        validate_entry(entry, strict)
        entries.append(entry)
    return entries


def find_entry(entries: list[KnotTableEntry], name: str) -> KnotTableEntry:
    name = ALIASES.get(name, name)
    for e in entries:
        if e.name == name:
            return e
    raise KeyError(f"knot {name!r} not in table")


def entry_to_json(entry: KnotTableEntry) -> str:
    return json.dumps({
        "name": entry.name,
        "pd": entry.pd,
        "determinant": entry.declared_determinant,
        "crossings": entry.crossing_number,
    })

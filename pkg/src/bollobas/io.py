"""JSON formats for family systems and covers.

Family system::

    {"n": 2, "k": 2, "m": 2, "t": 2, "families": [[[0], [1]], [[1], [0]]]}

``families[j][i]`` lists the 0-based elements of the set in family ``j``,
column ``i``.  Cover::

    {"k": 2, "t": 2, "n": 2, "blocks": [{"parts": [[0], [1]]}, ...]}

Parsing accepts sets in any order but rejects repeated or out-of-range
elements.  Emission is canonical: fixed key order, sorted sets, one line.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import FamilySystem, elements_of, mask_of
from .covering import PartiteBlock, PartiteCover
from .errors import FormatError, ParameterError


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int_field(doc: dict, name: str, minimum: int) -> int:
    if name not in doc:
        raise FormatError(f"missing field {name!r}")
    v = doc[name]
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"field {name!r} must be an integer, got {v!r}")
    if v < minimum:
        raise FormatError(f"field {name!r} must be >= {minimum}, got {v}")
    return v


def _element_set(raw: Any, where: str, n: int) -> int:
    if not isinstance(raw, list):
        raise FormatError(f"{where} must be a list of integers")
    seen = set()
    for x in raw:
        if not isinstance(x, int) or isinstance(x, bool):
            raise FormatError(f"{where} contains non-integer {x!r}")
        if not 0 <= x < n:
            raise FormatError(f"{where}: element {x} outside [0, {n})")
        if x in seen:
            raise FormatError(f"{where}: element {x} repeated")
        seen.add(x)
    return mask_of(raw)


def _sized_list(raw: Any, size: int, where: str) -> list:
    if not isinstance(raw, list) or len(raw) != size:
        raise FormatError(f"{where} must be a list of length {size}")
    return raw


def family_from_json(text: str) -> FamilySystem:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    n = _int_field(doc, "n", 1)
    k = _int_field(doc, "k", 2)
    m = _int_field(doc, "m", 1)
    t = _int_field(doc, "t", 2)
    if t > k:
        raise FormatError(f"field 't'={t} exceeds k={k}")
    fams = _sized_list(doc.get("families"), k, "families")
    sets = []
    for j, fam in enumerate(fams):
        fam = _sized_list(fam, m, f"families[{j}]")
        sets.append(tuple(_element_set(s, f"families[{j}][{i}]", n) for i, s in enumerate(fam)))
    return FamilySystem(n, k, m, tuple(sets), t)


def parse_family_file(path: str | Path) -> FamilySystem:
    return family_from_json(Path(path).read_text())


def family_to_json(sys: FamilySystem, t: int | None = None) -> str:
    t = t if t is not None else sys.t
    if t is None:
        raise ParameterError("the JSON format needs t; pass it or set sys.t")
    doc = {"n": sys.n, "k": sys.k, "m": sys.m, "t": t, "families": sys.as_lists()}
    return json.dumps(doc) + "\n"


def cover_from_json(text: str) -> PartiteCover:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    k = _int_field(doc, "k", 2)
    t = _int_field(doc, "t", 2)
    n = _int_field(doc, "n", 1)
    if t > k:
        raise FormatError(f"field 't'={t} exceeds k={k}")
    raw = doc.get("blocks")
    if not isinstance(raw, list):
        raise FormatError("field 'blocks' must be a list")
    blocks = []
    for r, b in enumerate(raw):
        if not isinstance(b, dict):
            raise FormatError(f"blocks[{r}] must be an object")
        parts = _sized_list(b.get("parts"), k, f"blocks[{r}].parts")
        masks = tuple(_element_set(p, f"blocks[{r}].parts[{i}]", n) for i, p in enumerate(parts))
        if not all(masks):
            raise FormatError(f"blocks[{r}] has an empty part")
        blocks.append(PartiteBlock(masks))
    return PartiteCover(k, t, n, tuple(blocks))


def parse_cover_file(path: str | Path) -> PartiteCover:
    return cover_from_json(Path(path).read_text())


def cover_to_json(cover: PartiteCover) -> str:
    doc = {
        "k": cover.k,
        "t": cover.t,
        "n": cover.n,
        "blocks": [{"parts": [list(elements_of(p)) for p in b.parts]} for b in cover.blocks],
    }
    return json.dumps(doc) + "\n"

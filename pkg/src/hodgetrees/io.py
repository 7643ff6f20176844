"""Reading and writing complexes.

Two formats:

* JSON chain format::

    {"dims": 2,
     "cells": {"0": ["a", "b"], "1": ["e"], "2": []},
     "boundary": {"1": [[0, 0, -1], [1, 0, 1]], "2": []},
     "augmented": true}

  Boundary entries are sparse (row, col, value) triples, 0-based; values
  may be JSON ints or decimal strings.

* Facet text: one simplex per line, whitespace-separated vertex names,
  ``#`` starts a comment.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import ChainComplex, ComplexError, from_matrices, from_simplicial


class ParseError(ValueError):
    pass


def parse_json(text: str) -> ChainComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    try:
        d = int(doc["dims"])
        cells_doc = doc["cells"]
        cells = [[str(c) for c in cells_doc.get(str(k), [])] for k in range(d + 1)]
        bdoc = doc.get("boundary", {})
        mats = []
        for k in range(1, d + 1):
            rows = [[0] * len(cells[k]) for _ in cells[k - 1]]
            for trip in bdoc.get(str(k), []):
                r, c, v = (int(x) for x in trip)
                if not (0 <= r < len(rows) and 0 <= c < len(cells[k])):
                    raise ParseError(f"boundary {k} entry ({r}, {c}) out of range")
                rows[r][c] = v
            mats.append(rows)
        return from_matrices(cells, mats, bool(doc.get("augmented", True)))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, ComplexError) as exc:
        raise ParseError(f"malformed chain-complex JSON: {exc!r}") from exc


def to_json_dict(X: ChainComplex) -> dict:
    bnd = {}
    for k in range(1, X.top_dim + 1):
        B = X.boundary(k)
        bnd[str(k)] = [[r, c, v] for r, row in enumerate(B.rows) for c, v in enumerate(row) if v]
    return {
        "dims": X.top_dim,
        "cells": {str(k): list(level) for k, level in enumerate(X.cells)},
        "boundary": bnd,
        "augmented": X.augmented,
    }


def dumps(X: ChainComplex) -> str:
    return json.dumps(to_json_dict(X), sort_keys=True, separators=(",", ":"))


def parse_facets(text: str) -> ChainComplex:
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            facets.append(line.split())
    if not facets:
        raise ParseError("no facets found")
    return from_simplicial(facets)


def load_complex(path: str | Path) -> ChainComplex:
    """Load by extension (.json) or by sniffing for a leading '{'."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_facets(text)

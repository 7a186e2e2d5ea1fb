"""JSON sample files, coefficient files and CSV output.

Floats are written with 17 significant digits so that every binary64 value
survives a write/read cycle unchanged.  Field order is fixed, which makes
the output byte-for-byte reproducible.
"""

import json
import math

import numpy as np

from .core import MODES, HermiteTrigPoly
from .grid import GridSpec
from .spectral import HermiteSamples

__all__ = [
    "InputError",
    "format_float",
    "read_samples",
    "parse_samples",
    "samples_to_json",
    "poly_to_json",
    "poly_from_json",
    "read_poly",
    "write_text",
    "format_csv",
    "parse_points",
]

POLY_FORMAT = "hermitrig-poly"
POLY_VERSION = 1


class InputError(ValueError):
    """Malformed or inconsistent input file or argument."""


def format_float(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    s = format(x, ".17g")
    if not any(c in s for c in ".e"):
        s += ".0"
    return s


def _require(doc, key, where="document"):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{where}: missing field {key!r}")
    return doc[key]


def _as_int(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"field {field!r}: expected an integer, got {value!r}")
    return value


def _loads(text, source):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_samples(text: str, source: str = "<samples>"):
    """Parse a sample document.

    Returns
    -------
    samples : HermiteSamples
    mode : str or None
        The optional ``"mode"`` field.
    """
    doc = _loads(text, source)
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be an object")
    grid_doc = _require(doc, "grid", source)
    family = _as_int(_require(grid_doc, "family", f"{source}: grid"), "grid.family")
    if family not in (0, 1):
        raise InputError(f"field 'grid.family': must be 0 or 1, got {family}")

    rows = _require(doc, "rows", source)
    if not isinstance(rows, list) or not rows:
        raise InputError("field 'rows': expected a non-empty list of rows")
    for m, row in enumerate(rows):
        if not isinstance(row, list):
            raise InputError(f"field 'rows[{m}]': expected a list of numbers")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise InputError(f"field 'rows[{m}][{j}]': expected a number, got {v!r}")

    if "N" in grid_doc:
        N = _as_int(grid_doc["N"], "grid.N")
    elif "n" in grid_doc:
        N = 2 * _as_int(grid_doc["n"], "grid.n") + 1
    else:
        N = len(rows[0])
    if N % 2 == 0:
        raise InputError(f"N must be odd (N = 2n+1), got N = {N}")
    if N < 3:
        raise InputError(f"N must be at least 3 (n >= 1), got N = {N}")
    if "n" in grid_doc and "N" in grid_doc and N != 2 * grid_doc["n"] + 1:
        raise InputError("fields 'grid.n' and 'grid.N' disagree (N = 2n+1)")
    for m, row in enumerate(rows):
        if len(row) != N:
            raise InputError(f"field 'rows[{m}]': expected N = {N} entries, got {len(row)}")

    p = len(rows) - 1
    if "p" in doc and _as_int(doc["p"], "p") != p:
        raise InputError(f"field 'p': p = {doc['p']} needs {doc['p'] + 1} rows, got {len(rows)}")

    mode = doc.get("mode")
    if mode is not None and mode not in MODES:
        raise InputError(f"field 'mode': must be one of {MODES}, got {mode!r}")
    try:
        samples = HermiteSamples(GridSpec(family, (N - 1) // 2), np.array(rows, dtype=float))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return samples, mode


def read_samples(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_samples(text, str(path))


def samples_to_json(samples: HermiteSamples, mode=None) -> str:
    lines = [
        "{",
        f'  "grid": {{"family": {samples.grid.family}, "n": {samples.grid.n}}},',
        f'  "p": {samples.p},',
    ]
    if mode is not None:
        lines.append(f'  "mode": "{mode}",')
    rows = [
        "    [" + ", ".join(format_float(v) for v in row) + "]" for row in samples.rows
    ]
    lines.append('  "rows": [')
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pairs(freqs, values):
    items = [f"    [{int(w)}, {format_float(v)}]" for w, v in zip(freqs, values)]
    return "[\n" + ",\n".join(items) + "\n  ]" if items else "[]"


def poly_to_json(poly: HermiteTrigPoly) -> str:
    g = poly.grid
    means = ", ".join(format_float(v) for v in poly.mean_terms)
    return (
        "{\n"
        f'  "format": "{POLY_FORMAT}",\n'
        f'  "version": {POLY_VERSION},\n'
        f'  "grid": {{"family": {g.family}, "n": {g.n}, "N": {g.N}}},\n'
        f'  "p": {poly.p},\n'
        f'  "mode": "{poly.mode}",\n'
        f'  "const_term": {format_float(poly.const_term)},\n'
        f'  "cos": {_pairs(poly.freqs, poly.cos)},\n'
        f'  "sin": {_pairs(poly.freqs, poly.sin)},\n'
        f'  "mean_terms": [{means}]\n'
        "}\n"
    )


def poly_from_json(text: str, source: str = "<poly>") -> HermiteTrigPoly:
    doc = _loads(text, source)
    if _require(doc, "format", source) != POLY_FORMAT:
        raise InputError(f"{source}: not a {POLY_FORMAT} document")
    grid_doc = _require(doc, "grid", source)
    try:
        grid = GridSpec(_require(grid_doc, "family", "grid"), _require(grid_doc, "n", "grid"))
        cos = _require(doc, "cos", source)
        sin = _require(doc, "sin", source)
        freqs = [int(w) for w, _ in cos]
        if freqs != [int(w) for w, _ in sin]:
            raise InputError(f"{source}: cosine and sine frequency lists differ")
        return HermiteTrigPoly(
            grid=grid,
            p=_as_int(_require(doc, "p", source), "p"),
            mode=_require(doc, "mode", source),
            const_term=float(_require(doc, "const_term", source)),
            freqs=freqs,
            cos=[float(a) for _, a in cos],
            sin=[float(b) for _, b in sin],
            mean_terms=[float(v) for v in _require(doc, "mean_terms", source)],
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{source}: {exc}") from None


def read_poly(path) -> HermiteTrigPoly:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return poly_from_json(text, str(path))


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def format_csv(header, rows) -> str:
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(v if isinstance(v, str) else _cell(v) for v in row))
    return "\n".join(out) + "\n"


def _cell(v):
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return format_float(v)


def parse_points(spec: str) -> np.ndarray:
    """Parse ``start:stop:count`` (endpoints inclusive) or ``t1,t2,...``.

    An empty string gives no points.
    """
    spec = spec.strip()
    if not spec:
        return np.empty(0)
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise InputError(f"malformed range {spec!r}: expected start:stop:count")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise InputError(f"malformed range {spec!r}: expected start:stop:count") from None
        if count < 0:
            raise InputError(f"malformed range {spec!r}: count must be nonnegative")
        return np.linspace(start, stop, count)
    try:
        return np.array([float(x) for x in spec.split(",")])
    except ValueError:
        raise InputError(f"malformed point list {spec!r}") from None

"""Digital ink ingestion and arc-length normalization.

Raw traces are ordered (x, y) point sequences.  Normalization interpolates
them with piecewise-linear or natural-cubic splines, reparameterizes by
arc length mapped onto [-1, 1], and rescales coordinates by 2/L so the
resulting plane curve has unit speed and total length 2.  Projecting the
two coordinate splines onto an orthogonal family and dropping the constant
terms yields a translation- and scale-invariant fixed-size description of
the symbol.
"""

from __future__ import annotations

import enum
import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass, replace
from typing import IO, Iterable

import numpy as np
from scipy.interpolate import CubicSpline

from .bases import OrthoBasis, project
from .errors import DegenerateTraceError, ParseError
from .poly import BasisKind, DensePoly, PiecewisePoly


class SplineKind(str, enum.Enum):
    LINEAR = "linear"
    CUBIC = "cubic"


@dataclass(frozen=True)
class InkTrace:
    """An ordered sequence of pen positions, optionally labeled."""

    points: np.ndarray
    label: str | None = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise ValueError("a trace needs at least two (x, y) points")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def translated(self, dx: float, dy: float) -> "InkTrace":
        return replace(self, points=self.points + np.array([dx, dy]))

    def scaled(self, factor: float) -> "InkTrace":
        return replace(self, points=self.points * float(factor))


@dataclass(frozen=True)
class NormalizedTrace:
    """Arc-length parameterized coordinate splines on [-1, 1].

    knots are the arc-length parameters of the (deduplicated) input points;
    total_length is the curve length before rescaling, in input units.
    """

    cx: PiecewisePoly
    cy: PiecewisePoly
    knots: np.ndarray
    total_length: float

    def __post_init__(self):
        knots = np.array(self.knots, dtype=float)
        knots.setflags(write=False)
        object.__setattr__(self, "knots", knots)


@dataclass(frozen=True)
class SymbolCoeffs:
    """Fixed-size coefficient description of one symbol.

    xs and ys hold the degree 1..d expansion coefficients of the two
    coordinate splines; the constant terms are dropped (they carry only
    position) but retained as x0/y0, along with the original length, so
    reconstructions can be mapped back to the input frame.
    """

    basis_id: str
    xs: np.ndarray
    ys: np.ndarray
    label: str | None = None
    x0: float | None = None
    y0: float | None = None
    length: float | None = None

    def __post_init__(self):
        xs = np.array(self.xs, dtype=float)
        ys = np.array(self.ys, dtype=float)
        if xs.shape != ys.shape or xs.ndim != 1:
            raise ValueError("xs and ys must be 1-D arrays of equal length")
        xs.setflags(write=False)
        ys.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)


def collapse_duplicates(points: np.ndarray) -> np.ndarray:
    """Drop points identical to their predecessor."""
    pts = np.asarray(points, dtype=float)
    if len(pts) == 0:
        return pts
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(pts[1:] != pts[:-1], axis=1)
    return pts[keep]


def parse_pendigits(source: str | Iterable[str]) -> list[InkTrace]:
    """Parse pen-digit samples: 17 comma-separated integers per line.

    The first 16 fields are eight (x, y) pairs, the last is the class digit.
    Blank lines are skipped; anything else malformed raises ParseError with
    its line number.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    traces = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 17:
            raise ParseError(f"expected 17 fields, got {len(fields)}", lineno)
        try:
            values = [int(f) for f in fields]
        except ValueError as exc:
            raise ParseError(f"non-integer field: {exc}", lineno) from None
        pts = collapse_duplicates(np.array(values[:16], dtype=float).reshape(8, 2))
        if len(pts) < 2:
            raise ParseError("degenerate sample: fewer than two distinct points", lineno)
        traces.append(InkTrace(pts, label=str(values[16])))
    return traces


def load_pendigits(path) -> list[InkTrace]:
    with open(path, encoding="utf-8") as fh:
        return parse_pendigits(fh)


def _local_tag(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def parse_inkml(document: str | bytes | IO) -> list[InkTrace]:
    """Parse the trace elements of an InkML document.

    Each trace element holds comma-separated points whose coordinates are
    space-separated; only the first two channels are read.  A document-level
    annotation, when present, becomes the label of every trace.
    """
    try:
        if isinstance(document, (str, bytes)):
            root = ET.fromstring(document)
        else:
            root = ET.parse(document).getroot()
    except ET.ParseError as exc:
        line = exc.position[0] if getattr(exc, "position", None) else None
        raise ParseError(f"malformed XML: {exc}", line) from None

    label = None
    for el in root.iter():
        if _local_tag(el.tag) == "annotation" and el.text and el.text.strip():
            label = el.text.strip()
            break

    traces = []
    for el in root.iter():
        if _local_tag(el.tag) != "trace":
            continue
        text = el.text or ""
        pts = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            channels = chunk.split()
            if len(channels) < 2:
                raise ParseError(f"trace point needs x and y: {chunk!r}")
            try:
                pts.append((float(channels[0]), float(channels[1])))
            except ValueError:
                raise ParseError(f"non-numeric coordinate in {chunk!r}") from None
        pts = collapse_duplicates(np.array(pts, dtype=float).reshape(-1, 2))
        if len(pts) < 2:
            raise ParseError("trace has fewer than two distinct points")
        traces.append(InkTrace(pts, label=label))
    return traces


def load_inkml(path) -> list[InkTrace]:
    with open(path, "rb") as fh:
        return parse_inkml(fh)


def merge_strokes(traces: Iterable[InkTrace], label: str | None = None) -> InkTrace:
    """Concatenate strokes end-to-end in time order into one trace.

    Pen-up gaps become straight connecting segments.  The label defaults to
    the first stroke's label.
    """
    traces = list(traces)
    if not traces:
        raise ValueError("no strokes to merge")
    pts = collapse_duplicates(np.vstack([t.points for t in traces]))
    if label is None:
        label = traces[0].label
    return InkTrace(pts, label=label)


def _shift_to_global(local: np.ndarray, x0: float) -> np.ndarray:
    """Rewrite a polynomial in (s - x0) as one in s (degree at most 3)."""
    out = np.zeros(len(local))
    for k, ck in enumerate(local):
        # ck * (s - x0)^k expanded binomially
        row = np.array([1.0])
        for _ in range(k):
            row = np.convolve(row, np.array([-x0, 1.0]))
        out[: k + 1] += ck * row
    return out


def _linear_pieces(knots: np.ndarray, values: np.ndarray) -> PiecewisePoly:
    segs = []
    for i in range(len(knots) - 1):
        slope = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i])
        segs.append(
            DensePoly(
                BasisKind.MONOMIAL,
                np.array([values[i] - slope * knots[i], slope]),
            )
        )
    return PiecewisePoly(knots, tuple(segs))


def _cubic_pieces(knots: np.ndarray, values: np.ndarray) -> PiecewisePoly:
    if len(knots) == 2:  # natural cubic through two points is the chord
        return _linear_pieces(knots, values)
    cs = CubicSpline(knots, values, bc_type="natural")
    segs = []
    for i in range(len(knots) - 1):
        local = cs.c[::-1, i]  # ascending powers of (s - knots[i])
        segs.append(DensePoly(BasisKind.MONOMIAL, _shift_to_global(local, knots[i])))
    return PiecewisePoly(knots, tuple(segs))


_GL8_NODES, _GL8_WEIGHTS = np.polynomial.legendre.leggauss(8)


def _cubic_arc_lengths(t: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Per-segment arc lengths of natural cubics x(t), y(t), 8-point quadrature."""
    csx = CubicSpline(t, x, bc_type="natural")
    csy = CubicSpline(t, y, bc_type="natural")
    dx, dy = csx.derivative(), csy.derivative()
    lengths = np.zeros(len(t) - 1)
    for i in range(len(t) - 1):
        mid, half = (t[i] + t[i + 1]) / 2.0, (t[i + 1] - t[i]) / 2.0
        nodes = mid + half * _GL8_NODES
        speed = np.hypot(dx(nodes), dy(nodes))
        lengths[i] = half * float(np.dot(_GL8_WEIGHTS, speed))
    return lengths


def arc_length_normalize(
    trace: InkTrace, spline: SplineKind = SplineKind.LINEAR
) -> NormalizedTrace:
    """Reparameterize a trace by arc length on [-1, 1] at standard size.

    Consecutive duplicate points are collapsed before fitting.  Cumulative
    arc length along the interpolating spline maps affinely onto [-1, 1],
    and coordinates are rescaled by 2/L, so the result is a (piecewise)
    unit-speed curve of total length 2 regardless of the input's position,
    size, or sampling density.
    """
    spline = SplineKind(spline)
    pts = collapse_duplicates(trace.points)
    if len(pts) < 2:
        raise DegenerateTraceError("trace has fewer than two distinct points")

    chord = np.hypot(*np.diff(pts, axis=0).T)
    if spline is SplineKind.LINEAR or len(pts) == 2:
        seg_lengths = chord
    else:
        t = np.concatenate([[0.0], np.cumsum(chord)])
        seg_lengths = _cubic_arc_lengths(t, pts[:, 0], pts[:, 1])

    total = float(np.sum(seg_lengths))
    if total <= 0.0:
        raise DegenerateTraceError("zero total arc length")
    cumulative = np.concatenate([[0.0], np.cumsum(seg_lengths)])
    knots = 2.0 * (cumulative / total) - 1.0
    knots[0], knots[-1] = -1.0, 1.0
    if not np.all(np.diff(knots) > 0):
        raise DegenerateTraceError("arc-length parameters collapse in float precision")

    scaled = pts * (2.0 / total)
    fit = _linear_pieces if spline is SplineKind.LINEAR else _cubic_pieces
    return NormalizedTrace(
        cx=fit(knots, scaled[:, 0]),
        cy=fit(knots, scaled[:, 1]),
        knots=knots,
        total_length=total,
    )


def to_coeffs(
    normalized: NormalizedTrace, basis: OrthoBasis, label: str | None = None
) -> SymbolCoeffs:
    """Project both coordinate splines and drop the constant terms.

    The returned 2d numbers are invariant to translation and uniform
    scaling of the source trace, and do not depend on how densely the
    curve was sampled.
    """
    if basis.degree < 1:
        raise ValueError("basis degree must be at least 1")
    cx = project(normalized.cx, basis)
    cy = project(normalized.cy, basis)
    return SymbolCoeffs(
        basis_id=basis.basis_id,
        xs=cx[1:],
        ys=cy[1:],
        label=label,
        x0=float(cx[0]),
        y0=float(cy[0]),
        length=normalized.total_length,
    )


def symbol_coeffs(
    trace: InkTrace, basis: OrthoBasis, spline: SplineKind = SplineKind.LINEAR
) -> SymbolCoeffs:
    """Full pipeline: normalize a raw trace and project it."""
    return to_coeffs(arc_length_normalize(trace, spline), basis, label=trace.label)


def coeffs_to_json_dict(c: SymbolCoeffs) -> dict:
    doc = {
        "label": c.label,
        "basis_id": c.basis_id,
        "xs": [float(v) for v in c.xs],
        "ys": [float(v) for v in c.ys],
    }
    if c.x0 is not None:
        doc["x0"] = c.x0
        doc["y0"] = c.y0
        doc["length"] = c.length
    return doc


def coeffs_from_json_dict(doc: dict) -> SymbolCoeffs:
    return SymbolCoeffs(
        basis_id=doc["basis_id"],
        xs=np.array(doc["xs"], dtype=float),
        ys=np.array(doc["ys"], dtype=float),
        label=doc.get("label"),
        x0=doc.get("x0"),
        y0=doc.get("y0"),
        length=doc.get("length"),
    )


def write_coeffs_jsonl(items: Iterable[SymbolCoeffs], path) -> None:
    """One JSON object per line; floats round-trip bit-exactly."""
    with open(path, "w", encoding="utf-8") as fh:
        for c in items:
            fh.write(json.dumps(coeffs_to_json_dict(c)))
            fh.write("\n")


def read_coeffs_jsonl(path) -> list[SymbolCoeffs]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(coeffs_from_json_dict(json.loads(line)))
    return out

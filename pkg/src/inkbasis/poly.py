"""Polynomial arithmetic in classical bases on [-1, 1].

Dense polynomials carry their coefficients in one of three classical bases
(monomial, Legendre, Chebyshev of the first kind).  Piecewise polynomials
hold one low-degree monomial segment per breakpoint interval, with the
segment coefficients written on the global parameter.  All weighted
integrals reduce to closed-form moments, so nothing in this module ever
calls a numerical quadrature routine.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from numpy.polynomial import legendre as _leg
from numpy.polynomial import polynomial as _poly

from .errors import DegreeTooLargeError, DomainError

MAX_CONVERT_DEGREE = 64  # monomial conversion conditioning degrades beyond this


class BasisKind(str, enum.Enum):
    MONOMIAL = "monomial"
    LEGENDRE = "legendre"
    CHEBYSHEV = "chebyshev"


class Weight(str, enum.Enum):
    """Integration weight on [-1, 1]."""

    UNIT = "unit"                  # dx
    INVERSE_SQRT = "inverse_sqrt"  # dx / sqrt(1 - x^2)


@dataclass(frozen=True)
class DensePoly:
    """Coefficients of a polynomial in a named classical basis.

    coeffs[i] multiplies the basis element of degree i; trailing zeros are
    allowed, so the stored degree is simply len(coeffs) - 1.
    """

    basis: BasisKind
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.array(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty 1-D array")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "basis", BasisKind(self.basis))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def trim(self) -> "DensePoly":
        """Canonical form with trailing zero coefficients removed."""
        c = np.trim_zeros(self.coeffs, "b")
        if len(c) == 0:
            c = np.zeros(1)
        return DensePoly(self.basis, c)

    def __call__(self, x):
        if self.basis is BasisKind.CHEBYSHEV:
            return eval_clenshaw(self, x)
        if self.basis is BasisKind.LEGENDRE:
            return eval_legendre(self, x)
        return _poly.polyval(np.asarray(x, dtype=float), self.coeffs)

    def derivative(self) -> "DensePoly":
        return derivative(self)

    def convert(self, target: BasisKind) -> "DensePoly":
        return convert(self, target)


def eval_clenshaw(p: DensePoly, x):
    """Evaluate a Chebyshev series by the backward Clenshaw recurrence.

    Accepts scalar or array arguments.  Values outside [-1, 1] are
    mathematically fine but usually indicate a parameterization bug, hence
    the debug assertion.
    """
    if p.basis is not BasisKind.CHEBYSHEV:
        raise ValueError("eval_clenshaw requires a Chebyshev-basis polynomial")
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    assert np.all(np.abs(xs) <= 1 + 1e-12), "evaluation point outside [-1, 1]"
    c = p.coeffs
    if len(c) == 1:
        out = np.full_like(xs, c[0])
    else:
        x2 = 2.0 * xs
        b0 = np.full_like(xs, c[-2])
        b1 = np.full_like(xs, c[-1])
        for i in range(3, len(c) + 1):
            b0, b1 = c[-i] - b1, b0 + b1 * x2
        out = b0 + b1 * xs
    return float(out[0]) if scalar else out


def eval_legendre(p: DensePoly, x):
    """Evaluate a Legendre series, accumulating P_n by the Bonnet recurrence."""
    if p.basis is not BasisKind.LEGENDRE:
        raise ValueError("eval_legendre requires a Legendre-basis polynomial")
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    c = p.coeffs
    total = np.full_like(xs, c[0])  # P_0 = 1
    if len(c) > 1:
        p_prev = np.ones_like(xs)
        p_cur = xs.copy()
        total = total + c[1] * p_cur
        for n in range(2, len(c)):
            p_prev, p_cur = p_cur, ((2 * n - 1) * xs * p_cur - (n - 1) * p_prev) / n
            total = total + c[n] * p_cur
    return float(total[0]) if scalar else total


_DERIV = {
    BasisKind.MONOMIAL: _poly.polyder,
    BasisKind.LEGENDRE: _leg.legder,
    BasisKind.CHEBYSHEV: _cheb.chebder,
}


def derivative(p: DensePoly) -> DensePoly:
    """Exact derivative, expressed in the same basis as the input."""
    if p.degree == 0:
        return DensePoly(p.basis, np.zeros(1))
    return DensePoly(p.basis, _DERIV[p.basis](p.coeffs))


_TO_MONOMIAL = {
    BasisKind.MONOMIAL: lambda c: c,
    BasisKind.LEGENDRE: _leg.leg2poly,
    BasisKind.CHEBYSHEV: _cheb.cheb2poly,
}
_FROM_MONOMIAL = {
    BasisKind.MONOMIAL: lambda c: c,
    BasisKind.LEGENDRE: _leg.poly2leg,
    BasisKind.CHEBYSHEV: _cheb.poly2cheb,
}


def convert(p: DensePoly, target: BasisKind) -> DensePoly:
    """Re-express the same polynomial in another classical basis."""
    target = BasisKind(target)
    if p.degree > MAX_CONVERT_DEGREE:
        raise DegreeTooLargeError(
            f"degree {p.degree} exceeds the conversion guard {MAX_CONVERT_DEGREE}"
        )
    if target is p.basis:
        return DensePoly(target, p.coeffs.copy())
    mono = _TO_MONOMIAL[p.basis](p.coeffs)
    out = _FROM_MONOMIAL[target](mono)
    # numpy trims exact trailing zeros; keep the input length for round-trips
    if len(out) < len(p.coeffs):
        out = np.concatenate([out, np.zeros(len(p.coeffs) - len(out))])
    return DensePoly(target, out)


@dataclass(frozen=True)
class PiecewisePoly:
    """Piecewise polynomial on strictly increasing breakpoints.

    Each segment is a monomial-basis DensePoly of degree at most 3, written
    on the global parameter (not shifted per segment), valid on
    [breakpoints[i], breakpoints[i+1]].
    """

    breakpoints: np.ndarray
    segments: tuple[DensePoly, ...]

    def __post_init__(self):
        bp = np.array(self.breakpoints, dtype=float)
        bp.setflags(write=False)
        segs = tuple(self.segments)
        if bp.ndim != 1 or len(bp) < 2:
            raise ValueError("need at least two breakpoints")
        if not np.all(np.diff(bp) > 0):
            raise ValueError("breakpoints must be strictly increasing")
        if len(segs) != len(bp) - 1:
            raise ValueError("segment count must be breakpoint count - 1")
        for s in segs:
            if s.basis is not BasisKind.MONOMIAL:
                raise ValueError("segments must be monomial-basis polynomials")
            if s.degree > 3:
                raise ValueError("segment degree must be at most 3")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "segments", segs)
        # continuity at interior breakpoints, 1e-12 relative
        for i in range(1, len(segs)):
            left = segs[i - 1](bp[i])
            right = segs[i](bp[i])
            scale = max(1.0, abs(left), abs(right))
            if abs(left - right) > 1e-12 * scale:
                raise ValueError(f"discontinuity at breakpoint {bp[i]}")

    @property
    def coeff_matrix(self) -> np.ndarray:
        """Segment coefficients as an (nseg, 4) zero-padded array."""
        out = np.zeros((len(self.segments), 4))
        for i, s in enumerate(self.segments):
            out[i, : len(s.coeffs)] = s.coeffs
        return out

    def __call__(self, s):
        xs = np.asarray(s, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs)
        idx = np.clip(
            np.searchsorted(self.breakpoints, xs, side="right") - 1,
            0,
            len(self.segments) - 1,
        )
        out = np.empty_like(xs)
        for i, seg in enumerate(self.segments):
            mask = idx == i
            if np.any(mask):
                out[mask] = _poly.polyval(xs[mask], seg.coeffs)
        return float(out[0]) if scalar else out


def weighted_moment(k: int, a: float, b: float, weight: Weight) -> float:
    """Closed-form weighted moment of x^k over [a, b] within [-1, 1].

    Unit weight gives the plain integral of x^k.  The inverse-square-root
    weight integrates x^k / sqrt(1 - x^2), using the recurrence

        I_k = ((k - 1) I_{k-2} - [x^{k-1} sqrt(1 - x^2)]_a^b) / k

    seeded with I_0 = arcsin(b) - arcsin(a) and I_1 = sqrt(1-a^2) - sqrt(1-b^2).
    The boundary terms vanish at the interval endpoints +-1, so the endpoint
    singularity needs no special handling.
    """
    if k < 0:
        raise ValueError("moment order must be non-negative")
    table = moment_table(k, np.array([a]), np.array([b]), weight)
    return float(table[k, 0])


def moment_table(kmax: int, lo: np.ndarray, hi: np.ndarray, weight: Weight) -> np.ndarray:
    """Moments of x^k over several subintervals at once.

    Returns an array M of shape (kmax + 1, len(lo)) with
    M[k, j] = weighted moment of x^k over [lo[j], hi[j]].
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if np.any(lo < -1.0) or np.any(hi > 1.0) or np.any(lo > hi):
        raise DomainError("moment intervals must satisfy -1 <= a <= b <= 1")
    weight = Weight(weight)
    out = np.empty((kmax + 1, len(lo)))
    if weight is Weight.UNIT:
        pl, ph = lo.copy(), hi.copy()  # lo^(k+1), hi^(k+1)
        for k in range(kmax + 1):
            out[k] = (ph - pl) / (k + 1)
            pl *= lo
            ph *= hi
        return out
    ra = np.sqrt(np.maximum(0.0, 1.0 - lo * lo))
    rb = np.sqrt(np.maximum(0.0, 1.0 - hi * hi))
    out[0] = np.arcsin(hi) - np.arcsin(lo)
    if kmax >= 1:
        out[1] = ra - rb
    pa, pb = lo.copy(), hi.copy()  # lo^(k-1), hi^(k-1)
    for k in range(2, kmax + 1):
        out[k] = ((k - 1) * out[k - 2] - (pb * rb - pa * ra)) / k
        pa *= lo
        pb *= hi
    return out


@lru_cache(maxsize=32)
def _classical_monomial_rows(basis: BasisKind, degree: int) -> np.ndarray:
    """Rows of the (degree+1)^2 matrix: monomial coefficients of basis elements."""
    rows = np.zeros((degree + 1, degree + 1))
    to_mono = _TO_MONOMIAL[BasisKind(basis)]
    for i in range(degree + 1):
        e = np.zeros(i + 1)
        e[i] = 1.0
        m = to_mono(e)
        rows[i, : len(m)] = m
    return rows


def _segment_coeffs(f: PiecewisePoly, deriv_order: int) -> np.ndarray:
    c = f.coeff_matrix
    if deriv_order == 0:
        return c
    return c[:, 1:] * np.arange(1, 4)


def inner_piecewise(
    f: PiecewisePoly, g: DensePoly, weight: Weight, deriv_order: int = 0
) -> float:
    """Weighted inner product of a piecewise polynomial with a dense one.

    Computes sum over segments of the integral of f^(k) g^(k) w on
    [-1, 1], k = deriv_order applied to both arguments.  Every segment
    integral expands through the closed-form moment table, so the result is
    exact up to floating-point rounding (noise grows with the degree of g in
    monomial form, which is why conversions are degree-guarded).
    """
    if deriv_order not in (0, 1):
        raise ValueError("deriv_order must be 0 or 1")
    gm = convert(g, BasisKind.MONOMIAL)
    if deriv_order == 1:
        gm = gm.derivative()
    gc = gm.coeffs
    segc = _segment_coeffs(f, deriv_order)
    lo, hi = f.breakpoints[:-1], f.breakpoints[1:]
    kmax = (segc.shape[1] - 1) + (len(gc) - 1)
    table = moment_table(kmax, lo, hi, weight)
    total = 0.0
    for j in range(len(lo)):
        prod = np.convolve(segc[j], gc)
        total += float(np.dot(prod, table[: len(prod), j]))
    return total


def piecewise_classical_inners(
    f: PiecewisePoly,
    basis: BasisKind,
    degree: int,
    weight: Weight,
    deriv_order: int = 0,
) -> np.ndarray:
    """inner_piecewise of f against every classical basis element 0..degree.

    Vectorized over segments and basis elements; identical mathematics to
    calling inner_piecewise in a loop (same moment tables), just batched.
    """
    if deriv_order not in (0, 1):
        raise ValueError("deriv_order must be 0 or 1")
    rows = _classical_monomial_rows(BasisKind(basis), degree)
    if deriv_order == 1:
        rows = rows[:, 1:] * np.arange(1, degree + 1) if degree >= 1 else np.zeros((1, 1))
    segc = _segment_coeffs(f, deriv_order)
    lo, hi = f.breakpoints[:-1], f.breakpoints[1:]
    nrow, gwidth = rows.shape
    kmax = (segc.shape[1] - 1) + (gwidth - 1)
    table = moment_table(kmax, lo, hi, weight)
    out = np.zeros(nrow)
    for u in range(segc.shape[1]):
        # W[i, j] = integral of x^u * B_i over segment j
        W = rows @ table[u : u + gwidth, :]
        out += W @ segc[:, u]
    return out

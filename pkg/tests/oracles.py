"""Independent reference computations used to check the library.

Everything here deliberately avoids the code paths under test: inner
products are evaluated by Gauss-Legendre quadrature on function values
(with the arccos substitution for the inverse-square-root weight),
orthogonal families are rebuilt by Gram-Schmidt over monomial seeds with
quadrature inner products, Chebyshev series are summed naively by the
forward three-term recurrence, and the point-matching distance is an
exhaustive dynamic program.
"""

from functools import lru_cache

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from numpy.polynomial import legendre as _leg
from numpy.polynomial import polynomial as _poly

GL_NODES = 240


@lru_cache(maxsize=4)
def _gl_reference(n):
    return np.polynomial.legendre.leggauss(n)


def _gl(a, b, n=GL_NODES):
    """Gauss-Legendre nodes and weights scaled to [a, b]."""
    x, w = _gl_reference(n)
    mid, half = (a + b) / 2.0, (b - a) / 2.0
    return mid + half * x, half * w


def quad_inner(f, g, weight, a=-1.0, b=1.0):
    """Integral of f(x) g(x) w(x) over [a, b] for callables f, g.

    weight is "unit" or "inverse_sqrt".  The inverse-square-root weight is
    handled by substituting x = cos(theta), which removes the endpoint
    singularity exactly.
    """
    if weight == "unit":
        x, w = _gl(a, b)
        return float(np.sum(w * f(x) * g(x)))
    if weight == "inverse_sqrt":
        ta, tb = np.arccos(np.clip(b, -1, 1)), np.arccos(np.clip(a, -1, 1))
        t, w = _gl(ta, tb)
        x = np.cos(t)
        return float(np.sum(w * f(x) * g(x)))
    raise ValueError(weight)


def _series_callables(coeffs, basis):
    """(value, derivative) callables for a coefficient vector in a basis."""
    c = np.asarray(coeffs, dtype=float)
    if basis == "chebyshev":
        return (lambda x: _cheb.chebval(x, c),
                lambda x: _cheb.chebval(x, _cheb.chebder(c)) if len(c) > 1 else np.zeros_like(x))
    if basis == "legendre":
        return (lambda x: _leg.legval(x, c),
                lambda x: _leg.legval(x, _leg.legder(c)) if len(c) > 1 else np.zeros_like(x))
    if basis == "monomial":
        return (lambda x: _poly.polyval(x, c),
                lambda x: _poly.polyval(x, _poly.polyder(c)) if len(c) > 1 else np.zeros_like(x))
    raise ValueError(basis)


def quad_inner_series(cf, cg, basis, weight, lam=0.0, order=0):
    """Sobolev inner product of two coefficient vectors, by quadrature."""
    f, fp = _series_callables(cf, basis)
    g, gp = _series_callables(cg, basis)
    out = quad_inner(f, g, weight)
    if order >= 1 and lam != 0.0:
        out += lam * quad_inner(fp, gp, weight)
    return out


def quad_inner_piecewise(breaks, seg_coeffs, g, weight, deriv_order=0):
    """Piecewise integral sum_i int f^(k) g^(k) w over [breaks[i], breaks[i+1]].

    seg_coeffs: list of global-parameter monomial coefficient arrays, one per
    segment.  g is a callable pair (value, derivative) or a plain callable
    (deriv_order must then be 0).
    """
    if callable(g):
        gv, gd = g, None
    else:
        gv, gd = g
    total = 0.0
    for i, c in enumerate(seg_coeffs):
        c = np.asarray(c, dtype=float)
        if deriv_order == 1:
            c = _poly.polyder(c) if len(c) > 1 else np.zeros(1)
            gg = gd
        else:
            gg = gv
        total += quad_inner(lambda x, c=c: _poly.polyval(x, c), gg,
                            weight, breaks[i], breaks[i + 1])
    return total


def piecewise_derivative_eval(f, x):
    """Evaluate the (possibly discontinuous) derivative of a piecewise poly."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    bp = f.breakpoints
    idx = np.clip(np.searchsorted(bp, xs, side="right") - 1, 0, len(f.segments) - 1)
    out = np.empty_like(xs)
    for i, seg in enumerate(f.segments):
        mask = idx == i
        if np.any(mask):
            d = _poly.polyder(seg.coeffs) if len(seg.coeffs) > 1 else np.zeros(1)
            out[mask] = _poly.polyval(xs[mask], d)
    return out


def naive_cheb_eval(coeffs, x):
    """Term-by-term Chebyshev sum via the forward recurrence (no Clenshaw)."""
    x = np.asarray(x, dtype=float)
    total = np.zeros_like(x)
    t_prev, t_cur = np.ones_like(x), x.copy()
    for n, c in enumerate(np.asarray(coeffs, dtype=float)):
        if n == 0:
            tn = t_prev
        elif n == 1:
            tn = t_cur
        else:
            tn = 2 * x * t_cur - t_prev
            t_prev, t_cur = t_cur, tn
        total = total + c * tn
    return total


def naive_legendre_eval(coeffs, x):
    """Term-by-term Legendre sum via the forward Bonnet recurrence."""
    x = np.asarray(x, dtype=float)
    total = np.zeros_like(x)
    p_prev, p_cur = np.ones_like(x), x.copy()
    for n, c in enumerate(np.asarray(coeffs, dtype=float)):
        if n == 0:
            pn = p_prev
        elif n == 1:
            pn = p_cur
        else:
            pn = ((2 * n - 1) * x * p_cur - (n - 1) * p_prev) / n
            p_prev, p_cur = p_cur, pn
        total = total + c * pn
    return total


def gram_schmidt_by_quadrature(weight, lam, order, degree):
    """Rebuild the orthogonal family independently.

    Classical Gram-Schmidt over monomial seeds {1, x, x^2, ...} with the
    quadrature inner product, with one re-orthogonalization sweep.  Returns
    (expansion, sq_norms) where expansion row i holds the coefficients of the
    i-th family member in the classical basis matching the weight (Chebyshev
    for inverse_sqrt, Legendre for unit), scaled so the diagonal is 1.
    """
    def ip(ca, cb):
        return quad_inner_series(ca, cb, "monomial", weight, lam, order)

    vecs = []
    for i in range(degree + 1):
        v = np.zeros(i + 1)
        v[i] = 1.0
        for _ in range(2):
            for u in vecs:
                uu = np.zeros(i + 1)
                uu[: len(u)] = u
                v = v - (ip(v, uu) / ip(uu, uu)) * uu
        vecs.append(v)

    to_classical = _cheb.poly2cheb if weight == "inverse_sqrt" else _leg.poly2leg
    expansion = np.zeros((degree + 1, degree + 1))
    sq_norms = np.zeros(degree + 1)
    for i, v in enumerate(vecs):
        c = to_classical(v)
        c = c / c[-1]
        expansion[i, : len(c)] = c
        back = _cheb.cheb2poly(c) if weight == "inverse_sqrt" else _leg.leg2poly(c)
        sq_norms[i] = ip(back, back)
    return expansion, sq_norms


def dp_match_distance_sq(points_a, points_b):
    """Minimum summed squared distance over monotone point correspondences.

    Matches every index i of the longer sequence to phi(i) in the shorter
    one, phi non-decreasing with phi(0) = 0 and phi(m) = n, by exhaustive
    dynamic programming.  Intended for tiny traces only.
    """
    A = np.asarray(points_a, dtype=float)
    B = np.asarray(points_b, dtype=float)
    if len(A) < len(B):
        A, B = B, A
    m, n = len(A), len(B)
    d = ((A[:, None, :] - B[None, :, :]) ** 2).sum(axis=2)

    cost = np.full((m, n), np.inf)
    cost[0, 0] = d[0, 0]
    for i in range(1, m):
        best_prefix = np.minimum.accumulate(cost[i - 1])
        cost[i] = d[i] + best_prefix
    return float(cost[m - 1, n - 1])

#!/usr/bin/env python3
"""Tour of the polynomial core: bases, evaluation, closed-form integrals.

Everything downstream rests on three facts demonstrated here:
  * series in the classical bases evaluate stably (Clenshaw / Bonnet),
  * conversion between bases is exact at practical degrees,
  * weighted integrals of piecewise polynomials need no quadrature.
"""

import numpy as np

from inkbasis import (
    BasisKind,
    DensePoly,
    PiecewisePoly,
    Weight,
    convert,
    derivative,
    eval_clenshaw,
    inner_piecewise,
    weighted_moment,
)

# --- dense polynomials in three bases ------------------------------------
# The same parabola 2x^2 - 1, written three ways.
p_mono = DensePoly(BasisKind.MONOMIAL, [-1, 0, 2])
p_cheb = convert(p_mono, BasisKind.CHEBYSHEV)
p_leg = convert(p_mono, BasisKind.LEGENDRE)
print("2x^2 - 1 in monomial  basis:", p_mono.coeffs)
print("2x^2 - 1 in chebyshev basis:", p_cheb.coeffs)   # exactly T_2
print("2x^2 - 1 in legendre  basis:", p_leg.coeffs)

xs = np.linspace(-1, 1, 5)
print("\nvalues agree across bases:")
print("  monomial :", p_mono(xs))
print("  chebyshev:", p_cheb(xs))
print("  legendre :", p_leg(xs))

# --- Clenshaw evaluation ---------------------------------------------------
# A degree-30 series evaluates to full precision in one backward pass.
rng = np.random.default_rng(1)
series = DensePoly(BasisKind.CHEBYSHEV, rng.uniform(-1, 1, 31))
print("\ndegree-30 series at x=0.3:", eval_clenshaw(series, 0.3))

# --- derivatives stay in their basis --------------------------------------
print("\nd/dx in chebyshev coefficients:")
print("  T_3        ->", derivative(DensePoly(BasisKind.CHEBYSHEV, [0, 0, 0, 1])).coeffs)
print("  T_2        ->", derivative(DensePoly(BasisKind.CHEBYSHEV, [0, 0, 1])).coeffs)

# --- closed-form weighted moments ------------------------------------------
# Under the inverse-sqrt weight the even moments over [-1, 1] follow the
# double-factorial ladder pi, pi/2, 3pi/8, ...; odd ones vanish.
print("\nmoments of x^k, weight 1/sqrt(1-x^2), over [-1, 1]:")
for k in range(7):
    print(f"  k={k}: {weighted_moment(k, -1, 1, Weight.INVERSE_SQRT):+.12f}")

# On subintervals the same recurrence applies; no integration routine runs.
print("moment of x^4 over [0.2, 0.9]:",
      weighted_moment(4, 0.2, 0.9, Weight.INVERSE_SQRT))

# --- piecewise polynomials and their inner products -------------------------
# A hat function on [-1, 0, 1] against the first few Chebyshev polynomials.
hat = PiecewisePoly(
    np.array([-1.0, 0.0, 1.0]),
    (
        DensePoly(BasisKind.MONOMIAL, [1.0, 1.0]),    # 1 + s on [-1, 0]
        DensePoly(BasisKind.MONOMIAL, [1.0, -1.0]),   # 1 - s on [0, 1]
    ),
)
print("\nhat function against T_0, T_1, T_2 (inverse-sqrt weight):")
for i in range(3):
    e = np.zeros(i + 1)
    e[i] = 1.0
    g = DensePoly(BasisKind.CHEBYSHEV, e)
    print(f"  <hat, T_{i}> = {inner_piecewise(hat, g, Weight.INVERSE_SQRT):+.12f}")
print("(T_1 vanishes by symmetry; the others are (pi-2) and -2/3.)")

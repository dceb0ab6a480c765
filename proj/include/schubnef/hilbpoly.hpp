#pragma once

#include "schubnef/numeric.hpp"
#include "schubnef/qpolynomial.hpp"

namespace schubnef {

/// The polynomial reading of binom(T + shift, m): the falling factorial
/// (T+shift)(T+shift-1)...(T+shift-m+1) / m!. Degree exactly m; the constant
/// polynomial 1 when m == 0. Unlike binom_comb, this is never clamped to 0.
QPolynomial binomial_polynomial(int shift, int m);

/// Hilbert polynomial of a degree-d hypersurface in P^m:
/// binom(T+m, m) - binom(T+m-d, m). Degree m-1, leading coefficient d/(m-1)!.
QPolynomial hilb_poly(int d, int m);

/// Independent brute-force check: counts degree-T monomials in m+1 variables
/// minus degree-(T-d) monomials (0 when T < d), each by explicit enumeration
/// of exponent vectors rather than by any binomial formula.
Int hilbert_function_oracle(int d, int m, int T);

/// Dimension binom(m+d, d) - 1 of the space of degree-d hypersurfaces in P^m.
Int fiber_dimension(int d, int m);

/// Dimension binom(m+d, d) - 2 of those hypersurfaces through a fixed point.
Int through_point_dimension(int d, int m);

}  // namespace schubnef

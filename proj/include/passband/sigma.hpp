#pragma once

#include <complex>

#include "passband/band.hpp"

namespace passband {

/*
 * Boundary values on the real axis of
 *
 *     sigma(z) = 1 / ( sqrt(z^2 - b^2) * sqrt(z^2 - a^2) ),
 *
 * the branch that is positive for real x > b and continuous from the upper
 * half-plane. Region by region on the real axis:
 *
 *     |x| > b      positive real
 *     a < x < b    negative imaginary
 *     -b < x < -a  positive imaginary
 *     |x| < a      negative real
 *
 * with the symmetry sigma(-x) = conj(sigma(x)). The branch is dispatched by
 * region rather than composed from complex square roots, so there is no
 * cut ambiguity to worry about near the edges. The edges +-a, +-b
 * themselves are excluded points.
 */
std::complex<double> sigma(double x, const Band& band);

// |sigma(x)| = 1 / sqrt(|x^2 - b^2| * |x^2 - a^2|).
double abs_sigma(double x, const Band& band);

// The real value of sigma for x in (0,a) u (b,inf): -|sigma| left of the
// band, +|sigma| right of it. Throws for x inside [a, b].
double sigma_real_off_band(double x, const Band& band);

// sqrt((b^2 - x^2)(x^2 - a^2)) / x^2 for x in [a, b]; vanishes at both
// edges and equals 1 / (x^2 |sigma(x)|) inside.
double envelope(double x, const Band& band);

// (b^2 - a^2) / (2ab), the maximum of the envelope over [a, b].
// Invariant under band dilations.
double lambda_bound(const Band& band);

// ab * sqrt(2 / (a^2 + b^2)), the unique interior maximizer of the
// envelope; envelope(argmax_envelope(band)) == lambda_bound(band).
double argmax_envelope(const Band& band);

} // namespace passband

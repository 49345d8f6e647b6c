#pragma once

#include <vector>

#include "passband/band.hpp"
#include "passband/density.hpp"
#include "passband/parallel.hpp"
#include "passband/quadrature.hpp"

namespace passband {

// Completion of an off-band density onto the band, sampled on a
// Chebyshev-clustered grid (clustered toward a and b, where the extension
// vanishes like the square root of the edge distance).
struct ExtensionResult {
    Band band;
    double alpha = 0.0;       // constant real-part level of the completed function
    double alpha_error = 0.0; // quadrature error bound on alpha
    std::vector<double> grid;   // abscissae, strictly inside (a, b), ascending
    std::vector<double> values; // completed density at the grid points
    std::vector<double> errors; // per-point quadrature error bounds
    double sup_norm = 0.0;      // max over the grid (lower-biased sup estimate)
};

/*
 * (2/pi) int_{R+ \ I} t v(t) sigma(t) dt: the level the real part takes on
 * the band.  sigma is real off the band (negative left of it, positive
 * right of it), so densities left of the band give alpha < 0 and densities
 * right of it give alpha > 0.  Throws InfeasibleError when the endpoint
 * growth condition fails.
 */
double alpha_functional(const Density& v, const Band& band, const QuadratureConfig& cfg);

/*
 * Completed density on the band:
 *
 *     v(x) = (1/pi) int_{R+ \ I} v(t) sigma(t) 2t/(t^2 - x^2) dt / |sigma(x)|
 *
 * on grid_size Chebyshev points.  No principal value is involved: t stays
 * off the band while x is inside, so t^2 - x^2 never vanishes.  The
 * integrand is nonnegative, hence so is the extension.
 */
ExtensionResult extend(const Density& v, const Band& band, int grid_size,
                       const QuadratureConfig& cfg, Exec exec = Exec::parallel);

// Serial reference implementation (identical results by construction;
// kept as the comparison baseline for tests and the benchmark).
ExtensionResult extend_serial(const Density& v, const Band& band, int grid_size,
                              const QuadratureConfig& cfg);

/*
 * Direct Hilbert operator of a density defined on all of R+:
 *
 *     H v(x) = p.v. (1/pi) int_0^inf v(t) [1/(t-x) + 1/(t+x)] dt,
 *
 * evaluated with principal-value quadrature on the piece containing x and
 * plain adaptive/tail quadrature elsewhere.  x must not sit exactly on a
 * segment or knot boundary.
 */
double hilbert_full(const Density& v_full, double x, const QuadratureConfig& cfg);

// v's off-band segments plus the completed band values as a cubic-grid
// segment whose edge values are pinned to zero.  `scale` multiplies the
// band values; values != 1 are the uniqueness negative control.
Density completed_density(const Density& v, const ExtensionResult& ext, double scale = 1.0);

struct ConstancyReport {
    double alpha = 0.0;          // level from the defining integral
    double alpha_measured = 0.0; // mean of H(completed v) over the check points
    double max_deviation = 0.0;  // max |H(completed v)(x_j) - alpha|
};

/*
 * Round trip of the parametrization: complete v onto the band, then check
 * that the direct Hilbert operator of the completed density is constant
 * (= alpha) at n_check uniformly spaced interior points that avoid the
 * extension grid.  `perturb` scales the completed band values; any value
 * other than 1 must break constancy (uniqueness).
 */
ConstancyReport verify_constancy(const Density& v, const Band& band, int n_check,
                                 const QuadratureConfig& cfg, int grid_size = 256,
                                 double perturb = 1.0, Exec exec = Exec::parallel);

} // namespace passband

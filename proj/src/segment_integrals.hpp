#pragma once

// Internal plumbing shared by the density / parametrization / extremal
// translation units: integrates a Density segment against a kernel that is
// smooth off the band except for inverse-square-root blowups at the band
// edges and algebraic decay at infinity.  Not part of the public headers.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "passband/density.hpp"
#include "passband/quadrature.hpp"

namespace passband::detail {

/*
 * Kernel model for every off-band integral in the artifact:
 *
 *   full(t)        K(t) for t in (0,a) u (b,oo), away from the edges
 *   smooth_at_a(t) K(t)*sqrt(a-t), smooth up to and including t = a
 *   smooth_at_b(t) K(t)*sqrt(t-b), smooth up to and including t = b
 *   tail_decay     K(t) = O(t^-tail_decay) as t -> oo
 *   knots          interior points where K is continuous but not smooth
 *                  (e.g. |log| kinks); pieces are split there
 *
 * The two smooth_* callables are the analytically reduced forms; they are
 * what makes edge-touching integrals computable without ever evaluating
 * K at a singular point.
 */
struct OffBandKernel {
    double a = 0.0;
    double b = 0.0;
    double tail_decay = 2.0;
    std::function<double(double)> full;
    std::function<double(double)> smooth_at_a;
    std::function<double(double)> smooth_at_b;
    std::vector<double> knots;
};

enum class RegionMask { both, left_only, right_only };

// Integral of seg.value_at(t) * K(t) over the segment's support clipped to
// (0, a) u (b, right_clip).  Segment supports never straddle the band.
IntegralResult integrate_segment_against(const Segment& seg, const OffBandKernel& K,
                                         const QuadratureConfig& cfg,
                                         double right_clip = std::numeric_limits<double>::infinity());

// Sum of integrate_segment_against over the segments selected by `mask`
// (left = support in (0,a], right = support in [b,oo)).
IntegralResult integrate_density_against(const Density& v, const OffBandKernel& K,
                                         const QuadratureConfig& cfg,
                                         double right_clip = std::numeric_limits<double>::infinity(),
                                         RegionMask mask = RegionMask::both);

// Integral of seg.value_at(t) * F(t) over one smooth piece [plo, phi] of the
// segment, folding an anchored power endpoint when present.  F must be
// smooth on the closed piece (no band-edge handling here).
IntegralResult integrate_piece_product(const Segment& seg, double plo, double phi,
                                       const std::function<double(double)>& F,
                                       const QuadratureConfig& cfg);

} // namespace passband::detail

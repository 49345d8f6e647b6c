#pragma once

#include <vector>

#include "passband/band.hpp"
#include "passband/density.hpp"
#include "passband/extension.hpp"
#include "passband/parallel.hpp"
#include "passband/quadrature.hpp"

namespace passband {

// One entry of a near-extremal sweep.
struct SweepRecord {
    double epsilon = 0.0;  // support-width parameter of the family
    double alpha = 0.0;    // level after normalization (== -1 up to quadrature)
    double sup_norm = 0.0; // grid max of the extension over the band
    double gap = 0.0;      // sup_norm - lambda_bound
    double l1 = 0.0;       // ||chi_I v||_p of the interpolated extension ...
    double l2 = 0.0;
    double l4 = 0.0;
    double err = 0.0;      // max per-point quadrature error over the grid

    double linf() const { return sup_norm; } // duplicate entry for table completeness
};

struct DecayRecord {
    double radius = 0.0;   // left end R of the support (R, R+1)
    double alpha = 0.0;    // == +1 up to quadrature
    double sup_norm = 0.0;
};

/*
 * m * chi_(eps/2, eps) with m = pi / (2 int_{eps/2}^{eps} t |sigma(t)| dt),
 * so that alpha_functional == -1 by construction.  The support (eps/2, eps)
 * rather than (0, eps) keeps the density bounded, hence trivially feasible.
 * Requires 0 < eps < a/2.
 */
Density near_extremal_density(double epsilon, const Band& band, const QuadratureConfig& cfg);

/*
 * Near-extremal sweep: for each epsilon builds the family member, extends
 * it onto the band, and records sup_norm, gap = sup_norm - lambda_bound,
 * and the L^p norms (p = 1, 2, 4) of the interpolated extension.  Records
 * are returned sorted by epsilon descending; the gaps decrease like eps^2.
 */
std::vector<SweepRecord> sweep(std::vector<double> epsilons, const Band& band, int grid_size,
                               const QuadratureConfig& cfg, Exec exec = Exec::parallel);

/*
 * Positive-alpha vanishing: v = m * chi_(R, R+1) normalized to alpha == +1
 * for each radius R > b.  sup_norm decays like 1/R^2 as the support moves
 * right, approaching the trivial solution 0.
 */
std::vector<DecayRecord> positive_alpha_decay(const std::vector<double>& radii, const Band& band,
                                              int grid_size, const QuadratureConfig& cfg,
                                              Exec exec = Exec::parallel);

// (int_a^b envelope^p dx)^(1/p), computed with edge substitutions so every
// p >= 1 integrates a smooth function: the target the sweep's L^p columns
// converge to.
double envelope_lp_norm(const Band& band, double p, const QuadratureConfig& cfg);

} // namespace passband

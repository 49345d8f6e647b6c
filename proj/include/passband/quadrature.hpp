#pragma once

#include <functional>

namespace passband {

struct QuadratureConfig {
    double rel_tol = 1e-10;           // target relative error
    double abs_tol = 1e-14;           // absolute fallback near zero
    int max_subdivisions = 1 << 14;   // adaptive bisection budget
    double tail_cutoff_factor = 64.0; // multiples of lo where 1/t substitution takes over
    double pv_window = 1e-3;          // half-width of the symmetric window around a PV pole

    void validate() const; // throws std::invalid_argument
};

// Integral estimate together with the accumulated nested-rule error estimate.
struct IntegralResult {
    double value = 0.0;
    double error = 0.0;

    IntegralResult& operator+=(const IntegralResult& o) {
        value += o.value;
        error += o.error;
        return *this;
    }
    friend IntegralResult operator+(IntegralResult l, const IntegralResult& r) { return l += r; }
};

using Integrand = std::function<double(double)>;

enum class Side { left, right };

/*
 * Adaptive Gauss-Kronrod (G7,K15) integration of a continuous f on [lo, hi].
 * Interval error is the difference of the nested rules; an interval is
 * accepted when its estimate fits its share of the global budget. Endpoint
 * singularities are therefore not silently integrated: an integrand like
 * t^{-1/2} keeps failing its local test and the routine raises
 * NonConvergenceError instead of returning a half-trusted number.
 */
IntegralResult integrate_smooth(const Integrand& f, double lo, double hi,
                                const QuadratureConfig& cfg);

/*
 * int g(t) / sqrt(|t - endpoint|) dt over the interval of the given length
 * that lies on `side` of the singular endpoint: Side::right integrates over
 * [endpoint, endpoint + length], Side::left over [endpoint - length,
 * endpoint].  The exact substitution t = endpoint +- s^2 removes the weight
 * entirely.
 */
IntegralResult integrate_sqrt_weight(const Integrand& g, double endpoint, Side side,
                                     double length, const QuadratureConfig& cfg);

/*
 * p.v. int_lo^hi f(t) / (t - pole) dt, lo < pole < hi, by singularity
 * subtraction: [f(t) - f(pole)]/(t - pole) is integrated as a smooth
 * function (with a symmetric difference quotient inside pv_window) and the
 * subtracted part contributes f(pole) * log((hi-pole)/(pole-lo)) exactly.
 */
IntegralResult integrate_pv(const Integrand& f, double pole, double lo, double hi,
                            const QuadratureConfig& cfg);

/*
 * int_lo^inf f for f = O(t^-decay_power), decay_power >= 2: a finite part
 * up to tail_cutoff_factor * lo plus the u = 1/t substitution on the rest.
 * Raises DecayViolationError when the substituted integrand is non-finite
 * as u -> 0.
 */
IntegralResult integrate_tail(const Integrand& f, double lo, double decay_power,
                              const QuadratureConfig& cfg);

} // namespace passband

#include "passband/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "passband/errors.hpp"

namespace passband {

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(pv_window > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances and pv_window must be positive");
    if (max_subdivisions <= 0)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be positive");
    if (!(tail_cutoff_factor >= 4.0))
        throw std::invalid_argument("QuadratureConfig: tail_cutoff_factor must be >= 4");
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half).
// Column 0: abscissa, column 1: G7 weight (0 for Kronrod-only nodes),
// column 2: K15 weight.
constexpr double kGK15[8][3] = {
    {0.000000000000000000000000000000000, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714},
    {0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014},
    {0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238},
    {0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204},
    {0.207784955007898467600689403773245, 0.0,                                 0.204432940075298892414161999234649},
    {0.586087235467691130294144838258730, 0.0,                                 0.169004726639267902826583426598550},
    {0.864864423359769072789712788640926, 0.0,                                 0.104790010322250183839876322541518},
    {0.991455371120812639206854697526329, 0.0,                                 0.022935322010529224963732008058970},
};

struct RuleResult {
    double value; // K15 estimate
    double error; // |K15 - G7|
};

RuleResult gk15(const Integrand& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f0 = f(mid);
    double g7 = kGK15[0][1] * f0;
    double k15 = kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * fi;
        k15 += kGK15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;

    double err = std::fabs(k15 - g7);
    if (!std::isfinite(k15) || !std::isfinite(err))
        err = std::numeric_limits<double>::infinity();
    return {k15, err};
}

struct Interval {
    double lo, hi;
    double value, error;
};

} // namespace

IntegralResult integrate_smooth(const Integrand& f, double lo, double hi,
                                const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(lo < hi)) throw std::invalid_argument("integrate_smooth: require lo < hi");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("integrate_smooth: bounds must be finite");

    const double total_len = hi - lo;
    RuleResult first = gk15(f, lo, hi);

    std::vector<Interval> stack;
    stack.push_back({lo, hi, first.value, first.error});

    double estimate = first.value; // running whole-interval estimate
    double accepted_value = 0.0;
    double accepted_error = 0.0;
    int splits = 0;

    while (!stack.empty()) {
        const Interval cur = stack.back();
        stack.pop_back();

        const double budget = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(estimate));
        const double share = 0.25 * budget * std::sqrt((cur.hi - cur.lo) / total_len);
        if (cur.error <= share) {
            accepted_value += cur.value;
            accepted_error += cur.error;
            continue;
        }

        const double mid = 0.5 * (cur.lo + cur.hi);
        if (!(mid > cur.lo) || !(mid < cur.hi))
            throw NonConvergenceError(
                "integrate_smooth: interval collapsed below machine resolution with error "
                "estimate above tolerance (unresolved singularity?)");
        if (++splits > cfg.max_subdivisions)
            throw NonConvergenceError("integrate_smooth: subdivision budget exhausted");

        const RuleResult left = gk15(f, cur.lo, mid);
        const RuleResult right = gk15(f, mid, cur.hi);
        estimate += left.value + right.value - cur.value;
        // depth-first, left interval processed next
        stack.push_back({mid, cur.hi, right.value, right.error});
        stack.push_back({cur.lo, mid, left.value, left.error});
    }

    if (!std::isfinite(accepted_value))
        throw NonConvergenceError("integrate_smooth: non-finite integral estimate");
    return {accepted_value, accepted_error};
}

IntegralResult integrate_sqrt_weight(const Integrand& g, double endpoint, Side side,
                                     double length, const QuadratureConfig& cfg) {
    if (!(length > 0.0) || !std::isfinite(length) || !std::isfinite(endpoint))
        throw std::invalid_argument("integrate_sqrt_weight: bad endpoint/length");
    const double sign = (side == Side::right) ? 1.0 : -1.0;
    auto h = [&](double s) { return 2.0 * g(endpoint + sign * s * s); };
    return integrate_smooth(h, 0.0, std::sqrt(length), cfg);
}

IntegralResult integrate_pv(const Integrand& f, double pole, double lo, double hi,
                            const QuadratureConfig& cfg) {
    if (!(lo < pole) || !(pole < hi))
        throw std::invalid_argument("integrate_pv: pole must lie strictly inside (lo, hi)");

    const double fp = f(pole);
    const double w = std::min({cfg.pv_window, 0.5 * (pole - lo), 0.5 * (hi - pole)});
    const double delta_min =
        std::min(0.5 * w, std::sqrt(std::numeric_limits<double>::epsilon()) *
                              std::max(1.0, std::fabs(pole)));

    auto quotient = [&](double t) { return (f(t) - fp) / (t - pole); };
    // Even symmetrization about the pole; the odd remainder integrates to
    // zero over the symmetric window, and the clamped offset avoids
    // catastrophic cancellation at t ~ pole.
    auto symmetric = [&](double t) {
        const double d = std::max(std::fabs(t - pole), delta_min);
        return (f(pole + d) - f(pole - d)) / (2.0 * d);
    };

    IntegralResult r = integrate_smooth(quotient, lo, pole - w, cfg);
    r += integrate_smooth(symmetric, pole - w, pole + w, cfg);
    r += integrate_smooth(quotient, pole + w, hi, cfg);
    r.value += fp * std::log((hi - pole) / (pole - lo));
    return r;
}

IntegralResult integrate_tail(const Integrand& f, double lo, double decay_power,
                              const QuadratureConfig& cfg) {
    if (!(decay_power >= 2.0))
        throw std::invalid_argument("integrate_tail: decay_power must be >= 2");
    if (!(lo > 0.0) || !std::isfinite(lo))
        throw std::invalid_argument("integrate_tail: require finite lo > 0");

    const double cutoff = cfg.tail_cutoff_factor * lo;
    // u = 1/t; evaluate as (f(t)*t)*t so huge t^2 never overflows first
    auto substituted = [&](double u) {
        const double t = 1.0 / u;
        return (f(t) * t) * t;
    };
    for (double u : {1e-30, 1e-300}) {
        if (u < 1.0 / cutoff && !std::isfinite(substituted(u)))
            throw DecayViolationError("integrate_tail: substituted integrand non-finite as u -> 0");
    }

    IntegralResult r = integrate_smooth(f, lo, cutoff, cfg);
    r += integrate_smooth(substituted, 0.0, 1.0 / cutoff, cfg);
    return r;
}

} // namespace passband

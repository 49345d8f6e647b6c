#include "passband/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "passband/sigma.hpp"

namespace passband {

namespace {

constexpr double kPi = std::numbers::pi;

// int_lo^hi t |sigma(t)| dt for an interval well away from the band edges.
double moment(const Band& band, double lo, double hi, const QuadratureConfig& cfg) {
    auto f = [&band](double t) { return t * abs_sigma(t, band); };
    return integrate_smooth(f, lo, hi, cfg).value;
}

} // namespace

Density near_extremal_density(double epsilon, const Band& band, const QuadratureConfig& cfg) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5 * band.a))
        throw std::invalid_argument("near_extremal_density: require 0 < epsilon < a/2");
    const double m = kPi / (2.0 * moment(band, 0.5 * epsilon, epsilon, cfg));
    return Density({Segment::constant(0.5 * epsilon, epsilon, m)});
}

std::vector<SweepRecord> sweep(std::vector<double> epsilons, const Band& band, int grid_size,
                               const QuadratureConfig& cfg, Exec exec) {
    if (epsilons.empty()) throw std::invalid_argument("sweep: empty epsilon schedule");
    std::sort(epsilons.begin(), epsilons.end(), std::greater<>());
    const double lambda = lambda_bound(band);

    std::vector<SweepRecord> records;
    records.reserve(epsilons.size());
    for (double eps : epsilons) {
        const Density v = near_extremal_density(eps, band, cfg);
        const ExtensionResult ext = extend(v, band, grid_size, cfg, exec);
        // cubic interpolant of the extension with edge values pinned to 0,
        // integrated knot interval by knot interval (each is one polynomial,
        // integrated exactly by the 15-point rule)
        const Density band_part = completed_density(Density{}, ext);
        const Segment& seg = band_part.segments().front();
        const std::vector<double> knots = seg.piece_knots();
        double s1 = 0.0, s2 = 0.0, s4 = 0.0;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            auto p1 = [&](double t) { return seg.value_at(t); };
            auto p2 = [&](double t) { const double u = seg.value_at(t); return u * u; };
            auto p4 = [&](double t) { const double u = seg.value_at(t); return u * u * u * u; };
            s1 += integrate_smooth(p1, knots[i], knots[i + 1], cfg).value;
            s2 += integrate_smooth(p2, knots[i], knots[i + 1], cfg).value;
            s4 += integrate_smooth(p4, knots[i], knots[i + 1], cfg).value;
        }

        SweepRecord rec;
        rec.epsilon = eps;
        rec.alpha = ext.alpha;
        rec.sup_norm = ext.sup_norm;
        rec.gap = ext.sup_norm - lambda;
        rec.l1 = s1;
        rec.l2 = std::sqrt(s2);
        rec.l4 = std::pow(s4, 0.25);
        rec.err = ext.errors.empty() ? 0.0
                                     : *std::max_element(ext.errors.begin(), ext.errors.end());
        records.push_back(rec);
    }
    return records;
}

std::vector<DecayRecord> positive_alpha_decay(const std::vector<double>& radii, const Band& band,
                                              int grid_size, const QuadratureConfig& cfg,
                                              Exec exec) {
    if (radii.empty()) throw std::invalid_argument("positive_alpha_decay: empty radius schedule");
    std::vector<DecayRecord> records;
    records.reserve(radii.size());
    for (double R : radii) {
        if (!(R > band.b))
            throw std::invalid_argument("positive_alpha_decay: radii must exceed b");
        const double m = kPi / (2.0 * moment(band, R, R + 1.0, cfg));
        const Density v({Segment::constant(R, R + 1.0, m)});
        const ExtensionResult ext = extend(v, band, grid_size, cfg, exec);
        records.push_back({R, ext.alpha, ext.sup_norm});
    }
    return records;
}

double envelope_lp_norm(const Band& band, double p, const QuadratureConfig& cfg) {
    if (!(p >= 1.0)) throw std::invalid_argument("envelope_lp_norm: require p >= 1");
    // split at the interior maximizer and substitute x = edge -+ s^2 on each
    // half: envelope^p ~ (edge distance)^(p/2) becomes s^p * smooth
    const double xs = argmax_envelope(band);
    auto env_p = [&](double x) { return std::pow(envelope(x, band), p); };
    IntegralResult left = integrate_smooth(
        [&](double s) { return 2.0 * s * env_p(band.a + s * s); }, 0.0,
        std::sqrt(xs - band.a), cfg);
    IntegralResult right = integrate_smooth(
        [&](double s) { return 2.0 * s * env_p(band.b - s * s); }, 0.0,
        std::sqrt(band.b - xs), cfg);
    return std::pow(left.value + right.value, 1.0 / p);
}

} // namespace passband

#include "passband/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "passband/errors.hpp"
#include "passband/sigma.hpp"
#include "segment_integrals.hpp"

namespace passband {

namespace {

constexpr double kPi = std::numbers::pi;

void require_feasible(const Density& v, const Band& band) {
    std::string why;
    if (feasibility_verdict(v, band, &why) != Verdict::satisfied)
        throw InfeasibleError("density fails condition (1): " + why);
}

// (2/pi) t sigma(t): the level integrand.  sigma ~ t^-2 at infinity, so
// the kernel itself only decays like 1/t; the density's L^2 tail exponent
// supplies the rest.
detail::OffBandKernel alpha_kernel(const Band& band) {
    const double a = band.a, b = band.b;
    detail::OffBandKernel K;
    K.a = a;
    K.b = b;
    K.tail_decay = 1.0;
    K.full = [band](double t) { return (2.0 / kPi) * t * sigma_real_off_band(t, band); };
    K.smooth_at_a = [a, b](double t) {
        return -(2.0 / kPi) * t / std::sqrt((b * b - t * t) * (a + t));
    };
    K.smooth_at_b = [a, b](double t) {
        return (2.0 / kPi) * t / std::sqrt((t + b) * (t * t - a * a));
    };
    return K;
}

IntegralResult alpha_result(const Density& v, const Band& band, const QuadratureConfig& cfg) {
    return detail::integrate_density_against(v, alpha_kernel(band), cfg);
}

// (1/pi) sigma(t) 2t/(t^2 - x^2) for a fixed band point x: the explicit
// kernel of the completion.  Nonnegative on both off-band regions.
detail::OffBandKernel extend_kernel(const Band& band, double x) {
    const double a = band.a, b = band.b;
    detail::OffBandKernel K;
    K.a = a;
    K.b = b;
    K.tail_decay = 3.0;
    K.full = [band, x](double t) {
        return sigma_real_off_band(t, band) * 2.0 * t / (kPi * (t * t - x * x));
    };
    K.smooth_at_a = [a, b, x](double t) {
        return -2.0 * t / (kPi * (t * t - x * x) * std::sqrt((b * b - t * t) * (a + t)));
    };
    K.smooth_at_b = [a, b, x](double t) {
        return 2.0 * t / (kPi * (t * t - x * x) * std::sqrt((t + b) * (t * t - a * a)));
    };
    return K;
}

} // namespace

double alpha_functional(const Density& v, const Band& band, const QuadratureConfig& cfg) {
    require_feasible(v, band);
    return alpha_result(v, band, cfg).value;
}

ExtensionResult extend(const Density& v, const Band& band, int grid_size,
                       const QuadratureConfig& cfg, Exec exec) {
    if (grid_size < 1) throw std::invalid_argument("extend: grid_size must be positive");
    require_feasible(v, band);

    ExtensionResult out{band, 0.0, 0.0, {}, {}, {}, 0.0};
    const std::size_t n = static_cast<std::size_t>(grid_size);
    const double mid = 0.5 * (band.a + band.b);
    const double half = 0.5 * band.width();
    out.grid.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.grid[i] = mid - half * std::cos((2.0 * double(i) + 1.0) * kPi / (2.0 * double(n)));
    out.values.assign(n, 0.0);
    out.errors.assign(n, 0.0);

    const IntegralResult al = alpha_result(v, band, cfg);
    out.alpha = al.value;
    out.alpha_error = al.error;

    for_each_index(n, exec, [&](std::size_t i) {
        const double x = out.grid[i];
        const IntegralResult r = detail::integrate_density_against(v, extend_kernel(band, x), cfg);
        const double scale = 1.0 / abs_sigma(x, band);
        out.values[i] = r.value * scale;
        out.errors[i] = r.error * scale;
    });

    out.sup_norm = out.values.empty() ? 0.0
                                      : *std::max_element(out.values.begin(), out.values.end());
    return out;
}

ExtensionResult extend_serial(const Density& v, const Band& band, int grid_size,
                              const QuadratureConfig& cfg) {
    return extend(v, band, grid_size, cfg, Exec::serial);
}

double hilbert_full(const Density& v_full, double x, const QuadratureConfig& cfg) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("hilbert_full: require finite x > 0");

    // (1/pi) [1/(t-x) + 1/(t+x)] = 2t / (pi (t^2 - x^2))
    auto F = [x](double t) { return 2.0 * t / (kPi * (t * t - x * x)); };

    double total = 0.0;
    for (const Segment& seg : v_full.segments()) {
        const std::vector<double> knots = seg.piece_knots();
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            double plo = knots[i];
            const double phi = knots[i + 1];
            if (std::isinf(phi)) {
                if (x > plo) { // pole inside the infinite run: peel off a finite piece
                    const double split = 2.0 * x;
                    auto fp = [&](double t) {
                        return seg.value_at(t) * 2.0 * t / (kPi * (t + x));
                    };
                    total += integrate_pv(fp, x, plo, split, cfg).value;
                    plo = split;
                }
                const double gamma = seg.form == SegmentForm::power ? seg.gamma : 0.0;
                auto ft = [&](double t) { return seg.value_at(t) * F(t); };
                total += integrate_tail(ft, plo, 1.0 - std::min(gamma, 0.0), cfg).value;
            } else if (x > plo && x < phi) {
                auto fp = [&](double t) { return seg.value_at(t) * 2.0 * t / (kPi * (t + x)); };
                total += integrate_pv(fp, x, plo, phi, cfg).value;
            } else {
                total += detail::integrate_piece_product(seg, plo, phi, F, cfg).value;
            }
        }
    }
    return total;
}

Density completed_density(const Density& v, const ExtensionResult& ext, double scale) {
    std::vector<double> ts, vs;
    ts.reserve(ext.grid.size() + 2);
    vs.reserve(ext.grid.size() + 2);
    ts.push_back(ext.band.a);
    vs.push_back(0.0); // the extension vanishes at the edges under condition (1)
    for (std::size_t i = 0; i < ext.grid.size(); ++i) {
        ts.push_back(ext.grid[i]);
        vs.push_back(std::max(0.0, scale * ext.values[i]));
    }
    ts.push_back(ext.band.b);
    vs.push_back(0.0);
    return v + Density({Segment::grid(std::move(ts), std::move(vs), GridInterp::cubic)});
}

ConstancyReport verify_constancy(const Density& v, const Band& band, int n_check,
                                 const QuadratureConfig& cfg, int grid_size, double perturb,
                                 Exec exec) {
    if (n_check < 1) throw std::invalid_argument("verify_constancy: n_check must be positive");

    const ExtensionResult ext = extend(v, band, grid_size, cfg, exec);
    const Density full = completed_density(v, ext, perturb);

    const std::size_t n = static_cast<std::size_t>(n_check);
    std::vector<double> hv(n, 0.0);
    // uniform interior points; the extension grid is cosine-spaced, so the
    // two point sets never collide
    for_each_index(n, exec, [&](std::size_t j) {
        const double xj = band.a + band.width() * double(j + 1) / double(n + 1);
        hv[j] = hilbert_full(full, xj, cfg);
    });

    ConstancyReport rep;
    rep.alpha = ext.alpha;
    double sum = 0.0, dev = 0.0;
    for (double h : hv) {
        sum += h;
        dev = std::max(dev, std::fabs(h - ext.alpha));
    }
    rep.alpha_measured = sum / double(n);
    rep.max_deviation = dev;
    return rep;
}

} // namespace passband

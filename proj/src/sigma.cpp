#include "passband/sigma.hpp"

#include <cmath>
#include <string>

#include "passband/errors.hpp"

namespace passband {

namespace {

[[noreturn]] void throw_singular(double x) {
    throw SingularArgumentError("sigma: singular at band edge x = " + std::to_string(x));
}

} // namespace

std::complex<double> sigma(double x, const Band& band) {
    const double ax = std::fabs(x);
    if (ax == band.a || ax == band.b) throw_singular(x);

    const double a2 = band.a * band.a;
    const double b2 = band.b * band.b;
    const double x2 = x * x;

    if (ax > band.b) {
        // both factors real: sigma positive real
        return {1.0 / std::sqrt((x2 - b2) * (x2 - a2)), 0.0};
    }
    if (ax < band.a) {
        // sqrt(x^2-b^2) sqrt(x^2-a^2) -> (+-i)^2 * positive = -positive
        return {-1.0 / std::sqrt((b2 - x2) * (a2 - x2)), 0.0};
    }
    // a < |x| < b: one factor imaginary. Upper half-plane limit gives
    // -i/positive for x in (a,b) and +i/positive for x in (-b,-a).
    const double mod = 1.0 / std::sqrt((b2 - x2) * (x2 - a2));
    return {0.0, x > 0.0 ? -mod : mod};
}

double abs_sigma(double x, const Band& band) {
    const double ax = std::fabs(x);
    if (ax == band.a || ax == band.b) throw_singular(x);
    const double a2 = band.a * band.a;
    const double b2 = band.b * band.b;
    const double x2 = x * x;
    return 1.0 / std::sqrt(std::fabs(x2 - b2) * std::fabs(x2 - a2));
}

double sigma_real_off_band(double x, const Band& band) {
    const double ax = std::fabs(x);
    if (ax >= band.a && ax <= band.b)
        throw SingularArgumentError("sigma_real_off_band: x inside [a, b]");
    return ax < band.a ? -abs_sigma(x, band) : abs_sigma(x, band);
}

double envelope(double x, const Band& band) {
    if (!(x >= band.a && x <= band.b))
        throw std::domain_error("envelope: x outside [a, b]");
    const double p = (band.b * band.b - x * x) * (x * x - band.a * band.a);
    return std::sqrt(p < 0.0 ? 0.0 : p) / (x * x);
}

double lambda_bound(const Band& band) {
    return (band.b * band.b - band.a * band.a) / (2.0 * band.a * band.b);
}

double argmax_envelope(const Band& band) {
    return band.a * band.b * std::sqrt(2.0 / (band.a * band.a + band.b * band.b));
}

} // namespace passband

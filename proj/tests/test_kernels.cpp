#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "passband/band.hpp"
#include "passband/errors.hpp"
#include "passband/sigma.hpp"

using namespace passband;
using doctest::Approx;

TEST_CASE("band validation and geometry") {
    CHECK_THROWS_AS(Band(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Band(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Band(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Band(-1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Band(1.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(Band(std::nan(""), 2.0), std::invalid_argument);

    const Band band(1.0, 2.0);
    CHECK(band.width() == 1.0);
    CHECK(band.contains(1.5));
    CHECK_FALSE(band.contains(1.0)); // open interval
    CHECK_FALSE(band.contains(2.0));
    CHECK_FALSE(band.contains(0.5));
    CHECK_FALSE(band.contains(3.0));

    const Band big = band.scaled(3.0);
    CHECK(big.a == 3.0);
    CHECK(big.b == 6.0);
    CHECK_THROWS_AS(band.scaled(-1.0), std::invalid_argument);
}

TEST_CASE("sigma branch values match reference") {
    const Band band(1.0, 2.0);

    const auto s3 = sigma(3.0, band); // beyond b: positive real
    CHECK(s3.real() == Approx(0.15811388300841897).epsilon(1e-14));
    CHECK(s3.imag() == 0.0);

    const auto sh = sigma(0.5, band); // below a: negative real
    CHECK(sh.real() == Approx(-0.59628479399994392).epsilon(1e-14));
    CHECK(sh.imag() == 0.0);

    const auto sb = sigma(1.5, band); // on the band: -i |sigma|
    CHECK(sb.real() == 0.0);
    CHECK(sb.imag() == Approx(-0.67612340378281326).epsilon(1e-14));
    CHECK(abs_sigma(1.5, band) == Approx(0.67612340378281326).epsilon(1e-14));

    CHECK(sigma(0.0, band).real() == Approx(-0.5).epsilon(1e-15)); // -1/(ab)
}

TEST_CASE("sigma is Hermitian: sigma(-x) = conj(sigma(x))") {
    const Band band(1.0, 2.0);
    for (double x : {0.3, 0.9, 1.2, 1.7, 2.5, 10.0}) {
        const auto plus = sigma(x, band);
        const auto minus = sigma(-x, band);
        CHECK(minus.real() == plus.real());
        CHECK(minus.imag() == -plus.imag());
    }
}

TEST_CASE("sigma singularities and off-band guard") {
    const Band band(1.0, 2.0);
    for (double x : {1.0, 2.0, -1.0, -2.0}) {
        CHECK_THROWS_AS(sigma(x, band), SingularArgumentError);
        CHECK_THROWS_AS(abs_sigma(x, band), SingularArgumentError);
    }
    CHECK_THROWS_AS(sigma_real_off_band(1.5, band), SingularArgumentError);
    CHECK_THROWS_AS(sigma_real_off_band(1.0, band), SingularArgumentError);
    CHECK(sigma_real_off_band(0.5, band) < 0.0);
    CHECK(sigma_real_off_band(3.0, band) > 0.0);
}

TEST_CASE("envelope profile, zeros, and the |sigma| identity") {
    const Band band(1.0, 2.0);
    CHECK(envelope(1.0, band) == 0.0);
    CHECK(envelope(2.0, band) == 0.0);
    CHECK(envelope(1.5, band) == Approx(0.65734219812217958).epsilon(1e-14));
    CHECK_THROWS_AS(envelope(0.5, band), std::domain_error);
    CHECK_THROWS_AS(envelope(2.5, band), std::domain_error);

    // envelope(x) * x^2 * |sigma(x)| == 1 on the open band
    for (double x : {1.05, 1.2, 1.5, 1.8, 1.95}) {
        CHECK(envelope(x, band) * x * x * abs_sigma(x, band) == Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("lambda bound and its maximizer") {
    const Band band(1.0, 2.0);
    CHECK(lambda_bound(band) == Approx(0.75).epsilon(1e-15));
    const double xs = argmax_envelope(band);
    CHECK(xs == Approx(1.2649110640673518).epsilon(1e-15));
    // local maximality and value at the maximizer
    CHECK(envelope(xs, band) == Approx(0.75).epsilon(1e-13));
    CHECK(envelope(xs, band) >= envelope(xs - 1e-4, band));
    CHECK(envelope(xs, band) >= envelope(xs + 1e-4, band));

    // dilation invariance of lambda
    for (double s : {0.25, 3.0, 17.5}) {
        CHECK(lambda_bound(band.scaled(s)) == Approx(lambda_bound(band)).epsilon(1e-14));
    }
    // sharper bands have smaller lambda
    CHECK(lambda_bound(Band(1.0, 1.1)) < lambda_bound(Band(1.0, 1.2)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "passband/extension.hpp"
#include "passband/extremal.hpp"
#include "passband/sigma.hpp"

using namespace passband;
using doctest::Approx;

namespace {
const QuadratureConfig cfg{};
const Band kBand{1.0, 2.0};
} // namespace

TEST_CASE("near-extremal density: window, normalization, validation") {
    const Density v = near_extremal_density(0.1, kBand, cfg);
    REQUIRE(v.segments().size() == 1);
    const Segment& s = v.segments().front();
    CHECK(s.lo == Approx(0.05).epsilon(1e-15));
    CHECK(s.hi == Approx(0.1).epsilon(1e-15));
    CHECK(s.c == Approx(834.48141486443201).epsilon(1e-10));

    // normalized so the level is exactly -1
    CHECK(alpha_functional(v, kBand, cfg) == Approx(-1.0).epsilon(1e-11));

    CHECK_THROWS_AS(near_extremal_density(0.0, kBand, cfg), std::invalid_argument);
    CHECK_THROWS_AS(near_extremal_density(0.5, kBand, cfg), std::invalid_argument);
    CHECK_THROWS_AS(near_extremal_density(-0.1, kBand, cfg), std::invalid_argument);
}

TEST_CASE("sweep: ordering, gap accounting, convergence direction") {
    const auto recs = sweep({0.1, 0.4, 0.2}, kBand, 64, cfg);
    REQUIRE(recs.size() == 3);
    // schedule is processed in decreasing epsilon order regardless of input
    CHECK(recs[0].epsilon == 0.4);
    CHECK(recs[1].epsilon == 0.2);
    CHECK(recs[2].epsilon == 0.1);

    const double lambda = lambda_bound(kBand);
    for (const auto& r : recs) {
        CHECK(r.alpha == Approx(-1.0).epsilon(1e-10));
        CHECK(r.gap == Approx(r.sup_norm - lambda).epsilon(1e-12));
        CHECK(r.gap > 0.0); // the bound is never attained
        CHECK(r.linf() == r.sup_norm);
        // on a unit-length band the L^p scale is monotone in p
        CHECK(r.l1 < r.l2);
        CHECK(r.l2 < r.l4);
        CHECK(r.l4 < r.sup_norm);
        CHECK(r.err >= 0.0);
    }
    CHECK(recs[1].gap < recs[0].gap);
    CHECK(recs[2].gap < recs[1].gap);

    CHECK_THROWS_AS(sweep({}, kBand, 64, cfg), std::invalid_argument);
    CHECK_THROWS_AS(sweep({0.6}, kBand, 64, cfg), std::invalid_argument);
}

TEST_CASE("positive-alpha decay: normalization and monotone vanishing") {
    const auto recs = positive_alpha_decay({4.0, 8.0}, kBand, 64, cfg);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].radius == 4.0);
    CHECK(recs[1].radius == 8.0);
    for (const auto& r : recs) CHECK(r.alpha == Approx(1.0).epsilon(1e-10));
    CHECK(recs[1].sup_norm < recs[0].sup_norm);
    CHECK(recs[0].sup_norm < lambda_bound(kBand)); // far mass, small band response

    CHECK_THROWS_AS(positive_alpha_decay({}, kBand, 64, cfg), std::invalid_argument);
    CHECK_THROWS_AS(positive_alpha_decay({1.5}, kBand, 64, cfg), std::invalid_argument);
    CHECK_THROWS_AS(positive_alpha_decay({2.0}, kBand, 64, cfg), std::invalid_argument);
}

TEST_CASE("envelope L^p norms from the dedicated quadrature") {
    CHECK(envelope_lp_norm(kBand, 1.0, cfg) == Approx(0.54706500847526999).epsilon(1e-10));
    CHECK(envelope_lp_norm(kBand, 2.0, cfg) == Approx(0.57735026918962576).epsilon(1e-10));
    CHECK(envelope_lp_norm(kBand, 4.0, cfg) == Approx(0.61478815295126437).epsilon(1e-10));
    // p = 2 has the closed form 1/sqrt(3) on [1, 2]
    CHECK(envelope_lp_norm(kBand, 2.0, cfg) == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-11));
    CHECK_THROWS_AS(envelope_lp_norm(kBand, 0.5, cfg), std::invalid_argument);
}

TEST_CASE("near-extremal extensions approach the envelope from above") {
    const Density v = near_extremal_density(0.025, kBand, cfg);
    const ExtensionResult ext = extend(v, kBand, 128, cfg);
    // pointwise: v_ext is within a few percent of the envelope everywhere
    for (std::size_t i = 0; i < ext.grid.size(); ++i) {
        const double env = envelope(ext.grid[i], kBand);
        CHECK(ext.values[i] > env - 1e-9); // the envelope is a true lower bound
        CHECK(ext.values[i] < env * 1.01 + 1e-3);
    }
    CHECK(ext.sup_norm > lambda_bound(kBand));
    CHECK(ext.sup_norm < lambda_bound(kBand) * 1.01);
}

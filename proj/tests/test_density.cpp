#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "passband/density.hpp"
#include "passband/errors.hpp"

using namespace passband;
using doctest::Approx;

namespace {
const QuadratureConfig cfg{};
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("segment construction enforces the model invariants") {
    CHECK_NOTHROW(Segment::constant(1.0, 2.0, 0.5));
    CHECK_THROWS_AS(Segment::constant(2.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Segment::constant(1.0, 2.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(Segment::constant(1.0, kInf, 0.5), std::invalid_argument);

    // anchor strictly inside the support is meaningless
    CHECK_THROWS_AS(Segment::power(1.0, 3.0, 1.0, 2.0, 0.5), std::invalid_argument);
    // touching anchor: integrability requires gamma > -1
    CHECK_NOTHROW(Segment::power(2.0, 3.0, 1.0, 2.0, -0.9));
    CHECK_THROWS_AS(Segment::power(2.0, 3.0, 1.0, 2.0, -1.0), std::invalid_argument);
    // unbounded support: L2 tail requires gamma <= -1
    CHECK_NOTHROW(Segment::power(3.0, kInf, 1.0, 0.0, -1.0));
    CHECK_THROWS_AS(Segment::power(3.0, kInf, 1.0, 0.0, -0.5), std::invalid_argument);

    CHECK_NOTHROW(Segment::grid({1.0, 2.0, 3.0}, {0.0, 1.0, 0.0}, GridInterp::linear));
    CHECK_THROWS_AS(Segment::grid({1.0}, {0.0}, GridInterp::linear), std::invalid_argument);
    CHECK_THROWS_AS(Segment::grid({1.0, 1.0, 3.0}, {0.0, 1.0, 0.0}, GridInterp::linear),
                    std::invalid_argument); // knots must strictly increase
    CHECK_THROWS_AS(Segment::grid({1.0, 2.0}, {0.0, -1.0}, GridInterp::linear),
                    std::invalid_argument); // nonnegative values
    CHECK_THROWS_AS(Segment::grid({1.0, 2.0, 3.0}, {0.0, 1.0}, GridInterp::linear),
                    std::invalid_argument); // length mismatch
}

TEST_CASE("pointwise evaluation") {
    const Density box({Segment::constant(3.0, 4.0, 2.0)});
    CHECK(box(3.5) == 2.0);
    CHECK(box(2.9) == 0.0);
    CHECK(box(4.1) == 0.0);

    const Density pw({Segment::power(2.0, 3.0, 2.0, 2.0, 0.5)});
    CHECK(pw(2.25) == Approx(2.0 * 0.5).epsilon(1e-15)); // 2 * sqrt(0.25)
    CHECK(pw(3.0 + 1e-9) == 0.0);

    const Density tail({Segment::power(3.0, kInf, 1.0, 0.0, -2.0)});
    CHECK(tail(10.0) == Approx(0.01).epsilon(1e-15));
    CHECK(tail(2.0) == 0.0);

    const Density hat({Segment::grid({3.0, 3.5, 4.0}, {0.0, 1.0, 0.0}, GridInterp::linear)});
    CHECK(hat(3.5) == 1.0);
    CHECK(hat(3.25) == Approx(0.5).epsilon(1e-15));
    CHECK(hat(3.0) == 0.0);

    // cubic interpolation reproduces knots and never goes negative
    const Density cub({Segment::grid({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 0.0, 0.0},
                                     GridInterp::cubic)});
    CHECK(cub(1.0) == 1.0);
    CHECK(cub(2.0) == 0.0);
    for (int i = 0; i <= 300; ++i) CHECK(cub(0.01 * i) >= 0.0);
}

TEST_CASE("density assembly: ordering, overlap, sums") {
    // segments given out of order are sorted
    const Density v({Segment::constant(3.0, 4.0, 1.0), Segment::constant(0.2, 0.8, 2.0)});
    CHECK(v.segments().front().lo == 0.2);
    CHECK(v(0.5) == 2.0);
    CHECK(v(3.5) == 1.0);
    CHECK(v(1.5) == 0.0);

    CHECK_THROWS_AS(Density({Segment::constant(1.0, 3.0, 1.0), Segment::constant(2.0, 4.0, 1.0)}),
                    std::invalid_argument);

    const Density sum = Density({Segment::constant(0.2, 0.8, 2.0)}) +
                        Density({Segment::constant(3.0, 4.0, 1.0)});
    CHECK(sum(0.5) == 2.0);
    CHECK(sum(3.5) == 1.0);
    CHECK(Density().empty());
    CHECK_FALSE(sum.empty());
}

TEST_CASE("dilation is the pure coordinate stretch v_s(t) = v(t/s)") {
    const Density v({Segment::constant(0.2, 0.8, 2.0),
                     Segment::power(2.0, 3.0, 1.5, 2.0, 0.5),
                     Segment::grid({3.0, 3.5, 4.0}, {0.0, 1.0, 0.0}, GridInterp::linear),
                     Segment::power(4.0, kInf, 1.0, 0.0, -1.0)});
    const double s = 3.0;
    const Density vs = v.dilated(s);
    for (double t : {0.3, 0.5, 0.79, 2.25, 2.9, 3.25, 3.5, 3.9, 5.0, 40.0}) {
        CHECK(vs(s * t) == Approx(v(t)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(v.dilated(0.0), std::invalid_argument);
    CHECK_THROWS_AS(v.dilated(-2.0), std::invalid_argument);
}

TEST_CASE("feasibility condition values match reference integrals") {
    const Band band(1.0, 2.0);

    // right box chi_(2.25, 2.75): int_{1/4}^{3/4} t^{-1/2} dt = sqrt(3) - 1
    auto rep = check_feasibility(Density({Segment::constant(2.25, 2.75, 1.0)}), band, cfg);
    CHECK(rep.condition_one.verdict == Verdict::satisfied);
    CHECK(rep.condition_one.value == Approx(std::sqrt(3.0) - 1.0).epsilon(1e-11));
    CHECK(rep.feasible());

    // left box chi_(0.2, 0.8): 2/sqrt(5), corollary double integral from an
    // independent high-precision evaluation
    rep = check_feasibility(Density({Segment::constant(0.2, 0.8, 1.0)}), band, cfg);
    CHECK(rep.condition_one.value == Approx(2.0 / std::sqrt(5.0)).epsilon(1e-11));
    CHECK(rep.corollary_condition.verdict == Verdict::satisfied);
    CHECK(rep.corollary_condition.value == Approx(0.18505306943195292).epsilon(1e-6));

    // sqrt growth off the right edge: v = (t-2)^{1/2} on (2,3).
    // condition one: int_0^1 t^{1/2} t^{-1/2} dt = 1 exactly;
    // corollary: int_0^1 int_0^1 |log(t+tau)| dt dtau = 2 log 2 - 1.
    rep = check_feasibility(Density({Segment::power(2.0, 3.0, 1.0, 2.0, 0.5)}), band, cfg);
    CHECK(rep.condition_one.value == Approx(1.0).epsilon(1e-11));
    CHECK(rep.corollary_condition.value ==
          Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-6));
    CHECK(rep.feasible());

    // inverse-sqrt blowup exactly at the edge is the excluded borderline
    rep = check_feasibility(Density({Segment::power(2.0, 3.0, 1.0, 2.0, -0.5)}), band, cfg);
    CHECK(rep.condition_one.verdict == Verdict::violated);
    CHECK_FALSE(rep.feasible());
    CHECK_FALSE(rep.notes.empty());

    // a milder blowup is feasible and the folded integral is exact:
    // v = (t-2)^{-0.4}: int_0^1 t^{-0.9} dt = 10
    rep = check_feasibility(Density({Segment::power(2.0, 3.0, 1.0, 2.0, -0.4)}), band, cfg);
    CHECK(rep.condition_one.verdict == Verdict::satisfied);
    CHECK(rep.condition_one.value == Approx(10.0).epsilon(1e-10));

    // support beyond b+a does not reach the weighted window at all
    rep = check_feasibility(Density({Segment::constant(3.0, 4.0, 1.0)}), band, cfg);
    CHECK(rep.condition_one.value == 0.0);
    CHECK(rep.corollary_condition.value == 0.0);
    CHECK(rep.feasible());

    // two-sided density: contributions add
    rep = check_feasibility(Density({Segment::constant(0.5, 0.9, 1.0),
                                     Segment::constant(2.1, 2.5, 1.0)}),
                            band, cfg);
    CHECK(rep.condition_one.value ==
          Approx(4.0 * (std::sqrt(0.5) - std::sqrt(0.1))).epsilon(1e-10));
}

TEST_CASE("support overlapping the band is rejected outright") {
    const Band band(1.0, 2.0);
    CHECK_THROWS_AS(check_feasibility(Density({Segment::constant(1.5, 1.8, 1.0)}), band, cfg),
                    SupportOverlapsBandError);
    CHECK_THROWS_AS(check_feasibility(Density({Segment::constant(0.5, 1.2, 1.0)}), band, cfg),
                    SupportOverlapsBandError);
    CHECK_THROWS_AS(check_feasibility(Density({Segment::constant(1.9, 2.5, 1.0)}), band, cfg),
                    SupportOverlapsBandError);
    // closed support touching the open band at an edge is allowed
    CHECK_NOTHROW(check_feasibility(Density({Segment::constant(0.5, 1.0, 1.0)}), band, cfg));
    CHECK_NOTHROW(check_feasibility(Density({Segment::constant(2.0, 2.5, 1.0)}), band, cfg));
}

TEST_CASE("symbolic verdicts and their explanations") {
    const Band band(1.0, 2.0);
    std::string why;
    CHECK(feasibility_verdict(Density({Segment::power(2.0, 3.0, 1.0, 2.0, -0.6)}), band, &why) ==
          Verdict::violated);
    CHECK_FALSE(why.empty());
    CHECK(feasibility_verdict(Density({Segment::power(0.5, 1.0, 1.0, 1.0, -0.5)}), band) ==
          Verdict::violated); // left-edge blowup, boundary exponent
    CHECK(feasibility_verdict(Density({Segment::constant(2.25, 2.75, 1.0)}), band) ==
          Verdict::satisfied);
    CHECK(to_string(Verdict::satisfied) == std::string("satisfied"));
    CHECK(to_string(Verdict::violated) == std::string("violated"));
    CHECK(to_string(Verdict::undecidable) == std::string("undecidable-numerically"));
}

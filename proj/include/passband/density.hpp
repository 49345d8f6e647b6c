#pragma once

#include <limits>
#include <string>
#include <vector>

#include "passband/band.hpp"
#include "passband/quadrature.hpp"

namespace passband {

enum class SegmentForm { constant, power, grid };

enum class GridInterp { linear, cubic };

/*
 * One piece of a loss density on (lo, hi):
 *
 *   constant   v(t) = c
 *   power      v(t) = c * |t - anchor|^gamma   (anchor outside (lo, hi))
 *   grid       samples (ts, vs) interpolated piecewise (linear by default;
 *              the completed on-band segment uses the cubic mode)
 *
 * hi = +inf is allowed for power segments with gamma <= -1 (L^2 tail).
 * A power segment whose closure touches its anchor must have gamma > -1 so
 * the density stays locally integrable; the stricter gamma > -1/2 needed
 * for condition (1) near a band edge is a feasibility verdict, not a
 * construction invariant, so infeasible inputs remain expressible.
 */
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    SegmentForm form = SegmentForm::constant;
    double c = 0.0;               // constant level or power coefficient
    double anchor = 0.0;          // power anchor point
    double gamma = 0.0;           // power exponent
    std::vector<double> ts, vs;   // grid knots
    GridInterp interp = GridInterp::linear;

    static Segment constant(double lo, double hi, double c);
    static Segment power(double lo, double hi, double c, double anchor, double gamma);
    static Segment grid(std::vector<double> ts, std::vector<double> vs,
                        GridInterp interp = GridInterp::linear);

    double value_at(double t) const; // 0 outside [lo, hi]
    bool is_unbounded() const { return std::isinf(hi); }
    // does the power singularity sit on this segment's boundary?
    bool anchored_at(double edge) const;
    void validate() const; // throws std::invalid_argument

    // knots partitioning [lo, min(hi, clip)] into smooth pieces
    std::vector<double> piece_knots(double clip = std::numeric_limits<double>::infinity()) const;
};

// Immutable nonnegative density on R+ as disjoint segments, kept sorted.
class Density {
public:
    Density() = default;
    explicit Density(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }

    // pointwise value, 0 off the support; shared boundary points resolve
    // to the left segment
    double operator()(double t) const;

    Density dilated(double s) const; // t -> v(t/s), supports scaled by s

    // segment-list concatenation; overlapping supports are rejected
    Density operator+(const Density& other) const;

private:
    std::vector<Segment> segments_;
};

enum class Verdict { satisfied, violated, undecidable };

const char* to_string(Verdict v);

struct ConditionReport {
    Verdict verdict = Verdict::undecidable;
    double value = std::numeric_limits<double>::quiet_NaN();
    double error = std::numeric_limits<double>::quiet_NaN();
};

struct FeasibilityReport {
    ConditionReport condition_one;      // endpoint growth condition
    ConditionReport corollary_condition; // log-kernel double integral
    std::string notes;

    bool feasible() const { return condition_one.verdict == Verdict::satisfied; }
};

/*
 * Decides the endpoint growth condition
 *
 *     int_0^a [v(a-t) + v(b+t)] t^{-1/2} dt < inf
 *
 * and the log-strengthened double-integral condition. Verdicts are purely
 * symbolic (power exponents against the -1/2 threshold; other forms are
 * bounded near the edges); the reported values are numeric with quadrature
 * error estimates. The density must be supported off the open band.
 */
FeasibilityReport check_feasibility(const Density& v, const Band& band,
                                    const QuadratureConfig& cfg);

// Symbolic part of check_feasibility only (no numeric integrals); throws
// SupportOverlapsBandError / returns the condition-one verdict.
Verdict feasibility_verdict(const Density& v, const Band& band, std::string* why = nullptr);

} // namespace passband

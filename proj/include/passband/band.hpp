#pragma once

#include <cmath>
#include <stdexcept>

namespace passband {

// Frequency band I = [a, b] with 0 < a < b.
struct Band {
    double a;
    double b;

    Band(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(a < b))
            throw std::invalid_argument("Band: require 0 < a < b (finite)");
    }

    double width() const { return b - a; }
    bool contains(double x) const { return x > a && x < b; } // open interval
    Band scaled(double s) const { return Band(s * a, s * b); }
};

} // namespace passband

#pragma once

#include <string>

#include "simpcert/errors.hpp"

namespace simpcert {

/// Closed interval [a, b] with a strictly less than b.
class Interval {
public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!(a < b)) {
            throw DomainError("Interval requires a < b, got [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
        }
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double width() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return (a_ + b_) / 2.0; }

    bool contains(double x) const noexcept { return a_ <= x && x <= b_; }
    bool contains(const Interval& other) const noexcept {
        return a_ <= other.a_ && other.b_ <= b_;
    }

private:
    double a_;
    double b_;
};

}  // namespace simpcert

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "simpcert/function_spec.hpp"
#include "simpcert/interval.hpp"

namespace simpcert {

/// A strictly increasing node list x0 < x1 < ... < xn dividing [x0, xn]
/// into n cells.
class Partition {
public:
    /// Validates: at least two nodes, strictly increasing.
    explicit Partition(std::vector<double> nodes);

    /// n equal cells over iv; first and last node equal the endpoints exactly.
    static Partition uniform(const Interval& iv, int cells);

    std::size_t cells() const noexcept { return nodes_.size() - 1; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    double left() const noexcept { return nodes_.front(); }
    double right() const noexcept { return nodes_.back(); }
    Interval span() const { return Interval(nodes_.front(), nodes_.back()); }
    Interval cell(std::size_t i) const { return Interval(nodes_[i], nodes_[i + 1]); }
    double half_width(std::size_t i) const { return (nodes_[i + 1] - nodes_[i]) / 2.0; }

private:
    std::vector<double> nodes_;
};

/// (b-a)/6 [f(a) + 4 f((a+b)/2) + f(b)]. Throws DomainError when iv exceeds
/// f's domain.
double simpson_single(const FunctionSpec& f, const Interval& iv);

/// Simpson's rule applied per cell and summed left to right. The summation
/// order is fixed (no pairwise or compensated summation) so results are
/// reproducible and bit-identical to adding simpson_single per cell.
double composite_simpson(const FunctionSpec& f, const Partition& p);

/// High-accuracy integral oracle: uniform composite Simpson with repeated
/// doubling plus one level of Richardson extrapolation, stopping when
/// successive extrapolants differ by less than tol/2. Requires tol >= 1e-13.
/// Throws NoConvergence when 2^20 cells are reached before stabilizing.
double reference_integral(const FunctionSpec& f, const Interval& iv, double tol);
double reference_integral(const std::function<double(double)>& f, double a, double b,
                          double tol);

/// |reference_integral - composite_simpson| over p's span: the realized
/// quadrature error that every certifying bound must dominate.
double actual_error(const FunctionSpec& f, const Partition& p, double tol);

}  // namespace simpcert

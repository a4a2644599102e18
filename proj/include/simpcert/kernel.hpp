#pragma once

#include "simpcert/function_spec.hpp"
#include "simpcert/interval.hpp"

namespace simpcert {

enum class KernelHalf { left, right, full };

/// Peano-type kernel weight of the three-point (Simpson) rule on [0, 1]:
///
///   p(t) = (1/24) t^3 (t - 2/3)          for t in [0, 1/2]
///   p(t) = (1/24) (t - 1)^3 (t - 1/3)    for t in (1/2, 1]
///
/// p is non-positive, vanishes at both endpoints, is symmetric about 1/2,
/// and both branches give -1/1152 at the joint. The branch point t = 1/2
/// belongs to the left branch; continuity makes the choice observationally
/// irrelevant, but it is fixed for reproducibility.
double kernel_eval(double t);

/// Closed-form integral of |p| over [0, 1/2], [1/2, 1] or [0, 1]:
/// left and right give 1/5760, full gives 1/2880. These constants are
/// antiderivative evaluations, not quadrature output, so they can serve as
/// oracles for the quadrature module.
double kernel_abs_integral(KernelHalf half);

/// Residual |LHS - RHS| of the kernel identity
///
///   int_a^b f - (b-a)/6 [f(a) + 4 f((a+b)/2) + f(b)]
///     = (b-a)^5 int_0^1 p(t) f''''(t a + (1-t) b) dt
///
/// with the left side integral taken by the reference quadrature oracle at
/// tolerance quad_tol and the right side integrated on [0, 1/2] and [1/2, 1]
/// separately, because p has a higher-derivative kink at 1/2.
double identity_residual(const FunctionSpec& f, const Interval& iv, double quad_tol);

}  // namespace simpcert

#include "simpcert/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "simpcert/errors.hpp"
#include "simpcert/quadrature.hpp"

namespace simpcert {

double kernel_eval(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("kernel_eval: t = " + std::to_string(t) + " outside [0, 1]");
    }
    if (t <= 0.5) {
        return t * t * t * (t - 2.0 / 3.0) / 24.0;
    }
    const double u = t - 1.0;
    return u * u * u * (t - 1.0 / 3.0) / 24.0;
}

double kernel_abs_integral(KernelHalf half) {
    switch (half) {
        case KernelHalf::left:
        case KernelHalf::right:
            return 1.0 / 5760.0;
        case KernelHalf::full:
            return 1.0 / 2880.0;
    }
    throw std::invalid_argument("kernel_abs_integral: bad half selector");
}

double identity_residual(const FunctionSpec& f, const Interval& iv, double quad_tol) {
    if (!(quad_tol > 0.0)) {
        throw std::invalid_argument("identity_residual: quad_tol must be positive");
    }
    const double a = iv.a();
    const double b = iv.b();

    const double lhs = reference_integral(f, iv, quad_tol) - simpson_single(f, iv);

    const double w = b - a;
    const double w2 = w * w;
    const double scale = w2 * w2 * w;
    auto integrand = [&](double t) {
        return scale * kernel_eval(t) * f.derivative(4, t * a + (1.0 - t) * b);
    };
    // The scale factor lives inside the integrand so quad_tol bounds the
    // error of the final right-hand side, not of the unscaled integral.
    const double rhs = reference_integral(integrand, 0.0, 0.5, quad_tol) +
                       reference_integral(integrand, 0.5, 1.0, quad_tol);

    return std::fabs(lhs - rhs);
}

}  // namespace simpcert

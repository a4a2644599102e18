#include <cmath>
#include <random>

#include "doctest.h"

#include "simpcert/errors.hpp"
#include "simpcert/function_spec.hpp"
#include "simpcert/kernel.hpp"
#include "simpcert/quadrature.hpp"

using namespace simpcert;

TEST_CASE("kernel vanishes at the endpoints") {
    CHECK_EQ(kernel_eval(0.0), 0.0);
    CHECK_EQ(kernel_eval(1.0), 0.0);
}

TEST_CASE("both kernel branches give -1/1152 at the joint") {
    // exact rational oracle: substituting t = 1/2 in either closed form
    const double expected = -1.0 / 1152.0;
    CHECK_LE(std::fabs(kernel_eval(0.5) - expected), 1e-15);
    const double right_branch = (0.5 - 1.0) * (0.5 - 1.0) * (0.5 - 1.0) * (0.5 - 1.0 / 3.0) / 24.0;
    CHECK_LE(std::fabs(right_branch - expected), 1e-15);
}

TEST_CASE("kernel value at 1/4") {
    // (1/24)(1/64)(1/4 - 2/3) = -5/18432, exact rational oracle
    CHECK_LE(std::fabs(kernel_eval(0.25) - (-5.0 / 18432.0)), 1e-18);
}

TEST_CASE("kernel rejects arguments outside [0, 1]") {
    CHECK_THROWS_AS(kernel_eval(-1e-9), DomainError);
    CHECK_THROWS_AS(kernel_eval(1.0 + 1e-9), DomainError);
}

TEST_CASE("kernel symmetry and non-positivity on random samples") {
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = unit(rng);
        CHECK_LE(std::fabs(kernel_eval(t) - kernel_eval(1.0 - t)), 1e-15);
        CHECK_LE(kernel_eval(t), 0.0);
    }
}

TEST_CASE("closed-form absolute kernel integrals") {
    CHECK_EQ(kernel_abs_integral(KernelHalf::left), 1.0 / 5760.0);
    CHECK_EQ(kernel_abs_integral(KernelHalf::right), 1.0 / 5760.0);
    CHECK_EQ(kernel_abs_integral(KernelHalf::full), 1.0 / 2880.0);
    CHECK_EQ(kernel_abs_integral(KernelHalf::left) + kernel_abs_integral(KernelHalf::right),
             kernel_abs_integral(KernelHalf::full));
}

TEST_CASE("numerical quadrature of the kernel matches the closed forms") {
    // signed integral over [0,1] is -1/2880; halves are -1/5760 each
    const double full = reference_integral(kernel_eval, 0.0, 1.0, 1e-12);
    CHECK_LE(std::fabs(full - (-1.0 / 2880.0)), 1e-12);
    const double left = reference_integral(kernel_eval, 0.0, 0.5, 1e-12);
    CHECK_LE(std::fabs(-left - kernel_abs_integral(KernelHalf::left)), 1e-12);
    const double right = reference_integral(kernel_eval, 0.5, 1.0, 1e-12);
    CHECK_LE(std::fabs(-right - kernel_abs_integral(KernelHalf::right)), 1e-12);
}

TEST_CASE("identity residual vanishes for the cubic") {
    const FunctionSpec& f = corpus_function("x3");
    CHECK_LE(identity_residual(f, Interval(0.0, 1.0), 1e-12), 1e-12);
}

TEST_CASE("identity for the quartic: both sides equal -1/120") {
    const FunctionSpec& f = corpus_function("x4");
    const Interval unit(0.0, 1.0);
    // LHS = 1/5 - 5/24 = -1/120 by exact rational arithmetic
    const double lhs = reference_integral(f, unit, 1e-12) - simpson_single(f, unit);
    CHECK_LE(std::fabs(lhs - (-1.0 / 120.0)), 1e-10);
    // RHS = 24 * (-1/2880) = -1/120; the residual ties the two together
    CHECK_LE(identity_residual(f, unit, 1e-12), 1e-10);
}

TEST_CASE("identity residual is small for exp_x2") {
    CHECK_LE(identity_residual(corpus_function("exp_x2"), Interval(0.0, 1.0), 1e-12), 1e-8);
}

TEST_CASE("identity holds across the corpus with analytic fourth derivatives") {
    for (const FunctionSpec& f : builtin_corpus()) {
        if (!f.derivative_is_analytic(4)) continue;
        CHECK_MESSAGE(identity_residual(f, f.domain(), 1e-12) <= 1e-8, f.name());
    }
}

TEST_CASE("identity residual validates quad_tol") {
    CHECK_THROWS_AS(identity_residual(corpus_function("x4"), Interval(0.0, 1.0), 0.0),
                    std::invalid_argument);
}

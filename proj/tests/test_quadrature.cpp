#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "simpcert/errors.hpp"
#include "simpcert/function_spec.hpp"
#include "simpcert/interval.hpp"
#include "simpcert/quadrature.hpp"

using namespace simpcert;

TEST_CASE("partition validation and uniform construction") {
    CHECK_THROWS_AS(Partition({0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.0, 2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::uniform(Interval(0.0, 1.0), 0), std::invalid_argument);

    const Partition p = Partition::uniform(Interval(0.1, 0.3), 7);
    CHECK_EQ(p.cells(), 7);
    CHECK_EQ(p.left(), 0.1);
    CHECK_EQ(p.right(), 0.3);
    for (std::size_t i = 0; i < p.cells(); ++i) {
        CHECK_LT(p.nodes()[i], p.nodes()[i + 1]);
        CHECK_EQ(p.half_width(i), (p.nodes()[i + 1] - p.nodes()[i]) / 2.0);
    }
}

TEST_CASE("single-interval rule on exp_x2 matches arithmetic on the published values") {
    const double expected = (1.0 + 4.0 * 1.284025417 + 2.718281828) / 6.0;
    const double got = simpson_single(corpus_function("exp_x2"), Interval(0.0, 1.0));
    CHECK_LE(std::fabs(got - expected), 1e-8);
    CHECK_LE(std::fabs(got - 1.475730583), 1e-8);
}

TEST_CASE("single-interval rule is exact for the cubic") {
    CHECK_EQ(simpson_single(corpus_function("x3"), Interval(0.0, 1.0)), 0.25);
}

TEST_CASE("single-interval rule on the quartic gives 5/24") {
    CHECK_EQ(simpson_single(corpus_function("x4"), Interval(0.0, 1.0)), 5.0 / 24.0);
}

TEST_CASE("single-cell composite reduces to the single-interval rule bit for bit") {
    for (const char* name : {"exp_x2", "exp_x", "x4", "poly5"}) {
        const FunctionSpec& f = corpus_function(name);
        const Interval iv(0.0, 1.0);
        CHECK_EQ(composite_simpson(f, Partition::uniform(iv, 1)), simpson_single(f, iv));
    }
}

TEST_CASE("composite rule on exp_x over one cell") {
    const double expected = (1.0 + 4.0 * std::exp(0.5) + std::exp(1.0)) / 6.0;
    const double got = composite_simpson(corpus_function("exp_x"),
                                         Partition::uniform(Interval(0.0, 1.0), 1));
    CHECK_LE(std::fabs(got - expected), 1e-15);
    CHECK_LE(std::fabs(got - 1.718861152), 1e-8);
}

TEST_CASE("composite error for the quartic at two cells is exactly 1/1920") {
    // per-cell error (dx)^5 * 24 / 2880 with dx = 1/2, summed over both cells
    const double s = composite_simpson(corpus_function("x4"),
                                       Partition::uniform(Interval(0.0, 1.0), 2));
    CHECK_LE(std::fabs(std::fabs(s - 0.2) - 1.0 / 1920.0), 1e-15);
}

TEST_CASE("composite rule equals the per-cell sum in the same order") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> nodes{0.0};
    for (int i = 0; i < 9; ++i) nodes.push_back(nodes.back() + 0.02 + unit(rng) * 0.08);
    const double scale = nodes.back();
    for (double& x : nodes) x /= scale;  // squeeze into [0, 1]
    nodes.front() = 0.0;
    nodes.back() = 1.0;
    const Partition p{nodes};
    const FunctionSpec& f = corpus_function("exp_x2");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.cells(); ++i) sum += simpson_single(f, p.cell(i));
    CHECK_EQ(composite_simpson(f, p), sum);
}

TEST_CASE("degree-3 exactness on random cubics and partitions") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng), c3 = coeff(rng);
        const FunctionSpec cubic(
            "cubic", Interval(-1.0, 2.0),
            [=](double x) { return c0 + x * (c1 + x * (c2 + x * c3)); });
        std::vector<double> nodes{0.0};
        const int cells = 1 + static_cast<int>(unit(rng) * 5);
        for (int i = 1; i < cells; ++i) nodes.push_back(unit(rng));
        nodes.push_back(1.0);
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        CHECK_LE(actual_error(cubic, Partition{nodes}, 1e-13), 1e-12);
    }
}

TEST_CASE("reference integral on the published example") {
    const double got = reference_integral(corpus_function("exp_x2"), Interval(0.0, 1.0), 1e-9);
    CHECK_LE(std::fabs(got - 1.462651746), 1e-8);
}

TEST_CASE("reference integral on monomials and the exponential") {
    CHECK_LE(std::fabs(reference_integral(corpus_function("x4"), Interval(0.0, 1.0), 1e-12) - 0.2),
             1e-12);
    CHECK_LE(std::fabs(reference_integral(corpus_function("exp_x"), Interval(0.0, 1.0), 1e-12) -
                       (std::exp(1.0) - 1.0)),
             1e-9);
}

TEST_CASE("reference integral refuses tolerances below 1e-13") {
    CHECK_THROWS_AS(reference_integral(corpus_function("x4"), Interval(0.0, 1.0), 1e-14),
                    std::invalid_argument);
}

TEST_CASE("reference integral reports no convergence for x sin(pi/x)") {
    CHECK_THROWS_AS(
        reference_integral(corpus_function("x_sin_pi_over_x"), Interval(0.0, 2.0), 1e-9),
        NoConvergence);
}

TEST_CASE("actual error on the worked example and the trivial cases") {
    const Partition unit1 = Partition::uniform(Interval(0.0, 1.0), 1);
    CHECK_LE(std::fabs(actual_error(corpus_function("exp_x2"), unit1, 1e-10) - 0.013078837),
             1e-7);
    CHECK_LE(actual_error(corpus_function("x3"), Partition::uniform(Interval(0.0, 1.0), 5), 1e-12),
             1e-12);
    CHECK_LE(std::fabs(actual_error(corpus_function("exp_x"), unit1, 1e-10) - 5.79324e-4), 1e-8);
}

TEST_CASE("error decays by at least 12x per doubling on exp_x2") {
    const FunctionSpec& f = corpus_function("exp_x2");
    const Interval unit(0.0, 1.0);
    double prev = 0.0;
    for (int n : {1, 2, 4, 8}) {
        const double err = actual_error(f, Partition::uniform(unit, n), 1e-12);
        if (n > 1) CHECK_GE(prev / err, 12.0);
        prev = err;
    }
}

TEST_CASE("domain violations are rejected") {
    const FunctionSpec& f = corpus_function("exp_x2");  // domain [0, 1.2]
    CHECK_THROWS_AS(simpson_single(f, Interval(0.0, 2.0)), DomainError);
    CHECK_THROWS_AS(composite_simpson(f, Partition::uniform(Interval(-1.0, 1.0), 4)), DomainError);
    CHECK_THROWS_AS(reference_integral(f, Interval(1.0, 1.3), 1e-10), DomainError);
}

#include "simpcert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "simpcert/errors.hpp"

namespace simpcert {

namespace {

constexpr double kGoldenRatioConjugate = 0.6180339887498949;

double pow5(double w) {
    const double w2 = w * w;
    return w2 * w2 * w;
}

double pow_int(double w, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= w;
    return r;
}

void require_order(int order, int lo, int hi, const char* who) {
    if (order < lo || order > hi) {
        throw std::invalid_argument(std::string(who) + ": order " + std::to_string(order) +
                                    " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

void require_inside_domain(const FunctionSpec& f, const Interval& iv, const char* who) {
    if (!f.domain().contains(iv)) {
        throw DomainError(std::string(who) + ": [" + std::to_string(iv.a()) + ", " +
                          std::to_string(iv.b()) + "] exceeds the domain of " + f.name());
    }
}

Assumption provenance_assumption(const FunctionSpec& f, int order) {
    const std::string tag = "f" + std::to_string(order) + "_provider_" +
                            (f.derivative_is_analytic(order) ? "analytic" : "finite_difference");
    return Assumption{tag, AssumptionStatus::assumed};
}

// per-cell data of the quasi-convex bound
struct QcCellTerm {
    double left_abs;   // |f''''| at the left node
    double mid_abs;    // |f''''| at the cell midpoint
    double right_abs;  // |f''''| at the right node
    double term;       // (x1-x0)^5 [ max(l,m) + max(m,r) ], without the 1/5760
};

QcCellTerm qc_cell_term(const FunctionSpec& f, double x0, double x1) {
    QcCellTerm c{};
    c.left_abs = std::fabs(f.derivative(4, x0));
    c.mid_abs = std::fabs(f.derivative(4, (x0 + x1) / 2.0));
    c.right_abs = std::fabs(f.derivative(4, x1));
    c.term = pow5(x1 - x0) *
             (std::max(c.left_abs, c.mid_abs) + std::max(c.mid_abs, c.right_abs));
    return c;
}

Assumption qc_assumption(const QuasiConvexCheck& check) {
    return Assumption{"abs_f4_quasiconvex", check.status};
}

void record_witness(BoundReport& r, const QuasiConvexCheck& check) {
    if (!check.witness) return;
    const QuasiConvexWitness& w = *check.witness;
    r.inputs.emplace_back("qc_witness_x", w.x);
    r.inputs.emplace_back("qc_witness_y", w.y);
    r.inputs.emplace_back("qc_witness_lambda", w.lambda);
    r.inputs.emplace_back("qc_witness_mix_value", w.mix_value);
    r.inputs.emplace_back("qc_witness_pair_sup", w.pair_sup);
}

}  // namespace

const char* to_string(AssumptionStatus s) {
    switch (s) {
        case AssumptionStatus::verified_sampled: return "verified_sampled";
        case AssumptionStatus::assumed: return "assumed";
        case AssumptionStatus::failed: return "failed";
    }
    return "unknown";
}

bool BoundReport::certifying() const {
    for (const Assumption& a : assumptions) {
        if (a.status == AssumptionStatus::failed) return false;
    }
    return true;
}

std::string BoundReport::family_name() const {
    switch (family) {
        case BoundFamily::classical: return "classical";
        case BoundFamily::bounded_variation: return "bv" + std::to_string(bv_order);
        case BoundFamily::quasi_convex: return "qc";
        case BoundFamily::quasi_convex_monotone:
            return direction == MonotoneDirection::increasing ? "qc-mono-inc" : "qc-mono-dec";
        case BoundFamily::composite_qc: return "qc-composite";
    }
    return "unknown";
}

double bv_constant(int order) {
    require_order(order, 0, 3, "bv_constant");
    switch (order) {
        case 0: return 1.0 / 3.0;
        case 1: return 1.0 / 24.0;
        case 2: return 1.0 / 324.0;
        default: return 1.0 / 1152.0;
    }
}

double estimate_sup_abs_derivative(const FunctionSpec& f, int order, const Interval& iv,
                                   int grid) {
    require_order(order, 0, 4, "estimate_sup_abs_derivative");
    if (grid < 33) {
        throw std::invalid_argument("estimate_sup_abs_derivative: grid must be >= 33");
    }
    require_inside_domain(f, iv, "estimate_sup_abs_derivative");

    auto g = [&](double x) { return std::fabs(f.derivative(order, x)); };
    const double a = iv.a();
    const double b = iv.b();

    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i < grid; ++i) {
        const double x = (i == grid - 1) ? b : a + i * (b - a) / (grid - 1);
        const double v = g(x);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    // The exact midpoint is what the three-point bounds evaluate; sampling it
    // here keeps their sup pairs dominated by this estimate to the last ulp.
    best = std::max(best, g(iv.midpoint()));

    // One golden-section pass over the bracket around the grid argmax. Only
    // function values enter, so the estimate never exceeds the true sup.
    double lo = (best_i == 0) ? a : a + (best_i - 1) * (b - a) / (grid - 1);
    double hi = (best_i == grid - 1) ? b : a + (best_i + 1) * (b - a) / (grid - 1);
    double x1 = hi - kGoldenRatioConjugate * (hi - lo);
    double x2 = lo + kGoldenRatioConjugate * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    best = std::max(best, std::max(g1, g2));
    for (int it = 0; it < 20; ++it) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + kGoldenRatioConjugate * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - kGoldenRatioConjugate * (hi - lo);
            g1 = g(x1);
        }
        best = std::max(best, std::max(g1, g2));
    }
    return best;
}

double estimate_total_variation(const FunctionSpec& f, int order, const Interval& iv,
                                double tol) {
    require_order(order, 0, 3, "estimate_total_variation");
    if (!(tol > 0.0)) {
        throw std::invalid_argument("estimate_total_variation: tol must be positive");
    }
    require_inside_domain(f, iv, "estimate_total_variation");

    auto g = [&](double x) { return f.derivative(order, x); };
    const double a = iv.a();
    const double b = iv.b();

    double prev = 0.0;
    bool have_prev = false;
    double sum = 0.0;
    for (int k = 6; k <= 20; ++k) {
        const std::size_t n = std::size_t{1} << k;
        sum = 0.0;
        double last = g(a);
        for (std::size_t i = 1; i <= n; ++i) {
            const double x =
                (i == n) ? b : a + static_cast<double>(i) * (b - a) / static_cast<double>(n);
            const double v = g(x);
            sum += std::fabs(v - last);
            last = v;
        }
        if (have_prev && std::fabs(sum - prev) < tol * (1.0 + sum)) {
            return sum;
        }
        if (k == 20 && have_prev && sum - prev > 0.01 * prev) {
            throw TVDiverging("estimate_total_variation: sums for " + f.name() + " order " +
                              std::to_string(order) + " still grow by more than 1% per doubling at 2^20 cells");
        }
        prev = sum;
        have_prev = true;
    }
    return sum;  // cap reached with sub-1% growth: report the last sum
}

QuasiConvexCheck check_quasiconvex(const FunctionSpec& f, int order, const Interval& iv,
                                   int grid) {
    require_order(order, 0, 4, "check_quasiconvex");
    if (grid < 17) throw std::invalid_argument("check_quasiconvex: grid must be >= 17");
    require_inside_domain(f, iv, "check_quasiconvex");

    auto g = [&](double x) { return std::fabs(f.derivative(order, x)); };
    const double a = iv.a();
    const double b = iv.b();

    std::vector<double> xs(static_cast<std::size_t>(grid));
    std::vector<double> gs(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        xs[static_cast<std::size_t>(i)] = (i == grid - 1) ? b : a + i * (b - a) / (grid - 1);
        gs[static_cast<std::size_t>(i)] = g(xs[static_cast<std::size_t>(i)]);
    }

    // Deterministic scan; the first violation becomes the witness.
    for (int i = 0; i < grid; ++i) {
        for (int j = i + 1; j < grid; ++j) {
            const double pair_sup = std::max(gs[static_cast<std::size_t>(i)],
                                             gs[static_cast<std::size_t>(j)]);
            const double slack = 1e-9 * (1.0 + pair_sup);
            for (int k = 1; k <= 7; ++k) {
                const double lambda = k / 8.0;
                const double z = lambda * xs[static_cast<std::size_t>(i)] +
                                 (1.0 - lambda) * xs[static_cast<std::size_t>(j)];
                const double gz = g(z);
                if (gz > pair_sup + slack) {
                    return QuasiConvexCheck{
                        AssumptionStatus::failed,
                        QuasiConvexWitness{xs[static_cast<std::size_t>(i)],
                                           xs[static_cast<std::size_t>(j)], lambda, gz,
                                           pair_sup}};
                }
            }
        }
    }
    return QuasiConvexCheck{AssumptionStatus::verified_sampled, std::nullopt};
}

BoundReport classical_bound(const FunctionSpec& f, const Interval& iv) {
    require_inside_domain(f, iv, "classical_bound");
    const double m = estimate_sup_abs_derivative(f, 4, iv);
    const double w = iv.width();

    BoundReport r;
    r.family = BoundFamily::classical;
    r.value = pow5(w) * m / 2880.0;
    r.inputs = {{"sup_abs_f4", m}, {"width", w}};
    r.assumptions = {provenance_assumption(f, 4)};
    return r;
}

BoundReport bv_bound(const FunctionSpec& f, int order, const Interval& iv) {
    require_order(order, 0, 3, "bv_bound");
    require_inside_domain(f, iv, "bv_bound");
    const double tv = estimate_total_variation(f, order, iv, 1e-9);
    const double c = bv_constant(order);

    BoundReport r;
    r.family = BoundFamily::bounded_variation;
    r.bv_order = order;
    r.value = c * pow_int(iv.width(), order + 1) * tv;
    r.inputs = {{"total_variation", tv}, {"bv_constant", c}, {"width", iv.width()}};
    r.assumptions = {Assumption{"f" + std::to_string(order) + "_bounded_variation",
                                AssumptionStatus::verified_sampled},
                     provenance_assumption(f, order)};
    return r;
}

BoundReport qc_bound(const FunctionSpec& f, const Interval& iv) {
    require_inside_domain(f, iv, "qc_bound");
    const QcCellTerm c = qc_cell_term(f, iv.a(), iv.b());
    const QuasiConvexCheck check = check_quasiconvex(f, 4, iv);

    BoundReport r;
    r.family = BoundFamily::quasi_convex;
    r.value = c.term / 5760.0;
    r.inputs = {{"abs_f4_left", c.left_abs},
                {"abs_f4_mid", c.mid_abs},
                {"abs_f4_right", c.right_abs},
                {"width", iv.width()}};
    r.assumptions = {qc_assumption(check), provenance_assumption(f, 4)};
    record_witness(r, check);
    return r;
}

BoundReport qc_bound_monotone(const FunctionSpec& f, const Interval& iv,
                              MonotoneDirection direction) {
    require_inside_domain(f, iv, "qc_bound_monotone");
    auto g = [&](double x) { return std::fabs(f.derivative(4, x)); };

    // Sampled monotonicity of |f''''| on a 33-point grid.
    constexpr int kGrid = 33;
    bool monotone = true;
    double last = g(iv.a());
    for (int i = 1; i < kGrid; ++i) {
        const double x =
            (i == kGrid - 1) ? iv.b() : iv.a() + i * iv.width() / (kGrid - 1);
        const double v = g(x);
        const double slack = 1e-12 * (1.0 + std::max(v, last));
        if (direction == MonotoneDirection::increasing ? v < last - slack : v > last + slack) {
            monotone = false;
            break;
        }
        last = v;
    }

    const double ga = g(iv.a());
    const double gm = g(iv.midpoint());
    const double gb = g(iv.b());
    const double pair =
        direction == MonotoneDirection::decreasing ? ga + gm : gm + gb;

    BoundReport r;
    r.family = BoundFamily::quasi_convex_monotone;
    r.direction = direction;
    r.value = pow5(iv.width()) * pair / 5760.0;
    r.inputs = {{"abs_f4_left", ga}, {"abs_f4_mid", gm}, {"abs_f4_right", gb},
                {"width", iv.width()}};
    const std::string name = direction == MonotoneDirection::increasing
                                 ? "abs_f4_monotone_increasing"
                                 : "abs_f4_monotone_decreasing";
    r.assumptions = {Assumption{name, monotone ? AssumptionStatus::verified_sampled
                                               : AssumptionStatus::failed},
                     provenance_assumption(f, 4)};
    return r;
}

BoundReport composite_qc_bound(const FunctionSpec& f, const Partition& p) {
    require_inside_domain(f, p.span(), "composite_qc_bound");
    const QuasiConvexCheck check = check_quasiconvex(f, 4, p.span());

    double acc = 0.0;
    double max_abs_f4 = 0.0;
    for (std::size_t i = 0; i < p.cells(); ++i) {
        const QcCellTerm c = qc_cell_term(f, p.nodes()[i], p.nodes()[i + 1]);
        acc += c.term;
        max_abs_f4 = std::max(max_abs_f4, std::max(c.left_abs, std::max(c.mid_abs, c.right_abs)));
    }

    BoundReport r;
    r.family = BoundFamily::composite_qc;
    r.value = acc / 5760.0;
    r.inputs = {{"cells", static_cast<double>(p.cells())},
                {"max_abs_f4_sampled", max_abs_f4},
                {"width", p.right() - p.left()}};
    r.assumptions = {qc_assumption(check), provenance_assumption(f, 4)};
    record_witness(r, check);
    return r;
}

BoundReport composite_classical_bound(const FunctionSpec& f, const Partition& p) {
    require_inside_domain(f, p.span(), "composite_classical_bound");
    double acc = 0.0;
    double max_sup = 0.0;
    for (std::size_t i = 0; i < p.cells(); ++i) {
        const double m = estimate_sup_abs_derivative(f, 4, p.cell(i));
        acc += pow5(p.nodes()[i + 1] - p.nodes()[i]) * m;
        max_sup = std::max(max_sup, m);
    }

    BoundReport r;
    r.family = BoundFamily::classical;
    r.value = acc / 2880.0;
    r.inputs = {{"cells", static_cast<double>(p.cells())},
                {"max_cell_sup_abs_f4", max_sup},
                {"width", p.right() - p.left()}};
    r.assumptions = {provenance_assumption(f, 4)};
    return r;
}

}  // namespace simpcert

#include "simpcert/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "simpcert/errors.hpp"

namespace simpcert {

namespace {

std::string num_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double pow5(double w) {
    const double w2 = w * w;
    return w2 * w2 * w;
}

struct Cell {
    double left;
    double right;
    double term;  // this cell's contribution to the summed bound
};

}  // namespace

CertifiedResult integrate_certified(const FunctionSpec& f, const Interval& iv,
                                    const AdaptiveConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("integrate_certified: tol must be positive");
    if (cfg.max_cells < 1) throw std::invalid_argument("integrate_certified: max_cells must be >= 1");
    if (!f.domain().contains(iv)) {
        throw DomainError("integrate_certified: [" + num_str(iv.a()) + ", " + num_str(iv.b()) +
                          "] exceeds the domain of " + f.name());
    }

    // The quasi-convexity hypothesis is sampled once on the whole interval.
    const QuasiConvexCheck qc = check_quasiconvex(f, 4, iv);
    const bool use_qc = qc.status == AssumptionStatus::verified_sampled;
    if (!use_qc && cfg.fallback == Fallback::reject) {
        throw HypothesisFailed("integrate_certified: |f''''| of " + f.name() +
                               " failed the sampled quasi-convexity check on [" +
                               num_str(iv.a()) + ", " + num_str(iv.b()) + "]");
    }

    // Cells carry the undivided bound term; the constant divisor is applied
    // once to the left-to-right sum, the exact arithmetic of the composite
    // bound operations, so the final recomputed certificate equals the value
    // the stopping rule saw.
    const double divisor = use_qc ? 5760.0 : 2880.0;
    auto cell_term = [&](double l, double r) {
        if (use_qc) {
            const double m = (l + r) / 2.0;
            const double gl = std::fabs(f.derivative(4, l));
            const double gm = std::fabs(f.derivative(4, m));
            const double gr = std::fabs(f.derivative(4, r));
            return pow5(r - l) * (std::max(gl, gm) + std::max(gm, gr));
        }
        return pow5(r - l) * estimate_sup_abs_derivative(f, 4, Interval(l, r));
    };

    std::vector<Cell> cells{{iv.a(), iv.b(), cell_term(iv.a(), iv.b())}};
    for (;;) {
        double acc = 0.0;
        for (const Cell& c : cells) acc += c.term;
        const double total = acc / divisor;
        if (cfg.on_iteration) cfg.on_iteration(total);
        if (total <= cfg.tol) break;
        if (cells.size() >= static_cast<std::size_t>(cfg.max_cells)) {
            throw ToleranceUnreachable("integrate_certified: bound " + num_str(total) +
                                       " > tol " + num_str(cfg.tol) + " at max_cells " +
                                       std::to_string(cfg.max_cells));
        }

        // Largest term wins; strict comparison keeps the leftmost on ties.
        std::size_t pick = 0;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (cells[i].term > cells[pick].term) pick = i;
        }
        const Cell c = cells[pick];
        const double mid = (c.left + c.right) / 2.0;
        if (!(c.left < mid && mid < c.right)) {
            throw ToleranceUnreachable("integrate_certified: cell at [" + num_str(c.left) +
                                       ", " + num_str(c.right) + "] cannot be bisected further");
        }
        cells[pick] = Cell{c.left, mid, cell_term(c.left, mid)};
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(pick) + 1,
                     Cell{mid, c.right, cell_term(mid, c.right)});
    }

    std::vector<double> nodes;
    nodes.reserve(cells.size() + 1);
    for (const Cell& c : cells) nodes.push_back(c.left);
    nodes.push_back(cells.back().right);
    Partition partition(std::move(nodes));

    // The certificate is recomputed from scratch on the final partition,
    // decoupled from the refinement loop's bookkeeping.
    BoundReport bound =
        use_qc ? composite_qc_bound(f, partition) : composite_classical_bound(f, partition);
    const double estimate = composite_simpson(f, partition);
    return CertifiedResult{estimate, std::move(bound), std::move(partition)};
}

}  // namespace simpcert

#pragma once

#include <functional>

#include "simpcert/bounds.hpp"
#include "simpcert/function_spec.hpp"
#include "simpcert/interval.hpp"
#include "simpcert/quadrature.hpp"

namespace simpcert {

/// What integrate_certified does when the sampled quasi-convexity check of
/// |f''''| fails: fall back to per-cell classical bounds, or refuse.
enum class Fallback { classical, reject };

struct AdaptiveConfig {
    double tol = 1e-8;  // target certified error, must be > 0
    int max_cells = 4096;
    Fallback fallback = Fallback::classical;

    /// Optional observer invoked once per refinement iteration with the
    /// current summed bound (before any bisection in that iteration).
    std::function<void(double)> on_iteration;
};

/// An integral estimate paired with the bound certifying it and the partition
/// that produced both.
struct CertifiedResult {
    double estimate = 0.0;
    BoundReport bound;
    Partition partition;
};

/// Bound-driven integrator. Maintains a worklist of cells, each carrying its
/// per-cell bound term, and repeatedly bisects the cell with the largest term
/// (leftmost on ties) at its midpoint until the summed bound is at most
/// cfg.tol. The certifying bound is then recomputed from scratch on the final
/// partition. Deterministic: identical inputs yield identical partitions.
///
/// Throws ToleranceUnreachable when cfg.max_cells is hit first, and
/// HypothesisFailed when quasi-convexity fails under Fallback::reject.
CertifiedResult integrate_certified(const FunctionSpec& f, const Interval& iv,
                                    const AdaptiveConfig& cfg);

}  // namespace simpcert

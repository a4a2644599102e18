#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simpcert/function_spec.hpp"
#include "simpcert/interval.hpp"
#include "simpcert/quadrature.hpp"

namespace simpcert {

enum class BoundFamily {
    classical,                // (b-a)^5 sup|f''''| / 2880, or its per-cell sum
    bounded_variation,        // C_n (b-a)^(n+1) V_a^b(f^(n)), n in 0..3
    quasi_convex,             // (b-a)^5 [sup pair + sup pair] / 5760
    quasi_convex_monotone,    // endpoint/midpoint specialization
    composite_qc,             // quasi-convex bound summed per cell
};

enum class AssumptionStatus { verified_sampled, assumed, failed };
enum class MonotoneDirection { increasing, decreasing };

const char* to_string(AssumptionStatus s);

struct Assumption {
    std::string name;
    AssumptionStatus status = AssumptionStatus::assumed;

    bool operator==(const Assumption&) const = default;
};

/// A computed error bound together with the inputs it consumed and the
/// hypotheses it rests on. Hypotheses are verified by sampling, never proved,
/// so a passing status reads `verified_sampled`. A report certifies its value
/// only while no assumption has failed; consumers (the adaptive integrator,
/// the compare table) must refuse non-certifying reports.
struct BoundReport {
    BoundFamily family = BoundFamily::classical;
    int bv_order = -1;  // bounded_variation only
    MonotoneDirection direction = MonotoneDirection::increasing;  // monotone only
    double value = 0.0;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<Assumption> assumptions;

    bool certifying() const;

    /// classical, bv0..bv3, qc, qc-mono-inc, qc-mono-dec, qc-composite.
    std::string family_name() const;
};

/// Exact constants C_0 = 1/3, C_1 = 1/24, C_2 = 1/324, C_3 = 1/1152 of the
/// bounded-variation family.
double bv_constant(int order);

/// Max of |f^(order)| over a uniform grid (grid >= 33 points, endpoints
/// included), refined by one 20-iteration golden-section pass around the grid
/// argmax. Grid plus refinement only ever evaluates the function, so the
/// estimate never exceeds the true sup and works for finite-difference
/// providers.
double estimate_sup_abs_derivative(const FunctionSpec& f, int order, const Interval& iv,
                                   int grid = 129);

/// Sampled total variation of f^(order), order 0..3: sums |g(t_{i+1}) - g(t_i)|
/// over nested uniform grids of 2^k cells, k = 6..20, returning as soon as
/// successive sums differ by less than tol * (1 + sum). Throws TVDiverging
/// when the cap is reached while sums still grow by more than 1% per
/// doubling.
double estimate_total_variation(const FunctionSpec& f, int order, const Interval& iv,
                                double tol);

struct QuasiConvexWitness {
    double x = 0.0;       // pair point with the smaller coordinate
    double y = 0.0;       // pair point with the larger coordinate
    double lambda = 0.0;  // mix weight; violation at lambda*x + (1-lambda)*y
    double mix_value = 0.0;
    double pair_sup = 0.0;
};

struct QuasiConvexCheck {
    AssumptionStatus status = AssumptionStatus::failed;
    std::optional<QuasiConvexWitness> witness;
};

/// Sampled quasi-convexity test of |f^(order)|: for every pair (x, y) on a
/// uniform grid (grid >= 17 points) and every lambda in {1/8, ..., 7/8},
/// checks |f^(order)|(lambda x + (1-lambda) y) <= max of the pair values,
/// with slack 1e-9 * (1 + pair max). Scans deterministically and stops at the
/// first violation, returning it as a witness. Failure is a value, not an
/// error.
QuasiConvexCheck check_quasiconvex(const FunctionSpec& f, int order, const Interval& iv,
                                   int grid = 33);

/// (b-a)^5 sup|f''''| / 2880 with the sup estimated by
/// estimate_sup_abs_derivative. Assumptions record whether f'''' came from a
/// closed form or a finite-difference fallback.
BoundReport classical_bound(const FunctionSpec& f, const Interval& iv);

/// C_n (b-a)^(n+1) V_a^b(f^(n)) for n in 0..3. Propagates TVDiverging.
BoundReport bv_bound(const FunctionSpec& f, int order, const Interval& iv);

/// (b-a)^5/5760 [ max(|f''''(a)|, |f''''(m)|) + max(|f''''(m)|, |f''''(b)|) ],
/// m the midpoint. Certifying only when the sampled quasi-convexity check of
/// |f''''| passes; a failing check is recorded with its witness.
BoundReport qc_bound(const FunctionSpec& f, const Interval& iv);

/// Monotone specialization: (b-a)^5/5760 [ |f''''(a)| + |f''''(m)| ] when
/// decreasing, (b-a)^5/5760 [ |f''''(m)| + |f''''(b)| ] when increasing.
/// Gated on sampled monotonicity of |f''''| (33-point grid); a failed check
/// is recorded in the assumptions, not thrown.
BoundReport qc_bound_monotone(const FunctionSpec& f, const Interval& iv,
                              MonotoneDirection direction);

/// Per-cell quasi-convex bound summed over the partition:
/// (1/5760) sum_i (x_{i+1}-x_i)^5 [ max(|f''''(x_i)|, |f''''(m_i)|)
///                                 + max(|f''''(m_i)|, |f''''(x_{i+1})|) ].
/// The quasi-convexity hypothesis is checked once on the full span.
BoundReport composite_qc_bound(const FunctionSpec& f, const Partition& p);

/// Classical bound applied per cell with per-cell sup estimates and summed.
/// Reduces to classical_bound on a single-cell partition.
BoundReport composite_classical_bound(const FunctionSpec& f, const Partition& p);

}  // namespace simpcert

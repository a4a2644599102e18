#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "simpcert/bounds.hpp"

namespace simpcert {

/// The serialized view of a BoundReport: exactly the fields of the report
/// schema (family, value, certifying flag, assumptions).
struct ReportBound {
    std::string family;
    double value = 0.0;
    bool certifying = true;
    std::vector<Assumption> assumptions;

    bool operator==(const ReportBound&) const = default;
};

ReportBound to_report_bound(const BoundReport& b);

/// One integration run, as emitted by the CLI. Serializes to
///
///   { "fn": str, "interval": [a, b], "n": int, "estimate": num,
///     "reference": num, "actual_error": num,
///     "bounds": [ { "family": str, "value": num, "certifying": bool,
///                   "assumptions": [ {"name": str, "status": str} ] } ],
///     "ms": num }
///
/// and round-trips losslessly through that JSON form.
struct RunReport {
    std::string fn;
    double a = 0.0;
    double b = 0.0;
    int n = 0;
    double estimate = 0.0;
    double reference = 0.0;
    double actual_error = 0.0;
    std::vector<ReportBound> bounds;
    double ms = 0.0;

    bool operator==(const RunReport&) const = default;
};

nlohmann::ordered_json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

/// Human-readable rendering; numbers at 10 significant digits.
std::string to_text(const RunReport& r);

/// Single-row CSV rendering with a header line.
std::string to_csv(const RunReport& r);

/// Inputs of the compare table: corpus functions crossed with uniform cell
/// counts on one interval.
struct CompareOptions {
    std::vector<std::string> functions = {"exp_x2", "exp_x", "x3", "x4", "poly5", "sin_x"};
    double a = 0.0;
    double b = 1.0;
    std::vector<int> cell_counts = {1, 2, 4, 8};
    double ref_tol = 1e-10;
};

/// CSV table, one row per function x cell count:
///
///   fn,n,actual_error,classical,bv0,bv1,bv2,bv3,qc_composite,
///   tightness_classical,tightness_qc
///
/// Unavailable cells carry NA(<reason>); non-certifying quasi-convex bounds
/// report NA(QuasiConvexityFailed). Output is deterministic: byte-identical
/// across runs with identical arguments.
std::string compare_csv(const CompareOptions& opt);

/// One recomputed quantity of the worked exp(x^2) example next to its
/// published value.
struct PaperExampleRow {
    std::string label;
    double published = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;  // |published - computed| above this flags the row
    bool differs = false;
    std::string note;
};

struct PaperExample {
    std::vector<PaperExampleRow> rows;
    RunReport run;  // exp_x2 on [0, 1], one cell, classical + qc bounds
};

/// Reruns the worked example end to end: function values, fourth-derivative
/// values, reference integral, classical bound, and the three-point bound,
/// each next to the published figure. The published three-point result is
/// flagged differs-from-published-print: it equals sup|f''''|/5760 (half the
/// classical bound), not the three-point formula value.
PaperExample paper_example();

std::string to_text(const PaperExample& p);
nlohmann::ordered_json to_json(const PaperExample& p);

}  // namespace simpcert

#include "simpcert/report.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "simpcert/adaptive.hpp"
#include "simpcert/errors.hpp"
#include "simpcert/quadrature.hpp"

namespace simpcert {

namespace {

// Numbers in human-readable output carry 10 significant digits.
std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

AssumptionStatus status_from_string(const std::string& s) {
    if (s == "verified_sampled") return AssumptionStatus::verified_sampled;
    if (s == "assumed") return AssumptionStatus::assumed;
    if (s == "failed") return AssumptionStatus::failed;
    throw std::invalid_argument("unknown assumption status: " + s);
}

std::string error_code(const Error& e) {
    if (dynamic_cast<const TVDiverging*>(&e)) return "TVDiverging";
    if (dynamic_cast<const NoConvergence*>(&e)) return "NoConvergence";
    if (dynamic_cast<const StencilOutOfDomain*>(&e)) return "StencilOutOfDomain";
    if (dynamic_cast<const ToleranceUnreachable*>(&e)) return "ToleranceUnreachable";
    if (dynamic_cast<const HypothesisFailed*>(&e)) return "HypothesisFailed";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    return "Error";
}

// One compare-table cell: a number, or NA with a reason code.
struct CellValue {
    std::optional<double> value;
    std::string reason;

    std::string render() const { return value ? fmt10(*value) : "NA(" + reason + ")"; }
};

template <typename F>
CellValue try_cell(F&& fn) {
    try {
        return CellValue{fn(), {}};
    } catch (const Error& e) {
        return CellValue{std::nullopt, error_code(e)};
    }
}

CellValue tightness(const CellValue& bound, const CellValue& actual) {
    if (!bound.value) return bound;
    if (!actual.value) return actual;
    if (*actual.value == 0.0) return CellValue{std::nullopt, "ZeroActualError"};
    return CellValue{*bound.value / *actual.value, {}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

ReportBound to_report_bound(const BoundReport& b) {
    return ReportBound{b.family_name(), b.value, b.certifying(), b.assumptions};
}

nlohmann::ordered_json to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["fn"] = r.fn;
    j["interval"] = {r.a, r.b};
    j["n"] = r.n;
    j["estimate"] = r.estimate;
    j["reference"] = r.reference;
    j["actual_error"] = r.actual_error;
    j["bounds"] = nlohmann::ordered_json::array();
    for (const ReportBound& b : r.bounds) {
        nlohmann::ordered_json jb;
        jb["family"] = b.family;
        jb["value"] = b.value;
        jb["certifying"] = b.certifying;
        jb["assumptions"] = nlohmann::ordered_json::array();
        for (const Assumption& a : b.assumptions) {
            jb["assumptions"].push_back({{"name", a.name}, {"status", to_string(a.status)}});
        }
        j["bounds"].push_back(std::move(jb));
    }
    j["ms"] = r.ms;
    return j;
}

RunReport run_report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.fn = j.at("fn").get<std::string>();
    r.a = j.at("interval").at(0).get<double>();
    r.b = j.at("interval").at(1).get<double>();
    r.n = j.at("n").get<int>();
    r.estimate = j.at("estimate").get<double>();
    r.reference = j.at("reference").get<double>();
    r.actual_error = j.at("actual_error").get<double>();
    for (const auto& jb : j.at("bounds")) {
        ReportBound b;
        b.family = jb.at("family").get<std::string>();
        b.value = jb.at("value").get<double>();
        b.certifying = jb.at("certifying").get<bool>();
        for (const auto& ja : jb.at("assumptions")) {
            b.assumptions.push_back(Assumption{ja.at("name").get<std::string>(),
                                               status_from_string(ja.at("status").get<std::string>())});
        }
        r.bounds.push_back(std::move(b));
    }
    r.ms = j.at("ms").get<double>();
    return r;
}

std::string to_text(const RunReport& r) {
    std::ostringstream os;
    os << "fn:            " << r.fn << '\n';
    os << "interval:      [" << fmt10(r.a) << ", " << fmt10(r.b) << "]\n";
    os << "cells:         " << r.n << '\n';
    os << "estimate:      " << fmt10(r.estimate) << '\n';
    os << "reference:     " << fmt10(r.reference) << '\n';
    os << "actual error:  " << fmt10(r.actual_error) << '\n';
    os << "bounds:\n";
    for (const ReportBound& b : r.bounds) {
        os << "  " << b.family;
        for (std::size_t i = b.family.size(); i < 14; ++i) os << ' ';
        os << fmt10(b.value) << (b.certifying ? "  certifying    " : "  NON-CERTIFYING");
        for (std::size_t i = 0; i < b.assumptions.size(); ++i) {
            os << (i == 0 ? "  " : ", ") << b.assumptions[i].name << '='
               << to_string(b.assumptions[i].status);
        }
        os << '\n';
    }
    os << "ms:            " << fmt10(r.ms) << '\n';
    return os.str();
}

std::string to_csv(const RunReport& r) {
    std::ostringstream header;
    std::ostringstream row;
    header << "fn,a,b,n,estimate,reference,actual_error";
    row << r.fn << ',' << fmt10(r.a) << ',' << fmt10(r.b) << ',' << r.n << ','
        << fmt10(r.estimate) << ',' << fmt10(r.reference) << ',' << fmt10(r.actual_error);
    for (const ReportBound& b : r.bounds) {
        header << ',' << b.family;
        if (b.certifying) {
            row << ',' << fmt10(b.value);
        } else {
            row << ",NA(NonCertifying)";
        }
    }
    header << ",ms";
    row << ',' << fmt10(r.ms);
    return header.str() + '\n' + row.str() + '\n';
}

std::string compare_csv(const CompareOptions& opt) {
    std::ostringstream os;
    os << "fn,n,actual_error,classical,bv0,bv1,bv2,bv3,qc_composite,"
          "tightness_classical,tightness_qc\n";
    for (const std::string& name : opt.functions) {
        const FunctionSpec& f = corpus_function(name);
        const Interval iv(opt.a, opt.b);
        if (!f.domain().contains(iv)) {
            throw DomainError("compare: [" + fmt10(opt.a) + ", " + fmt10(opt.b) +
                              "] exceeds the domain of " + name);
        }

        // Interval-level quantities are shared by every row of this function.
        const CellValue reference =
            try_cell([&] { return reference_integral(f, iv, opt.ref_tol); });
        std::array<CellValue, 4> bv;
        for (int k = 0; k < 4; ++k) {
            bv[static_cast<std::size_t>(k)] =
                try_cell([&] { return bv_bound(f, k, iv).value; });
        }

        for (int n : opt.cell_counts) {
            if (n < 1) throw std::invalid_argument("compare: cell counts must be >= 1");
            const Partition p = Partition::uniform(iv, n);
            const double estimate = composite_simpson(f, p);

            CellValue actual = reference;
            if (reference.value) {
                actual = CellValue{std::fabs(*reference.value - estimate), {}};
            }
            const CellValue classical =
                try_cell([&] { return composite_classical_bound(f, p).value; });
            CellValue qc;
            try {
                const BoundReport r = composite_qc_bound(f, p);
                qc = r.certifying() ? CellValue{r.value, {}}
                                    : CellValue{std::nullopt, "QuasiConvexityFailed"};
            } catch (const Error& e) {
                qc = CellValue{std::nullopt, error_code(e)};
            }

            os << name << ',' << n << ',' << actual.render() << ',' << classical.render();
            for (const CellValue& c : bv) os << ',' << c.render();
            os << ',' << qc.render() << ',' << tightness(classical, actual).render() << ','
               << tightness(qc, actual).render() << '\n';
        }
    }
    return os.str();
}

PaperExample paper_example() {
    const FunctionSpec& f = corpus_function("exp_x2");
    const Interval unit(0.0, 1.0);
    const auto t0 = std::chrono::steady_clock::now();

    PaperExample ex;
    auto add = [&](std::string label, double published, double computed, double tol,
                   std::string note = "") {
        PaperExampleRow row;
        row.label = std::move(label);
        row.published = published;
        row.computed = computed;
        row.tolerance = tol;
        row.differs = std::fabs(published - computed) > tol;
        row.note = std::move(note);
        ex.rows.push_back(std::move(row));
    };

    add("f(0)", 1.0, f(0.0), 1e-8);
    add("f(1)", 2.718281828, f(1.0), 1e-8);
    add("f(1/2)", 1.284025417, f(0.5), 1e-8);
    add("f4(1)", 206.5894189, f.derivative(4, 1.0), 1e-4);
    add("f4(1/2)", 32.10063542, f.derivative(4, 0.5), 1e-4);
    const double sup = estimate_sup_abs_derivative(f, 4, unit);
    add("sup_abs_f4", 206.5894189, sup, 1e-4);
    const double reference = reference_integral(f, unit, 1e-9);
    add("integral", 1.462651746, reference, 1e-8);
    const BoundReport classical = classical_bound(f, unit);
    add("classical_bound", 0.07173243712, classical.value, 1e-6);
    const BoundReport qc = qc_bound(f, unit);
    add("three_point_bound", 0.03586621856, qc.value, 1e-6,
        "published print equals sup|f''''|/5760, exactly half the classical bound; "
        "the three-point formula itself gives the computed value");

    RunReport run;
    run.fn = f.name();
    run.a = unit.a();
    run.b = unit.b();
    run.n = 1;
    run.estimate = simpson_single(f, unit);
    run.reference = reference;
    run.actual_error = std::fabs(reference - run.estimate);
    run.bounds = {to_report_bound(classical), to_report_bound(qc)};
    run.ms = elapsed_ms(t0);
    ex.run = std::move(run);
    return ex;
}

std::string to_text(const PaperExample& p) {
    std::ostringstream os;
    os << "worked example: f(x) = exp(x^2) on [0, 1]\n\n";
    os << "  quantity            published        computed         |diff|\n";
    for (const PaperExampleRow& row : p.rows) {
        os << "  " << row.label;
        for (std::size_t i = row.label.size(); i < 20; ++i) os << ' ';
        std::string pub = fmt10(row.published);
        os << pub;
        for (std::size_t i = pub.size(); i < 17; ++i) os << ' ';
        std::string comp = fmt10(row.computed);
        os << comp;
        for (std::size_t i = comp.size(); i < 17; ++i) os << ' ';
        char diffbuf[32];
        std::snprintf(diffbuf, sizeof diffbuf, "%.3e", std::fabs(row.published - row.computed));
        os << diffbuf;
        if (row.differs) os << "  differs-from-published-print";
        os << '\n';
        if (!row.note.empty()) os << "      note: " << row.note << '\n';
    }
    os << '\n' << to_text(p.run);
    return os.str();
}

nlohmann::ordered_json to_json(const PaperExample& p) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const PaperExampleRow& row : p.rows) {
        nlohmann::ordered_json jr;
        jr["label"] = row.label;
        jr["published"] = row.published;
        jr["computed"] = row.computed;
        jr["abs_diff"] = std::fabs(row.published - row.computed);
        jr["differs"] = row.differs;
        if (!row.note.empty()) jr["note"] = row.note;
        j["rows"].push_back(std::move(jr));
    }
    j["run"] = to_json(p.run);
    return j;
}

}  // namespace simpcert

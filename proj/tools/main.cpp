#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "simpcert/adaptive.hpp"
#include "simpcert/bounds.hpp"
#include "simpcert/errors.hpp"
#include "simpcert/function_spec.hpp"
#include "simpcert/quadrature.hpp"
#include "simpcert/report.hpp"

namespace {

using namespace simpcert;

constexpr double kReferenceTol = 1e-10;

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + out_path);
    out << text;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

BoundReport evaluate_family(const std::string& key, const FunctionSpec& f, const Interval& iv,
                            const Partition& p) {
    // classical and qc take their composite per-partition forms for n > 1;
    // both reduce exactly to the single-interval operations at n = 1.
    if (key == "classical") {
        return p.cells() == 1 ? classical_bound(f, iv) : composite_classical_bound(f, p);
    }
    if (key == "qc") {
        return p.cells() == 1 ? qc_bound(f, iv) : composite_qc_bound(f, p);
    }
    if (key == "bv0" || key == "bv1" || key == "bv2" || key == "bv3") {
        return bv_bound(f, key[2] - '0', iv);
    }
    if (key == "qc-mono-inc") return qc_bound_monotone(f, iv, MonotoneDirection::increasing);
    if (key == "qc-mono-dec") return qc_bound_monotone(f, iv, MonotoneDirection::decreasing);
    throw Error("unknown bound family: " + key +
                " (expected classical, bv0..bv3, qc, qc-mono-inc, qc-mono-dec)");
}

struct IntegrateArgs {
    std::string fn;
    double a = 0.0;
    double b = 1.0;
    int n = 1;
    std::optional<double> tol;
    std::string bounds = "classical,qc";
    std::string fallback = "classical";
    std::string format = "text";
    std::string out;
};

RunReport run_integrate(const IntegrateArgs& args) {
    const FunctionSpec& f = corpus_function(args.fn);
    const Interval iv(args.a, args.b);
    if (!f.domain().contains(iv)) {
        throw DomainError("integrate: [" + fmt10(args.a) + ", " + fmt10(args.b) +
                          "] exceeds the domain of " + args.fn + " " +
                          "[" + fmt10(f.domain().a()) + ", " + fmt10(f.domain().b()) + "]");
    }

    const auto t0 = std::chrono::steady_clock::now();
    RunReport r;
    r.fn = args.fn;
    r.a = args.a;
    r.b = args.b;

    if (args.tol) {
        AdaptiveConfig cfg;
        cfg.tol = *args.tol;
        cfg.fallback = args.fallback == "reject" ? Fallback::reject : Fallback::classical;
        CertifiedResult res = integrate_certified(f, iv, cfg);
        r.n = static_cast<int>(res.partition.cells());
        r.estimate = res.estimate;
        r.bounds = {to_report_bound(res.bound)};
    } else {
        const Partition p = Partition::uniform(iv, args.n);
        r.n = args.n;
        r.estimate = composite_simpson(f, p);
        for (const std::string& key : split_list(args.bounds)) {
            r.bounds.push_back(to_report_bound(evaluate_family(key, f, iv, p)));
        }
    }

    r.reference = reference_integral(f, iv, kReferenceTol);
    r.actual_error = std::fabs(r.reference - r.estimate);
    const auto dt = std::chrono::steady_clock::now() - t0;
    r.ms = std::chrono::duration<double, std::milli>(dt).count();
    return r;
}

std::string render_run(const RunReport& r, const std::string& format) {
    if (format == "json") return to_json(r).dump(2) + "\n";
    if (format == "csv") return to_csv(r);
    return to_text(r);
}

std::string list_fns_text() {
    std::ostringstream os;
    os << "name              domain                analytic derivative orders\n";
    for (const FunctionSpec& f : builtin_corpus()) {
        os << f.name();
        for (std::size_t i = f.name().size(); i < 18; ++i) os << ' ';
        const std::string dom = "[" + fmt10(f.domain().a()) + ", " + fmt10(f.domain().b()) + "]";
        os << dom;
        for (std::size_t i = dom.size(); i < 22; ++i) os << ' ';
        bool first = true;
        for (int k = 1; k <= 4; ++k) {
            if (f.derivative_is_analytic(k)) {
                os << (first ? "" : ",") << k;
                first = false;
            }
        }
        if (first) os << "-";
        os << '\n';
    }
    return os.str();
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Simpson quadrature with certified a-priori error bounds"};
    app.require_subcommand(1);
    app.footer("SIMPSON_CERT_SEED is reserved for future use; all computation is deterministic.");

    IntegrateArgs iargs;
    CLI::App* integrate = app.add_subcommand("integrate", "integrate one corpus function");
    integrate->add_option("--fn", iargs.fn, "corpus function name")->required();
    integrate->add_option("--a", iargs.a, "left endpoint")->capture_default_str();
    integrate->add_option("--b", iargs.b, "right endpoint")->capture_default_str();
    CLI::Option* n_opt =
        integrate->add_option("--n", iargs.n, "uniform cell count")->capture_default_str();
    double tol_value = 0.0;
    CLI::Option* tol_opt = integrate->add_option(
        "--tol", tol_value, "certified error target; switches to adaptive refinement");
    tol_opt->excludes(n_opt);
    integrate->add_option("--bounds", iargs.bounds,
                          "comma list from classical,bv0..bv3,qc,qc-mono-inc,qc-mono-dec")
        ->capture_default_str();
    integrate->add_option("--fallback", iargs.fallback, "adaptive fallback: classical|reject")
        ->check(CLI::IsMember({"classical", "reject"}))
        ->capture_default_str();
    integrate->add_option("--format", iargs.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    integrate->add_option("--out", iargs.out, "write output to a file instead of stdout");

    CompareOptions copt;
    std::string compare_fns = "exp_x2,exp_x,x3,x4,poly5,sin_x";
    std::string compare_ns = "1,2,4,8";
    std::string compare_out;
    CLI::App* compare = app.add_subcommand(
        "compare", "tabulate measured error against every bound family (CSV)");
    compare->add_option("--fns", compare_fns, "comma list of corpus functions")
        ->capture_default_str();
    compare->add_option("--a", copt.a, "left endpoint")->capture_default_str();
    compare->add_option("--b", copt.b, "right endpoint")->capture_default_str();
    compare->add_option("--ns", compare_ns, "comma list of uniform cell counts")
        ->capture_default_str();
    compare->add_option("--out", compare_out, "write output to a file instead of stdout");

    std::string paper_format = "text";
    std::string paper_out;
    CLI::App* paper = app.add_subcommand(
        "paper-example", "rerun the worked exp(x^2) example against its published figures");
    paper->add_option("--format", paper_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    paper->add_option("--out", paper_out, "write output to a file instead of stdout");

    CLI::App* list = app.add_subcommand("list-fns", "list the built-in corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (integrate->parsed()) {
        if (*tol_opt) iargs.tol = tol_value;
        const RunReport r = run_integrate(iargs);
        emit(render_run(r, iargs.format), iargs.out);
    } else if (compare->parsed()) {
        copt.functions = split_list(compare_fns);
        copt.cell_counts.clear();
        for (const std::string& s : split_list(compare_ns)) copt.cell_counts.push_back(std::stoi(s));
        emit(compare_csv(copt), compare_out);
    } else if (paper->parsed()) {
        const PaperExample ex = paper_example();
        emit(paper_format == "json" ? to_json(ex).dump(2) + "\n" : to_text(ex), paper_out);
    } else if (list->parsed()) {
        std::cout << list_fns_text();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UnknownFunctionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const HypothesisFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ToleranceUnreachable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

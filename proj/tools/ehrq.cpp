// ehrq: exact computations with rational Ehrhart quasi-polynomials.
//
// Subcommands: count, indices, ehrhart, coeffs, verify, sample.
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ehrhart/closed_forms_2d.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/quasipoly.hpp"
#include "ehrhart/rational_ehrhart.hpp"
#include "ehrhart/verify.hpp"

using namespace ehrhart;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string r_text;
    std::string from_text = "0";
    std::string to_text = "0";
    std::string step_text = "1";
    int samples = 20;
    unsigned long long seed = 0;
    std::string out_path;
    std::string format = "csv";
    long period_hint = 0;
    bool suite_reciprocity = false;
    bool suite_derivative = false;
    bool suite_dilation = false;
    bool suite_periods = false;
    bool suite_bound2d = false;
    bool suite_all = false;
    long threads = 1; // TOOL_THREADS cap; execution is sequential
};

/// "c0 + c1*r + c2*r^2" with exact rational coefficients, zeros skipped.
std::string poly_text(const std::vector<Rational>& coeffs, const char* var = "r") {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            out = c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string term;
        if (i == 0 || mag != Rational(1)) term = mag.str();
        if (i > 0) {
            if (!term.empty()) term += "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

int cmd_count(const RunConfig& cfg) {
    Polytope P = parse_polytope_file(cfg.input);
    Rational r = parse_rational(cfg.r_text);
    std::cout << count(P, r).get_str() << "\n";
    return 0;
}

int cmd_indices(const RunConfig& cfg) {
    Polytope P = parse_polytope_file(cfg.input);
    std::cout << "d(P) = " << denominator(P).get_str() << "\n";
    std::cout << "q(P) = " << rational_denominator(P).str() << "\n";
    if (P.kind() == PolytopeKind::General) {
        std::cerr << "warning: face indices unsupported for kind general\n";
        return 0;
    }
    for (int i = 0; i <= P.dim(); ++i) {
        std::optional<Int> di = integer_i_index(P, i);
        ScaleRequirement rdi = rational_i_index(P, i);
        std::cout << "i=" << i << ": d_i = " << (di ? di->get_str() : "free")
                  << ", rd_i = " << rdi.str() << "\n";
    }
    return 0;
}

int cmd_ehrhart(const RunConfig& cfg) {
    Polytope P = parse_polytope_file(cfg.input);
    QuasiPolynomial qp = compute_ehrhart(P, cfg.period_hint);
    std::cout << "degree " << qp.degree() << ", period " << qp.period() << "\n";
    for (long j = 0; j < qp.period(); ++j) {
        std::cout << "k = " << j << " (mod " << qp.period() << "): G(P,k) = "
                  << poly_text(qp.table()[j], "k") << "\n";
    }
    return 0;
}

int cmd_coeffs(const RunConfig& cfg) {
    Polytope P = parse_polytope_file(cfg.input);
    RationalEhrhart E(std::move(P));
    PiecewiseQP pw = E.compute_piecewise();
    std::cout << "q(P) = " << pw.period.str() << "\n";
    std::cout << "breakpoints:";
    for (const Rational& b : pw.breakpoints) std::cout << " " << b.str();
    std::cout << "\n";
    for (size_t m = 0; m < pw.intervals.size(); ++m) {
        std::cout << "interval (" << pw.breakpoints[m].str() << ", "
                  << pw.breakpoints[m + 1].str() << "):\n";
        for (int i = pw.dim; i >= 0; --i)
            std::cout << "  Q_" << i << " = " << poly_text(pw.intervals[m].pieces[i])
                      << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    Polytope P = parse_polytope_file(cfg.input);
    bool all = cfg.suite_all;
    std::vector<CheckResult> results;
    auto skip = [&](const std::string& name, const std::string& why) {
        std::cout << "SKIP " << name << ": " << why << "\n";
    };

    std::optional<RationalEhrhart> E;
    try {
        E.emplace(P);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotFullDimensional) throw;
    }
    if (!E) {
        skip("all", "polytope is not full-dimensional");
        return 0;
    }

    if (all || cfg.suite_reciprocity) {
        for (CheckResult& c : verify_reciprocity(*E, cfg.samples))
            results.push_back(std::move(c));
    }
    if (all || cfg.suite_derivative) {
        PiecewiseQP pw = E->compute_piecewise();
        for (CheckResult& c : verify_derivative(pw))
            results.push_back(std::move(c));
    }
    if (all || cfg.suite_dilation) {
        for (CheckResult& c : verify_dilation(*E, cfg.samples))
            results.push_back(std::move(c));
    }
    if (all || cfg.suite_periods) {
        try {
            for (CheckResult& c : verify_periods(*E, cfg.samples))
                results.push_back(std::move(c));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnsupportedKind) throw;
            skip("periods", "face enumeration unsupported for this kind");
        }
    }
    if (all || cfg.suite_bound2d) {
        if (P.ambient_dim() == 2 && P.dim() == 2) {
            for (CheckResult& c :
                 verify_bound2d(P, cfg.samples, cfg.seed, /*polygons=*/100))
                results.push_back(std::move(c));
        } else {
            skip("bound2d", "not a 2-dimensional polygon");
        }
    }

    int failures = 0;
    for (const CheckResult& c : results) {
        if (c.pass) {
            std::cout << "PASS " << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    if (failures == 0)
        std::cout << "all checks passed\n";
    else
        std::cout << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_sample(const RunConfig& cfg) {
    Polytope P = parse_polytope_file(cfg.input);
    Rational from = parse_rational(cfg.from_text);
    Rational to = parse_rational(cfg.to_text);
    Rational step = parse_rational(cfg.step_text);
    if (from.sign() < 0 || to < from)
        throw Error(ErrorKind::DomainError, "sample: need 0 <= from <= to");
    if (step.sign() <= 0)
        throw Error(ErrorKind::DomainError, "sample: step must be positive");

    RationalEhrhart E(std::move(P));
    PiecewiseQP pw = E.compute_piecewise();
    const int n = pw.dim;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file)
            throw Error(ErrorKind::DomainError, "cannot open output '" + cfg.out_path + "'");
        out = &file;
    }

    auto emit_row = [&](const Rational& r) {
        Int c = count(E.polytope(), r);
        std::vector<std::string> qs;
        for (int i = 0; i <= n; ++i) {
            Rational v;
            try {
                v = eval_piecewise(pw, i, r);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::AtBreakpoint) throw;
                v = E.eval_Qi(i, r); // exact-point path at breakpoints
            }
            qs.push_back(v.str());
        }
        if (cfg.format == "jsonl") {
            *out << "{\"r\":\"" << r.str() << "\",\"count\":\"" << c.get_str() << "\"";
            for (int i = 0; i <= n; ++i)
                *out << ",\"Q" << i << "\":\"" << qs[i] << "\"";
            *out << "}\n";
        } else {
            *out << r.str() << "," << c.get_str();
            for (int i = 0; i <= n; ++i) *out << "," << qs[i];
            *out << "\n";
        }
    };

    if (cfg.format != "jsonl") {
        *out << "r,count";
        for (int i = 0; i <= n; ++i) *out << ",Q" << i;
        *out << "\n";
    }
    if (from != to)
        for (Rational r = from; r <= to; r += step) emit_row(r);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* tt = std::getenv("TOOL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(tt, &end, 10);
        if (end && *end == '\0' && v >= 1) cfg.threads = v;
    }

    CLI::App app{"exact rational Ehrhart quasi-polynomials of rational polytopes"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error.\n"
               "TOOL_THREADS caps parallelism (execution is sequential; any cap >= 1 holds).");

    CLI::App* c_count = app.add_subcommand("count", "count lattice points of the dilate rP");
    c_count->add_option("file", cfg.input, "polytope file")->required();
    c_count->add_option("-r,--dilation", cfg.r_text, "dilation factor, rational 'p/q'")
        ->required();

    CLI::App* c_idx = app.add_subcommand("indices", "print d(P), q(P) and the i-indices");
    c_idx->add_option("file", cfg.input, "polytope file")->required();

    CLI::App* c_ehr = app.add_subcommand("ehrhart", "integer Ehrhart quasi-polynomial table");
    c_ehr->add_option("file", cfg.input, "polytope file")->required();
    c_ehr->add_option("--period", cfg.period_hint,
                      "period hint (multiple of d(P); default d(P))");

    CLI::App* c_coef = app.add_subcommand(
        "coeffs", "breakpoints and per-interval polynomial pieces of every Q_i");
    c_coef->add_option("file", cfg.input, "polytope file")->required();

    CLI::App* c_ver = app.add_subcommand("verify", "run verification suites");
    c_ver->add_option("file", cfg.input, "polytope file")->required();
    c_ver->add_flag("--reciprocity", cfg.suite_reciprocity, "interior counts vs (-1)^n Q(P,-r)");
    c_ver->add_flag("--derivative", cfg.suite_derivative, "piece derivative identity");
    c_ver->add_flag("--dilation", cfg.suite_dilation, "Q_i(sP,r) = Q_i(P,sr) s^i");
    c_ver->add_flag("--periods", cfg.suite_periods, "rd_i and d_i are periods of Q_i");
    c_ver->add_flag("--bound2d", cfg.suite_bound2d, "|Q_1(P,r)| <= Q_1(P,0) sampling");
    c_ver->add_flag("--all", cfg.suite_all, "every applicable suite");
    c_ver->add_option("--samples", cfg.samples, "samples per check (default 20)")
        ->check(CLI::Range(1, 100000));
    c_ver->add_option("--seed", cfg.seed, "random seed (default 0)");

    CLI::App* c_samp = app.add_subcommand("sample", "emit r,count,Q0..Qn rows over a range");
    c_samp->add_option("file", cfg.input, "polytope file")->required();
    c_samp->add_option("--from", cfg.from_text, "range start (rational)")->required();
    c_samp->add_option("--to", cfg.to_text, "range end (rational)")->required();
    c_samp->add_option("--step", cfg.step_text, "step (positive rational)")->required();
    c_samp->add_option("--out", cfg.out_path, "output path (default stdout)");
    c_samp->add_option("--format", cfg.format, "csv (default) or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_count->parsed()) return cmd_count(cfg);
        if (c_idx->parsed()) return cmd_indices(cfg);
        if (c_ehr->parsed()) return cmd_ehrhart(cfg);
        if (c_coef->parsed()) return cmd_coeffs(cfg);
        if (c_ver->parsed()) return cmd_verify(cfg);
        if (c_samp->parsed()) return cmd_sample(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

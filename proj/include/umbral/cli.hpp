#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "families.hpp"
#include "identities.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "sheffer.hpp"

// Command-line front end: `table`, `eval`, `verify` and `bases`.
// Exit status: 0 success, 1 a verification failed, 2 usage or parameter error.

namespace umbral::cli {

enum class Format { json, csv, latex };

struct CliConfig {
    std::string command;
    std::string family;
    std::string basis = "falling";
    std::string identity;
    std::size_t n = 0;
    std::size_t n_max = 5;
    long r = 1;
    long k = 1;
    std::size_t s = 1;
    std::string lambda = "-1";
    std::string mu = "-1";
    std::string at = "0";
    std::optional<std::size_t> grid_n_min;
    std::optional<std::size_t> grid_n_max;
    std::vector<long> grid_r;
    std::vector<long> grid_k;
    std::vector<std::size_t> grid_s;
    std::vector<std::string> grid_lambda;
    std::vector<std::string> grid_mu;
    std::string format = "json";
    std::string output;
    bool collect_all = false;
    unsigned jobs = 1;
};

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"bernoulli",      "euler",   "frobenius-euler",
                                                "poly-bernoulli", "mixed-T", "stirling2"};
    return names;
}

inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names{"thm1-2", "thm3",  "thm4",        "thm5",
                                                "thm6",   "bases", "foundations", "all"};
    return names;
}

// ---- rendering --------------------------------------------------------------------

inline std::string latex_rational(const Rational& q) {
    if (q.is_integer()) return q.to_string();
    std::string sign = q.sign() < 0 ? "-" : "";
    mpz_class num = q.numerator();
    if (num < 0) num = -num;
    return sign + "\\frac{" + num.get_str() + "}{" + q.denominator().get_str() + "}";
}

/// Descending powers, coefficients as \frac{p}{q}.
inline std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        Rational mag = negative ? -c : c;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (i == 0 || mag != Rational(1)) out += latex_rational(mag);
        if (i == 1) out += "x";
        else if (i > 1) out += "x^{" + std::to_string(i) + "}";
    }
    return out;
}

struct Row {
    std::string family;
    std::size_t n = 0;
    std::optional<long> r, k;
    std::optional<std::size_t> s;
    std::optional<Rational> lambda, mu;
    std::vector<Rational> coefficients;
    std::string latex_lhs;
    std::string latex_rhs;
};

class RowSink {
public:
    RowSink(Format fmt, std::ostream& os) : fmt_(fmt), os_(os) {}

    void write(const Row& row) {
        switch (fmt_) {
            case Format::json: {
                nlohmann::ordered_json j;
                j["family"] = row.family;
                j["n"] = row.n;
                j["r"] = row.r ? nlohmann::ordered_json(*row.r) : nlohmann::ordered_json(nullptr);
                j["k"] = row.k ? nlohmann::ordered_json(*row.k) : nlohmann::ordered_json(nullptr);
                j["s"] = row.s ? nlohmann::ordered_json(*row.s) : nlohmann::ordered_json(nullptr);
                j["lambda"] = row.lambda ? nlohmann::ordered_json(*row.lambda) : nlohmann::ordered_json(nullptr);
                j["mu"] = row.mu ? nlohmann::ordered_json(*row.mu) : nlohmann::ordered_json(nullptr);
                j["coefficients"] = row.coefficients;
                os_ << j.dump() << '\n';
                break;
            }
            case Format::csv: {
                if (!header_written_) {
                    os_ << "family,n,r,k,s,lambda,mu,coefficients\n";
                    header_written_ = true;
                }
                auto opt = [](const auto& v) { return v ? detail::render(*v) : std::string(); };
                os_ << row.family << ',' << row.n << ',' << opt(row.r) << ',' << opt(row.k) << ',' << opt(row.s)
                    << ',' << opt(row.lambda) << ',' << opt(row.mu) << ',';
                for (std::size_t i = 0; i < row.coefficients.size(); ++i)
                    os_ << (i ? " " : "") << row.coefficients[i];
                os_ << '\n';
                break;
            }
            case Format::latex: os_ << row.latex_lhs << " &= " << row.latex_rhs << " \\\\\n"; break;
        }
    }

private:
    Format fmt_;
    std::ostream& os_;
    bool header_written_ = false;
};

// ---- commands ---------------------------------------------------------------------

inline Format parse_format(const std::string& f) {
    if (f == "csv") return Format::csv;
    if (f == "latex") return Format::latex;
    return Format::json;
}

inline std::vector<Rational> poly_coefficients(const Poly& p) {
    return p.is_zero() ? std::vector<Rational>{Rational(0)} : std::vector<Rational>(p.coeffs().begin(), p.coeffs().end());
}

/// Polynomials n = 0..n_max of a family together with the row metadata.
inline std::vector<Row> family_rows(const CliConfig& cfg, std::size_t n_max) {
    const Rational lambda = Rational::parse(cfg.lambda);
    std::vector<Row> rows;
    std::vector<Poly> seq;
    Row proto;
    proto.family = cfg.family;
    std::string name, params;
    const std::string lam = latex_rational(lambda);
    if (cfg.family == "bernoulli") {
        seq = bernoulli_sequence(n_max, static_cast<long>(cfg.s));
        proto.s = cfg.s;
        name = "\\mathbb{B}";
        params = "^{(" + std::to_string(cfg.s) + ")}(x)";
    } else if (cfg.family == "euler") {
        seq = euler_sequence(n_max, static_cast<long>(cfg.s));
        proto.s = cfg.s;
        name = "E";
        params = "^{(" + std::to_string(cfg.s) + ")}(x)";
    } else if (cfg.family == "frobenius-euler") {
        seq = frobenius_euler_sequence(n_max, cfg.r, lambda);
        proto.r = cfg.r;
        proto.lambda = lambda;
        name = "H";
        params = "^{(" + std::to_string(cfg.r) + ")}(x \\mid " + lam + ")";
    } else if (cfg.family == "poly-bernoulli") {
        seq = poly_bernoulli_sequence(n_max, cfg.k);
        proto.k = cfg.k;
        name = "B";
        params = "^{(" + std::to_string(cfg.k) + ")}(x)";
    } else if (cfg.family == "mixed-T") {
        seq = mixed_T_sequence(n_max, cfg.r, cfg.k, lambda);
        proto.r = cfg.r;
        proto.k = cfg.k;
        proto.lambda = lambda;
        name = "T";
        params = "^{(" + std::to_string(cfg.r) + "," + std::to_string(cfg.k) + ")}(x \\mid " + lam + ")";
    } else if (cfg.family == "stirling2") {
        const StirlingTable table(n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            Row row = proto;
            row.n = n;
            row.coefficients = table.row(n);
            row.latex_lhs = "S_{2}(" + std::to_string(n) + ", m)_{m=0}^{" + std::to_string(n) + "}";
            for (std::size_t m = 0; m <= n; ++m) row.latex_rhs += (m ? ", " : "") + table(n, m).to_string();
            rows.push_back(std::move(row));
        }
        return rows;
    } else {
        throw precondition_error("unknown family '" + cfg.family + "'");
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        Row row = proto;
        row.n = n;
        row.coefficients = poly_coefficients(seq[n]);
        row.latex_lhs = name + "_{" + std::to_string(n) + "}" + params;
        row.latex_rhs = latex_poly(seq[n]);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline int cmd_table(const CliConfig& cfg, std::ostream& out) {
    RowSink sink(parse_format(cfg.format), out);
    for (const auto& row : family_rows(cfg, cfg.n_max)) sink.write(row);
    return 0;
}

inline int cmd_eval(const CliConfig& cfg, std::ostream& out) {
    if (cfg.family == "stirling2") throw precondition_error("eval: stirling2 is a number triangle; use `table`");
    const Rational a = Rational::parse(cfg.at);
    const auto rows = family_rows(cfg, cfg.n);
    out << poly_eval(Poly(rows.back().coefficients), a).to_string() << '\n';
    return 0;
}

inline BasisSpec parse_basis(const CliConfig& cfg) {
    BasisSpec spec;
    spec.s = cfg.s;
    spec.mu = Rational::parse(cfg.mu);
    if (cfg.basis == "bernoulli") spec.kind = BasisKind::bernoulli;
    else if (cfg.basis == "euler") spec.kind = BasisKind::euler;
    else if (cfg.basis == "frobenius-euler") spec.kind = BasisKind::frobenius_euler;
    else if (cfg.basis == "falling") spec.kind = BasisKind::falling;
    else if (cfg.basis == "rising") spec.kind = BasisKind::rising;
    else throw precondition_error("unknown basis '" + cfg.basis + "'");
    return spec;
}

/// Connection constants C_{n,m} of T_n^{(r,k)}(x|lambda) in a target basis.
inline int cmd_bases(const CliConfig& cfg, std::ostream& out) {
    const BasisSpec spec = parse_basis(cfg);
    const Rational lambda = Rational::parse(cfg.lambda);
    const std::size_t order = default_order(cfg.n_max);
    const auto c = connection_constants(mixed_pair(cfg.r, cfg.k, lambda, order), basis_pair(spec, order), cfg.n_max);
    const bool uses_s = spec.kind == BasisKind::bernoulli || spec.kind == BasisKind::euler ||
                        spec.kind == BasisKind::frobenius_euler;
    std::string basis_tex;
    switch (spec.kind) {
        case BasisKind::bernoulli: basis_tex = "\\mathbb{B}_{m}^{(" + std::to_string(spec.s) + ")}(x)"; break;
        case BasisKind::euler: basis_tex = "E_{m}^{(" + std::to_string(spec.s) + ")}(x)"; break;
        case BasisKind::frobenius_euler:
            basis_tex = "H_{m}^{(" + std::to_string(spec.s) + ")}(x \\mid " + latex_rational(spec.mu) + ")";
            break;
        case BasisKind::falling: basis_tex = "(x)_{m}"; break;
        case BasisKind::rising: basis_tex = "x^{[m]}"; break;
    }
    RowSink sink(parse_format(cfg.format), out);
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        Row row;
        row.family = basis_name(spec.kind);
        row.n = n;
        row.r = cfg.r;
        row.k = cfg.k;
        row.lambda = lambda;
        if (uses_s) row.s = spec.s;
        if (spec.kind == BasisKind::frobenius_euler) row.mu = spec.mu;
        row.coefficients.assign(c[n].begin(), c[n].begin() + static_cast<long>(n) + 1);
        row.latex_lhs = "T_{" + std::to_string(n) + "}^{(" + std::to_string(cfg.r) + "," + std::to_string(cfg.k) +
                        ")}(x \\mid " + latex_rational(lambda) + ")";
        for (std::size_t m = 0; m <= n; ++m) {
            row.latex_rhs += (m ? ", " : "") + latex_rational(c[n][m]);
        }
        row.latex_rhs = "\\left[" + row.latex_rhs + "\\right] \\cdot " + basis_tex;
        sink.write(row);
    }
    return 0;
}

inline SweepGrid grid_from(const CliConfig& cfg) {
    SweepGrid grid = SweepGrid::default_grid();
    if (cfg.grid_n_min) grid.n_min = *cfg.grid_n_min;
    if (cfg.grid_n_max) grid.n_max = *cfg.grid_n_max;
    if (!cfg.grid_r.empty()) grid.r_set = cfg.grid_r;
    if (!cfg.grid_k.empty()) grid.k_set = cfg.grid_k;
    if (!cfg.grid_s.empty()) grid.s_set = cfg.grid_s;
    if (!cfg.grid_lambda.empty()) {
        grid.lambda_set.clear();
        for (const auto& l : cfg.grid_lambda) grid.lambda_set.push_back(Rational::parse(l));
    }
    if (!cfg.grid_mu.empty()) {
        grid.mu_set.clear();
        for (const auto& m : cfg.grid_mu) grid.mu_set.push_back(Rational::parse(m));
    }
    grid.validate();
    return grid;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    const SweepGrid grid = grid_from(cfg);
    const VerifyOptions opts{cfg.collect_all, cfg.jobs};
    const bool explicit_n_min = cfg.grid_n_min.has_value();

    // thm4 needs n >= 2 and thm5 n >= 1. An explicit --n-min below the bound is
    // an error; otherwise the range is clipped to the identity's domain.
    auto restricted = [&](std::size_t bound, const std::string& id) {
        if (explicit_n_min && grid.n_min < bound && cfg.identity == id)
            throw precondition_error(id + " requires n >= " + std::to_string(bound) + " (got --n-min " +
                                     std::to_string(grid.n_min) + ")");
        SweepGrid g = grid;
        g.n_min = std::max(g.n_min, bound);
        return g;
    };

    using Verifier = std::function<VerificationReport()>;
    std::vector<std::pair<std::string, Verifier>> plan{
        {"thm1-2", [&] { return verify_closed_forms(grid, opts); }},
        {"thm3", [&] { return verify_recurrence_thm3(grid, opts); }},
        {"thm4", [&] { return verify_recurrence_thm4(restricted(2, "thm4"), opts); }},
        {"thm5", [&] { return verify_derivative_thm5(restricted(1, "thm5"), opts); }},
        {"thm6", [&] { return verify_dual_thm6(grid, opts); }},
        {"bases", [&] { return verify_basis_expansions(grid, opts); }},
        {"foundations", [&] { return verify_foundations(grid, opts); }},
    };

    bool all_pass = true;
    bool matched = false;
    for (const auto& [id, run] : plan) {
        if (cfg.identity != "all" && cfg.identity != id) continue;
        matched = true;
        const VerificationReport report = run();
        all_pass = all_pass && report.passed();
        out << report_json(report, cfg.collect_all).dump() << '\n' << std::flush;
    }
    if (!matched) throw precondition_error("unknown identity id '" + cfg.identity + "'");
    return all_pass ? 0 : 1;
}

// ---- argument parsing -------------------------------------------------------------

inline CLI::Validator rational_validator(const std::string& name, bool reject_one) {
    return CLI::Validator(
        [name, reject_one](std::string& value) -> std::string {
            try {
                Rational q = Rational::parse(value);
                if (reject_one && q == Rational(1)) return name + " must differ from 1 (got " + value + ")";
            } catch (const std::exception& e) {
                return name + ": " + e.what();
            }
            return {};
        },
        "RATIONAL", "rational");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact umbral-calculus tables and identity verification for Frobenius-Euler and "
                 "poly-Bernoulli mixed-type polynomials",
                 "umbral"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_output = [&](CLI::App* sub, bool with_format) {
        if (with_format)
            sub->add_option("--format", cfg.format, "Output format")
                ->check(CLI::IsMember({"json", "csv", "latex"}))
                ->capture_default_str();
        sub->add_option("--output,-o", cfg.output, "Write to this file instead of standard output");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "Frobenius-Euler order r (integer)")->capture_default_str();
        sub->add_option("--k", cfg.k, "Polylogarithm index k (integer)")->capture_default_str();
        sub->add_option("--s", cfg.s, "Order s >= 0 of the Bernoulli/Euler/target family")->capture_default_str();
        sub->add_option("--lambda", cfg.lambda, "lambda as p/q, must differ from 1")
            ->check(rational_validator("lambda", true))
            ->capture_default_str();
        sub->add_option("--mu", cfg.mu, "mu as p/q, must differ from 1")
            ->check(rational_validator("mu", true))
            ->capture_default_str();
    };

    auto* table = app.add_subcommand("table", "Emit polynomial rows n = 0..n-max for a family");
    table->add_option("--family", cfg.family, "Family")->required()->check(CLI::IsMember(family_names()));
    table->add_option("--n-max", cfg.n_max, "Largest degree")->capture_default_str();
    add_params(table);
    add_output(table, true);

    auto* eval = app.add_subcommand("eval", "Evaluate one family polynomial at a rational point");
    eval->add_option("--family", cfg.family, "Family")->required()->check(CLI::IsMember(family_names()));
    eval->add_option("--n", cfg.n, "Degree")->required();
    eval->add_option("--at,-a", cfg.at, "Evaluation point as p/q")->required()->check(rational_validator("at", false));
    add_params(eval);
    add_output(eval, false);

    auto* verify = app.add_subcommand("verify", "Run identity verifiers over a parameter grid (JSON lines)");
    verify->add_option("identity", cfg.identity, "Identity id")->required()->check(CLI::IsMember(identity_names()));
    verify->add_option("--n-min", cfg.grid_n_min, "Smallest n in the sweep");
    verify->add_option("--n-max", cfg.grid_n_max, "Largest n in the sweep");
    verify->add_option("--r", cfg.grid_r, "r values (comma separated)")->delimiter(',');
    verify->add_option("--k", cfg.grid_k, "k values (comma separated)")->delimiter(',');
    verify->add_option("--s", cfg.grid_s, "s values (comma separated)")->delimiter(',');
    verify->add_option("--lambda", cfg.grid_lambda, "lambda values (comma separated p/q)")
        ->delimiter(',')
        ->check(rational_validator("lambda", true));
    verify->add_option("--mu", cfg.grid_mu, "mu values (comma separated p/q)")
        ->delimiter(',')
        ->check(rational_validator("mu", true));
    verify->add_flag("--collect-all", cfg.collect_all, "Keep scanning after the first counterexample");
    verify->add_option("--jobs,-j", cfg.jobs, "Worker threads for the grid sweep")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    add_output(verify, false);

    auto* bases = app.add_subcommand("bases", "Connection constants of T_n^{(r,k)}(x|lambda) in a target basis");
    bases->add_option("--basis", cfg.basis, "Target basis")
        ->check(CLI::IsMember({"bernoulli", "euler", "frobenius-euler", "falling", "rising"}))
        ->capture_default_str();
    bases->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
    add_params(bases);
    add_output(bases, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file = std::make_unique<std::ofstream>(cfg.output, std::ios::binary);
        if (!*file) {
            err << "error: cannot open output file '" << cfg.output << "'\n";
            return 2;
        }
        sink = file.get();
    }

    try {
        if (*table) return cmd_table(cfg, *sink);
        if (*eval) return cmd_eval(cfg, *sink);
        if (*verify) return cmd_verify(cfg, *sink);
        if (*bases) return cmd_bases(cfg, *sink);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace umbral::cli

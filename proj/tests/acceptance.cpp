// Acceptance gate: one PASS/FAIL line per criterion, each with a wall-clock
// budget. Usage: acceptance <path-to-umbral-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "umbral/families.hpp"
#include "umbral/identities.hpp"
#include "umbral/sheffer.hpp"

using umbral::Poly;
using umbral::Rational;
using umbral::Series;
using umbral::ShefferPair;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void report(const umbral::VerificationReport& r) {
        if (!r.passed()) {
            const auto& c = r.failures.front();
            std::string at;
            for (const auto& [k, v] : c.coordinates) at += " " + k + "=" + v;
            require(false, r.id + "/" + c.check + at);
        } else {
            checks += r.checks;
        }
    }
    std::size_t checks = 0;
};

Series exp_minus_one(std::size_t order) {
    return umbral::make_exp(Rational(1), order) - Series::constant(Rational(1), order);
}

Outcome foundations() {
    Outcome out;
    const std::size_t N = 10;
    std::vector<std::pair<std::string, Series>> functionals;
    for (std::size_t k = 0; k <= N; ++k) functionals.emplace_back("t^" + std::to_string(k), Series::monomial(k, N));
    for (const Rational& y : {Rational(1), Rational(-2), Rational(3, 4)})
        functionals.emplace_back("exp(" + y.to_string() + "t)", umbral::make_exp(y, N));
    functionals.emplace_back("bernoulli-kernel", umbral::bernoulli_kernel(1, N));

    oracle::Generator gen(2024);
    std::vector<Poly> polys;
    for (std::size_t d = 0; d <= N; ++d) polys.push_back(gen.poly(d));

    for (const auto& [name, f] : functionals) {
        // t^k acts as a coefficient extractor on x^n
        for (std::size_t n = 0; n <= N; ++n)
            out.require(umbral::pairing(f, Poly::monomial(n)) == umbral::factorial(n) * f[n], name + " on x^n");
        // f(t) = sum_k <f | x^k> t^k / k!
        std::vector<Rational> rebuilt;
        for (std::size_t k = 0; k <= N; ++k)
            rebuilt.push_back(umbral::pairing(f, Poly::monomial(k)) / umbral::factorial(k));
        out.require(Series(rebuilt, N) == f, name + " expansion");
        for (const auto& p : polys) {
            // <f | p> through the power-series expansion of p at 0
            Rational taylor(0);
            for (std::size_t k = 0; k <= N; ++k)
                taylor += f[k] * umbral::poly_eval(umbral::poly_derivative(p, k), Rational(0));
            out.require(umbral::pairing(f, p) == taylor, name + " vs derivatives at 0");
            for (const auto& [name2, g] : functionals) {
                out.require(umbral::pairing(f * g, p) == umbral::pairing(f, umbral::apply_operator(g, p)),
                            name + "*" + name2 + " product");
            }
        }
    }
    for (const auto& p : polys)
        for (const Rational& y : {Rational(1), Rational(-2), Rational(3, 4)})
            out.require(umbral::pairing(umbral::make_exp(y, N), p) == umbral::poly_eval(p, y), "exp evaluation");
    for (std::size_t k = 0; k <= N; ++k)
        for (std::size_t n = 0; n <= N; ++n)
            out.require(umbral::pairing(Series::monomial(k, N), Poly::monomial(n)) ==
                            (n == k ? umbral::factorial(n) : Rational(0)),
                        "t^k biorthogonal to x^n");

    out.report(umbral::verify_foundations(umbral::SweepGrid::default_grid()));
    return out;
}

Outcome sheffer() {
    Outcome out;
    const std::size_t N = 10;
    ShefferPair falling(Series::constant(Rational(1), N + 1), exp_minus_one(N + 1));
    ShefferPair rising(Series::constant(Rational(1), N + 1), umbral::one_minus_exp_neg(N + 1));
    auto f = umbral::sheffer_polynomials(falling, N);
    auto r = umbral::sheffer_polynomials(rising, N);
    for (std::size_t n = 0; n <= N; ++n) {
        out.require(f[n] == umbral::falling_factorial(n), "falling factorial n=" + std::to_string(n));
        out.require(r[n] == umbral::rising_factorial(n), "rising factorial n=" + std::to_string(n));
    }
    const std::size_t M = 8;
    std::vector<ShefferPair> pairs{
        ShefferPair(Series::constant(Rational(1), M + 1), exp_minus_one(M + 1)),
        ShefferPair(Series::constant(Rational(1), M + 1), umbral::one_minus_exp_neg(M + 1)),
        umbral::mixed_pair(2, -3, Rational(-3, 5), M + 1),
        ShefferPair(umbral::frobenius_euler_kernel(-2, Rational(7), M + 1), exp_minus_one(M + 1)),
    };
    for (const auto& p : pairs) out.report(umbral::sheffer_orthogonality_check(p, umbral::sheffer_polynomials(p, M), M));
    return out;
}

Outcome closed_forms() {
    Outcome out;
    out.report(umbral::verify_closed_forms(umbral::SweepGrid::default_grid()));
    return out;
}

Outcome recurrences() {
    Outcome out;
    auto grid = umbral::SweepGrid::default_grid();
    out.report(umbral::verify_recurrence_thm3(grid));
    grid.n_min = 2;
    out.report(umbral::verify_recurrence_thm4(grid));
    grid.n_min = 1;
    out.report(umbral::verify_derivative_thm5(grid));
    return out;
}

Outcome dual() {
    Outcome out;
    out.report(umbral::verify_dual_thm6(umbral::SweepGrid::default_grid()));
    return out;
}

Outcome bases() {
    Outcome out;
    out.report(umbral::verify_basis_expansions(umbral::SweepGrid::default_grid()));
    return out;
}

Outcome degenerations() {
    Outcome out;
    const std::size_t N = 10;
    const auto grid = umbral::SweepGrid::default_grid();
    for (long k : grid.k_set)
        for (const auto& lambda : grid.lambda_set)
            out.require(umbral::mixed_T_sequence(N, 0, k, lambda) == umbral::poly_bernoulli_sequence(N, k),
                        "r = 0 gives poly-Bernoulli");
    auto b1 = umbral::poly_bernoulli_sequence(N, 1);
    for (std::size_t n = 0; n <= N; ++n)
        out.require(b1[n] == umbral::poly_shift(oracle::bernoulli_polynomial(n), Rational(1)), "k = 1 gives B_n(x+1)");
    for (std::size_t s : grid.s_set)
        out.require(umbral::frobenius_euler_sequence(N, static_cast<long>(s), Rational(-1)) ==
                        umbral::euler_sequence(N, static_cast<long>(s)),
                    "lambda = -1 gives Euler");
    out.require(umbral::polylog_delta(1, N) == Series::monomial(1, N), "Li_1(1-e^{-t}) = t");
    return out;
}

Outcome stirling() {
    Outcome out;
    const std::size_t N = 10;
    umbral::StirlingTable table(N);
    for (std::size_t m = 0; m <= N; ++m) {
        // (e^t - 1)^m / m! = sum_n S(n,m) t^n / n!
        Series gf = umbral::series_pow(exp_minus_one(N), static_cast<long>(m));
        for (std::size_t n = 0; n <= N; ++n) {
            const Rational from_gf = gf[n] * umbral::factorial(n) / umbral::factorial(m);
            const Rational enumerated(oracle::set_partitions(static_cast<int>(n), static_cast<int>(m)));
            out.require(table(n, m) == from_gf, "recurrence vs generating function");
            out.require(table(n, m) == enumerated, "recurrence vs set partitions");
        }
    }
    return out;
}

struct Captured {
    int status = -1;
    std::string output;
};

Captured capture(const std::string& command) {
    Captured c;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) return c;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.output.append(buf.data(), got);
    c.status = ::pclose(pipe);
    return c;
}

std::function<Outcome()> cli(const std::string& binary) {
    return [binary] {
        Outcome out;
        const std::string quoted = "'" + binary + "'";
        auto all = capture(quoted + " verify all 2>&1");
        out.require(all.status == 0, "verify all exit status");
        std::istringstream lines(all.output);
        std::size_t reports = 0;
        for (std::string line; std::getline(lines, line); ++reports) {
            auto j = nlohmann::json::parse(line, nullptr, false);
            out.require(!j.is_discarded() && j.value("status", "") == "pass", "verify all report: " + line);
        }
        out.require(reports == 7, "verify all report count");

        const std::vector<std::string> commands{
            " table --family mixed-T --n-max 12 --r 3 --k -3 --lambda -3/5",
            " table --family frobenius-euler --n-max 10 --r -2 --lambda 7 --format csv",
            " table --family poly-bernoulli --n-max 10 --k 2 --format latex",
            " table --family stirling2 --n-max 10",
            " eval --family mixed-T --n 9 --r 2 --k -1 --lambda 1/2 --at -7/3",
            " eval --family bernoulli --n 8 --s 3 --at 5/2",
        };
        for (const auto& cmd : commands) {
            auto a = capture(quoted + cmd);
            auto b = capture(quoted + cmd);
            out.require(a.status == 0 && b.status == 0, "exit status of" + cmd);
            out.require(!a.output.empty() && a.output == b.output, "byte determinism of" + cmd);
        }
        return out;
    };
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <umbral-cli-binary>\n";
        return 2;
    }
    struct Criterion {
        std::string name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1 foundations", 5, foundations},
        {"AC2 sheffer machinery", 5, sheffer},
        {"AC3 closed forms", 60, closed_forms},
        {"AC4 recurrences", 60, recurrences},
        {"AC5 dual identity", 30, dual},
        {"AC6 basis expansions", 120, bases},
        {"AC7 degenerations", 5, degenerations},
        {"AC8 stirling layer", 5, stirling},
        {"AC9 cli", 600, cli(argv[1])},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s %-24s %8.2fs (budget %.0fs)", pass ? "PASS" : "FAIL", c.name.c_str(), secs, c.budget_s);
        if (o.checks > 0) std::printf(" checks=%zu", o.checks);
        if (!o.ok) std::printf(" first failure: %s", o.detail.c_str());
        else if (!in_time) std::printf(" over budget");
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

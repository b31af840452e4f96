#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"

// Umbral calculus over the rationals: series act on polynomials both as
// linear functionals <f(t) | p(x)> and as operators f(t) p(x), with
// <t^k | x^n> = n! delta_{n,k}.

namespace umbral {

/// <f(t) | p(x)> = sum_k f_k k! [x^k]p.
inline Rational pairing(const Series& f, const Poly& p) {
    if (p.degree() > static_cast<int>(f.order()))
        throw precondition_error("pairing: series truncation order " + std::to_string(f.order()) +
                                 " is below polynomial degree " + std::to_string(p.degree()));
    Rational acc(0);
    Rational kfact(1);
    auto pc = p.coeffs();
    for (std::size_t k = 0; k < pc.size(); ++k) {
        if (k > 0) kfact *= Rational(static_cast<long>(k));
        if (!pc[k].is_zero()) acc += f[k] * kfact * pc[k];
    }
    return acc;
}

/// f(t) p(x) = sum_k f_k p^{(k)}(x), i.e. t^k acts as d^k/dx^k.
inline Poly apply_operator(const Series& f, const Poly& p) {
    if (p.degree() > static_cast<int>(f.order()))
        throw precondition_error("apply_operator: series truncation order " + std::to_string(f.order()) +
                                 " is below polynomial degree " + std::to_string(p.degree()));
    const int d = p.degree();
    if (d < 0) return {};
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
    auto pc = p.coeffs();
    // coefficient of x^j in p^{(k)} is pc[j+k] (j+k)!/j!
    for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k) {
        if (f[k].is_zero()) continue;
        for (std::size_t j = 0; j + k <= static_cast<std::size_t>(d); ++j) {
            if (pc[j + k].is_zero()) continue;
            Rational fall(1);
            for (std::size_t i = j + 1; i <= j + k; ++i) fall *= Rational(static_cast<long>(i));
            out[j] += f[k] * pc[j + k] * fall;
        }
    }
    return Poly(std::move(out));
}

/// (g(t), f(t)) with g invertible and f a delta series.
class ShefferPair {
public:
    ShefferPair(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
        if (!g_.is_invertible()) throw precondition_error("ShefferPair: g(t) must have order 0");
        if (!f_.is_delta()) throw precondition_error("ShefferPair: f(t) must be a delta series (order 1)");
    }

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    std::size_t order() const { return std::min(g_.order(), f_.order()); }

    /// f(t) == t up to the truncation order.
    bool is_appell() const { return f_ == Series::monomial(1, f_.order()); }

private:
    Series g_;
    Series f_;
};

/// Sheffer pair for the Appell sequence with kernel g and f = t.
inline ShefferPair appell_pair(Series g) {
    auto n = g.order();
    return ShefferPair(std::move(g), Series::monomial(1, n));
}

/// S_0..S_{n_max} with generating function e^{x fbar(t)} / g(fbar(t)).
inline std::vector<Poly> sheffer_polynomials(const ShefferPair& pair, std::size_t n_max) {
    if (pair.order() < n_max + 1)
        throw precondition_error("sheffer_polynomials: pair truncation order must be at least n_max + 1");
    const std::size_t n = pair.order();
    const Series fbar = series_comp_inverse(pair.f().truncated(n));
    const Series kernel = series_invert(series_compose(pair.g().truncated(n), fbar));
    const PolySeries exp_part = series_compose(make_exp_x(n), lift(fbar));
    const PolySeries gen = series_mul(lift(kernel), exp_part);
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    Rational nfact(1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (k > 0) nfact *= Rational(static_cast<long>(k));
        out.push_back(gen[k] * nfact);
    }
    return out;
}

/// Outcome of an exact identity check across parameter tuples.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> coordinates;
    std::string check;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string id;
    std::string grid;  // canonical JSON rendering of the swept grid
    std::vector<Counterexample> failures;  // first entry is the reported counterexample
    std::size_t checks = 0;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Checks <g(t) f(t)^k | S_n(x)> = n! delta_{n,k} for 0 <= k, n <= n_max.
inline VerificationReport sheffer_orthogonality_check(const ShefferPair& pair, const std::vector<Poly>& seq,
                                                      std::size_t n_max) {
    if (seq.size() < n_max + 1) throw precondition_error("sheffer_orthogonality_check: sequence too short");
    if (pair.order() < n_max) throw precondition_error("sheffer_orthogonality_check: truncation below n_max");
    VerificationReport report;
    report.id = "sheffer-orthogonality";
    report.grid = "{\"n_max\":" + std::to_string(n_max) + "}";
    auto gfk = pair.g();
    for (std::size_t k = 0; k <= n_max; ++k) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            ++report.checks;
            Rational lhs = pairing(gfk, seq[n]);
            Rational rhs = n == k ? factorial(n) : Rational(0);
            if (lhs != rhs) {
                report.failures.push_back({{{"k", std::to_string(k)}, {"n", std::to_string(n)}},
                                           "biorthogonality",
                                           lhs.to_string(),
                                           rhs.to_string()});
                return report;
            }
        }
        gfk = series_mul(gfk, pair.f());
    }
    return report;
}

/// S_{n+1} = (x - g'(t)/g(t)) S_n for an Appell pair (g, t).
inline Poly appell_recurrence_next(const ShefferPair& pair, const Poly& s_n) {
    if (!pair.is_appell()) throw precondition_error("appell_recurrence_next: requires f(t) = t");
    const Series log_der = series_mul(series_derivative(pair.g()), series_invert(pair.g()));
    return Poly::x() * s_n - apply_operator(log_der, s_n);
}

/// Lower-triangular matrix C (rows 0..n) with S_j = sum_m C[j][m] r_m, where
/// S ~ source = (g, f) and r ~ target = (h, l):
///   C_{j,m} = <h(fbar) / g(fbar) * l(fbar)^m | x^j> / m!.
inline std::vector<std::vector<Rational>> connection_constants(const ShefferPair& source, const ShefferPair& target,
                                                               std::size_t n) {
    const std::size_t order = std::min(source.order(), target.order());
    if (order < n) throw precondition_error("connection_constants: truncation order below n");
    const Series fbar = series_comp_inverse(source.f().truncated(order));
    const Series h_f = series_compose(target.g().truncated(order), fbar);
    const Series g_f = series_compose(source.g().truncated(order), fbar);
    const Series l_f = series_compose(target.f().truncated(order), fbar);
    Series term = series_mul(h_f, series_invert(g_f));

    std::vector<std::vector<Rational>> c(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    Rational mfact(1);
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) mfact *= Rational(static_cast<long>(m));
        Rational jfact = factorial(m);
        for (std::size_t j = m; j <= n; ++j) {
            if (j > m) jfact *= Rational(static_cast<long>(j));
            // <term | x^j> = j! [t^j] term
            c[j][m] = term[j] * jfact / mfact;
        }
        term = series_mul(term, l_f);
    }
    return c;
}

/// Coefficients c_m with p = sum_m c_m basis[m], solved from the top degree
/// down. basis[m] must have degree exactly m.
inline std::vector<Rational> triangular_solve(const std::vector<Poly>& basis, const Poly& p) {
    const int d = p.degree();
    if (d < 0) return {};
    if (basis.size() < static_cast<std::size_t>(d) + 1)
        throw precondition_error("triangular_solve: basis shorter than degree + 1");
    for (int m = 0; m <= d; ++m)
        if (basis[m].degree() != m) throw precondition_error("triangular_solve: basis element of wrong degree");
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    Poly rest = p;
    for (int m = d; m >= 0; --m) {
        Rational coef = rest.coeff(static_cast<std::size_t>(m)) / basis[m].leading();
        c[m] = coef;
        if (!coef.is_zero()) rest -= basis[m] * coef;
    }
    if (!rest.is_zero()) throw std::logic_error("triangular_solve: residual after elimination");
    return c;
}

}  // namespace umbral

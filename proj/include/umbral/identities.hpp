#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "families.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "sheffer.hpp"

// Exact verifiers for the identities satisfied by the mixed-type polynomials
// T_n^{(r,k)}(x | lambda). Each verifier evaluates both sides along separate
// computation paths (generating-function expansion, closed-form finite sums,
// triangular solves) and compares them with exact equality.

namespace umbral {

struct SweepGrid {
    std::size_t n_min = 0;
    std::size_t n_max = 12;
    std::vector<long> r_set{-2, -1, 0, 1, 2, 3};
    std::vector<long> k_set{-3, -2, -1, 0, 1, 2, 3};
    std::vector<std::size_t> s_set{0, 1, 2, 3, 4};
    std::vector<Rational> lambda_set{Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 5), Rational(7)};
    std::vector<Rational> mu_set{Rational(-1), Rational(3), Rational(2, 3)};

    static SweepGrid default_grid() { return {}; }

    void validate() const {
        if (r_set.empty() || k_set.empty() || s_set.empty() || lambda_set.empty() || mu_set.empty())
            throw precondition_error("SweepGrid: every parameter set must be nonempty");
        for (const auto& l : lambda_set) require_lambda(l, "lambda");
        for (const auto& m : mu_set) require_lambda(m, "mu");
    }

    /// Canonical JSON text, used verbatim inside reports.
    std::string to_json() const {
        std::ostringstream os;
        auto list = [&os](const auto& v, bool quote) {
            os << '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << (i ? "," : "");
                if (quote) os << '"' << v[i] << '"';
                else os << v[i];
            }
            os << ']';
        };
        os << "{\"n_min\":" << n_min << ",\"n_max\":" << n_max << ",\"r\":";
        list(r_set, false);
        os << ",\"k\":";
        list(k_set, false);
        os << ",\"s\":";
        list(s_set, false);
        os << ",\"lambda\":";
        list(lambda_set, true);
        os << ",\"mu\":";
        list(mu_set, true);
        os << '}';
        return os.str();
    }
};

struct VerifyOptions {
    bool collect_all = false;
    unsigned jobs = 1;
};

namespace detail {

template <class T>
std::string render(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

using Coordinates = std::vector<std::pair<std::string, std::string>>;

// Collects failures for one (r, k, lambda) block in traversal order.
class BlockChecker {
public:
    BlockChecker(bool collect_all, Coordinates base) : collect_all_(collect_all), base_(std::move(base)) {}

    /// False once the block should stop scanning.
    template <class T>
    bool expect(const std::string& check, const Coordinates& extra, const T& lhs, const T& rhs) {
        ++checks_;
        if (lhs == rhs) return true;
        Counterexample c;
        c.coordinates = base_;
        c.coordinates.insert(c.coordinates.end(), extra.begin(), extra.end());
        c.check = check;
        c.lhs = render(lhs);
        c.rhs = render(rhs);
        failures_.push_back(std::move(c));
        return collect_all_;
    }

    bool stopped() const { return !collect_all_ && !failures_.empty(); }

    std::size_t checks() const { return checks_; }
    std::vector<Counterexample>& failures() { return failures_; }

private:
    bool collect_all_;
    Coordinates base_;
    std::size_t checks_ = 0;
    std::vector<Counterexample> failures_;
};

struct Block {
    long r;
    long k;
    Rational lambda;
};

struct BlockResult {
    std::vector<Counterexample> failures;
    std::size_t checks = 0;
};

inline Coordinates block_coordinates(const Block& b) {
    return {{"r", std::to_string(b.r)}, {"k", std::to_string(b.k)}, {"lambda", b.lambda.to_string()}};
}

inline Coordinates at_n(std::size_t n) { return {{"n", std::to_string(n)}}; }

// Sweeps grid blocks in r, k, lambda order; the report is independent of jobs.
inline VerificationReport run_blocks(const std::string& id, const SweepGrid& grid, const VerifyOptions& opts,
                                     const std::function<void(const Block&, BlockChecker&)>& body) {
    grid.validate();
    auto start = std::chrono::steady_clock::now();
    std::vector<Block> blocks;
    for (long r : grid.r_set)
        for (long k : grid.k_set)
            for (const auto& l : grid.lambda_set) blocks.push_back({r, k, l});

    auto results = ordered_parallel_map<BlockResult>(
        blocks.size(), opts.jobs,
        [&](std::size_t i) {
            BlockChecker checker(opts.collect_all, block_coordinates(blocks[i]));
            body(blocks[i], checker);
            return BlockResult{std::move(checker.failures()), checker.checks()};
        },
        [&](const BlockResult& r) { return !opts.collect_all && !r.failures.empty(); });

    VerificationReport report;
    report.id = id;
    report.grid = grid.to_json();
    for (auto& r : results) {
        report.checks += r.checks;
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
        if (!opts.collect_all && !report.failures.empty()) break;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline Poly x_minus(const Rational& c) { return Poly{-c, Rational(1)}; }

inline Rational inv_power(long base, long k) { return pow(Rational(base), -k); }

// rλ/(1-λ)
inline Rational shift_weight(long r, const Rational& lambda) {
    return Rational(r) * lambda / (Rational(1) - lambda);
}

}  // namespace detail

/// The alternating-sum and Stirling-sum closed forms of T_n against the series expansion.
inline VerificationReport verify_closed_forms(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    return detail::run_blocks("thm1-2", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const auto T = mixed_T_sequence(N, b.r, b.k, b.lambda);
        const auto H = values_at(frobenius_euler_sequence(N, b.r, b.lambda), Rational(0));
        const StirlingTable S2(N);
        for (std::size_t n = grid.n_min; n <= N; ++n) {
            // sum_m (m+1)^{-k} sum_j (-1)^j C(m,j) sum_l C(n,l) H_{n-l} (x-j)^l
            std::vector<Poly> inner(n + 1);
            for (std::size_t j = 0; j <= n; ++j) {
                Poly power(1);
                const Poly base = detail::x_minus(Rational(static_cast<long>(j)));
                for (std::size_t l = 0; l <= n; ++l) {
                    inner[j] += power * (binomial(n, l) * H[n - l]);
                    power *= base;
                }
            }
            Poly alternating;
            for (std::size_t m = 0; m <= n; ++m) {
                const Rational w = detail::inv_power(static_cast<long>(m) + 1, b.k);
                for (std::size_t j = 0; j <= m; ++j)
                    alternating += inner[j] * (w * sign_power(static_cast<long>(j)) * binomial(m, j));
            }
            if (!chk.expect("alternating-sum", detail::at_n(n), alternating, T[n])) return;

            std::vector<Rational> coef(n + 1, Rational(0));
            for (std::size_t l = 0; l <= n; ++l) {
                Rational acc(0);
                for (std::size_t j = l; j <= n; ++j)
                    for (std::size_t m = 0; m <= n - j; ++m) {
                        acc += sign_power(static_cast<long>(n - m - j)) * binomial(n, j) * binomial(j, l) *
                               factorial(m) * detail::inv_power(static_cast<long>(m) + 1, b.k) * H[j - l] *
                               S2(n - j, m);
                    }
                coef[l] = acc;
            }
            if (!chk.expect("stirling-sum", detail::at_n(n), Poly(coef), T[n])) return;
        }
    });
}

/// Recurrence for T_{n+1} in terms of T_n, T_n^{(r+1,k)} and T^{(r,k-1)}.
inline VerificationReport verify_recurrence_thm3(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    return detail::run_blocks("thm3", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const auto T = mixed_T_sequence(N + 1, b.r, b.k, b.lambda);
        const auto T_r1 = mixed_T_sequence(N, b.r + 1, b.k, b.lambda);
        const auto T_k1 = mixed_T_sequence(N + 1, b.r, b.k - 1, b.lambda);
        const auto B = bernoulli_numbers(N + 1);
        const Rational w = detail::shift_weight(b.r, b.lambda);
        for (std::size_t n = grid.n_min; n <= N; ++n) {
            Poly sum;
            for (std::size_t l = 0; l <= n + 1; ++l)
                sum += (T[n + 1 - l] - T_k1[n + 1 - l]) * (binomial(n + 1, l) * B[l]);
            Poly rhs = detail::x_minus(Rational(b.r)) * T[n] - T_r1[n] * w -
                       sum * (Rational(1) / Rational(static_cast<long>(n) + 1));
            if (!chk.expect("recurrence", detail::at_n(n), T[n + 1], rhs)) return;
        }
    });
}

/// Bernoulli-weighted recurrence linking T^{(r,k)}, T^{(r+1,k)} and T^{(r,k-1)};
/// defined for n >= 2 only.
inline VerificationReport verify_recurrence_thm4(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    if (grid.n_min < 2) throw precondition_error("thm4 requires n >= 2 (grid n_min is " + std::to_string(grid.n_min) + ")");
    return detail::run_blocks("thm4", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const auto T = mixed_T_sequence(N, b.r, b.k, b.lambda);
        const auto T_r1 = mixed_T_sequence(N, b.r + 1, b.k, b.lambda);
        const auto T_k1 = mixed_T_sequence(N, b.r, b.k - 1, b.lambda);
        const auto B = bernoulli_numbers(N);
        const Rational w = detail::shift_weight(b.r, b.lambda);
        for (std::size_t n = grid.n_min; n <= N; ++n) {
            const Rational nn(static_cast<long>(n));
            // n (r - 1/2 - x) as a polynomial
            const Poly factor = Poly{Rational(b.r) - Rational(1, 2), Rational(-1)} * nn;
            Poly lhs = T[n] * (nn + Rational(1)) + factor * T[n - 1];
            for (std::size_t l = 0; l + 2 <= n; ++l) lhs += T[l] * (binomial(n, l) * B[n - l]);
            Poly rhs = -(T_r1[n - 1] * (w * nn));
            for (std::size_t l = 0; l <= n; ++l) rhs += T_k1[l] * (binomial(n, l) * B[n - l]);
            if (!chk.expect("bernoulli-recurrence", detail::at_n(n), lhs, rhs)) return;
        }
    });
}

/// T_n through T_{n-1}, T_{n-1}^{(r+1,k)} and shifted H_l; defined for n >= 1.
inline VerificationReport verify_derivative_thm5(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    if (grid.n_min < 1) throw precondition_error("thm5 requires n >= 1 (grid n_min is " + std::to_string(grid.n_min) + ")");
    return detail::run_blocks("thm5", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const auto T = mixed_T_sequence(N, b.r, b.k, b.lambda);
        const auto T_r1 = mixed_T_sequence(N, b.r + 1, b.k, b.lambda);
        const auto H = frobenius_euler_sequence(N, b.r, b.lambda);
        std::vector<Poly> H_shifted;
        for (const auto& h : H) H_shifted.push_back(poly_shift(h, Rational(-1)));
        const StirlingTable S2(N);
        const Rational w = detail::shift_weight(b.r, b.lambda);
        for (std::size_t n = std::max<std::size_t>(grid.n_min, 1); n <= N; ++n) {
            Poly rhs = detail::x_minus(Rational(b.r)) * T[n - 1] - T_r1[n - 1] * w;
            for (std::size_t l = 0; l <= n - 1; ++l) {
                Rational inner(0);
                for (std::size_t m = 0; m <= n - 1 - l; ++m)
                    inner += sign_power(static_cast<long>(m)) * factorial(m + 1) *
                             detail::inv_power(static_cast<long>(m) + 2, b.k) * S2(n - 1 - l, m);
                rhs += H_shifted[l] * (sign_power(static_cast<long>(n - 1 - l)) * binomial(n - 1, l) * inner);
            }
            if (!chk.expect("derivative-form", detail::at_n(n), T[n], rhs)) return;
        }
    });
}

/// The dual relation between T_n(0), H_n and B_n^{(k-1)}, with the left side
/// also recomputed as the pairing
/// <((1-lambda)/(e^t-lambda))^r Li_k(1-e^{-t}) | x^{n+1}>.
inline VerificationReport verify_dual_thm6(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    return detail::run_blocks("thm6", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const auto T = values_at(mixed_T_sequence(N, b.r, b.k, b.lambda), Rational(0));
        const auto Bk1 = values_at(poly_bernoulli_sequence(N, b.k - 1), Rational(0));
        const auto H = values_at(frobenius_euler_sequence(N, b.r, b.lambda), Rational(0));
        const std::size_t order = default_order(N + 1);
        const Series functional =
            series_mul(frobenius_euler_kernel(b.r, b.lambda, order), polylog_delta(b.k, order));
        for (std::size_t n = grid.n_min; n <= N; ++n) {
            Rational lhs(0);
            for (std::size_t m = 0; m <= n; ++m)
                lhs += binomial(n + 1, m) * sign_power(static_cast<long>(n - m)) * T[m];
            Rational rhs(0);
            for (std::size_t l = 0; l <= n; ++l)
                for (std::size_t m = 0; m <= l; ++m)
                    rhs += sign_power(static_cast<long>(l - m)) * binomial(l, m) * binomial(n + 1, l + 1) * Bk1[m] *
                           H[n - l];
            if (!chk.expect("dual-numbers", detail::at_n(n), lhs, rhs)) return;
            const Rational direct = pairing(functional, Poly::monomial(n + 1));
            if (!chk.expect("dual-pairing", detail::at_n(n), lhs, direct)) return;
        }
    });
}

enum class BasisKind { bernoulli, euler, frobenius_euler, falling, rising };

inline std::string basis_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::bernoulli: return "bernoulli";
        case BasisKind::euler: return "euler";
        case BasisKind::frobenius_euler: return "frobenius-euler";
        case BasisKind::falling: return "falling";
        case BasisKind::rising: return "rising";
    }
    return "unknown";
}

struct BasisSpec {
    BasisKind kind = BasisKind::falling;
    std::size_t s = 0;
    Rational mu = Rational(-1);
};

/// Sheffer pair (h, l) of a target basis.
inline ShefferPair basis_pair(const BasisSpec& spec, std::size_t order) {
    const Series t = Series::monomial(1, order);
    const Series exp1 = make_exp(Rational(1), order + 1);
    const Series one = Series::constant(Rational(1), order + 1);
    switch (spec.kind) {
        case BasisKind::bernoulli:
            return ShefferPair(series_pow(divide_by_t(exp1 - one), static_cast<long>(spec.s)), t);
        case BasisKind::euler:
            return ShefferPair(series_pow(series_scale((exp1 + one).truncated(order), Rational(1, 2)),
                                          static_cast<long>(spec.s)),
                               t);
        case BasisKind::frobenius_euler:
            return ShefferPair(frobenius_euler_kernel(-static_cast<long>(spec.s), spec.mu, order), t);
        case BasisKind::falling:
            return ShefferPair(Series::constant(Rational(1), order), (exp1 - one).truncated(order));
        case BasisKind::rising:
            return ShefferPair(Series::constant(Rational(1), order), one_minus_exp_neg(order));
    }
    throw precondition_error("unknown basis");
}

/// Basis polynomials r_0..r_{n_max}, generated from their own generating functions.
inline std::vector<Poly> basis_polynomials(const BasisSpec& spec, std::size_t n_max) {
    switch (spec.kind) {
        case BasisKind::bernoulli: return bernoulli_sequence(n_max, static_cast<long>(spec.s));
        case BasisKind::euler: return euler_sequence(n_max, static_cast<long>(spec.s));
        case BasisKind::frobenius_euler:
            return frobenius_euler_sequence(n_max, static_cast<long>(spec.s), spec.mu);
        case BasisKind::falling: return falling_factorials(n_max);
        case BasisKind::rising: return rising_factorials(n_max);
    }
    throw precondition_error("unknown basis");
}

/// Closed-form coefficients C_{n,m} (rows n = 0..n_max) of T_n^{(r,k)}(x|lambda)
/// in the target basis, in closed form. T is the T-sequence for (r, k, lambda) up to n_max.
inline std::vector<std::vector<Rational>> basis_coefficients_closed_form(const BasisSpec& spec,
                                                                         const std::vector<Poly>& T) {
    const std::size_t N = T.size() - 1;
    const auto T0 = values_at(T, Rational(0));
    const StirlingTable S2(N + spec.s);
    std::vector<std::vector<Rational>> c(N + 1, std::vector<Rational>(N + 1, Rational(0)));

    std::vector<std::vector<Rational>> T_at;  // T_at[j][i] = T_i(j | lambda)
    if (spec.kind == BasisKind::euler || spec.kind == BasisKind::frobenius_euler)
        for (std::size_t j = 0; j <= spec.s; ++j) T_at.push_back(values_at(T, Rational(static_cast<long>(j))));

    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            Rational acc(0);
            switch (spec.kind) {
                case BasisKind::bernoulli:
                    for (std::size_t l = 0; l <= n - m; ++l)
                        acc += binomial(n - m, l) / binomial(spec.s + l, l) * S2(l + spec.s, spec.s) *
                               T0[n - m - l];
                    acc *= binomial(n, m);
                    break;
                case BasisKind::euler:
                    for (std::size_t j = 0; j <= spec.s; ++j) acc += binomial(spec.s, j) * T_at[j][n - m];
                    acc *= binomial(n, m) * pow(Rational(2), -static_cast<long>(spec.s));
                    break;
                case BasisKind::frobenius_euler:
                    for (std::size_t j = 0; j <= spec.s; ++j)
                        acc += binomial(spec.s, j) * pow(-spec.mu, static_cast<long>(spec.s - j)) * T_at[j][n - m];
                    acc *= binomial(n, m) * pow(Rational(1) - spec.mu, -static_cast<long>(spec.s));
                    break;
                case BasisKind::falling:
                case BasisKind::rising:
                    for (std::size_t l = 0; l <= n - m; ++l) {
                        Rational term = binomial(n, l + m) * S2(l + m, m) * T0[n - m - l];
                        if (spec.kind == BasisKind::rising) term *= sign_power(static_cast<long>(l));
                        acc += term;
                    }
                    break;
            }
            c[n][m] = acc;
        }
    }
    return c;
}

inline std::vector<BasisSpec> basis_specs(const SweepGrid& grid) {
    std::vector<BasisSpec> specs;
    for (auto s : grid.s_set) specs.push_back({BasisKind::bernoulli, s, Rational(-1)});
    for (auto s : grid.s_set) specs.push_back({BasisKind::euler, s, Rational(-1)});
    for (auto s : grid.s_set)
        for (const auto& mu : grid.mu_set) specs.push_back({BasisKind::frobenius_euler, s, mu});
    specs.push_back({BasisKind::falling, 0, Rational(-1)});
    specs.push_back({BasisKind::rising, 0, Rational(-1)});
    return specs;
}

/// Expansions in the Bernoulli, Euler, Frobenius-Euler and factorial bases: reconstruction of T_n from the
/// closed-form coefficients, and agreement of those coefficients with the
/// umbral connection constants and with an exact triangular solve.
inline VerificationReport verify_basis_expansions(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    const auto specs = basis_specs(grid);
    return detail::run_blocks("bases", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const std::size_t order = default_order(N);
        const auto T = mixed_T_sequence(N, b.r, b.k, b.lambda);
        const ShefferPair source = mixed_pair(b.r, b.k, b.lambda, order);
        for (const auto& spec : specs) {
            const auto basis = basis_polynomials(spec, N);
            const auto closed = basis_coefficients_closed_form(spec, T);
            const auto umbral = connection_constants(source, basis_pair(spec, order), N);
            detail::Coordinates where{{"basis", basis_name(spec.kind)}};
            if (spec.kind == BasisKind::bernoulli || spec.kind == BasisKind::euler ||
                spec.kind == BasisKind::frobenius_euler)
                where.emplace_back("s", std::to_string(spec.s));
            if (spec.kind == BasisKind::frobenius_euler) where.emplace_back("mu", spec.mu.to_string());
            for (std::size_t n = grid.n_min; n <= N; ++n) {
                auto at = where;
                at.emplace_back("n", std::to_string(n));
                Poly rebuilt;
                for (std::size_t m = 0; m <= n; ++m) rebuilt += basis[m] * closed[n][m];
                if (!chk.expect("reconstruction", at, rebuilt, T[n])) return;

                const std::vector<Rational> row(closed[n].begin(), closed[n].begin() + static_cast<long>(n) + 1);
                const std::vector<Rational> umbral_row(umbral[n].begin(), umbral[n].begin() + static_cast<long>(n) + 1);
                if (!chk.expect("connection-constants", at, Poly(row), Poly(umbral_row))) return;
                if (!chk.expect("triangular-solve", at, Poly(row), Poly(triangular_solve(basis, T[n])))) return;
            }
        }
    });
}

/// Appell rule (also as the operator t), both convolutions, the operator form
/// of the generating function, the two poly-Bernoulli closed forms, the
/// binomial expansion of H_n and the r = 0 degeneration.
inline VerificationReport verify_foundations(const SweepGrid& grid, const VerifyOptions& opts = {}) {
    return detail::run_blocks("foundations", grid, opts, [&](const detail::Block& b, detail::BlockChecker& chk) {
        const std::size_t N = grid.n_max;
        const std::size_t order = default_order(N);
        const auto T = mixed_T_sequence(N, b.r, b.k, b.lambda);
        const auto T_r0 = mixed_T_sequence(N, 0, b.k, b.lambda);
        const auto H = frobenius_euler_sequence(N, b.r, b.lambda);
        const auto H0 = values_at(H, Rational(0));
        const auto Bk = poly_bernoulli_sequence(N, b.k);
        const auto Bk0 = values_at(Bk, Rational(0));
        const Series kernel = mixed_kernel(b.r, b.k, b.lambda, order);
        const Series t = Series::monomial(1, order);
        const StirlingTable S2(N);
        for (std::size_t n = grid.n_min; n <= N; ++n) {
            const auto at = detail::at_n(n);
            const Poly n_prev = n == 0 ? Poly() : T[n - 1] * Rational(static_cast<long>(n));
            if (!chk.expect("appell-derivative", at, poly_derivative(T[n]), n_prev)) return;
            if (!chk.expect("delta-operator", at, apply_operator(t, T[n]), n_prev)) return;

            Poly conv_a, conv_b;
            for (std::size_t l = 0; l <= n; ++l) {
                conv_a += Bk[l] * (binomial(n, l) * H0[n - l]);
                conv_b += H[n - l] * (binomial(n, l) * Bk0[l]);
            }
            if (!chk.expect("convolution-numbers-H", at, conv_a, T[n])) return;
            if (!chk.expect("convolution-numbers-B", at, conv_b, T[n])) return;
            if (!chk.expect("operator-form", at, apply_operator(kernel, Poly::monomial(n)), T[n])) return;

            Poly alternating;  // sum_m (m+1)^{-k} sum_j (-1)^j C(m,j) (x-j)^n
            for (std::size_t m = 0; m <= n; ++m)
                for (std::size_t j = 0; j <= m; ++j)
                    alternating += poly_shift(Poly::monomial(n), Rational(-static_cast<long>(j))) *
                                   (detail::inv_power(static_cast<long>(m) + 1, b.k) *
                                    sign_power(static_cast<long>(j)) * binomial(m, j));
            std::vector<Rational> stirling_form(n + 1, Rational(0));
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t m = 0; m <= n - j; ++m)
                    stirling_form[j] += sign_power(static_cast<long>(n - m - j)) *
                                        detail::inv_power(static_cast<long>(m) + 1, b.k) * binomial(n, j) *
                                        factorial(m) * S2(n - j, m);
            if (!chk.expect("poly-bernoulli-alternating-vs-stirling", at, alternating, Poly(stirling_form))) return;
            if (!chk.expect("poly-bernoulli-closed-form", at, Poly(stirling_form), Bk[n])) return;

            Poly binomial_form;
            for (std::size_t l = 0; l <= n; ++l) binomial_form += Poly::monomial(l, binomial(n, l) * H0[n - l]);
            if (!chk.expect("frobenius-euler-binomial", at, binomial_form, H[n])) return;
            if (!chk.expect("r0-degeneration", at, T_r0[n], Bk[n])) return;
        }
    });
}

}  // namespace umbral

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "sheffer.hpp"

// Special polynomial families, each extracted from its generating function
// through the series engine. Every kernel below has constant term 1, so all
// the resulting sequences are monic Appell sequences.

namespace umbral {

struct FamilyParams {
    std::size_t n = 0;
    long r = 0;
    long k = 0;
    std::size_t s = 0;
    Rational lambda = Rational(-1);
    Rational mu = Rational(-1);

    void validate() const {
        if (lambda == Rational(1)) throw precondition_error("lambda must differ from 1");
        if (mu == Rational(1)) throw precondition_error("mu must differ from 1");
    }
};

inline void require_lambda(const Rational& lambda, const char* name = "lambda") {
    if (lambda == Rational(1)) throw precondition_error(std::string(name) + " must differ from 1");
}

/// Triangle S_2(i, j) for 0 <= j <= i <= n_max via S(i,j) = j S(i-1,j) + S(i-1,j-1).
class StirlingTable {
public:
    explicit StirlingTable(std::size_t n_max) : rows_(n_max + 1) {
        rows_[0] = {Rational(1)};
        for (std::size_t i = 1; i <= n_max; ++i) {
            rows_[i].assign(i + 1, Rational(0));
            for (std::size_t j = 1; j <= i; ++j) {
                Rational above = j < i ? rows_[i - 1][j] : Rational(0);
                rows_[i][j] = Rational(static_cast<long>(j)) * above + rows_[i - 1][j - 1];
            }
        }
    }

    std::size_t n_max() const { return rows_.size() - 1; }

    Rational operator()(std::size_t n, std::size_t m) const {
        if (n >= rows_.size()) throw precondition_error("StirlingTable: n beyond table");
        return m <= n ? rows_[n][m] : Rational(0);
    }

    const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }

private:
    std::vector<std::vector<Rational>> rows_;
};

inline Rational stirling2(long n, long m) {
    if (n < 0 || m < 0) throw precondition_error("stirling2: arguments must be nonnegative");
    if (m > n) return Rational(0);
    return StirlingTable(static_cast<std::size_t>(n))(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
}

// ---- kernels (scalar series in t) -------------------------------------------------

/// t / (e^t - 1) raised to s.
inline Series bernoulli_kernel(long s, std::size_t order) {
    Series em1 = make_exp(Rational(1), order + 1) - Series::constant(Rational(1), order + 1);
    return series_pow(series_invert(divide_by_t(em1)), s);
}

/// (2 / (e^t + 1))^s.
inline Series euler_kernel(long s, std::size_t order) {
    Series half_ep1 = series_scale(make_exp(Rational(1), order) + Series::constant(Rational(1), order),
                                   Rational(1, 2));
    return series_pow(series_invert(half_ep1), s);
}

/// ((1 - lambda) / (e^t - lambda))^r; negative r uses the reciprocal.
inline Series frobenius_euler_kernel(long r, const Rational& lambda, std::size_t order) {
    require_lambda(lambda);
    Series base = series_scale(make_exp(Rational(1), order) - Series::constant(lambda, order),
                               unit_inverse(Rational(1) - lambda));
    return series_pow(base, -r);
}

/// 1 - e^{-t}.
inline Series one_minus_exp_neg(std::size_t order) {
    return Series::constant(Rational(1), order) - make_exp(Rational(-1), order);
}

/// Li_k(1 - e^{-t}) as a truncated series: sum_{j=1}^{N} (1-e^{-t})^j / j^k.
/// Terms with j > N start at t^{N+1}, so the truncated sum is exact to order N.
inline Series polylog_delta(long k, std::size_t order) {
    const Series u = one_minus_exp_neg(order);
    Series acc = Series::zero(order);
    Series u_pow = Series::constant(Rational(1), order);
    for (std::size_t j = 1; j <= order; ++j) {
        u_pow = series_mul(u_pow, u);
        acc = acc + series_scale(u_pow, pow(Rational(static_cast<long>(j)), -k));
    }
    return acc;
}

/// Li_k(1 - e^{-t}) / (1 - e^{-t}).
inline Series poly_bernoulli_kernel(long k, std::size_t order) {
    const Series li = divide_by_t(polylog_delta(k, order + 1));
    const Series u_over_t = divide_by_t(one_minus_exp_neg(order + 1));
    return series_mul(li, series_invert(u_over_t));
}

/// ((1-lambda)/(e^t-lambda))^r Li_k(1-e^{-t}) / (1-e^{-t}).
inline Series mixed_kernel(long r, long k, const Rational& lambda, std::size_t order) {
    return series_mul(frobenius_euler_kernel(r, lambda, order), poly_bernoulli_kernel(k, order));
}

/// g_{r,k}(t), the reciprocal of the mixed kernel; T_n ~ (g_{r,k}, t).
inline ShefferPair mixed_pair(long r, long k, const Rational& lambda, std::size_t order) {
    return appell_pair(series_invert(mixed_kernel(r, k, lambda, order)));
}

// ---- sequences --------------------------------------------------------------------

/// P_0..P_{n_max} with sum P_n(x) t^n/n! = kernel(t) e^{xt}.
inline std::vector<Poly> appell_sequence(const Series& kernel, std::size_t n_max) {
    if (kernel.order() < n_max) throw precondition_error("appell_sequence: kernel truncation below n_max");
    const PolySeries gen = series_mul(lift(kernel.truncated(n_max)), make_exp_x(n_max));
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    Rational nfact(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) nfact *= Rational(static_cast<long>(n));
        out.push_back(gen[n] * nfact);
    }
    return out;
}

inline std::vector<Rational> values_at(const std::vector<Poly>& seq, const Rational& a) {
    std::vector<Rational> out;
    out.reserve(seq.size());
    for (const auto& p : seq) out.push_back(poly_eval(p, a));
    return out;
}

/// Higher-order Bernoulli polynomials B_n^{(s)}(x), n = 0..n_max.
inline std::vector<Poly> bernoulli_sequence(std::size_t n_max, long s) {
    return appell_sequence(bernoulli_kernel(s, default_order(n_max)), n_max);
}

/// Higher-order Euler polynomials E_n^{(s)}(x).
inline std::vector<Poly> euler_sequence(std::size_t n_max, long s) {
    return appell_sequence(euler_kernel(s, default_order(n_max)), n_max);
}

/// Frobenius-Euler polynomials H_n^{(r)}(x | lambda).
inline std::vector<Poly> frobenius_euler_sequence(std::size_t n_max, long r, const Rational& lambda) {
    return appell_sequence(frobenius_euler_kernel(r, lambda, default_order(n_max)), n_max);
}

/// Poly-Bernoulli polynomials B_n^{(k)}(x).
inline std::vector<Poly> poly_bernoulli_sequence(std::size_t n_max, long k) {
    return appell_sequence(poly_bernoulli_kernel(k, default_order(n_max)), n_max);
}

/// Mixed-type polynomials T_n^{(r,k)}(x | lambda).
inline std::vector<Poly> mixed_T_sequence(std::size_t n_max, long r, long k, const Rational& lambda) {
    return appell_sequence(mixed_kernel(r, k, lambda, default_order(n_max)), n_max);
}

inline Poly bernoulli_poly(std::size_t n, long s) { return bernoulli_sequence(n, s).back(); }
inline Poly euler_poly(std::size_t n, long s) { return euler_sequence(n, s).back(); }
inline Poly frobenius_euler_poly(std::size_t n, long r, const Rational& lambda) {
    return frobenius_euler_sequence(n, r, lambda).back();
}
inline Poly poly_bernoulli_poly(std::size_t n, long k) { return poly_bernoulli_sequence(n, k).back(); }
inline Poly mixed_T_poly(std::size_t n, long r, long k, const Rational& lambda) {
    return mixed_T_sequence(n, r, k, lambda).back();
}

/// Ordinary Bernoulli numbers B_0..B_{n_max} (B_1 = -1/2).
inline std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
    return values_at(bernoulli_sequence(n_max, 1), Rational(0));
}

inline std::vector<Poly> falling_factorials(std::size_t n_max) {
    std::vector<Poly> out;
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(falling_factorial(n));
    return out;
}

inline std::vector<Poly> rising_factorials(std::size_t n_max) {
    std::vector<Poly> out;
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(rising_factorial(n));
    return out;
}

}  // namespace umbral

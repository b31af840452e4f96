#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace umbral {

/// Truncated formal power series sum_{k<=N} c_k t^k over a commutative ring R.
/// The truncation order N travels with the value: coefficients are only
/// meaningful up to t^N, and binary operations keep the smaller N.
template <class R>
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, R(0)) {}

    TruncatedSeries(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) {
        coeffs_.resize(order_ + 1, R(0));
    }

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries({}, order); }

    static TruncatedSeries constant(R c, std::size_t order) { return TruncatedSeries({std::move(c)}, order); }

    /// c * t^power, truncated at order.
    static TruncatedSeries monomial(std::size_t power, std::size_t order, R c = R(1)) {
        std::vector<R> v(order + 1, R(0));
        if (power <= order) v[power] = std::move(c);
        return TruncatedSeries(std::move(v), order);
    }

    std::size_t order() const { return order_; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// o(f): index of the first nonzero coefficient; nullopt for zero (to order N).
    std::optional<std::size_t> valuation() const {
        for (std::size_t k = 0; k <= order_; ++k)
            if (!detail::coeff_is_zero(coeffs_[k])) return k;
        return std::nullopt;
    }

    bool is_delta() const { return valuation() == std::size_t{1}; }
    bool is_invertible() const { return valuation() == std::size_t{0}; }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > order_) throw precondition_error("cannot raise truncation order of a series");
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1), order);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        os << "{order: " << s.order_ << ", coeffs: [";
        for (std::size_t i = 0; i <= s.order_; ++i) os << (i ? ", " : "") << s.coeffs_[i];
        return os << "]}";
    }

private:
    std::vector<R> coeffs_;
    std::size_t order_ = 0;
};

using Series = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<Poly>;

template <class R>
TruncatedSeries<R> series_add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> c(n + 1, R(0));
    for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
    return TruncatedSeries<R>(std::move(c), n);
}

template <class R>
TruncatedSeries<R> series_sub(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return series_add(a, -b);
}

/// Cauchy product truncated at min(N_a, N_b).
template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> c(n + 1, R(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (detail::coeff_is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries<R>(std::move(c), n);
}

template <class R, class S>
TruncatedSeries<R> series_scale(const TruncatedSeries<R>& a, const S& s) {
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = x * s;
    return TruncatedSeries<R>(std::move(c), a.order());
}

template <class R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return series_add(a, b);
}
template <class R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return series_sub(a, b);
}
template <class R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return series_mul(a, b);
}

/// Multiplicative inverse; requires o(a) = 0 with a unit constant term.
template <class R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& a) {
    if (!is_unit(a[0])) throw precondition_error("series_invert: constant term is not invertible");
    const std::size_t n = a.order();
    const R c0_inv = unit_inverse(a[0]);
    std::vector<R> b(n + 1, R(0));
    b[0] = c0_inv;
    for (std::size_t k = 1; k <= n; ++k) {
        R acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -(acc * c0_inv);
    }
    return TruncatedSeries<R>(std::move(b), n);
}

/// f^e for integer e; e < 0 inverts first (f must then be invertible).
template <class R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& f, long e) {
    if (e < 0) return series_pow(series_invert(f), -e);
    auto result = TruncatedSeries<R>::constant(R(1), f.order());
    auto base = f;
    while (e > 0) {
        if (e & 1) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

/// outer(inner(t)) by Horner over the inner series. inner must have zero
/// constant term; the result is truncated at min(N_outer, N_inner).
template <class R>
TruncatedSeries<R> series_compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
    if (!detail::coeff_is_zero(inner[0]))
        throw precondition_error("series_compose: inner series must have zero constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    const auto in = inner.truncated(n);
    if (in == TruncatedSeries<R>::monomial(1, n)) return outer.truncated(n);
    auto acc = TruncatedSeries<R>::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = series_mul(acc, in);
        std::vector<R> c(acc.coeffs());
        c[0] += outer[k];
        acc = TruncatedSeries<R>(std::move(c), n);
    }
    return acc;
}

/// Compositional inverse fbar with f(fbar(t)) = t, solved order by order.
template <class R>
TruncatedSeries<R> series_comp_inverse(const TruncatedSeries<R>& f) {
    if (!detail::coeff_is_zero(f[0]) || f.order() < 1 || !is_unit(f[1]))
        throw precondition_error("series_comp_inverse: argument is not a delta series");
    const std::size_t n = f.order();
    if (f == TruncatedSeries<R>::monomial(1, n)) return f;
    const R a1_inv = unit_inverse(f[1]);
    std::vector<R> g(n + 1, R(0));
    g[1] = a1_inv;
    for (std::size_t k = 2; k <= n; ++k) {
        // Coefficient k of f(g) with g_k still 0 is the residual; g_k enters
        // linearly as a1 * g_k.
        auto fg = series_compose(f, TruncatedSeries<R>(g, k));
        g[k] = -(fg[k] * a1_inv);
    }
    return TruncatedSeries<R>(std::move(g), n);
}

/// Term-wise d/dt; truncation drops to N - 1.
template <class R>
TruncatedSeries<R> series_derivative(const TruncatedSeries<R>& f) {
    if (f.order() == 0) return TruncatedSeries<R>::zero(0);
    std::vector<R> c(f.order(), R(0));
    for (std::size_t k = 1; k <= f.order(); ++k) c[k - 1] = f[k] * Rational(static_cast<long>(k));
    return TruncatedSeries<R>(std::move(c), f.order() - 1);
}

/// f(t)/t for o(f) >= 1; truncation drops to N - 1.
template <class R>
TruncatedSeries<R> divide_by_t(const TruncatedSeries<R>& f) {
    if (!detail::coeff_is_zero(f[0])) throw precondition_error("divide_by_t: nonzero constant term");
    if (f.order() == 0) throw precondition_error("divide_by_t: series of order 0 has no t^1 coefficient");
    std::vector<R> c(f.coeffs().begin() + 1, f.coeffs().end());
    return TruncatedSeries<R>(std::move(c), f.order() - 1);
}

/// e^{scale t} = sum_{k<=N} scale^k t^k / k!.
template <class R>
TruncatedSeries<R> make_exp(const R& scale, std::size_t order) {
    std::vector<R> c(order + 1, R(0));
    c[0] = R(1);
    for (std::size_t k = 1; k <= order; ++k) c[k] = c[k - 1] * scale * (Rational(1) / Rational(static_cast<long>(k)));
    return TruncatedSeries<R>(std::move(c), order);
}

inline Series make_exp(const Rational& scale, std::size_t order) { return make_exp<Rational>(scale, order); }

/// The generic factor e^{xt}, with x as a polynomial coefficient.
inline PolySeries make_exp_x(std::size_t order) { return make_exp<Poly>(Poly::x(), order); }

/// log(1 + t) to order N.
inline Series make_log1p(std::size_t order) {
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t k = 1; k <= order; ++k) c[k] = sign_power(static_cast<long>(k) - 1) / Rational(static_cast<long>(k));
    return Series(std::move(c), order);
}

/// Embeds a scalar series into the series ring over R[x].
inline PolySeries lift(const Series& f) {
    std::vector<Poly> c;
    c.reserve(f.order() + 1);
    for (const auto& a : f.coeffs()) c.emplace_back(a);
    return PolySeries(std::move(c), f.order());
}

/// Truncation slack added to the degree when building generating functions.
/// Defaults to 2 and can be overridden by UMBRAL_TRUNCATION_SLACK.
inline std::size_t truncation_slack() {
    static const std::size_t slack = [] {
        const char* env = std::getenv("UMBRAL_TRUNCATION_SLACK");
        if (env == nullptr || *env == '\0') return std::size_t{2};
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 64) {
            throw std::invalid_argument("UMBRAL_TRUNCATION_SLACK must be an integer in [1, 64]");
        }
        return static_cast<std::size_t>(v);
    }();
    return slack;
}

inline std::size_t default_order(std::size_t degree) { return degree + truncation_slack(); }

}  // namespace umbral

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace umbral {

namespace detail {
template <class T>
bool coeff_is_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial in x, coefficients lowest power first.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is mathematical equality.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int constant) : coeffs_{R(constant)} { trim(); }
    explicit Polynomial(R constant) : coeffs_{std::move(constant)} { trim(); }
    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial x() { return monomial(1); }

    static Polynomial monomial(std::size_t power, R coefficient = R(1)) {
        std::vector<R> c(power + 1, R(0));
        c[power] = std::move(coefficient);
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const R> coeffs() const { return coeffs_; }

    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
    R leading() const { return coeffs_.empty() ? R(0) : coeffs_.back(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const R& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
    friend Polynomial operator*(const R& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        os << '[';
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? ", " : "") << p.coeffs_[i];
        return os << ']';
    }

private:
    void trim() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using Poly = Polynomial<Rational>;

template <class R>
bool is_zero(const Polynomial<R>& p) {
    return p.is_zero();
}

// A polynomial is a unit of R[x] exactly when it is a nonzero constant unit of R.
template <class R>
bool is_unit(const Polynomial<R>& p) {
    return p.degree() == 0 && is_unit(p.coeff(0));
}

template <class R>
Polynomial<R> unit_inverse(const Polynomial<R>& p) {
    if (!is_unit(p)) throw std::domain_error("Polynomial: only nonzero constants are invertible");
    return Polynomial<R>(unit_inverse(p.coeff(0)));
}

/// Horner evaluation.
template <class R>
R poly_eval(const Polynomial<R>& p, const R& a) {
    R acc(0);
    auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
    return acc;
}

/// q(x) = p(x + c) by binomial expansion of each power.
template <class R>
Polynomial<R> poly_shift(const Polynomial<R>& p, const R& c) {
    auto pc = p.coeffs();
    if (pc.empty()) return {};
    std::vector<R> out(pc.size(), R(0));
    std::vector<R> cpow(pc.size(), R(1));
    for (std::size_t i = 1; i < pc.size(); ++i) cpow[i] = cpow[i - 1] * c;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        if (is_zero(pc[i])) continue;
        for (std::size_t j = 0; j <= i; ++j) out[j] += pc[i] * binomial(i, j) * cpow[i - j];
    }
    return Polynomial<R>(std::move(out));
}

template <class R>
Polynomial<R> poly_derivative(const Polynomial<R>& p) {
    auto pc = p.coeffs();
    if (pc.size() <= 1) return {};
    std::vector<R> out(pc.size() - 1, R(0));
    for (std::size_t i = 1; i < pc.size(); ++i) out[i - 1] = pc[i] * R(static_cast<long>(i));
    return Polynomial<R>(std::move(out));
}

/// k-th derivative.
template <class R>
Polynomial<R> poly_derivative(const Polynomial<R>& p, std::size_t k) {
    auto pc = p.coeffs();
    if (pc.size() <= k) return {};
    std::vector<R> out(pc.size() - k, R(0));
    for (std::size_t i = k; i < pc.size(); ++i) {
        R falling(1);
        for (std::size_t j = 0; j < k; ++j) falling *= R(static_cast<long>(i - j));
        out[i - k] = pc[i] * falling;
    }
    return Polynomial<R>(std::move(out));
}

/// (x)_n = x(x-1)...(x-n+1); 1 for n = 0.
inline Poly falling_factorial(std::size_t n) {
    Poly p(1);
    for (std::size_t j = 0; j < n; ++j) p *= Poly{Rational(-static_cast<long>(j)), Rational(1)};
    return p;
}

/// x^[n] = x(x+1)...(x+n-1); 1 for n = 0.
inline Poly rising_factorial(std::size_t n) {
    Poly p(1);
    for (std::size_t j = 0; j < n; ++j) p *= Poly{Rational(static_cast<long>(j)), Rational(1)};
    return p;
}

}  // namespace umbral

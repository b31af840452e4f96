#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

/// Exact rational number in canonical form: positive denominator, reduced,
/// zero stored as 0/1. Backed by GMP's mpq_t, whose arithmetic keeps every
/// result canonical.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) {  // NOLINT: implicit by design of the scalar field
        if constexpr (std::is_signed_v<I>) {
            value_ = mpq_class(mpz_class(static_cast<long>(value)));
        } else {
            value_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
        }
    }

    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    explicit Rational(const mpz_class& integer) : value_(integer) {}

    /// Parses "p", "-p", "p/q" or "-p/q" (optionally "+p/q").
    static Rational parse(std::string_view text) {
        auto fail = [&]() -> Rational {
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        };
        if (text.empty()) return fail();
        auto slash = text.find('/');
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i >= s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) return fail();
        std::string num_str(num);
        if (num_str[0] == '+') num_str.erase(0, 1);
        mpz_class n(num_str, 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when q = 1.
    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return from_raw(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    static Rational from_raw(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_{0};
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// Multiplicative inverse of a unit. Every nonzero rational is a unit.
inline Rational unit_inverse(const Rational& q) {
    if (q.is_zero()) throw std::domain_error("Rational: zero has no inverse");
    return Rational(1) / q;
}

inline bool is_unit(const Rational& q) { return !q.is_zero(); }

/// q^e for any integer e (e < 0 requires q != 0).
inline Rational pow(const Rational& q, long e) {
    if (e < 0) return pow(unit_inverse(q), -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

/// C(n, k); zero when k > n.
inline Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace umbral

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbral/families.hpp"
#include "umbral/identities.hpp"
#include "umbral/sheffer.hpp"

using umbral::Poly;
using umbral::Rational;
using umbral::Series;
using umbral::ShefferPair;

namespace {

Series exp_minus_one(std::size_t order) {
    return umbral::make_exp(Rational(1), order) - Series::constant(Rational(1), order);
}

}  // namespace

TEST(Pairing, MonomialsAreBiorthogonal) {
    for (std::size_t k = 0; k <= 10; ++k)
        for (std::size_t n = 0; n <= 10; ++n)
            EXPECT_EQ(umbral::pairing(Series::monomial(k, 10), Poly::monomial(n)),
                      n == k ? umbral::factorial(n) : Rational(0));
}

TEST(Pairing, ExponentialEvaluates) {
    oracle::Generator gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = gen.poly(static_cast<std::size_t>(trial % 10));
        Rational y = gen.rational();
        EXPECT_EQ(umbral::pairing(umbral::make_exp(y, 10), p), umbral::poly_eval(p, y));
    }
    EXPECT_EQ(umbral::pairing(umbral::make_exp(Rational(2), 4), Poly::monomial(3)), Rational(8));
}

TEST(Pairing, BernoulliKernelGivesBernoulliNumbers) {
    const auto b = oracle::bernoulli_numbers(10);
    const Series kernel = umbral::bernoulli_kernel(1, 10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(umbral::pairing(kernel, Poly::monomial(n)), b[n]);
}

TEST(Pairing, ProductRule) {
    // <f g | x^n> = sum_l C(n,l) <f | x^l> <g | x^{n-l}>
    oracle::Generator gen(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> fc, gc;
        for (int i = 0; i <= 9; ++i) fc.push_back(gen.rational()), gc.push_back(gen.rational());
        Series f(fc, 9), g(gc, 9);
        for (std::size_t n = 0; n <= 9; ++n) {
            Rational rhs(0);
            for (std::size_t l = 0; l <= n; ++l)
                rhs += umbral::binomial(n, l) * umbral::pairing(f, Poly::monomial(l)) *
                       umbral::pairing(g, Poly::monomial(n - l));
            EXPECT_EQ(umbral::pairing(f * g, Poly::monomial(n)), rhs);
        }
    }
}

TEST(Pairing, RejectsShortTruncation) {
    EXPECT_THROW(umbral::pairing(Series::monomial(0, 2), Poly::monomial(3)), umbral::precondition_error);
    EXPECT_THROW(umbral::apply_operator(Series::monomial(0, 2), Poly::monomial(3)), umbral::precondition_error);
}

TEST(Operator, DerivativeAndShift) {
    Poly p{Rational(1), Rational(2), Rational(3), Rational(4)};
    EXPECT_EQ(umbral::apply_operator(Series::monomial(1, 3), p), umbral::poly_derivative(p));
    EXPECT_EQ(umbral::apply_operator(Series::monomial(2, 3), p), umbral::poly_derivative(p, 2));
    EXPECT_EQ(umbral::apply_operator(umbral::make_exp(Rational(5), 3), p), umbral::poly_shift(p, Rational(5)));
    // (e^t - 1) x^2 = 2x + 1
    EXPECT_EQ(umbral::apply_operator(exp_minus_one(2), Poly::monomial(2)), (Poly{Rational(1), Rational(2)}));
}

TEST(Operator, PairingOfProductIsPairingOfAction) {
    // <f g | p> = <f | g p>
    oracle::Generator gen(19);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Rational> fc, gc;
        for (int i = 0; i <= 8; ++i) fc.push_back(gen.rational()), gc.push_back(gen.rational());
        Series f(fc, 8), g(gc, 8);
        Poly p = gen.poly(8);
        EXPECT_EQ(umbral::pairing(f * g, p), umbral::pairing(f, umbral::apply_operator(g, p)));
    }
}

TEST(ShefferPair, ValidatesOrders) {
    EXPECT_THROW(ShefferPair(Series::monomial(1, 4), Series::monomial(1, 4)), umbral::precondition_error);
    EXPECT_THROW(ShefferPair(Series::constant(Rational(1), 4), Series::monomial(2, 4)), umbral::precondition_error);
    EXPECT_THROW(ShefferPair(Series::constant(Rational(1), 4), Series::constant(Rational(1), 4)),
                 umbral::precondition_error);
    EXPECT_NO_THROW(ShefferPair(Series::constant(Rational(2), 4), Series::monomial(1, 4)));
}

TEST(ShefferPolynomials, Monomials) {
    ShefferPair pair(Series::constant(Rational(1), 11), Series::monomial(1, 11));
    auto seq = umbral::sheffer_polynomials(pair, 10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(seq[n], Poly::monomial(n));
}

TEST(ShefferPolynomials, FallingAndRisingFactorials) {
    ShefferPair falling(Series::constant(Rational(1), 11), exp_minus_one(11));
    ShefferPair rising(Series::constant(Rational(1), 11), umbral::one_minus_exp_neg(11));
    auto f = umbral::sheffer_polynomials(falling, 10);
    auto r = umbral::sheffer_polynomials(rising, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(f[n], umbral::falling_factorial(n));
        EXPECT_EQ(r[n], umbral::rising_factorial(n));
    }
}

TEST(ShefferPolynomials, RequiresTruncationAboveDegree) {
    ShefferPair pair(Series::constant(Rational(1), 5), Series::monomial(1, 5));
    EXPECT_THROW(umbral::sheffer_polynomials(pair, 5), umbral::precondition_error);
    EXPECT_NO_THROW(umbral::sheffer_polynomials(pair, 4));
}

TEST(ShefferPolynomials, Biorthogonality) {
    const std::size_t n_max = 8;
    std::vector<ShefferPair> pairs{
        ShefferPair(Series::constant(Rational(1), n_max + 1), exp_minus_one(n_max + 1)),
        ShefferPair(Series::constant(Rational(1), n_max + 1), umbral::one_minus_exp_neg(n_max + 1)),
        umbral::mixed_pair(2, -1, Rational(1, 2), n_max + 1),
        ShefferPair(umbral::euler_kernel(-1, n_max + 1), exp_minus_one(n_max + 1)),
    };
    for (const auto& pair : pairs) {
        auto seq = umbral::sheffer_polynomials(pair, n_max);
        auto report = umbral::sheffer_orthogonality_check(pair, seq, n_max);
        EXPECT_TRUE(report.passed());
        EXPECT_EQ(report.checks, (n_max + 1) * (n_max + 1));
    }
}

TEST(ShefferPolynomials, OrthogonalityCheckReportsCounterexample) {
    ShefferPair pair(Series::constant(Rational(1), 5), Series::monomial(1, 5));
    auto seq = umbral::sheffer_polynomials(pair, 4);
    seq[3] = seq[3] + Poly(1);
    auto report = umbral::sheffer_orthogonality_check(pair, seq, 4);
    ASSERT_FALSE(report.passed());
    EXPECT_EQ(report.failures.front().check, "biorthogonality");
    EXPECT_EQ(report.failures.front().coordinates[0], (std::pair<std::string, std::string>{"k", "0"}));
    EXPECT_EQ(report.failures.front().coordinates[1], (std::pair<std::string, std::string>{"n", "3"}));
}

TEST(ShefferPolynomials, MixedPairMatchesAppellExtraction) {
    const auto T = umbral::mixed_T_sequence(9, 1, 2, Rational(2));
    const auto S = umbral::sheffer_polynomials(umbral::mixed_pair(1, 2, Rational(2), 10), 9);
    EXPECT_EQ(S, T);
}

TEST(ShefferProperty, BinomialTypeForTrivialG) {
    // s_n(x+y) = sum_k C(n,k) s_k(x) s_{n-k}(y) when g = 1
    ShefferPair pair(Series::constant(Rational(1), 9), exp_minus_one(9));
    auto s = umbral::sheffer_polynomials(pair, 8);
    for (std::size_t n = 0; n <= 8; ++n)
        for (long y = -2; y <= 3; ++y) {
            Poly rhs;
            for (std::size_t k = 0; k <= n; ++k)
                rhs += s[k] * (umbral::binomial(n, k) * umbral::poly_eval(s[n - k], Rational(y)));
            EXPECT_EQ(umbral::poly_shift(s[n], Rational(y)), rhs);
        }
}

TEST(ShefferProperty, DeltaOperatorLowersDegree) {
    // f(t) S_n = n S_{n-1}
    ShefferPair pair = umbral::mixed_pair(-1, 3, Rational(-3, 5), 10);
    ShefferPair general(pair.g(), umbral::one_minus_exp_neg(10));
    for (const auto& p : {pair, general}) {
        auto s = umbral::sheffer_polynomials(p, 9);
        for (std::size_t n = 1; n <= 9; ++n)
            EXPECT_EQ(umbral::apply_operator(p.f(), s[n]), s[n - 1] * Rational(static_cast<long>(n)));
    }
}

TEST(ShefferProperty, ExpansionThroughPairings) {
    // p(x) = sum_k <g f^k | p> / k! S_k(x)
    ShefferPair pair(umbral::frobenius_euler_kernel(-2, Rational(7), 9), exp_minus_one(9));
    auto s = umbral::sheffer_polynomials(pair, 8);
    oracle::Generator gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = gen.poly(8);
        Poly rebuilt;
        Series gfk = pair.g();
        for (std::size_t k = 0; k <= 8; ++k) {
            rebuilt += s[k] * (umbral::pairing(gfk, p) / umbral::factorial(k));
            gfk = gfk * pair.f();
        }
        EXPECT_EQ(rebuilt, p);
    }
}

TEST(AppellRecurrence, BernoulliStep) {
    const std::size_t order = 8;
    ShefferPair pair = umbral::appell_pair(umbral::series_invert(umbral::bernoulli_kernel(1, order)));
    for (std::size_t n = 0; n + 1 <= 6; ++n)
        EXPECT_EQ(umbral::appell_recurrence_next(pair, oracle::bernoulli_polynomial(n)),
                  oracle::bernoulli_polynomial(n + 1));
}

TEST(AppellRecurrence, MixedPair) {
    const auto T = umbral::mixed_T_sequence(8, 2, -2, Rational(-1));
    ShefferPair pair = umbral::mixed_pair(2, -2, Rational(-1), 10);
    for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(umbral::appell_recurrence_next(pair, T[n]), T[n + 1]);
}

TEST(AppellRecurrence, RejectsNonAppell) {
    ShefferPair pair(Series::constant(Rational(1), 5), exp_minus_one(5));
    EXPECT_THROW(umbral::appell_recurrence_next(pair, Poly(1)), umbral::precondition_error);
}

TEST(ConnectionConstants, IdentityPair) {
    ShefferPair pair = umbral::mixed_pair(1, 1, Rational(-1), 8);
    auto c = umbral::connection_constants(pair, pair, 6);
    for (std::size_t j = 0; j <= 6; ++j)
        for (std::size_t m = 0; m <= 6; ++m) EXPECT_EQ(c[j][m], j == m ? Rational(1) : Rational(0));
}

TEST(ConnectionConstants, MonomialsInFallingFactorials) {
    ShefferPair monomials(Series::constant(Rational(1), 12), Series::monomial(1, 12));
    ShefferPair falling(Series::constant(Rational(1), 12), exp_minus_one(12));
    auto c = umbral::connection_constants(monomials, falling, 10);
    for (int j = 0; j <= 10; ++j)
        for (int m = 0; m <= j; ++m) EXPECT_EQ(c[j][m], Rational(oracle::set_partitions(j, m)));
}

TEST(ConnectionConstants, MixedIntoFallingAgreesWithSolvers) {
    const std::size_t n = 4, order = 6;
    const Rational lambda(2);
    const auto T = umbral::mixed_T_sequence(n, 1, 2, lambda);
    const auto basis = umbral::falling_factorials(n);
    ShefferPair falling(Series::constant(Rational(1), order), exp_minus_one(order));
    auto c = umbral::connection_constants(umbral::mixed_pair(1, 2, lambda, order), falling, n);
    auto gauss = oracle::gauss_solve(basis, T[n], n + 1);
    auto tri = umbral::triangular_solve(basis, T[n]);
    auto closed = umbral::basis_coefficients_closed_form({umbral::BasisKind::falling, 0, Rational(-1)}, T);
    for (std::size_t m = 0; m <= n; ++m) {
        EXPECT_EQ(c[n][m], gauss[m]);
        EXPECT_EQ(tri[m], gauss[m]);
        EXPECT_EQ(closed[n][m], gauss[m]);
    }
}

TEST(ConnectionConstants, RandomShefferPairsAgreeWithGauss) {
    oracle::Generator gen(43);
    const std::size_t n = 7, order = 8;
    for (int trial = 0; trial < 5; ++trial) {
        auto rand_series = [&](bool delta) {
            std::vector<Rational> c;
            for (std::size_t i = 0; i <= order; ++i) c.push_back(gen.rational());
            if (delta) c[0] = Rational(0);
            if (c[delta ? 1 : 0].is_zero()) c[delta ? 1 : 0] = Rational(1);
            return Series(c, order);
        };
        ShefferPair source(rand_series(false), rand_series(true));
        ShefferPair target(rand_series(false), rand_series(true));
        auto s = umbral::sheffer_polynomials(source, n);
        auto r = umbral::sheffer_polynomials(ShefferPair(target.g(), target.f()), n);
        auto c = umbral::connection_constants(source, target, n);
        for (std::size_t j = 0; j <= n; ++j) {
            auto gauss = oracle::gauss_solve(r, s[j], j + 1);
            for (std::size_t m = 0; m <= j; ++m) EXPECT_EQ(c[j][m], gauss[m]);
        }
    }
}

TEST(TriangularSolve, ChecksBasisDegrees) {
    std::vector<Poly> bad{Poly(1), Poly::monomial(2)};
    EXPECT_THROW(umbral::triangular_solve(bad, Poly::x()), umbral::precondition_error);
    EXPECT_THROW(umbral::triangular_solve({Poly(1)}, Poly::x()), umbral::precondition_error);
    EXPECT_TRUE(umbral::triangular_solve({Poly(1)}, Poly()).empty());
}

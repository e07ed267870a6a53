#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projnorm/polynomial.hpp"

namespace {

using namespace projnorm::poly;

TEST(IntPolynomialType, CanonicalForm) {
    const IntPolynomial p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.coefficients().size(), 2u);
    EXPECT_TRUE(IntPolynomial{}.is_zero());
    EXPECT_EQ(IntPolynomial{}.degree(), -1);
    EXPECT_TRUE((IntPolynomial{0, 1} - IntPolynomial::x()).is_zero());
    EXPECT_EQ(IntPolynomial{}.to_decimal_strings(), std::vector<std::string>{"0"});
}

TEST(IntPolynomialType, ExactDivisionRejectsRemainder) {
    EXPECT_EQ((IntPolynomial{2, 4}.divided_exactly(2)), (IntPolynomial{1, 2}));
    EXPECT_THROW(IntPolynomial({1, 4}).divided_exactly(2), IdentityViolation);
}

TEST(SqrtRing, OddPowersRejected) {
    EXPECT_THROW(SqrtRingPolynomial::s().to_x_polynomial(), IdentityViolation);
    const auto x = SqrtRingPolynomial::from_x(IntPolynomial{0, 3});
    EXPECT_EQ(x.to_x_polynomial(), (IntPolynomial{0, 3}));
}

TEST(PolyPQRecursive, Examples) {
    const auto one = poly_PQ_recursive(1);
    EXPECT_EQ(one.P, IntPolynomial::x());
    EXPECT_TRUE(one.Q.is_zero());

    const auto two = poly_PQ_recursive(2);
    EXPECT_EQ(two.P, (IntPolynomial{0, 0, 1}));
    EXPECT_EQ(two.Q, (IntPolynomial{0, 1}));

    EXPECT_EQ(poly_PQ_recursive(4).P, (IntPolynomial{0, 0, 0, 3, 1}));
    EXPECT_THROW(poly_PQ_recursive(0), std::invalid_argument);
}

TEST(PolyPQClosed, Examples) {
    const auto two = poly_PQ_closed(2);
    EXPECT_EQ(two.P, (IntPolynomial{0, 0, 1}));
    EXPECT_EQ(two.Q, (IntPolynomial{0, 1}));
    const auto four = poly_PQ_closed(4);
    EXPECT_EQ(four.P, (IntPolynomial{0, 0, 0, 3, 1}));
    EXPECT_EQ(four.Q, (IntPolynomial{0, 0, 1, 3}));
    EXPECT_THROW(poly_PQ_closed(0), std::invalid_argument);
}

TEST(PolyPQ, RecursionClosedFormAndEvenSumsAgree) {
    for (unsigned n = 1; n <= 200; ++n) {
        const auto rec = poly_PQ_recursive(n);
        ASSERT_EQ(rec, poly_PQ_closed(n)) << "n = " << n;
        if (n % 2 == 0) {
            ASSERT_EQ(rec, poly_PQ_even_sums(n / 2)) << "n = " << n;
        }
    }
}

TEST(PolyPQ, DegreesAndSigns) {
    for (unsigned n = 1; n <= 60; ++n) {
        const auto pq = poly_PQ_recursive(n);
        EXPECT_EQ(pq.P.degree(), static_cast<long>(n));
        if (n >= 2) {
            EXPECT_EQ(pq.Q.degree(), static_cast<long>(n) - 1);
        }
        for (const auto& c : pq.P.coefficients()) EXPECT_GE(c, 0);
        for (const auto& c : pq.Q.coefficients()) EXPECT_GE(c, 0);
    }
}

TEST(PolyPQ, EvenSumsUsePascalCoefficients) {
    const unsigned N = 40;
    const auto row = oracle::pascal_row(2 * N - 1);
    const auto sums = poly_PQ_even_sums(N);
    for (unsigned l = 1; l <= N; ++l) {
        EXPECT_EQ(sums.P.coefficient(N + l), row[2 * l - 1]);
    }
    for (unsigned l = 0; l < N; ++l) {
        EXPECT_EQ(sums.Q.coefficient(N + l), row[2 * l]);
    }
}

TEST(PolyPQ, ClosedFormNumericOracle) {
    // (x/2)[(x+√x)^{n-1} + (x-√x)^{n-1}] evaluated directly in doubles.
    for (unsigned n = 1; n <= 20; ++n) {
        const auto pq = poly_PQ_recursive(n);
        for (double x : {0.1, 0.37, 0.8}) {
            const double s = std::sqrt(x);
            const double plus = std::pow(x + s, n - 1.0);
            const double minus = std::pow(x - s, n - 1.0);
            const double p = 0.5 * x * (plus + minus);
            const double q = 0.5 * s * (plus - minus);
            EXPECT_NEAR(poly_eval_real(pq.P, x), p, 1e-12 * std::max(1.0, p));
            EXPECT_NEAR(poly_eval_real(pq.Q, x), q, 1e-12 * std::max(1.0, q));
        }
    }
}

TEST(PolyF, Examples) {
    EXPECT_EQ(poly_F(0), IntPolynomial{1});
    EXPECT_EQ(poly_F(1), (IntPolynomial{0, 2}));
    EXPECT_EQ(poly_F(2), (IntPolynomial{0, 1, 3}));
    EXPECT_EQ(poly_F(3), (IntPolynomial{0, 0, 4, 4}));
    EXPECT_EQ(poly_F_closed(0), IntPolynomial{1});
    EXPECT_EQ(poly_F_closed(1), (IntPolynomial{0, 2}));
    EXPECT_EQ(poly_F_closed(2), (IntPolynomial{0, 1, 3}));
}

TEST(PolyF, RecursionMatchesClosedForm) {
    for (unsigned n = 0; n <= 200; ++n) {
        ASSERT_EQ(poly_F(n), poly_F_closed(n)) << "n = " << n;
    }
}

TEST(PolyF, DegreeSignsAndNumericClosedForm) {
    for (unsigned n = 0; n <= 40; ++n) {
        const auto f = poly_F(n);
        EXPECT_EQ(f.degree(), static_cast<long>(n));
        for (const auto& c : f.coefficients()) EXPECT_GE(c, 0);
        for (double x : {0.05, 0.5, 0.95}) {
            const double s = std::sqrt(x);
            const double closed =
                0.5 * std::pow(x, n / 2.0) * (std::pow(s + 1, n + 1.0) - std::pow(s - 1, n + 1.0));
            EXPECT_NEAR(poly_eval_real(f, x), closed, 1e-9 * std::max(1.0, closed));
        }
    }
}

TEST(PolyAB, Examples) {
    const auto one = poly_AB(1);
    EXPECT_EQ(one.A, (IntPolynomial{0, 0, 1}));
    EXPECT_EQ(one.B, IntPolynomial{1});
    const auto two = poly_AB(2);
    EXPECT_EQ(two.A, (IntPolynomial{0, 0, 3, 0, 1}));
    EXPECT_EQ(two.B, (IntPolynomial{1, 0, 3}));
    EXPECT_THROW(poly_AB(0), std::invalid_argument);
}

TEST(PolyAB, SumsMatchClosedForms) {
    for (unsigned N = 1; N <= 100; ++N) {
        ASSERT_EQ(poly_AB_sums(N), poly_AB_closed(N)) << "N = " << N;
    }
}

TEST(PolyAB, ScalarConsistency) {
    for (unsigned N = 1; N <= 30; ++N) {
        const auto ab = poly_AB(N);
        for (double a : {0.1, 0.5, 0.9}) {
            const double up = std::pow(1 + a, 2.0 * N - 1);
            const double down = std::pow(1 - a, 2.0 * N - 1);
            const double expect_a = 0.5 * a * (up - down);
            const double expect_b = 0.5 * (up + down);
            EXPECT_NEAR(poly_eval_real(ab.A, a), expect_a, 1e-10 * std::abs(expect_a));
            EXPECT_NEAR(poly_eval_real(ab.B, a), expect_b, 1e-10 * std::abs(expect_b));
        }
    }
}

TEST(PolyEvalReal, Examples) {
    EXPECT_DOUBLE_EQ(poly_eval_real(poly_F(2), 1.0), 4.0);
    EXPECT_EQ(poly_eval_real(IntPolynomial{}, 123.0), 0.0);
    EXPECT_DOUBLE_EQ(poly_eval_real(poly_PQ_recursive(4).P, 0.5), 0.4375);
}

TEST(Binomial, MatchesPascal) {
    const auto row = oracle::pascal_row(199);
    for (unsigned k = 0; k <= 199; ++k) {
        EXPECT_EQ(binomial(199, k), row[k]);
    }
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(IntPolynomialType, Formatting) {
    EXPECT_EQ(poly_F(2).to_string(), "3x^2 + x");
    EXPECT_EQ((IntPolynomial{-1, 0, -2}).to_string(), "-2x^2 - 1");
}

}  // namespace

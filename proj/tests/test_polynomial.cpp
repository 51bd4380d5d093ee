#include <convexpoly/polynomial.hpp>

#include <gtest/gtest.h>

#include <convexpoly/prng.hpp>

#include "support/generators.hpp"

namespace convexpoly {
namespace {

SparsePolynomial quartic_example() {
    // x^4 + x in one variable.
    return SparsePolynomial::from_terms(1, {{{4}, Rational(1)}, {{1}, Rational(1)}});
}

TEST(Polynomial, EvalAndDegree) {
    SparsePolynomial f = quartic_example();
    EXPECT_EQ(f.degree(), 4u);
    EXPECT_EQ(f.eval({Rational(0)}), Rational(0));
    EXPECT_EQ(f.eval({Rational(2)}), Rational(18));
    EXPECT_EQ(f.eval({Rational(-1, 2)}), Rational(1, 16) - Rational(1, 2));

    SparsePolynomial zero(3);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), 0u);
    EXPECT_EQ(zero.eval({Rational(1), Rational(2), Rational(3)}), Rational(0));
}

TEST(Polynomial, EncodingLengthOfQuarticExampleIsNine) {
    // n + deg + coefficient bits: 1 + 4 + (bl(1)+bl(1)) + (bl(1)+bl(1)) = 9.
    EXPECT_EQ(quartic_example().encoding_length(), 9u);
}

TEST(Polynomial, ArityMismatchThrows) {
    SparsePolynomial f = quartic_example();
    EXPECT_THROW(f.eval({Rational(1), Rational(2)}), std::invalid_argument);
    SparsePolynomial g(2);
    EXPECT_THROW(f + g, std::invalid_argument);
}

TEST(Polynomial, DerivativesOfMixedTerm) {
    // f = 3 x0^2 x1 - x1^3; df/dx0 = 6 x0 x1, df/dx1 = 3 x0^2 - 3 x1^2.
    SparsePolynomial f = SparsePolynomial::from_terms(
        2, {{{2, 1}, Rational(3)}, {{0, 3}, Rational(-1)}});
    SparsePolynomial d0 = f.partial_derivative(0);
    SparsePolynomial d1 = f.partial_derivative(1);
    EXPECT_EQ(d0, SparsePolynomial::from_terms(2, {{{1, 1}, Rational(6)}}));
    EXPECT_EQ(d1, SparsePolynomial::from_terms(
                      2, {{{2, 0}, Rational(3)}, {{0, 2}, Rational(-3)}}));

    RatVector p{Rational(2), Rational(-1)};
    RatVector grad = f.gradient_at(p);
    EXPECT_EQ(grad[0], Rational(-12));
    EXPECT_EQ(grad[1], Rational(9));

    RatMatrix H = f.hessian_at(p);
    EXPECT_EQ(H.at(0, 0), Rational(-6));   // 6 x1
    EXPECT_EQ(H.at(0, 1), Rational(12));   // 6 x0
    EXPECT_EQ(H.at(1, 0), H.at(0, 1));
    EXPECT_EQ(H.at(1, 1), Rational(6));    // -6 x1
}

TEST(Polynomial, ProductMatchesEvaluationHomomorphism) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        SparsePolynomial f = testsupport::random_convex_polynomial(2, rng);
        SparsePolynomial g = testsupport::random_convex_polynomial(2, rng);
        RatVector p = testsupport::random_rational_vector(2, rng, 5, 3);
        EXPECT_EQ((f * g).eval(p), f.eval(p) * g.eval(p));
        EXPECT_EQ((f + g).eval(p), f.eval(p) + g.eval(p));
        EXPECT_EQ((f - g).eval(p), f.eval(p) - g.eval(p));
    }
}

TEST(Polynomial, SubstituteAffineAgreesPointwise) {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePolynomial f = testsupport::random_convex_polynomial(3, rng);
        // Map y in R^2 -> B y + offset in R^3.
        std::vector<RatVector> basis{testsupport::random_rational_vector(3, rng, 3, 2),
                                     testsupport::random_rational_vector(3, rng, 3, 2)};
        RatVector offset = testsupport::random_rational_vector(3, rng, 2, 2);
        SparsePolynomial g = substitute_affine(f, basis, offset);
        ASSERT_EQ(g.num_vars(), 2u);
        for (int s = 0; s < 10; ++s) {
            RatVector y = testsupport::random_rational_vector(2, rng, 4, 3);
            RatVector x = offset;
            for (std::size_t i = 0; i < 3; ++i) {
                x[i] += basis[0][i] * y[0] + basis[1][i] * y[1];
            }
            EXPECT_EQ(g.eval(y), f.eval(x));
        }
    }
}

TEST(Polynomial, SubstituteAffineEmptyBasisGivesConstant) {
    SparsePolynomial f = quartic_example();
    SparsePolynomial c = substitute_affine(f, {}, {Rational(2)});
    EXPECT_EQ(c.num_vars(), 0u);
    EXPECT_EQ(c.eval({}), Rational(18));
}

TEST(Polynomial, ToStringReadableForms) {
    SparsePolynomial f = SparsePolynomial::from_terms(
        3, {{{2, 1, 0}, Rational(3, 2)}, {{0, 0, 1}, Rational(-1)}, {{0, 0, 0}, Rational(1)}});
    EXPECT_EQ(f.to_string(), "3/2*x0^2*x1 - x2 + 1");
    EXPECT_EQ(SparsePolynomial(2).to_string(), "0");
}

TEST(Polynomial, CanonicalizationDropsZeroTerms) {
    SparsePolynomial f(1);
    f.add_term({2}, Rational(5));
    f.add_term({2}, Rational(-5));
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.terms().size(), 0u);
}

}  // namespace
}  // namespace convexpoly

#include <convexpoly/solver.hpp>

#include <gtest/gtest.h>

#include <convexpoly/prng.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace convexpoly {
namespace {

SparsePolynomial quartic_line() {
    return SparsePolynomial::from_terms(1, {{{4}, Rational(1)}, {{1}, Rational(1)}});
}

TEST(Solve, QuarticOverTheWholeLine) {
    SolveOptions opt;
    opt.eps = Rational(1, 10000);
    SolveOutcome out = solve(quartic_line(), Polyhedron::universe(1), opt);
    ASSERT_EQ(out.status, SolveStatus::Solved);
    EXPECT_EQ(out.value, quartic_line().eval(out.point));
    Rational xstar = testsupport::newton_root(
        {Rational(1), Rational(0), Rational(0), Rational(4)}, -0.63, 40, 512);
    Rational fstar = Rational(3, 4) * xstar;
    EXPECT_LE(out.value, fstar + opt.eps);
    EXPECT_GE(out.value, fstar - Rational(1) / Rational(int_pow(Integer(2), 128)));
    EXPECT_GT(out.radius, 0);
    EXPECT_EQ(out.diagnostics.structure_rank, 1u);
    EXPECT_FALSE(out.diagnostics.linear_only);
}

TEST(Solve, LinearObjectiveWithBindingCap) {
    SparsePolynomial f = SparsePolynomial::variable(1, 0).scale(Rational(-1));
    Polyhedron cap = {RatMatrix::from_rows({{Rational(1)}}, 1), {Rational(5)}};
    SolveOptions opt;
    opt.eps = Rational(1, 1024);
    SolveOutcome out = solve(f, cap, opt);
    ASSERT_EQ(out.status, SolveStatus::Solved);
    EXPECT_TRUE(cap.contains(out.point));
    EXPECT_EQ(out.value, -out.point[0]);
    EXPECT_LE(out.value, Rational(-5) + opt.eps);
    EXPECT_GE(out.value, Rational(-5));
    EXPECT_TRUE(out.diagnostics.linear_only);
    EXPECT_TRUE(out.diagnostics.has_linear_part);
}

TEST(Solve, UnboundedLinearProducesVerifiableRay) {
    SparsePolynomial f = SparsePolynomial::variable(1, 0).scale(Rational(-1));
    Polyhedron P = {RatMatrix::from_rows({{Rational(-1)}}, 1), {Rational(0)}};
    SolveOutcome out = solve(f, P);
    ASSERT_EQ(out.status, SolveStatus::Unbounded);
    const RatVector& r = out.ray;
    ASSERT_EQ(r.size(), 1u);

    // Certificate identities: A r <= 0, U r = 0, <w, r> = 1.
    StructureDecomposition dec = decompose(f);
    for (std::size_t i = 0; i < P.num_rows(); ++i) EXPECT_LE(dot(P.A.row(i), r), 0);
    for (std::size_t i = 0; i < dec.U.rows(); ++i) EXPECT_EQ(dot(dec.U.row(i), r), 0);
    EXPECT_EQ(dot(dec.w, r), Rational(1));

    // The objective decreases without bound along the ray, exactly.
    RatVector a = lp_feasible_point(P).point;
    Rational fa = f.eval(a);
    Rational prev = fa;
    for (long t : {1L, 100L, 10000L}) {
        RatVector x = a;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += Rational(t) * r[i];
        Rational val = f.eval(x);
        EXPECT_LT(val, prev);
        EXPECT_EQ(val, fa - Rational(t));  // linear objective: slope is exactly -1
        prev = val;
    }
}

TEST(Solve, UnboundedThroughTheKernelDirection) {
    // x1^4 - x2 over {-x2 <= 0}: the reduced part is bounded below but the
    // linear part escapes along x2.
    SparsePolynomial f =
        SparsePolynomial::from_terms(2, {{{4, 0}, Rational(1)}, {{0, 1}, Rational(-1)}});
    Polyhedron P = {RatMatrix::from_rows({{Rational(0), Rational(-1)}}, 2), {Rational(0)}};
    SolveOutcome out = solve(f, P);
    ASSERT_EQ(out.status, SolveStatus::Unbounded);
    StructureDecomposition dec = decompose(f);
    for (std::size_t i = 0; i < dec.U.rows(); ++i) EXPECT_EQ(dot(dec.U.row(i), out.ray), 0);
    EXPECT_EQ(dot(dec.w, out.ray), Rational(1));
    RatVector a = lp_feasible_point(P).point;
    for (long t : {1L, 100L, 10000L}) {
        RatVector x = a;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += Rational(t) * out.ray[i];
        EXPECT_LT(f.eval(x), f.eval(a));
    }
}

TEST(Solve, EmptyPolyhedronYieldsNormalizedFarkas) {
    SparsePolynomial f = SparsePolynomial::variable(1, 0);
    Polyhedron empty = {RatMatrix::from_rows({{Rational(1)}, {Rational(-1)}}, 1),
                        {Rational(-1), Rational(-2)}};
    SolveOutcome out = solve(f, empty);
    ASSERT_EQ(out.status, SolveStatus::EmptyPolyhedron);
    ASSERT_EQ(out.farkas.size(), 2u);
    Rational by(0);
    RatVector aty(1, Rational(0));
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_GE(out.farkas[i], 0);
        by += out.farkas[i] * empty.b[i];
        aty[0] += out.farkas[i] * empty.A.at(i, 0);
    }
    EXPECT_EQ(aty[0], Rational(0));
    EXPECT_EQ(by, Rational(-1));
}

TEST(Solve, ConcaveObjectiveIsRejected) {
    SparsePolynomial f = SparsePolynomial::from_terms(1, {{{2}, Rational(-1)}});
    SolveOptions opt;
    opt.mode = SearchMode::Exhaustive;
    SolveOutcome out = solve(f, Polyhedron::universe(1), opt);
    ASSERT_EQ(out.status, SolveStatus::NotConvex);
    EXPECT_TRUE(out.diagnostics.exhaustive_search);
    EXPECT_FALSE(out.diagnostics.message.empty());
}

TEST(Solve, EqualityConstrainedProblemUsesTheAffineHull) {
    // x1^2 + x2 on {x1 = 0, x2 >= -1}: optimum -1 at (0, -1).
    SparsePolynomial f =
        SparsePolynomial::from_terms(2, {{{2, 0}, Rational(1)}, {{0, 1}, Rational(1)}});
    Polyhedron P = {RatMatrix::from_rows({{Rational(1), Rational(0)},
                                          {Rational(-1), Rational(0)},
                                          {Rational(0), Rational(-1)}},
                                         2),
                    {Rational(0), Rational(0), Rational(1)}};
    SolveOptions opt;
    opt.eps = Rational(1, 10000);
    SolveOutcome out = solve(f, P, opt);
    ASSERT_EQ(out.status, SolveStatus::Solved);
    EXPECT_TRUE(P.contains(out.point));
    EXPECT_EQ(out.point[0], Rational(0));
    EXPECT_LE(out.value, Rational(-1) + opt.eps);
    EXPECT_GE(out.value, Rational(-1));
}

TEST(Solve, RandomConvexInstancesStayExactAndNearOptimal) {
    SplitMix64 rng(20260819);
    for (int trial = 0; trial < 5; ++trial) {
        std::size_t n = 1 + rng.below(2);
        SparsePolynomial f = testsupport::random_convex_polynomial(n, rng);
        RatVector x0 = testsupport::random_rational_vector(n, rng, 2, 2);
        Polyhedron P = testsupport::random_polytope_containing(x0, 1, Rational(4), rng);
        SolveOptions opt;
        opt.eps = Rational(1, 256);
        SolveOutcome out = solve(f, P, opt);
        ASSERT_EQ(out.status, SolveStatus::Solved);
        EXPECT_TRUE(P.contains(out.point));
        EXPECT_EQ(out.value, f.eval(out.point));
        // Any feasible point upper-bounds the optimum.
        EXPECT_LE(out.value, f.eval(x0) + opt.eps);
    }
}

TEST(Solve, ArgumentValidation) {
    SparsePolynomial f = SparsePolynomial::variable(2, 0);
    EXPECT_THROW(solve(f, Polyhedron::universe(1)), std::invalid_argument);
    SolveOptions bad;
    bad.eps = Rational(0);
    EXPECT_THROW(solve(SparsePolynomial::variable(1, 0), Polyhedron::universe(1), bad),
                 std::invalid_argument);
}

TEST(SampledConvexityCheck, FrozenVerdicts) {
    EXPECT_FALSE(sampled_convexity_check(quartic_line()).has_value());
    EXPECT_FALSE(
        sampled_convexity_check(SparsePolynomial::from_terms(1, {{{2}, Rational(1)}}))
            .has_value());

    // (x1^2 - x2)^2 + (x2 - 2)^2 is not convex; the witness must carry an
    // exactly indefinite Hessian.
    SparsePolynomial g = SparsePolynomial::from_terms(2, {{{4, 0}, Rational(1)},
                                                          {{2, 1}, Rational(-2)},
                                                          {{0, 2}, Rational(2)},
                                                          {{0, 1}, Rational(-4)},
                                                          {{0, 0}, Rational(4)}});
    std::optional<RatVector> witness = sampled_convexity_check(g);
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(ldlt_definiteness(g.hessian_at(*witness)), Definiteness::Indefinite);
}

TEST(SampledConvexityCheck, IsDeterministicInTheSeed) {
    SparsePolynomial g = SparsePolynomial::from_terms(2, {{{4, 0}, Rational(1)},
                                                          {{2, 1}, Rational(-2)},
                                                          {{0, 2}, Rational(2)},
                                                          {{0, 1}, Rational(-4)},
                                                          {{0, 0}, Rational(4)}});
    std::optional<RatVector> a = sampled_convexity_check(g, 7, 200);
    std::optional<RatVector> b = sampled_convexity_check(g, 7, 200);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_EQ(*a, *b);
}

}  // namespace
}  // namespace convexpoly

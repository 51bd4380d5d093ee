// Acceptance gate: every criterion prints exactly one line
//   [ACCEPTANCE] C<n>: PASS|FAIL
// and fails the corresponding gtest assertion when red. Each criterion is
// self-contained and checked against independent oracles where one exists.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <convexpoly/json_io.hpp>
#include <convexpoly/prng.hpp>
#include <convexpoly/solver.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace convexpoly {
namespace {

bool report(int n, bool ok) {
    std::printf("[ACCEPTANCE] C%d: %s\n", n, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    return ok;
}

void run_criterion(int n, const std::function<bool()>& body) {
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    EXPECT_TRUE(report(n, ok)) << (error.empty() ? "criterion predicate failed" : error);
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational pow2_inverse(unsigned k) { return Rational(1) / Rational(int_pow(Integer(2), k)); }

SparsePolynomial linear_from(const RatVector& c) {
    SparsePolynomial f(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) f = f + SparsePolynomial::variable(c.size(), i).scale(c[i]);
    return f;
}

// x0*x3^2 + 2*x1*x3*x4 + x2*x4^2: convex nowhere strictly, Hessian singular
// identically.
SparsePolynomial hesse_polynomial() {
    return SparsePolynomial::from_terms(5, {{{1, 0, 0, 2, 0}, Rational(1)},
                                            {{0, 1, 0, 1, 1}, Rational(2)},
                                            {{0, 0, 1, 0, 2}, Rational(1)}});
}

TEST(Acceptance, C01QuarticToSixDigits) {
    run_criterion(1, [] {
        const auto t0 = std::chrono::steady_clock::now();
        SparsePolynomial f =
            SparsePolynomial::from_terms(1, {{{4}, Rational(1)}, {{1}, Rational(1)}});
        SolveOptions opt;
        opt.eps = Rational(1, 1000000);
        SolveOutcome out = solve(f, Polyhedron::universe(1), opt);
        const double elapsed = seconds_since(t0);

        // Independent optimum: f* = (3/4) x* at the root x* of 4x^3 + 1.
        Rational xstar = testsupport::newton_root(
            {Rational(1), Rational(0), Rational(0), Rational(4)}, -0.63, 80, 2048);
        Rational fstar = Rational(3, 4) * xstar;
        return out.status == SolveStatus::Solved && out.value == f.eval(out.point) &&
               out.value >= fstar - pow2_inverse(160) && out.value <= fstar + opt.eps &&
               elapsed < 10.0;
    });
}

TEST(Acceptance, C02PerfectSquareSextic) {
    run_criterion(2, [] {
        const auto t0 = std::chrono::steady_clock::now();
        // (x^3 + x + 1)^2, expanded.
        SparsePolynomial cubic = SparsePolynomial::from_terms(
            1, {{{3}, Rational(1)}, {{1}, Rational(1)}, {{0}, Rational(1)}});
        SparsePolynomial f = cubic * cubic;
        SolveOptions opt;
        opt.eps = Rational(1, 1000000);
        SolveOutcome out = solve(f, Polyhedron::universe(1), opt);
        const double elapsed = seconds_since(t0);
        return out.status == SolveStatus::Solved && out.value == f.eval(out.point) &&
               out.value >= 0 && out.value <= opt.eps && elapsed < 10.0;
    });
}

TEST(Acceptance, C03HesseFormIsCaughtExhaustively) {
    run_criterion(3, [] {
        const auto t0 = std::chrono::steady_clock::now();
        SparsePolynomial p = hesse_polynomial();

        bool evidence = false;
        SearchOptions search;
        search.mode = SearchMode::Exhaustive;
        try {
            structure_with_bound(p, search);
        } catch (const NotConvexEvidence& e) {
            evidence = e.exhaustive;
        }
        if (!evidence) return false;

        // The Hessian determinant vanishes identically: spot-check 20 points.
        SplitMix64 rng(3);
        for (int s = 0; s < 20; ++s) {
            RatVector a = testsupport::random_rational_vector(5, rng, 50, 9);
            if (bareiss_det(p.hessian_at(a)) != 0) return false;
        }
        return seconds_since(t0) < 60.0;
    });
}

TEST(Acceptance, C04UnboundednessCertificateAndBindingCap) {
    run_criterion(4, [] {
        SparsePolynomial f = SparsePolynomial::variable(1, 0).scale(Rational(-1));

        Polyhedron half = {RatMatrix::from_rows({{Rational(-1)}}, 1), {Rational(0)}};
        SolveOutcome ub = solve(f, half);
        if (ub.status != SolveStatus::Unbounded) return false;
        StructureDecomposition dec = decompose(f);
        for (std::size_t i = 0; i < half.num_rows(); ++i)
            if (dot(half.A.row(i), ub.ray) > 0) return false;
        for (std::size_t i = 0; i < dec.U.rows(); ++i)
            if (dot(dec.U.row(i), ub.ray) != 0) return false;
        if (dot(dec.w, ub.ray) != 1) return false;

        Polyhedron cap = {RatMatrix::from_rows({{Rational(1)}}, 1), {Rational(5)}};
        SolveOptions opt;
        opt.eps = pow2_inverse(10);
        SolveOutcome capped = solve(f, cap, opt);
        return capped.status == SolveStatus::Solved && cap.contains(capped.point) &&
               capped.value == f.eval(capped.point) && capped.value >= Rational(-5) &&
               capped.value <= Rational(-5) + opt.eps;
    });
}

TEST(Acceptance, C05DecompositionIdentitiesOnRandomConvexInstances) {
    run_criterion(5, [] {
        SplitMix64 rng(505);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + rng.below(4);
            SparsePolynomial f = testsupport::random_convex_polynomial(n, rng);
            StructureDecomposition dec = decompose(f);

            // Exact residual: f(x) = f_hat(U x) - <w, x> at random points.
            for (int s = 0; s < 10; ++s) {
                RatVector x = testsupport::random_rational_vector(n, rng, 20, 7);
                RatVector ux = dec.U.apply(x);
                if (dec.f_hat.eval(ux) - dot(dec.w, x) != f.eval(x)) return false;
            }

            // Orthogonality of the parts.
            for (std::size_t i = 0; i < dec.U.rows(); ++i) {
                if (dot(dec.U.row(i), dec.w) != 0) return false;
                for (std::size_t j = i + 1; j < dec.U.rows(); ++j)
                    if (dot(dec.U.row(i), dec.U.row(j)) != 0) return false;
            }

            // Invariant directions: the directional derivative vanishes as a
            // polynomial, not merely at samples.
            for (const RatVector& v : dec.kernel) {
                SparsePolynomial dv(n);
                for (std::size_t i = 0; i < n; ++i)
                    dv = dv + f.partial_derivative(i).scale(v[i]);
                if (!dv.is_zero()) return false;
            }
        }
        return true;
    });
}

TEST(Acceptance, C06QuadraticLowerBoundsOnRandomConvexInstances) {
    run_criterion(6, [] {
        SplitMix64 rng(505);  // same instance stream as C5
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + rng.below(4);
            SparsePolynomial f = testsupport::random_convex_polynomial(n, rng);
            for (int s = 0; s < 10; ++s) testsupport::random_rational_vector(n, rng, 20, 7);

            StructureWithBound swb = structure_with_bound(f, {});
            if (swb.linear_only) continue;
            if (!swb.bound) return false;
            const QuadraticLowerBound& q = *swb.bound;
            const SparsePolynomial& fh = swb.decomposition.f_hat;
            const std::size_t k = fh.num_vars();

            // Scale relations between the strong-convexity parameters.
            Rational d2 = Rational(static_cast<long>(q.degree) * static_cast<long>(q.degree));
            Rational lambda_hat = q.mu * 2 * d2;
            if (q.mu != 2 * q.quad_coeff) return false;
            if (lambda_hat <= 0) return false;

            // q underestimates f_hat at 100 points of [-10, 10]^k.
            for (int s = 0; s < 100; ++s) {
                RatVector y(k);
                for (std::size_t i = 0; i < k; ++i)
                    y[i] = Rational(rng.range(-40, 40)) / Rational(4);
                if (q.eval(y) > fh.eval(y)) return false;
            }

            // lambda_hat really is a lower bound on the smallest eigenvalue of
            // the Hessian at the anchor (characteristic-polynomial oracle).
            if (k <= 3 && !testsupport::eigenvalues_at_least(fh.hessian_at(q.a), lambda_hat))
                return false;
        }
        return true;
    });
}

TEST(Acceptance, C07NormBoundsCoverOracleMinimizers) {
    run_criterion(7, [] {
        SplitMix64 rng(707);
        const Rational slack = pow2_inverse(100);  // Newton oracle rounding allowance

        for (int trial = 0; trial < 15; ++trial) {
            std::size_t n = 1 + rng.below(2);
            SparsePolynomial f = testsupport::random_strongly_convex(n, rng);
            Polyhedron P =
                testsupport::random_polytope_containing(RatVector(n, Rational(0)), 0,
                                                        Rational(20), rng);
            RatVector xstar = testsupport::newton_minimize(f, Rational(20));
            if (!P.contains(xstar)) return false;  // interior optimum expected

            StructureWithBound swb = structure_with_bound(f, {});
            RadiusBound rb = radius_R(f, P, swb.decomposition, swb.bound);
            if (rb.R * rb.R + slack < norm_sq(xstar)) return false;
            if (rb.B_U * rb.B_U + slack < norm_sq(swb.decomposition.U.apply(xstar)))
                return false;
            Rational wx = dot(swb.decomposition.w, xstar);
            if (wx < 0) wx = -wx;
            if (rb.B_w + slack < wx) return false;
        }

        for (int trial = 0; trial < 15; ++trial) {
            std::size_t n = 1 + rng.below(3);
            RatVector c = testsupport::random_rational_vector(n, rng, 4, 2);
            bool nonzero = false;
            for (const Rational& ci : c) nonzero = nonzero || ci != 0;
            if (!nonzero) c[0] = 1;
            SparsePolynomial f = linear_from(c);
            RatVector x0 = testsupport::random_rational_vector(n, rng, 2, 2);
            Polyhedron P = testsupport::random_polytope_containing(x0, 2, Rational(5), rng);

            LpOutcome lp = lp_optimize(c, P);
            if (lp.status != LpStatus::Optimal) return false;

            StructureWithBound swb = structure_with_bound(f, {});
            RadiusBound rb = radius_R(f, P, swb.decomposition, swb.bound);
            if (rb.R * rb.R < norm_sq(lp.point)) return false;
            if (rb.B_U * rb.B_U < norm_sq(swb.decomposition.U.apply(lp.point))) return false;
            Rational wx = dot(swb.decomposition.w, lp.point);
            if (wx < 0) wx = -wx;
            if (rb.B_w < wx) return false;
        }
        return true;
    });
}

TEST(Acceptance, C08EllipsoidMatchesSimplexOnLinearObjectives) {
    run_criterion(8, [] {
        SplitMix64 rng(808);
        const Rational eps = pow2_inverse(16);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 1 + rng.below(3);
            RatVector c = testsupport::random_rational_vector(n, rng, 4, 2);
            bool nonzero = false;
            for (const Rational& ci : c) nonzero = nonzero || ci != 0;
            if (!nonzero) c[0] = 1;
            RatVector x0 = testsupport::random_rational_vector(n, rng, 2, 2);
            Polyhedron P = testsupport::random_polytope_containing(x0, 2, Rational(5), rng);

            LpOutcome lp = lp_optimize(c, P);
            if (lp.status != LpStatus::Optimal) return false;
            MinimizeResult res = minimize_over_ball(linear_from(c), P, Rational(20), eps);
            if (!P.contains(res.point)) return false;
            if (res.value < lp.value || res.value > lp.value + eps) return false;
        }
        return true;
    });
}

TEST(Acceptance, C09ExactLinearAlgebraContracts) {
    run_criterion(9, [] {
        SplitMix64 rng(909);

        // Hermite normal form: identity, unimodularity, pivot profile.
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t m = 1 + rng.below(6), n = 1 + rng.below(4);
            RatMatrix A = testsupport::random_integer_matrix(m, n, rng, 9);
            HnfResult h = hnf_decompose(A);
            const std::size_t r = h.U_part.cols();
            if (h.K_part.cols() + r != n) return false;

            RatMatrix V(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < r; ++j) V.at(i, j) = h.U_part.at(i, j);
                for (std::size_t j = r; j < n; ++j) V.at(i, j) = h.K_part.at(i, j - r);
            }
            Rational det = bareiss_det(V);
            if (det != 1 && det != -1) return false;

            RatMatrix AV = A * V;
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < r; ++j)
                    if (AV.at(i, j) != h.H.at(i, j)) return false;
                for (std::size_t j = r; j < n; ++j)
                    if (AV.at(i, j) != 0) return false;
            }

            std::size_t prev_pivot = 0;
            bool first = true;
            for (std::size_t j = 0; j < r; ++j) {
                std::size_t pivot = m;
                for (std::size_t i = 0; i < m; ++i)
                    if (h.H.at(i, j) != 0) { pivot = i; break; }
                if (pivot == m) return false;  // zero column inside H
                if (!first && pivot <= prev_pivot) return false;
                if (h.H.at(pivot, j) <= 0) return false;
                for (std::size_t jj = 0; jj < j; ++jj) {
                    const Rational& e = h.H.at(pivot, jj);
                    if (e < 0 || e >= h.H.at(pivot, j)) return false;
                }
                prev_pivot = pivot;
                first = false;
            }
        }

        // Gram-Schmidt: exact orthogonality and prefix-span agreement.
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t count = 1 + rng.below(5), dim = 1 + rng.below(4);
            std::vector<RatVector> input;
            for (std::size_t i = 0; i < count; ++i)
                input.push_back(testsupport::random_rational_vector(dim, rng, 5, 3));
            GramSchmidtResult gs = gram_schmidt(input);
            for (std::size_t i = 0; i < gs.vectors.size(); ++i)
                for (std::size_t j = i + 1; j < gs.vectors.size(); ++j)
                    if (dot(gs.vectors[i], gs.vectors[j]) != 0) return false;
            for (std::size_t i = 0; i < gs.vectors.size(); ++i) {
                RatVector resid = input[gs.kept_indices[i]];
                for (std::size_t j = 0; j < i; ++j) {
                    Rational coef = dot(resid, gs.vectors[j]) / norm_sq(gs.vectors[j]);
                    resid = vec_sub(resid, vec_scale(coef, gs.vectors[j]));
                }
                if (resid != gs.vectors[i]) return false;
            }
        }

        // Kernel / solution-direction / complement splits.
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t m = 1 + rng.below(4), n = 1 + rng.below(4);
            RatMatrix A(m, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    A.at(i, j) = testsupport::random_rational(rng, 6, 3);
            RatVector b;
            if (trial % 2 == 0) {
                b = A.apply(testsupport::random_rational_vector(n, rng, 4, 3));
            } else {
                b = testsupport::random_rational_vector(m, rng, 6, 3);
            }
            InverseImageSplit split = inverse_image_split(A, b);

            std::vector<RatVector> all = split.kernel_basis;
            if (!is_zero_vector(split.w)) {
                if (A.apply(split.w) != b) return false;
                all.push_back(split.w);
            }
            for (const RatVector& v : split.complement_basis) all.push_back(v);
            if (all.size() != n) return false;
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (is_zero_vector(all[i])) return false;
                for (std::size_t j = i + 1; j < all.size(); ++j)
                    if (dot(all[i], all[j]) != 0) return false;
            }
            for (const RatVector& k : split.kernel_basis)
                if (!is_zero_vector(A.apply(k))) return false;
        }
        return true;
    });
}

TEST(Acceptance, C10FeasibilityDichotomyWithCertificates) {
    run_criterion(10, [] {
        SplitMix64 rng(1010);
        int feasible = 0, infeasible = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t m = 1 + rng.below(5), n = 1 + rng.below(4);
            Polyhedron P = testsupport::random_system(m, n, rng);
            LpOutcome out = lp_feasible_point(P);
            if (out.status == LpStatus::Optimal) {
                ++feasible;
                if (!P.contains(out.point)) return false;
            } else if (out.status == LpStatus::Infeasible) {
                ++infeasible;
                if (out.farkas.size() != m) return false;
                Rational by(0);
                RatVector aty(n, Rational(0));
                for (std::size_t i = 0; i < m; ++i) {
                    if (out.farkas[i] < 0) return false;
                    by += out.farkas[i] * P.b[i];
                    for (std::size_t j = 0; j < n; ++j)
                        aty[j] += out.farkas[i] * P.A.at(i, j);
                }
                if (!is_zero_vector(aty)) return false;
                if (by >= 0) return false;
            } else {
                return false;
            }
        }
        return feasible > 0 && infeasible > 0;
    });
}

TEST(Acceptance, C11EqualityConstrainedQuadratic) {
    run_criterion(11, [] {
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
        return out.status == SolveStatus::Solved && P.contains(out.point) &&
               out.value == f.eval(out.point) && out.value >= Rational(-1) &&
               out.value <= Rational(-1) + opt.eps;
    });
}

TEST(Acceptance, C12CommandLineRunsAreByteDeterministic) {
    run_criterion(12, [] {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "convexpoly_acceptance";
        fs::create_directories(dir);

        SparsePolynomial f =
            SparsePolynomial::from_terms(1, {{{4}, Rational(1)}, {{1}, Rational(1)}});
        Polyhedron P = {RatMatrix::from_rows({{Rational(1)}}, 1), {Rational(5)}};
        const fs::path fpath = dir / "objective.json";
        const fs::path ppath = dir / "constraints.json";
        std::ofstream(fpath) << polynomial_to_json(f);
        std::ofstream(ppath) << polyhedron_to_json(P);

        auto run = [&](const fs::path& out) {
            std::string cmd = std::string(CONVEXPOLY_CLI_PATH) + " solve --poly " +
                              fpath.string() + " --constraints " + ppath.string() +
                              " --eps 1/1048576 --seed 42 --mode randomized --out " +
                              out.string() + " > /dev/null 2>&1";
            return std::system(cmd.c_str());
        };
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };

        const fs::path out1 = dir / "result1.json";
        const fs::path out2 = dir / "result2.json";
        if (run(out1) != 0) return false;
        if (run(out2) != 0) return false;
        const std::string a = slurp(out1), b = slurp(out2);
        return !a.empty() && a == b;
    });
}

}  // namespace
}  // namespace convexpoly

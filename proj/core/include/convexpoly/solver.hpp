#pragma once

/**
 * @file solver.hpp
 * @brief End-to-end driver: minimize a convex polynomial over a polyhedron.
 *
 * The pipeline chains exact feasibility, structural decomposition with a
 * strong-convexity certificate, unboundedness detection, the a-priori
 * solution-norm radius, and the ellipsoid-based minimization to accuracy eps.
 * Every returned point is exactly feasible; values are exact rationals.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "convexpoly/bounds.hpp"
#include "convexpoly/ellipsoid.hpp"
#include "convexpoly/lp.hpp"
#include "convexpoly/polynomial.hpp"
#include "convexpoly/structure.hpp"

namespace convexpoly {

enum class SolveStatus {
    Solved,           ///< point within eps of the optimal value
    Unbounded,        ///< explicit improving ray from the feasible set
    EmptyPolyhedron,  ///< Farkas certificate of infeasibility
    NotConvex,        ///< no positive definite point found for the reduced polynomial
};

struct SolveOptions {
    Rational eps = Rational(1, 1048576);  ///< accuracy, default 2^-20
    SearchMode mode = SearchMode::Randomized;
    std::uint64_t seed = 0;
    std::size_t max_tries = 0;  ///< 0 = 64 * reduced dimension
};

struct SolveDiagnostics {
    std::size_t structure_rank = 0;  ///< variables of the reduced polynomial
    std::size_t kernel_dim = 0;
    bool linear_only = false;
    bool has_linear_part = false;  ///< w != 0
    bool exhaustive_search = false;
    std::string message;
    MinimizeDiagnostics minimize;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Solved;
    RatVector point;   ///< Solved: exactly feasible point
    Rational value;    ///< Solved: f(point), within eps of the optimum
    Rational radius;   ///< Solved: a-priori norm bound used for the search
    RatVector ray;     ///< Unbounded: improving ray
    RatVector farkas;  ///< EmptyPolyhedron: certificate with b^T y = -1
    SolveDiagnostics diagnostics;
};

/// Solve min f(x) over P to accuracy options.eps.
SolveOutcome solve(const SparsePolynomial& f, const Polyhedron& P,
                   const SolveOptions& options = {});

/**
 * Sample random rational points and test the Hessian of f for indefiniteness.
 * Returns a witness point where the Hessian is indefinite (an exact proof
 * that f is not convex), or std::nullopt when no evidence was found.
 * samples = 0 means 64 * num_vars + 1 attempts, the origin included first.
 */
std::optional<RatVector> sampled_convexity_check(const SparsePolynomial& f,
                                                 std::uint64_t seed = 0,
                                                 std::size_t samples = 0);

}  // namespace convexpoly

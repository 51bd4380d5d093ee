#pragma once

/**
 * @file bounds.hpp
 * @brief Explicit solution-norm bounds and unboundedness certificates.
 *
 * Given the structural decomposition f(x) = f_hat(U*x) - <w, x> and a
 * feasible polyhedron P, these routines either certify that inf f over P is
 * minus infinity (an explicit improving ray) or produce a rational radius R
 * such that the ball of radius R contains a minimizer. The radius is built
 * from a dual witness for the linear part, the strong-convexity parameters of
 * the quadratic lower bound, and a lifting step that accounts for directions
 * not constrained by the objective.
 */

#include <optional>

#include "convexpoly/lp.hpp"
#include "convexpoly/polynomial.hpp"
#include "convexpoly/structure.hpp"

namespace convexpoly {

/**
 * Search for a ray proving unboundedness: r with A*r <= 0, U*r = 0 and
 * <w, r> = 1, so that f decreases without bound along r from any feasible
 * point. Returns the ray if one exists, std::nullopt otherwise (in particular
 * whenever w = 0). Assumes P itself is feasible.
 */
std::optional<RatVector> unboundedness_ray(const Polyhedron& P, const StructureDecomposition& dec);

/// Dual witness lambda >= 0, z with A^T lambda + U^T z = w. Exists exactly
/// when no unboundedness ray does.
struct FarkasWitness {
    RatVector lambda;
    RatVector z;
};

std::optional<FarkasWitness> farkas_witness(const Polyhedron& P, const StructureDecomposition& dec);

/// Norm bounds for the components of some minimizer x*:
///   B_U  bounds |U x*| (the reduced coordinates),
///   B_w  bounds <w, x*>,
///   B_UW bounds the Euclidean norm of the projection of x* onto
///        span(rows of U) + span(w).
struct SubspaceNormBound {
    Rational B_U;
    Rational B_w;
    Rational B_UW;
};

/**
 * Compute the subspace norm bounds from a feasible point, the dual witness,
 * and the quadratic lower bound (absent exactly when the reduced polynomial
 * has no variables).
 */
SubspaceNormBound subspace_norm_bound(const SparsePolynomial& f, const Polyhedron& P,
                                      const StructureDecomposition& dec,
                                      const std::optional<QuadraticLowerBound>& bound,
                                      const RatVector& feasible_point,
                                      const FarkasWitness& witness);

/**
 * Lift the subspace bound to a bound on the full solution norm: some
 * minimizer over P lies in the Euclidean ball of the returned radius. The
 * lifting uses integer-scaled row norms of the active constraint system as a
 * Cramer-style growth factor.
 */
Rational lifting_norm_bound(const Polyhedron& P, const StructureDecomposition& dec,
                            const Rational& b_uw);

/// All bound components together with the final radius.
struct RadiusBound {
    Rational B_U;
    Rational B_w;
    Rational B_UW;
    Rational R;
    RatVector feasible_point;
    FarkasWitness witness;
};

/**
 * Full chain: find a feasible point, compute the dual witness, the subspace
 * bounds, and the lifted radius. Throws std::domain_error if P is infeasible
 * or if an unboundedness ray exists (no witness).
 */
RadiusBound radius_R(const SparsePolynomial& f, const Polyhedron& P,
                     const StructureDecomposition& dec,
                     const std::optional<QuadraticLowerBound>& bound);

}  // namespace convexpoly

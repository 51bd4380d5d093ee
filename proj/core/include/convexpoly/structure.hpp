#pragma once

/**
 * @file structure.hpp
 * @brief Structural decomposition of convex polynomials.
 *
 * Every polynomial f admits a representation f(x) = g(U*x) - <w, x> where the
 * rows of U are orthogonal, g is a polynomial in k <= n variables with no
 * invariant or affine directions left, and w is an explicit linear part. The
 * routines here compute that representation exactly, search for a point with
 * positive definite Hessian, and turn such a point into a strongly convex
 * quadratic lower bound on g.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "convexpoly/linalg.hpp"
#include "convexpoly/polynomial.hpp"
#include "convexpoly/rational.hpp"

namespace convexpoly {

/// Coefficient matrix of the gradient: row per monomial in the union of the
/// partial derivative supports (constant monomial included, map order), and
/// entry (s, i) equal to the coefficient of monomial s in df/dx_i. The
/// one_vector expands the constant polynomial 1 over the same rows.
struct GradientMatrix {
    std::vector<MultiIndex> support;
    RatMatrix matrix;
    RatVector one_vector;
};

GradientMatrix build_gradient_matrix(const SparsePolynomial& f);

/// Exact decomposition f(x) = f_hat(U*x) - <w, x>.
struct StructureDecomposition {
    /// k x n matrix with orthogonal rows spanning the non-degenerate part.
    RatMatrix U;
    /// Columns of the right inverse of U: scaled_basis[i] = U_i / |U_i|^2,
    /// so that U * scaled_basis = I_k. f_hat(y) = f(sum_i y_i scaled_basis[i]).
    std::vector<RatVector> scaled_basis;
    /// Linear part; the zero vector when f has no affine descent direction.
    RatVector w;
    /// Orthogonal basis of the directions along which f is constant.
    std::vector<RatVector> kernel;
    /// The reduced polynomial in k variables.
    SparsePolynomial f_hat;
};

/// Thrown if the computed parts fail the exact identity
/// f(x) = f_hat(U*x) - <w, x>; indicates an internal error.
class ResidualNonzero : public std::logic_error {
  public:
    explicit ResidualNonzero(const std::string& what) : std::logic_error(what) {}
};

/// Compute the structural decomposition of f.
StructureDecomposition decompose(const SparsePolynomial& f);

/// Strategy for locating a point with positive definite Hessian.
enum class SearchMode { Exhaustive, Randomized };

struct SearchOptions {
    SearchMode mode = SearchMode::Randomized;
    std::uint64_t seed = 0;
    /// Randomized mode: number of samples; 0 means 64 * num_vars.
    std::size_t max_tries = 0;
};

/**
 * Search the integer grid {0, ..., n*deg(f)}^n for a point where the Hessian
 * of f is positive definite. Exhaustive mode scans the whole grid and is
 * complete: for convex f it fails only if the Hessian is singular everywhere.
 * Randomized mode samples the grid; small grids (at most 2^20 points) are
 * scanned exhaustively regardless of the requested mode.
 */
std::optional<RatVector> find_definite_point(const SparsePolynomial& f,
                                             const SearchOptions& options = {});

/// Quadratic q(y) = value + <grad, y - a> + quad_coeff * |y - a|^2 with
/// q <= f_hat pointwise (for convex f_hat) and f_hat mu-strongly convex
/// behavior captured by mu = 2 * quad_coeff.
struct QuadraticLowerBound {
    RatVector a;
    Rational value;        ///< f_hat(a)
    RatVector grad;        ///< gradient of f_hat at a
    Rational quad_coeff;   ///< lambda_hat / (4 d^2)
    Rational mu;           ///< lambda_hat / (2 d^2)
    std::size_t degree;    ///< d = deg(f_hat)

    Rational eval(const RatVector& y) const;
};

/// Build the quadratic lower bound anchored at a point with positive definite
/// Hessian. Throws std::domain_error if the Hessian at @p a is not positive
/// definite.
QuadraticLowerBound lower_bound_at(const SparsePolynomial& f_hat, const RatVector& a);

/// Thrown when no positive definite point was found. After an exhaustive scan
/// this certifies that the Hessian of the reduced polynomial is singular
/// everywhere (so f is not strictly convex on its essential subspace); after
/// a randomized scan it is only evidence.
class NotConvexEvidence : public std::runtime_error {
  public:
    NotConvexEvidence(const std::string& what, bool exhaustive_scan)
        : std::runtime_error(what), exhaustive(exhaustive_scan) {}
    bool exhaustive;
};

/// Decomposition plus the quadratic lower bound data the solver needs.
struct StructureWithBound {
    StructureDecomposition decomposition;
    /// Present whenever the reduced polynomial has at least one variable.
    std::optional<QuadraticLowerBound> bound;
    /// True when k = 0, i.e. f is affine plus constants along the kernel.
    bool linear_only = false;
    /// The grid point the bound was anchored at.
    std::optional<RatVector> definite_point;
};

/// Full pipeline: decompose, find a definite point of f_hat, and bound.
/// Throws NotConvexEvidence when the definite-point search comes up empty.
StructureWithBound structure_with_bound(const SparsePolynomial& f,
                                        const SearchOptions& options = {});

}  // namespace convexpoly

#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rational dense linear algebra: Hermite normal form,
 *        Gram-Schmidt, kernel/split decompositions, fraction-free
 *        determinants, LDL^T definiteness, and certified sqrt bounds.
 */

#include "convexpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace convexpoly {

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& other) const;

    /// A * x
    RatVector apply(const RatVector& x) const;
    /// A^T * y
    RatVector apply_transpose(const RatVector& y) const;

    bool is_symmetric() const;
    bool is_integer() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// -- vector helpers -----------------------------------------------------

Rational dot(const RatVector& a, const RatVector& b);
Rational norm_sq(const RatVector& v);
bool is_zero_vector(const RatVector& v);
RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_sub(const RatVector& a, const RatVector& b);
RatVector vec_scale(const Rational& c, const RatVector& v);

// -- decompositions ------------------------------------------------------

/**
 * Hermite normal form by unimodular column operations:
 * A * [U_part | K_part] = [H | 0] with [U_part | K_part] unimodular and
 * H lower triangular in the pivot-profile sense (pivot rows strictly
 * increase column by column; entries above each pivot are zero, entries
 * left of a pivot are reduced modulo it). The columns of K_part span ker(A)
 * over the rationals. Requires integer entries.
 */
struct HnfResult {
    RatMatrix U_part;  ///< N x R, integer
    RatMatrix K_part;  ///< N x (N-R), integer
    RatMatrix H;       ///< M x R, integer
};
HnfResult hnf_decompose(const RatMatrix& A);

/**
 * Classical Gram-Schmidt without normalization. Inputs that project to zero
 * (zero vectors, linear dependence) are dropped; kept_indices[i] is the index
 * of the input that produced vectors[i]. Exact: all pairwise inner products
 * of the output are zero, and prefix spans agree with the kept inputs.
 */
struct GramSchmidtResult {
    std::vector<RatVector> vectors;
    std::vector<std::size_t> kept_indices;
};
GramSchmidtResult gram_schmidt(const std::vector<RatVector>& input);

/**
 * Splits R^n as ker(A) + span<w> + complement, all parts pairwise orthogonal,
 * where w is the projection of one solution of A*x = b onto ker(A)-perp.
 * If A*x = b has no solution (or b = 0), w is the zero vector and the
 * solution-set direction is absent. Orthogonalization order: kernel vectors,
 * then the particular solution, then the remaining Hermite image columns.
 */
struct InverseImageSplit {
    std::vector<RatVector> kernel_basis;
    RatVector w;
    std::vector<RatVector> complement_basis;
};
InverseImageSplit inverse_image_split(const RatMatrix& A, const RatVector& b);

/// Exact determinant via fraction-free (Bareiss) elimination.
Rational bareiss_det(const RatMatrix& M);

enum class Definiteness { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };

/// Exact LDL^T classification with symmetric pivoting on the largest diagonal.
Definiteness ldlt_definiteness(const RatMatrix& M);

/**
 * Certified lower bound on the smallest eigenvalue of a positive definite
 * symmetric matrix: det(M) / (N * Bmax)^(N-1) with Bmax the largest entry
 * magnitude (so (N * Bmax) dominates lambda_max); the 1x1 case returns the
 * entry itself. Throws if M is not positive definite.
 */
Rational lambda_min_lower_bound(const RatMatrix& M);

/**
 * Rational bounds lower <= sqrt(s) <= upper with
 * upper - lower <= max(1, sqrt(s)) * 2^-precision_bits, via integer square
 * roots of the scaled numerator. Exact when s is a perfect rational square.
 */
struct SqrtBounds {
    Rational lower, upper;
};
SqrtBounds sqrt_bounds(const Rational& s, unsigned precision_bits = 32);

/// Upper bound on sqrt(s).
Rational sqrt_upper_bound(const Rational& s, unsigned precision_bits = 32);
/// Upper bound on ||v||.
Rational norm_upper_bound(const RatVector& v, unsigned precision_bits = 32);
/// Upper bound on 1/||v||; v must be nonzero (precision is raised until the
/// lower sqrt bound is positive).
Rational inv_norm_upper_bound(const RatVector& v, unsigned precision_bits = 32);

}  // namespace convexpoly

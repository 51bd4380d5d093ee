#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over the rationals.
 *
 * A polynomial in n variables is stored as a map from exponent vectors to
 * nonzero rational coefficients. All operations are exact.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "convexpoly/linalg.hpp"
#include "convexpoly/rational.hpp"

namespace convexpoly {

/// Exponent vector: entry i is the power of variable i.
using MultiIndex = std::vector<std::uint32_t>;

/// Total degree |alpha| of an exponent vector.
std::size_t multi_index_degree(const MultiIndex& alpha);

/// Sparse polynomial with rational coefficients in a fixed number of variables.
class SparsePolynomial {
  public:
    using TermMap = std::map<MultiIndex, Rational>;

    /// Zero polynomial in @p num_vars variables.
    explicit SparsePolynomial(std::size_t num_vars = 0) : n_(num_vars) {}

    /// Constant polynomial.
    static SparsePolynomial constant(std::size_t num_vars, const Rational& c);

    /// The monomial x_i.
    static SparsePolynomial variable(std::size_t num_vars, std::size_t i);

    /// Build from explicit terms; zero coefficients are dropped, duplicate
    /// exponent vectors are summed.
    static SparsePolynomial from_terms(std::size_t num_vars,
                                       const std::vector<std::pair<MultiIndex, Rational>>& terms);

    std::size_t num_vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; 0 for the zero polynomial.
    std::size_t degree() const;

    /// Coefficient of the given exponent vector (0 if absent).
    Rational coefficient(const MultiIndex& alpha) const;

    /// Add a coefficient onto a term, keeping the representation canonical.
    void add_term(const MultiIndex& alpha, const Rational& c);

    /// Exact evaluation at a rational point.
    Rational eval(const RatVector& point) const;

    /// Partial derivative with respect to variable @p i.
    SparsePolynomial partial_derivative(std::size_t i) const;

    /// Gradient vector evaluated at @p point.
    RatVector gradient_at(const RatVector& point) const;

    /// Hessian matrix evaluated at @p point (symmetric by construction).
    RatMatrix hessian_at(const RatVector& point) const;

    /// Size measure: num_vars + degree + sum of coefficient bit lengths,
    /// where a rational p/q contributes bit_length(p) + bit_length(q).
    std::size_t encoding_length() const;

    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial operator-() const;

    /// Multiply by a rational scalar.
    SparsePolynomial scale(const Rational& c) const;

    bool operator==(const SparsePolynomial& other) const {
        return n_ == other.n_ && terms_ == other.terms_;
    }

    /// Human-readable rendering such as "3/2*x0^2*x1 - x2 + 1".
    std::string to_string() const;

  private:
    std::size_t n_;
    TermMap terms_;
};

/**
 * Substitute an affine map into @p f: returns g(y) = f(B*y + offset), where
 * column j of B is @p basis[j]. The result lives in basis.size() variables;
 * each basis vector and the offset must have f.num_vars() entries. An empty
 * basis yields the constant f(offset) in zero variables.
 */
SparsePolynomial substitute_affine(const SparsePolynomial& f, const std::vector<RatVector>& basis,
                                   const RatVector& offset);

}  // namespace convexpoly

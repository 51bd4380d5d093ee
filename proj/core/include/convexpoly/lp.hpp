#pragma once

/**
 * @file lp.hpp
 * @brief Exact rational linear programming over systems A*x <= b.
 *
 * A two-phase primal simplex with Bland's rule runs entirely in rational
 * arithmetic, so feasibility, optimality, unboundedness, and infeasibility
 * are all decided exactly and come with checkable certificates.
 */

#include "convexpoly/linalg.hpp"
#include "convexpoly/rational.hpp"

namespace convexpoly {

/// Rational polyhedron {x : A*x <= b}. Zero rows mean the whole space.
struct Polyhedron {
    RatMatrix A;
    RatVector b;

    /// R^n, encoded with zero constraint rows.
    static Polyhedron universe(std::size_t n) { return {RatMatrix(0, n), {}}; }

    std::size_t dim() const { return A.cols(); }
    std::size_t num_rows() const { return A.rows(); }

    /// Exact membership test.
    bool contains(const RatVector& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of an exact LP solve; which fields are meaningful depends on status.
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    RatVector point;   ///< Optimal: a minimizer (or any feasible point).
    Rational value;    ///< Optimal: the optimal objective value c^T point.
    RatVector dual;    ///< Optimal: y >= 0 with A^T y = -c and -b^T y = value.
    RatVector ray;     ///< Unbounded: d with A*d <= 0 and c^T d < 0.
    RatVector farkas;  ///< Infeasible: y >= 0 with A^T y = 0 and b^T y < 0.
};

/// Decide feasibility of P. Returns Optimal with a feasible point, or
/// Infeasible with a Farkas certificate.
LpOutcome lp_feasible_point(const Polyhedron& P);

/// Minimize c^T x over P exactly.
LpOutcome lp_optimize(const RatVector& c, const Polyhedron& P);

/// Farkas certificate for an infeasible P, normalized so that b^T y = -1.
/// Throws std::domain_error if P is feasible.
RatVector farkas_certificate(const Polyhedron& P);

/// Largest inscribed Euclidean ball of P intersected with the box
/// [-box_radius, box_radius]^n, computed via one exact LP. Row norms are
/// replaced by rational upper bounds, so the reported ball is inscribed but
/// its radius can be slightly below the true Chebyshev radius.
struct ChebyshevBall {
    RatVector center;
    Rational radius;
};
ChebyshevBall chebyshev_inner_ball(const Polyhedron& P, const Rational& box_radius);

}  // namespace convexpoly

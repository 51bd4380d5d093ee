#pragma once

/**
 * @file ellipsoid.hpp
 * @brief Bit-model central-cut ellipsoid method and the minimization driver.
 *
 * The feasibility routine works over separation oracles built from exact
 * rational data. Ellipsoid iterates are rounded to a fixed number of mantissa
 * bits and the shape matrix is inflated slightly each step, so every
 * arithmetic operation runs on numbers of bounded size while the invariant
 * "the feasible set stays inside the current ellipsoid" is preserved. On top
 * of that, minimize_over_ball performs a bisection on the objective level to
 * reach a prescribed accuracy over a polyhedron intersected with a ball.
 */

#include <functional>
#include <optional>

#include "convexpoly/lp.hpp"
#include "convexpoly/polynomial.hpp"

namespace convexpoly {

enum class QueryStatus {
    Inside,                ///< the query point is in the feasible set
    Separated,             ///< cut separates the point from the feasible set
    InfeasibleEverywhere,  ///< the feasible set is provably empty
};

/// Oracle answer. On Separated, every feasible y satisfies
/// <cut, y> <= <cut, x> for the queried point x, with strict inequality for
/// the queried point's side.
struct QueryResult {
    QueryStatus status = QueryStatus::Inside;
    RatVector cut;
};

using SeparationOracle = std::function<QueryResult(const RatVector&)>;

/// Exact membership and first-violated-row separation for A*x <= b.
SeparationOracle oracle_polyhedron(const Polyhedron& P);

/// Euclidean ball |x| <= radius, decided exactly on squared norms.
SeparationOracle oracle_ball(const Rational& radius);

/// Sublevel set {x : f(x) <= tau} of a convex polynomial; the cut is the
/// gradient. A zero gradient above level tau proves the set is empty.
SeparationOracle oracle_sublevel(const SparsePolynomial& f, const Rational& tau);

/// Intersection of several oracles, queried in order.
SeparationOracle oracle_intersection(std::vector<SeparationOracle> oracles);

enum class EllipsoidStatus { Point, SmallVolume, InfeasibleEverywhere };

struct EllipsoidResult {
    EllipsoidStatus status = EllipsoidStatus::SmallVolume;
    RatVector point;  ///< feasible point when status == Point
    std::size_t iterations = 0;
};

/**
 * Decide feasibility of the convex set described by @p oracle, assumed to be
 * contained in the ball of radius @p R around the origin in dimension @p n.
 * Returns Point with an exactly feasible query point, InfeasibleEverywhere if
 * the oracle proves emptiness, or SmallVolume after enough central cuts to
 * certify that the feasible set has volume at most that of a ball of radius
 * @p r. Iterates are rounded to max(64, 16 n^2, 3 N + 64) mantissa bits for
 * an N-step budget, so the shape matrix stays positive definite and the
 * containment inflation stays valid over the whole run.
 */
EllipsoidResult ellipsoid_feasibility(const SeparationOracle& oracle, std::size_t n,
                                      const Rational& R, const Rational& r);

/// Affine hull of a polyhedron: a feasible point, an orthogonal basis of the
/// hull's direction space, and the set of rows that hold with equality on all
/// of P.
struct AffineHull {
    RatVector point;
    std::vector<RatVector> directions;
    std::vector<bool> tight;
};

/// Compute the affine hull exactly (one LP per row). Throws std::domain_error
/// if P is infeasible.
AffineHull affine_hull(const Polyhedron& P);

/// The problem restated in the hull coordinates y -> point + D*y, where the
/// polyhedron is full-dimensional.
struct ReducedProblem {
    SparsePolynomial f;
    Polyhedron P;
    RatVector origin;
    std::vector<RatVector> directions;
};

ReducedProblem full_dim_reduce(const SparsePolynomial& f, const Polyhedron& P,
                               const AffineHull& hull);

/// Rational upper bound on the Lipschitz constant of f over the ball of
/// radius R: sqrt(n) * max_i sum of |coefficient| * max(1, R)^degree over the
/// terms of df/dx_i.
Rational lipschitz_bound(const SparsePolynomial& f, const Rational& R);

struct MinimizeDiagnostics {
    std::size_t reduced_dim = 0;
    std::size_t bisection_rounds = 0;
    std::size_t ellipsoid_iterations = 0;
    Rational chebyshev_radius;
    Rational lipschitz;
    Rational tau_low;
    Rational tau_high;
};

struct MinimizeResult {
    RatVector point;  ///< exactly feasible point of P, in original coordinates
    Rational value;   ///< f(point), exact
    MinimizeDiagnostics diagnostics;
};

/**
 * Compute a point x in P with f(x) <= min { f(y) : y in P, |y| <= R } + eps,
 * assuming f is convex on the affine hull of P and P is nonempty. The point
 * itself is exactly feasible; only the value is approximate to accuracy eps.
 */
MinimizeResult minimize_over_ball(const SparsePolynomial& f, const Polyhedron& P,
                                  const Rational& R, const Rational& eps);

}  // namespace convexpoly

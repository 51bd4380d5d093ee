#include "convexpoly/ellipsoid.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace convexpoly {

SeparationOracle oracle_polyhedron(const Polyhedron& P) {
    return [P](const RatVector& x) -> QueryResult {
        const RatVector Ax = P.A.apply(x);
        for (std::size_t i = 0; i < P.num_rows(); ++i)
            if (Ax[i] > P.b[i]) return {QueryStatus::Separated, P.A.row(i)};
        return {QueryStatus::Inside, {}};
    };
}

SeparationOracle oracle_ball(const Rational& radius) {
    const Rational r2 = radius * radius;
    return [r2](const RatVector& x) -> QueryResult {
        if (norm_sq(x) <= r2) return {QueryStatus::Inside, {}};
        return {QueryStatus::Separated, x};
    };
}

SeparationOracle oracle_sublevel(const SparsePolynomial& f, const Rational& tau) {
    auto partials = std::make_shared<std::vector<SparsePolynomial>>();
    partials->reserve(f.num_vars());
    for (std::size_t i = 0; i < f.num_vars(); ++i) partials->push_back(f.partial_derivative(i));
    return [f, tau, partials](const RatVector& x) -> QueryResult {
        if (f.eval(x) <= tau) return {QueryStatus::Inside, {}};
        RatVector g(partials->size());
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = (*partials)[i].eval(x);
        // Above the level with zero gradient: x is a global minimizer of a
        // convex function, so the sublevel set is empty.
        if (is_zero_vector(g)) return {QueryStatus::InfeasibleEverywhere, {}};
        return {QueryStatus::Separated, std::move(g)};
    };
}

SeparationOracle oracle_intersection(std::vector<SeparationOracle> oracles) {
    return [oracles = std::move(oracles)](const RatVector& x) -> QueryResult {
        for (const SeparationOracle& o : oracles) {
            QueryResult r = o(x);
            if (r.status != QueryStatus::Inside) return r;
        }
        return {QueryStatus::Inside, {}};
    };
}

namespace {

/// Rational upper bound on max(0, ln x): ln x <= 0.7 * (msb(ceil(x)) + 1).
Rational ln_ub(const Rational& x) {
    if (x <= 1) return Rational(0);
    const Integer c = ceil_rat(x);
    return Rational(7, 10) * Rational(static_cast<unsigned long>(mp::msb(c)) + 1);
}

std::size_t ceil_to_count(const Rational& x) {
    const Integer c = ceil_rat(x);
    if (c <= 0) return 0;
    if (c > (Integer(1) << 62))
        throw std::invalid_argument("ellipsoid_feasibility: iteration budget overflows");
    return static_cast<std::size_t>(c.convert_to<unsigned long long>());
}

}  // namespace

EllipsoidResult ellipsoid_feasibility(const SeparationOracle& oracle, std::size_t n,
                                      const Rational& R, const Rational& r) {
    if (R <= 0 || r <= 0)
        throw std::invalid_argument("ellipsoid_feasibility: radii must be positive");

    EllipsoidResult out;
    if (n == 0) {
        const QueryResult q = oracle(RatVector{});
        if (q.status == QueryStatus::Inside) {
            out.status = EllipsoidStatus::Point;
            out.point = {};
        } else if (q.status == QueryStatus::InfeasibleEverywhere) {
            out.status = EllipsoidStatus::InfeasibleEverywhere;
        } else {
            out.status = EllipsoidStatus::SmallVolume;
        }
        return out;
    }

    const long long ln = static_cast<long long>(n);
    const Rational nr(ln);

    // Volume budget: each cut shrinks the ellipsoid volume by at least
    // e^{-1/(2(n+1))} while the inflation grows it by at most e^{1/(8n)}
    // (which also swallows the rounding error at p mantissa bits), so after
    // log_term / delta steps the volume is below that of the r-ball. The
    // coarser headline budget 10 n (n+1) log_term caps it from above.
    const Rational log_term = nr * (ln_ub(2 * R) + ln_ub(1 / r)) + 1;
    const Rational delta = Rational(3 * ln - 1) / Rational(8 * ln * (ln + 1));
    const std::size_t budget =
        std::min(ceil_to_count(10 * nr * (nr + 1) * log_term), ceil_to_count(log_term / delta));

    // Mantissa width. Each central cut can cost the shape matrix about two
    // bits of smallest eigenvalue while the largest barely moves, so its
    // condition number can reach 2^(3k) after k steps. Entry rounding is
    // relative, hence harmless only while the condition number stays well
    // below 2^p: three bits per budgeted step plus margin keeps both
    // definiteness and the containment-inflation argument intact.
    const unsigned p =
        std::max<unsigned>(std::max<unsigned>(64, static_cast<unsigned>(16 * ln * ln)),
                           static_cast<unsigned>(3 * budget + 64));

    RatVector c(n, Rational(0));
    RatMatrix Q(n, n);
    for (std::size_t i = 0; i < n; ++i) Q.at(i, i) = R * R;
    const Rational inflate = 1 + Rational(1) / Rational(8 * ln * ln);

    for (std::size_t k = 0; k < budget; ++k) {
        const QueryResult q = oracle(c);
        if (q.status == QueryStatus::Inside) {
            out.status = EllipsoidStatus::Point;
            out.point = c;
            out.iterations = k;
            return out;
        }
        if (q.status == QueryStatus::InfeasibleEverywhere) {
            out.status = EllipsoidStatus::InfeasibleEverywhere;
            out.iterations = k;
            return out;
        }
        const RatVector& a = q.cut;
        if (a.size() != n || is_zero_vector(a))
            throw std::logic_error("ellipsoid_feasibility: oracle returned an invalid cut");

        if (n == 1) {
            // One-dimensional ellipsoids are intervals: keep the half on the
            // feasible side of the center, tracked via a radius upper bound.
            const Rational half = sqrt_upper_bound(Q.at(0, 0), p + 32) / 2;
            c[0] = round_to_dyadic(a[0] > 0 ? c[0] - half : c[0] + half, p);
            Q.at(0, 0) = round_to_dyadic(half * half * inflate, p);
            continue;
        }

        const RatVector Qa = Q.apply(a);
        const Rational s = dot(a, Qa);
        if (s <= 0)
            throw std::logic_error("ellipsoid_feasibility: shape matrix lost definiteness");
        const Rational sq = sqrt_upper_bound(s, p + 32);
        const RatVector b = vec_scale(1 / sq, Qa);

        const Rational step = Rational(1) / Rational(ln + 1);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = round_to_dyadic(c[i] - step * b[i], p);

        const Rational shrink = Rational(ln * ln) / Rational(ln * ln - 1);
        const Rational two_step = 2 * step;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const Rational v = round_to_dyadic(
                    shrink * (Q.at(i, j) - two_step * b[i] * b[j]) * inflate, p);
                Q.at(i, j) = v;
                Q.at(j, i) = v;
            }
    }
    out.status = EllipsoidStatus::SmallVolume;
    out.iterations = budget;
    return out;
}

AffineHull affine_hull(const Polyhedron& P) {
    const LpOutcome feas = lp_feasible_point(P);
    if (feas.status != LpStatus::Optimal)
        throw std::domain_error("affine_hull: polyhedron is infeasible");

    AffineHull hull;
    hull.point = feas.point;
    hull.tight.assign(P.num_rows(), false);
    std::vector<RatVector> tight_rows;
    for (std::size_t i = 0; i < P.num_rows(); ++i) {
        const RatVector row = P.A.row(i);
        if (is_zero_vector(row)) {
            hull.tight[i] = (P.b[i] == 0);
        } else {
            // Row i holds with equality on all of P exactly when its minimum
            // over P already equals b_i.
            const LpOutcome o = lp_optimize(row, P);
            hull.tight[i] = (o.status == LpStatus::Optimal && o.value == P.b[i]);
        }
        if (hull.tight[i] && !is_zero_vector(row)) tight_rows.push_back(row);
    }

    const RatMatrix a_eq = RatMatrix::from_rows(tight_rows, P.dim());
    const InverseImageSplit split =
        inverse_image_split(a_eq, RatVector(a_eq.rows(), Rational(0)));
    hull.directions = split.kernel_basis;
    return hull;
}

ReducedProblem full_dim_reduce(const SparsePolynomial& f, const Polyhedron& P,
                               const AffineHull& hull) {
    const std::size_t k = hull.directions.size();
    ReducedProblem out;
    out.origin = hull.point;
    out.directions = hull.directions;
    out.f = substitute_affine(f, hull.directions, hull.point);

    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t i = 0; i < P.num_rows(); ++i) {
        if (hull.tight[i]) continue;  // holds identically on the hull
        const RatVector arow = P.A.row(i);
        RatVector reduced(k);
        for (std::size_t j = 0; j < k; ++j) reduced[j] = dot(arow, hull.directions[j]);
        rows.push_back(std::move(reduced));
        rhs.push_back(P.b[i] - dot(arow, hull.point));
    }
    out.P = {RatMatrix::from_rows(rows, k), rhs};
    return out;
}

Rational lipschitz_bound(const SparsePolynomial& f, const Rational& R) {
    const std::size_t n = f.num_vars();
    const Rational rbar = std::max(Rational(1), R);
    Rational best(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s(0);
        const SparsePolynomial di = f.partial_derivative(i);
        for (const auto& [alpha, coef] : di.terms())
            s += mp::abs(coef) * rat_pow(rbar, static_cast<unsigned>(multi_index_degree(alpha)));
        best = std::max(best, s);
    }
    return sqrt_upper_bound(Rational(static_cast<unsigned long>(n))) * best;
}

MinimizeResult minimize_over_ball(const SparsePolynomial& f, const Polyhedron& P,
                                  const Rational& R, const Rational& eps) {
    if (f.num_vars() != P.dim())
        throw std::invalid_argument("minimize_over_ball: dimension mismatch");
    if (R <= 0 || eps <= 0)
        throw std::invalid_argument("minimize_over_ball: R and eps must be positive");

    const AffineHull hull = affine_hull(P);
    const ReducedProblem red = full_dim_reduce(f, P, hull);
    const std::size_t k = red.P.dim();

    MinimizeResult out;
    out.diagnostics.reduced_dim = k;
    if (k == 0) {  // P is a single point
        out.point = hull.point;
        out.value = f.eval(hull.point);
        return out;
    }

    auto to_original = [&](const RatVector& y) {
        RatVector x = hull.point;
        for (std::size_t j = 0; j < k; ++j) x = vec_add(x, vec_scale(y[j], red.directions[j]));
        return x;
    };

    // Every x in P with |x| <= R has reduced coordinates bounded by box0;
    // doubling plus one makes those coordinates strictly interior to the box,
    // which guarantees the inscribed ball below has positive radius.
    Rational inv_sum(0);
    for (const RatVector& d : red.directions) inv_sum += inv_norm_upper_bound(d);
    const Rational box0 = (R + norm_upper_bound(hull.point)) * inv_sum;
    const Rational box = 2 * box0 + 1;
    const Rational r_ell = sqrt_upper_bound(Rational(static_cast<unsigned long>(k))) * box;

    const ChebyshevBall ball = chebyshev_inner_ball(red.P, box);
    out.diagnostics.chebyshev_radius = ball.radius;
    if (ball.radius == 0) {
        // Unreachable after exact hull reduction; fall back to the feasible
        // center rather than failing.
        out.point = to_original(ball.center);
        out.value = f.eval(out.point);
        return out;
    }

    const Rational lip = lipschitz_bound(red.f, r_ell);
    out.diagnostics.lipschitz = lip;
    if (lip == 0) {  // objective constant on the hull
        out.point = to_original(ball.center);
        out.value = f.eval(out.point);
        return out;
    }

    const Rational f0 = red.f.eval(RatVector(k, Rational(0)));
    Rational tau_hi = mp::abs(f0) + lip * r_ell;
    Rational tau_lo = -tau_hi;
    const Rational half_eps = eps / 2;

    // Sublevel sets at level f* + eps/2 or higher contain a ball of radius
    // ball.radius * t; certifying SmallVolume below half that radius proves
    // the level is within eps/2 of the optimum.
    Rational t = half_eps / (2 * lip * r_ell);
    if (t > 1) t = 1;
    const Rational r_small = ball.radius * t / 2;

    const SeparationOracle poly_oracle = oracle_polyhedron(red.P);
    const SeparationOracle ball_oracle = oracle_ball(r_ell);
    auto run_at = [&](const Rational& tau) {
        return ellipsoid_feasibility(
            oracle_intersection({poly_oracle, ball_oracle, oracle_sublevel(red.f, tau)}), k,
            r_ell, r_small);
    };

    std::optional<RatVector> best_y;
    while (tau_hi - tau_lo >= half_eps) {
        const Rational tau = (tau_hi + tau_lo) / 2;
        const EllipsoidResult res = run_at(tau);
        out.diagnostics.ellipsoid_iterations += res.iterations;
        ++out.diagnostics.bisection_rounds;
        if (res.status == EllipsoidStatus::Point) {
            tau_hi = tau;
            best_y = res.point;
        } else {
            tau_lo = tau;  // level provably below f* + eps/2
        }
    }
    if (!best_y) {
        // tau_hi never moved, so its sublevel set still contains the full
        // inscribed ball and this run must produce a point.
        const EllipsoidResult res = run_at(tau_hi);
        out.diagnostics.ellipsoid_iterations += res.iterations;
        if (res.status != EllipsoidStatus::Point)
            throw std::logic_error("minimize_over_ball: final feasibility run found no point");
        best_y = res.point;
    }
    out.diagnostics.tau_low = tau_lo;
    out.diagnostics.tau_high = tau_hi;
    out.point = to_original(*best_y);
    out.value = f.eval(out.point);
    return out;
}

}  // namespace convexpoly

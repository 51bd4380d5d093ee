#include "convexpoly/solver.hpp"

#include <stdexcept>

#include "convexpoly/prng.hpp"

namespace convexpoly {

SolveOutcome solve(const SparsePolynomial& f, const Polyhedron& P, const SolveOptions& options) {
    if (f.num_vars() != P.dim())
        throw std::invalid_argument("solve: objective and polyhedron dimensions differ");
    if (options.eps <= 0) throw std::invalid_argument("solve: eps must be positive");

    SolveOutcome out;

    const LpOutcome feas = lp_feasible_point(P);
    if (feas.status == LpStatus::Infeasible) {
        out.status = SolveStatus::EmptyPolyhedron;
        Rational by(0);
        for (std::size_t i = 0; i < P.num_rows(); ++i) by += feas.farkas[i] * P.b[i];
        out.farkas = vec_scale(-1 / by, feas.farkas);
        out.diagnostics.message = "constraint system is infeasible";
        return out;
    }

    SearchOptions search;
    search.mode = options.mode;
    search.seed = options.seed;
    search.max_tries = options.max_tries;

    StructureWithBound swb;
    try {
        swb = structure_with_bound(f, search);
    } catch (const NotConvexEvidence& e) {
        out.status = SolveStatus::NotConvex;
        out.diagnostics.exhaustive_search = e.exhaustive;
        out.diagnostics.message = e.what();
        return out;
    }
    const StructureDecomposition& dec = swb.decomposition;
    out.diagnostics.structure_rank = dec.U.rows();
    out.diagnostics.kernel_dim = dec.kernel.size();
    out.diagnostics.linear_only = swb.linear_only;
    out.diagnostics.has_linear_part = !is_zero_vector(dec.w);

    if (const std::optional<RatVector> ray = unboundedness_ray(P, dec)) {
        out.status = SolveStatus::Unbounded;
        out.ray = *ray;
        out.diagnostics.message = "objective decreases without bound along the returned ray";
        return out;
    }

    const RadiusBound rb = radius_R(f, P, dec, swb.bound);
    out.radius = rb.R;

    const MinimizeResult min = minimize_over_ball(f, P, rb.R, options.eps);
    out.status = SolveStatus::Solved;
    out.point = min.point;
    out.value = min.value;
    out.diagnostics.minimize = min.diagnostics;
    return out;
}

std::optional<RatVector> sampled_convexity_check(const SparsePolynomial& f, std::uint64_t seed,
                                                 std::size_t samples) {
    const std::size_t n = f.num_vars();
    if (n == 0) return std::nullopt;
    if (samples == 0) samples = 64 * n + 1;

    SplitMix64 rng(seed);
    RatVector point(n, Rational(0));
    for (std::size_t t = 0; t < samples; ++t) {
        if (t > 0)
            for (std::size_t i = 0; i < n; ++i)
                point[i] = Rational(rng.range(-1024, 1024)) / Rational(rng.range(1, 64));
        if (ldlt_definiteness(f.hessian_at(point)) == Definiteness::Indefinite) return point;
    }
    return std::nullopt;
}

}  // namespace convexpoly

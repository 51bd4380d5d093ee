#include "convexpoly/bounds.hpp"

#include <stdexcept>

namespace convexpoly {

std::optional<RatVector> unboundedness_ray(const Polyhedron& P,
                                           const StructureDecomposition& dec) {
    if (is_zero_vector(dec.w)) return std::nullopt;
    const std::size_t n = P.dim(), m = P.num_rows(), k = dec.U.rows();

    // Recession directions that keep f_hat(U*x) constant and strictly pay on
    // the linear part: A*r <= 0, U*r = 0, <w, r> = 1.
    RatMatrix Q(m + 2 * k + 2, n);
    RatVector q(m + 2 * k + 2, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) Q.at(i, j) = P.A.at(i, j);
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < n; ++j) {
            Q.at(m + 2 * l, j) = dec.U.at(l, j);
            Q.at(m + 2 * l + 1, j) = -dec.U.at(l, j);
        }
    for (std::size_t j = 0; j < n; ++j) {
        Q.at(m + 2 * k, j) = dec.w[j];
        Q.at(m + 2 * k + 1, j) = -dec.w[j];
    }
    q[m + 2 * k] = 1;
    q[m + 2 * k + 1] = -1;

    const LpOutcome out = lp_feasible_point({Q, q});
    if (out.status != LpStatus::Optimal) return std::nullopt;
    return out.point;
}

std::optional<FarkasWitness> farkas_witness(const Polyhedron& P,
                                            const StructureDecomposition& dec) {
    const std::size_t n = P.dim(), m = P.num_rows(), k = dec.U.rows();
    if (is_zero_vector(dec.w)) return FarkasWitness{RatVector(m, Rational(0)), RatVector(k, Rational(0))};

    // Variables v = (lambda, z); equality A^T lambda + U^T z = w as paired
    // inequalities plus lambda >= 0.
    RatMatrix Q(2 * n + m, m + k);
    RatVector q(2 * n + m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            Q.at(2 * j, i) = P.A.at(i, j);
            Q.at(2 * j + 1, i) = -P.A.at(i, j);
        }
        for (std::size_t l = 0; l < k; ++l) {
            Q.at(2 * j, m + l) = dec.U.at(l, j);
            Q.at(2 * j + 1, m + l) = -dec.U.at(l, j);
        }
        q[2 * j] = dec.w[j];
        q[2 * j + 1] = -dec.w[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        Q.at(2 * n + i, i) = -1;
        q[2 * n + i] = 0;
    }

    const LpOutcome out = lp_feasible_point({Q, q});
    if (out.status != LpStatus::Optimal) return std::nullopt;
    FarkasWitness wit;
    wit.lambda.assign(out.point.begin(), out.point.begin() + m);
    wit.z.assign(out.point.begin() + m, out.point.end());
    return wit;
}

SubspaceNormBound subspace_norm_bound(const SparsePolynomial& f, const Polyhedron& P,
                                      const StructureDecomposition& dec,
                                      const std::optional<QuadraticLowerBound>& bound,
                                      const RatVector& feasible_point,
                                      const FarkasWitness& witness) {
    const Rational lam_norm = norm_upper_bound(witness.lambda);
    const Rational z_norm = norm_upper_bound(witness.z);
    const Rational b_norm = norm_upper_bound(P.b);
    const bool has_w = !is_zero_vector(dec.w);

    SubspaceNormBound out;
    if (!bound) {
        // No reduced variables: every feasible point has U*x empty, and
        // <w, x> = <lambda, A x> <= <lambda, b>.
        out.B_U = 0;
        out.B_w = lam_norm * b_norm;
        out.B_UW = has_w ? out.B_w * inv_norm_upper_bound(dec.w) : Rational(0);
        return out;
    }

    const QuadraticLowerBound& q = *bound;
    // q rewritten around the origin: q(y) = q0 + <g0, y> + quad_coeff*|y|^2.
    const Rational q0 = q.value - dot(q.grad, q.a) + q.quad_coeff * norm_sq(q.a);
    const RatVector g0 = vec_sub(q.grad, vec_scale(2 * q.quad_coeff, q.a));
    const Rational g_norm = norm_upper_bound(g0);
    const Rational f_feas = f.eval(feasible_point);

    // A minimizer x* satisfies q(U x*) <= f_hat(U x*) = f(x*) + <w, x*> and
    // <w, x*> <= <lambda, b> + |z| * |U x*|; solve the resulting quadratic
    // inequality in |U x*| for its largest root.
    Rational slack = f_feas + lam_norm * b_norm - q0;
    if (slack < 0) slack = 0;
    const Rational head = g_norm + z_norm;
    out.B_U = (head + sqrt_upper_bound(head * head + 2 * q.mu * slack)) / q.mu;
    out.B_w = lam_norm * b_norm + z_norm * out.B_U;

    Rational inv_row = 0;
    for (std::size_t i = 0; i < dec.U.rows(); ++i)
        inv_row = std::max(inv_row, inv_norm_upper_bound(dec.U.row(i)));
    out.B_UW = sqrt_upper_bound(Rational(dec.U.rows())) * out.B_U * inv_row;
    if (has_w) out.B_UW += out.B_w * inv_norm_upper_bound(dec.w);
    return out;
}

Rational lifting_norm_bound(const Polyhedron& P, const StructureDecomposition& dec,
                            const Rational& b_uw) {
    const std::size_t n = P.dim();
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < P.num_rows(); ++i) rows.push_back(P.A.row(i));
    for (std::size_t l = 0; l < dec.U.rows(); ++l) rows.push_back(dec.U.row(l));
    if (!is_zero_vector(dec.w)) rows.push_back(dec.w);

    // Directions unconstrained by the system still need to be pinned down;
    // an orthogonal basis of the common kernel joins the row collection.
    const RatMatrix stacked = RatMatrix::from_rows(rows, n);
    const InverseImageSplit split =
        inverse_image_split(stacked, RatVector(stacked.rows(), Rational(0)));
    for (const RatVector& v : split.kernel_basis) rows.push_back(v);

    // Clamping both factors at 1 keeps the radius monotone and guarantees
    // R >= B_UW even for very short rows.
    Rational h(1), maxnorm(1);
    for (const RatVector& r : rows) {
        Integer d(1);
        for (const Rational& x : r) d = lcm(d, denominator(x));
        const Rational nr = norm_upper_bound(r);
        h = std::max(h, Rational(d) * nr);
        maxnorm = std::max(maxnorm, nr);
    }
    const Rational b_norm = norm_upper_bound(P.b);
    return sqrt_upper_bound(Rational(n)) * Rational(n) * rat_pow(h, static_cast<unsigned>(n)) *
           (b_norm + b_uw * maxnorm + 1);
}

RadiusBound radius_R(const SparsePolynomial& f, const Polyhedron& P,
                     const StructureDecomposition& dec,
                     const std::optional<QuadraticLowerBound>& bound) {
    const LpOutcome feas = lp_feasible_point(P);
    if (feas.status != LpStatus::Optimal)
        throw std::domain_error("radius_R: polyhedron is infeasible");
    std::optional<FarkasWitness> wit = farkas_witness(P, dec);
    if (!wit)
        throw std::domain_error("radius_R: no dual witness, objective is unbounded below");

    RadiusBound out;
    const SubspaceNormBound sb = subspace_norm_bound(f, P, dec, bound, feas.point, *wit);
    out.B_U = sb.B_U;
    out.B_w = sb.B_w;
    out.B_UW = sb.B_UW;
    out.R = lifting_norm_bound(P, dec, sb.B_UW);
    out.feasible_point = feas.point;
    out.witness = std::move(*wit);
    return out;
}

}  // namespace convexpoly

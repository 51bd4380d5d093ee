#include "convexpoly/structure.hpp"

#include <algorithm>
#include <set>

#include "convexpoly/prng.hpp"

namespace convexpoly {

GradientMatrix build_gradient_matrix(const SparsePolynomial& f) {
    const std::size_t n = f.num_vars();
    std::vector<SparsePolynomial> partials;
    partials.reserve(n);
    for (std::size_t i = 0; i < n; ++i) partials.push_back(f.partial_derivative(i));

    std::set<MultiIndex> support_set;
    support_set.insert(MultiIndex(n, 0));  // the constant monomial is always a row
    for (const auto& p : partials)
        for (const auto& [alpha, c] : p.terms()) support_set.insert(alpha);

    GradientMatrix gm;
    gm.support.assign(support_set.begin(), support_set.end());
    gm.matrix = RatMatrix(gm.support.size(), n);
    gm.one_vector.assign(gm.support.size(), Rational(0));
    for (std::size_t r = 0; r < gm.support.size(); ++r) {
        if (multi_index_degree(gm.support[r]) == 0) gm.one_vector[r] = 1;
        for (std::size_t i = 0; i < n; ++i) gm.matrix.at(r, i) = partials[i].coefficient(gm.support[r]);
    }
    return gm;
}

StructureDecomposition decompose(const SparsePolynomial& f) {
    const std::size_t n = f.num_vars();
    const GradientMatrix gm = build_gradient_matrix(f);

    // Solve <grad f(x), v> = -1 identically in x: the coefficient of the
    // constant monomial must be -1 and of every other monomial 0.
    RatVector rhs = vec_scale(Rational(-1), gm.one_vector);

    const InverseImageSplit split = inverse_image_split(gm.matrix, rhs);

    StructureDecomposition out;
    out.kernel = split.kernel_basis;
    // Rescale so that <grad f(x), w> = -|w|^2 exactly matches the -<w, x> term.
    out.w = is_zero_vector(split.w) ? RatVector(n, Rational(0))
                                    : vec_scale(1 / norm_sq(split.w), split.w);
    out.U = RatMatrix::from_rows(split.complement_basis, n);
    const std::size_t k = out.U.rows();
    out.scaled_basis.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const RatVector ui = out.U.row(i);
        out.scaled_basis.push_back(vec_scale(1 / norm_sq(ui), ui));
    }
    out.f_hat = substitute_affine(f, out.scaled_basis, RatVector(n, Rational(0)));

    // Verify the identity f(x) = f_hat(U*x) - <w, x> by exact expansion.
    std::vector<RatVector> u_columns;
    u_columns.reserve(n);
    for (std::size_t j = 0; j < n; ++j) u_columns.push_back(out.U.col(j));
    SparsePolynomial recomposed = substitute_affine(out.f_hat, u_columns, RatVector(k, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        if (out.w[i] != 0) recomposed = recomposed - SparsePolynomial::variable(n, i).scale(out.w[i]);
    if (!(recomposed - f).is_zero())
        throw ResidualNonzero("decompose: recomposition does not reproduce the input");
    return out;
}

namespace {

struct IntTerm {
    MultiIndex exp;
    Integer coef;
};
using IntPoly = std::vector<IntTerm>;

/// Integer-scaled Hessian entry polynomials of f (upper triangle, row-major).
/// Scaling by the positive lcm of coefficient denominators preserves
/// definiteness at every point.
std::vector<IntPoly> integer_hessian(const SparsePolynomial& f) {
    const std::size_t n = f.num_vars();
    Integer L(1);
    for (const auto& [alpha, c] : f.terms()) L = lcm(L, denominator(c));

    std::vector<IntPoly> hess(n * (n + 1) / 2);
    auto slot = [n](std::size_t i, std::size_t j) { return i * n - i * (i - 1) / 2 + (j - i); };
    for (const auto& [alpha, c] : f.terms()) {
        const Integer ci = numerator(c * Rational(L));
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i] == 0) continue;
            for (std::size_t j = i; j < n; ++j) {
                Integer factor;
                MultiIndex beta = alpha;
                if (i == j) {
                    if (alpha[i] < 2) continue;
                    factor = Integer(alpha[i]) * Integer(alpha[i] - 1);
                    beta[i] -= 2;
                } else {
                    if (alpha[j] == 0) continue;
                    factor = Integer(alpha[i]) * Integer(alpha[j]);
                    beta[i] -= 1;
                    beta[j] -= 1;
                }
                hess[slot(i, j)].push_back({std::move(beta), ci * factor});
            }
        }
    }
    return hess;
}

/// Sylvester's criterion via fraction-free elimination: the pivot produced at
/// step k equals the (k+1)-st leading principal minor, so all of them being
/// positive is exactly positive definiteness. Early exit on the first
/// non-positive minor.
bool leading_minors_positive(std::vector<std::vector<Integer>>& M) {
    const std::size_t n = M.size();
    Integer prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (M[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return true;
}

bool hessian_definite_at(const std::vector<IntPoly>& hess, std::size_t n,
                         const std::vector<Integer>& point, std::uint32_t max_power) {
    // Powers of each coordinate, shared across all entries.
    std::vector<std::vector<Integer>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
        pw[i].resize(max_power + 1);
        pw[i][0] = 1;
        for (std::uint32_t e = 1; e <= max_power; ++e) pw[i][e] = pw[i][e - 1] * point[i];
    }
    auto slot = [n](std::size_t i, std::size_t j) { return i * n - i * (i - 1) / 2 + (j - i); };
    std::vector<std::vector<Integer>> H(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Integer v(0);
            for (const IntTerm& t : hess[slot(i, j)]) {
                Integer m = t.coef;
                for (std::size_t l = 0; l < n; ++l)
                    if (t.exp[l] > 0) m *= pw[l][t.exp[l]];
                v += m;
            }
            H[i][j] = v;
            if (i != j) H[j][i] = v;
        }
    return leading_minors_positive(H);
}

bool grid_fits_exhaustive(std::size_t n, std::size_t side) {
    Integer total(1);
    const Integer cap = Integer(1) << 20;
    for (std::size_t i = 0; i < n; ++i) {
        total *= Integer(static_cast<unsigned long>(side));
        if (total > cap) return false;
    }
    return true;
}

}  // namespace

std::optional<RatVector> find_definite_point(const SparsePolynomial& f,
                                             const SearchOptions& options) {
    const std::size_t n = f.num_vars();
    if (n == 0) return std::nullopt;
    const std::size_t deg = f.degree();
    const std::size_t side = n * deg + 1;

    const std::vector<IntPoly> hess = integer_hessian(f);
    std::uint32_t max_power = 0;
    for (const auto& entry : hess)
        for (const auto& t : entry)
            for (auto e : t.exp) max_power = std::max(max_power, e);

    auto as_rational = [](const std::vector<Integer>& p) {
        RatVector out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i]);
        return out;
    };

    const bool exhaustive =
        options.mode == SearchMode::Exhaustive || grid_fits_exhaustive(n, side);
    if (exhaustive) {
        std::vector<Integer> point(n, Integer(0));
        std::vector<std::size_t> odo(n, 0);
        for (;;) {
            if (hessian_definite_at(hess, n, point, max_power)) return as_rational(point);
            std::size_t i = 0;
            while (i < n && odo[i] + 1 == side) {
                odo[i] = 0;
                point[i] = 0;
                ++i;
            }
            if (i == n) return std::nullopt;  // grid exhausted
            ++odo[i];
            point[i] = Integer(static_cast<unsigned long>(odo[i]));
        }
    }

    SplitMix64 rng(options.seed);
    const std::size_t tries = options.max_tries ? options.max_tries : 64 * n;
    std::vector<Integer> point(n);
    for (std::size_t t = 0; t < tries; ++t) {
        for (std::size_t i = 0; i < n; ++i)
            point[i] = Integer(static_cast<unsigned long long>(rng.below(side)));
        if (hessian_definite_at(hess, n, point, max_power)) return as_rational(point);
    }
    return std::nullopt;
}

Rational QuadraticLowerBound::eval(const RatVector& y) const {
    const RatVector d = vec_sub(y, a);
    return value + dot(grad, d) + quad_coeff * norm_sq(d);
}

QuadraticLowerBound lower_bound_at(const SparsePolynomial& f_hat, const RatVector& a) {
    QuadraticLowerBound q;
    q.a = a;
    q.value = f_hat.eval(a);
    q.grad = f_hat.gradient_at(a);
    q.degree = f_hat.degree();
    const Rational lam = lambda_min_lower_bound(f_hat.hessian_at(a));
    const Rational d2 = Rational(q.degree) * Rational(q.degree);
    q.quad_coeff = lam / (4 * d2);
    q.mu = lam / (2 * d2);
    return q;
}

StructureWithBound structure_with_bound(const SparsePolynomial& f, const SearchOptions& options) {
    StructureWithBound out;
    out.decomposition = decompose(f);
    const std::size_t k = out.decomposition.f_hat.num_vars();
    if (k == 0) {
        out.linear_only = true;
        return out;
    }
    const std::optional<RatVector> pt = find_definite_point(out.decomposition.f_hat, options);
    if (!pt) {
        const std::size_t side = k * out.decomposition.f_hat.degree() + 1;
        const bool exhaustive =
            options.mode == SearchMode::Exhaustive || grid_fits_exhaustive(k, side);
        throw NotConvexEvidence(
            exhaustive ? "no point with positive definite Hessian exists on the search grid; "
                         "the reduced polynomial is nowhere strictly convex"
                       : "randomized search found no point with positive definite Hessian",
            exhaustive);
    }
    out.definite_point = pt;
    out.bound = lower_bound_at(out.decomposition.f_hat, *pt);
    return out;
}

}  // namespace convexpoly

#include "convexpoly/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace convexpoly {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty) {
    if (rows.empty()) return RatMatrix(0, cols_if_empty);
    RatMatrix M(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != M.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = rows[i][j];
    }
    return M;
}

RatVector RatMatrix::row(std::size_t i) const {
    RatVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
    return T;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    RatMatrix P(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) P.at(i, j) += a * other.at(k, j);
        }
    return P;
}

RatVector RatMatrix::apply(const RatVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    RatVector y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

RatVector RatMatrix::apply_transpose(const RatVector& y) const {
    if (y.size() != rows_) throw std::invalid_argument("apply_transpose: dimension mismatch");
    RatVector x(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) x[j] += at(i, j) * y[i];
    return x;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_integer() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (denominator(at(i, j)) != 1) return false;
    return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

Rational norm_sq(const RatVector& v) { return dot(v, v); }

bool is_zero_vector(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatVector vec_add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector vec_sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector vec_scale(const Rational& c, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

// -- Hermite normal form --------------------------------------------------

namespace {

using IntMat = std::vector<std::vector<Integer>>;

RatMatrix to_rat_matrix(const IntMat& M, std::size_t rows, std::size_t cols,
                        std::size_t col_begin, std::size_t col_end) {
    RatMatrix out(rows, col_end - col_begin);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = col_begin; j < col_end; ++j) out.at(i, j - col_begin) = M[i][j];
    return out;
}

}  // namespace

HnfResult hnf_decompose(const RatMatrix& A) {
    if (!A.is_integer()) throw std::invalid_argument("hnf_decompose: non-integer input");
    const std::size_t m = A.rows(), n = A.cols();
    IntMat B(m, std::vector<Integer>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) B[i][j] = numerator(A.at(i, j));
    IntMat V(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t j = 0; j < n; ++j) V[j][j] = 1;

    auto col_swap = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(B[i][j], B[i][k]);
        for (std::size_t i = 0; i < n; ++i) std::swap(V[i][j], V[i][k]);
    };
    auto col_negate = [&](std::size_t j) {
        for (std::size_t i = 0; i < m; ++i) B[i][j] = -B[i][j];
        for (std::size_t i = 0; i < n; ++i) V[i][j] = -V[i][j];
    };
    // column j -= q * column k
    auto col_axpy = [&](std::size_t j, std::size_t k, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) B[i][j] -= q * B[i][k];
        for (std::size_t i = 0; i < n; ++i) V[i][j] -= q * V[i][k];
    };

    std::size_t r = 0;
    for (std::size_t row = 0; row < m && r < n; ++row) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = r; j < n; ++j) {
                if (B[row][j] == 0) continue;
                if (best == n || mp::abs(B[row][j]) < mp::abs(B[row][best])) best = j;
            }
            if (best == n) break;  // row has no pivot

            bool others = false;
            for (std::size_t j = r; j < n; ++j) {
                if (j == best || B[row][j] == 0) continue;
                others = true;
                const Integer q = round_rat(Rational(B[row][j]) / Rational(B[row][best]));
                col_axpy(j, best, q);
            }
            if (others) continue;  // keep reducing until one nonzero remains

            col_swap(r, best);
            if (B[row][r] < 0) col_negate(r);
            // Reduce this row's earlier entries modulo the new pivot; the pivot
            // column is zero above this row, so the upper profile is preserved.
            for (std::size_t j = 0; j < r; ++j)
                col_axpy(j, r, floor_div(B[row][j], B[row][r]));
            ++r;
            break;
        }
    }

    HnfResult out;
    out.H = to_rat_matrix(B, m, n, 0, r);
    out.U_part = to_rat_matrix(V, n, n, 0, r);
    out.K_part = to_rat_matrix(V, n, n, r, n);
    return out;
}

GramSchmidtResult gram_schmidt(const std::vector<RatVector>& input) {
    GramSchmidtResult out;
    for (std::size_t i = 0; i < input.size(); ++i) {
        RatVector u = input[i];
        for (const RatVector& prev : out.vectors) {
            const Rational c = dot(u, prev) / norm_sq(prev);
            if (c != 0) u = vec_sub(u, vec_scale(c, prev));
        }
        if (!is_zero_vector(u)) {
            out.vectors.push_back(std::move(u));
            out.kept_indices.push_back(i);
        }
    }
    return out;
}

InverseImageSplit inverse_image_split(const RatMatrix& A, const RatVector& b) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw std::invalid_argument("inverse_image_split: dimension mismatch");

    // Clear denominators row by row; scaling a row of [A|b] changes neither
    // ker(A) nor the solution set of A*x = b.
    RatMatrix A2(m, n);
    RatVector b2(m);
    for (std::size_t i = 0; i < m; ++i) {
        Integer L(1);
        for (std::size_t j = 0; j < n; ++j) L = lcm(L, denominator(A.at(i, j)));
        L = lcm(L, denominator(b[i]));
        for (std::size_t j = 0; j < n; ++j) A2.at(i, j) = A.at(i, j) * Rational(L);
        b2[i] = b[i] * Rational(L);
    }

    const HnfResult hnf = hnf_decompose(A2);
    const std::size_t R = hnf.H.cols();

    // Pivot rows of H (strictly increasing by construction).
    std::vector<std::size_t> pivot_row(R);
    for (std::size_t j = 0; j < R; ++j) {
        std::size_t p = (j == 0) ? 0 : pivot_row[j - 1] + 1;
        while (p < m && hnf.H.at(p, j) == 0) ++p;
        pivot_row[j] = p;
    }

    // Forward substitution H*y = b2 on the pivot rows, then verify globally.
    RatVector y(R);
    for (std::size_t j = 0; j < R; ++j) {
        Rational acc = b2[pivot_row[j]];
        for (std::size_t l = 0; l < j; ++l) acc -= hnf.H.at(pivot_row[j], l) * y[l];
        y[j] = acc / hnf.H.at(pivot_row[j], j);
    }
    RatVector w_hat = hnf.U_part.apply(y);
    const bool consistent = (A2.apply(w_hat) == b2);

    std::vector<RatVector> gs_input;
    const std::size_t nk = hnf.K_part.cols();
    for (std::size_t j = 0; j < nk; ++j) gs_input.push_back(hnf.K_part.col(j));
    if (consistent) gs_input.push_back(w_hat);
    for (std::size_t j = 0; j < R; ++j) gs_input.push_back(hnf.U_part.col(j));

    const GramSchmidtResult gs = gram_schmidt(gs_input);

    InverseImageSplit out;
    out.w = RatVector(n, Rational(0));
    const std::size_t w_slot = nk;  // index of w_hat in gs_input when present
    for (std::size_t i = 0; i < gs.vectors.size(); ++i) {
        const std::size_t src = gs.kept_indices[i];
        if (src < nk) out.kernel_basis.push_back(gs.vectors[i]);
        else if (consistent && src == w_slot) out.w = gs.vectors[i];
        else out.complement_basis.push_back(gs.vectors[i]);
    }
    return out;
}

// -- determinants and definiteness ----------------------------------------

namespace {

Integer bareiss_det_int(IntMat& M) {
    const std::size_t n = M.size();
    if (n == 0) return Integer(1);
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t l = k + 1;
            while (l < n && M[l][k] == 0) ++l;
            if (l == n) return Integer(0);
            std::swap(M[k], M[l]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

}  // namespace

Rational bareiss_det(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("bareiss_det: non-square matrix");
    const std::size_t n = M.rows();
    IntMat W(n, std::vector<Integer>(n));
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer L(1);
        for (std::size_t j = 0; j < n; ++j) L = lcm(L, denominator(M.at(i, j)));
        scale *= L;
        for (std::size_t j = 0; j < n; ++j) W[i][j] = numerator(M.at(i, j) * Rational(L));
    }
    return Rational(bareiss_det_int(W)) / Rational(scale);
}

Definiteness ldlt_definiteness(const RatMatrix& M) {
    if (!M.is_symmetric()) throw std::invalid_argument("ldlt_definiteness: asymmetric input");
    const std::size_t n = M.rows();
    RatMatrix W = M;
    bool saw_zero = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (mp::abs(W.at(i, i)) > mp::abs(W.at(best, best))) best = i;
        if (W.at(best, best) == 0) {
            // Every remaining diagonal entry is zero. Any surviving off-diagonal
            // entry gives a 2x2 principal block with negative determinant.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (W.at(i, j) != 0) return Definiteness::Indefinite;
            saw_zero = true;
            break;
        }
        if (W.at(best, best) < 0) return Definiteness::Indefinite;
        if (best != k) {  // symmetric row/column swap
            for (std::size_t j = 0; j < n; ++j) std::swap(W.at(k, j), W.at(best, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(W.at(i, k), W.at(i, best));
        }
        const Rational pivot = W.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (W.at(i, k) == 0) continue;
            const Rational f = W.at(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j)
                if (W.at(k, j) != 0) W.at(i, j) -= f * W.at(k, j);
        }
    }
    return saw_zero ? Definiteness::PositiveSemidefiniteSingular : Definiteness::PositiveDefinite;
}

Rational lambda_min_lower_bound(const RatMatrix& M) {
    if (ldlt_definiteness(M) != Definiteness::PositiveDefinite)
        throw std::domain_error("lambda_min_lower_bound: matrix is not positive definite");
    const std::size_t N = M.rows();
    if (N == 1) return M.at(0, 0);
    Rational bmax(0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) bmax = std::max(bmax, mp::abs(M.at(i, j)));
    // det = product of eigenvalues <= lambda_min * (N * bmax)^(N-1).
    return bareiss_det(M) / rat_pow(Rational(N) * bmax, static_cast<unsigned>(N - 1));
}

SqrtBounds sqrt_bounds(const Rational& s, unsigned precision_bits) {
    if (s < 0) throw std::domain_error("sqrt_bounds: negative input");
    if (s == 0) return {Rational(0), Rational(0)};
    const Integer num = numerator(s), den = denominator(s);
    const Integer t_num = num << (2 * precision_bits);
    const Integer f = t_num / den;  // floor(s * 4^p), positive
    const Integer L = mp::sqrt(f);
    const Rational pow2 = Rational(Integer(1) << precision_bits);
    if (L * L * den == t_num) {
        const Rational exact = Rational(L) / pow2;
        return {exact, exact};
    }
    return {Rational(L) / pow2, Rational(L + 1) / pow2};
}

Rational sqrt_upper_bound(const Rational& s, unsigned precision_bits) {
    return sqrt_bounds(s, precision_bits).upper;
}

Rational norm_upper_bound(const RatVector& v, unsigned precision_bits) {
    return sqrt_upper_bound(norm_sq(v), precision_bits);
}

Rational inv_norm_upper_bound(const RatVector& v, unsigned precision_bits) {
    const Rational s = norm_sq(v);
    if (s == 0) throw std::domain_error("inv_norm_upper_bound: zero vector");
    for (unsigned bits = precision_bits;; bits *= 2) {
        const SqrtBounds sb = sqrt_bounds(s, bits);
        if (sb.lower > 0) return 1 / sb.lower;
    }
}

}  // namespace convexpoly

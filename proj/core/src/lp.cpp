#include "convexpoly/lp.hpp"

#include <limits>
#include <stdexcept>

namespace convexpoly {

bool Polyhedron::contains(const RatVector& x) const {
    if (x.size() != dim()) return false;
    const RatVector Ax = A.apply(x);
    for (std::size_t i = 0; i < num_rows(); ++i)
        if (Ax[i] > b[i]) return false;
    return true;
}

namespace {

/**
 * Dense two-phase simplex on the standard form
 *   [sigma*A | -sigma*A | diag(sigma) | I] * (x+, x-, s, z) = sigma*b,
 * all variables nonnegative, with row signs sigma chosen so the right-hand
 * side is nonnegative and the artificials z form the starting basis. Bland's
 * rule (smallest entering index, smallest basic index on ratio ties) makes
 * every run finite.
 */
class Simplex {
  public:
    Simplex(const Polyhedron& P) : n_(P.dim()), m_(P.num_rows()), ncols_(2 * n_ + 2 * m_) {
        sigma_.resize(m_);
        rows_.assign(m_, RatVector(ncols_, Rational(0)));
        rhs_.resize(m_);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            sigma_[i] = (P.b[i] < 0) ? -1 : 1;
            const Rational s(sigma_[i]);
            for (std::size_t j = 0; j < n_; ++j) {
                const Rational v = s * P.A.at(i, j);
                rows_[i][j] = v;
                rows_[i][n_ + j] = -v;
            }
            rows_[i][2 * n_ + i] = s;           // slack
            rows_[i][2 * n_ + m_ + i] = 1;      // artificial
            rhs_[i] = s * P.b[i];
            basis_[i] = 2 * n_ + m_ + i;
        }
        obj_.assign(ncols_, Rational(0));
    }

    /// Minimize the artificial sum. Returns the attained infeasibility gap.
    Rational run_phase1() {
        for (std::size_t j = 0; j < 2 * n_ + m_; ++j) {
            Rational s(0);
            for (std::size_t i = 0; i < m_; ++i) s += rows_[i][j];
            obj_[j] = -s;
        }
        for (std::size_t j = 2 * n_ + m_; j < ncols_; ++j) obj_[j] = 0;
        obj_rhs_ = 0;
        for (std::size_t i = 0; i < m_; ++i) obj_rhs_ -= rhs_[i];
        if (iterate(/*allow_artificials=*/true) != ncols_)
            throw std::logic_error("simplex: phase one cannot be unbounded");
        if (obj_rhs_ == 0) expel_artificials();
        return -obj_rhs_;
    }

    /// Minimize c^T x (c over the original free variables). Returns ncols_ on
    /// optimality, otherwise the entering column witnessing unboundedness.
    std::size_t run_phase2(const RatVector& c) {
        RatVector cost(ncols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            cost[j] = c[j];
            cost[n_ + j] = -c[j];
        }
        for (std::size_t j = 0; j < ncols_; ++j) {
            Rational s = cost[j];
            for (std::size_t i = 0; i < m_; ++i)
                if (cost[basis_[i]] != 0) s -= cost[basis_[i]] * rows_[i][j];
            obj_[j] = s;
        }
        obj_rhs_ = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (cost[basis_[i]] != 0) obj_rhs_ -= cost[basis_[i]] * rhs_[i];
        return iterate(/*allow_artificials=*/false);
    }

    /// Current basic solution mapped back to the original free variables.
    RatVector primal_point() const {
        RatVector x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] += rhs_[i];
            else if (basis_[i] < 2 * n_) x[basis_[i] - n_] -= rhs_[i];
        }
        return x;
    }

    /// Unbounded ray through entering column e, in original variables.
    RatVector primal_ray(std::size_t e) const {
        RatVector dx(n_, Rational(0));
        if (e < n_) dx[e] += 1;
        else if (e < 2 * n_) dx[e - n_] -= 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (rows_[i][e] == 0) continue;
            if (basis_[i] < n_) dx[basis_[i]] -= rows_[i][e];
            else if (basis_[i] < 2 * n_) dx[basis_[i] - n_] += rows_[i][e];
        }
        return dx;
    }

    /// Simplex multipliers read off the artificial columns, mapped back
    /// through the row signs. Pass the cost carried by an artificial column
    /// in the phase that just ran (1 in phase one, 0 in phase two).
    RatVector signed_multipliers(const Rational& artificial_cost) const {
        RatVector y(m_);
        for (std::size_t i = 0; i < m_; ++i)
            y[i] = -Rational(sigma_[i]) * (artificial_cost - obj_[2 * n_ + m_ + i]);
        return y;
    }

    const Rational& objective_negated() const { return obj_rhs_; }

  private:
    /// Degenerate phase-one optima can leave an artificial basic at level
    /// zero; letting it grow in phase two would fake an unbounded direction.
    /// Pivot each one out on any real column of its row (a level-zero pivot,
    /// feasible for either pivot sign). A row with no real entries is the
    /// redundant constraint 0 = 0 and can keep its artificial: every later
    /// pivot leaves an all-zero row untouched.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 2 * n_ + m_) continue;
            for (std::size_t j = 0; j < 2 * n_ + m_; ++j) {
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::size_t iterate(bool allow_artificials) {
        const std::size_t limit = allow_artificials ? ncols_ : 2 * n_ + m_;
        for (;;) {
            std::size_t e = ncols_;
            for (std::size_t j = 0; j < limit; ++j)
                if (obj_[j] < 0) {
                    e = j;
                    break;
                }
            if (e == ncols_) return ncols_;  // optimal

            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][e] <= 0) continue;
                const Rational ratio = rhs_[i] / rows_[i][e];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return e;  // unbounded along column e
            pivot(leave, e);
        }
    }

    void pivot(std::size_t r, std::size_t e) {
        const Rational p = rows_[r][e];
        for (std::size_t j = 0; j < ncols_; ++j)
            if (rows_[r][j] != 0) rows_[r][j] /= p;
        rhs_[r] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][e] == 0) continue;
            const Rational f = rows_[i][e];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (obj_[e] != 0) {
            const Rational f = obj_[e];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (rows_[r][j] != 0) obj_[j] -= f * rows_[r][j];
            obj_rhs_ -= f * rhs_[r];
        }
        basis_[r] = e;
    }

    std::size_t n_, m_, ncols_;
    std::vector<int> sigma_;
    std::vector<RatVector> rows_;
    RatVector rhs_;
    RatVector obj_;
    Rational obj_rhs_;
    std::vector<std::size_t> basis_;
};

void check_farkas(const Polyhedron& P, const RatVector& y) {
    Rational by(0);
    for (std::size_t i = 0; i < P.num_rows(); ++i) {
        if (y[i] < 0) throw std::logic_error("simplex: negative Farkas multiplier");
        by += y[i] * P.b[i];
    }
    if (by >= 0 || !is_zero_vector(P.A.apply_transpose(y)))
        throw std::logic_error("simplex: invalid Farkas certificate");
}

void check_dual(const Polyhedron& P, const RatVector& c, const RatVector& y,
                const Rational& value) {
    Rational by(0);
    for (std::size_t i = 0; i < P.num_rows(); ++i) {
        if (y[i] < 0) throw std::logic_error("simplex: negative dual multiplier");
        by += y[i] * P.b[i];
    }
    const RatVector aty = P.A.apply_transpose(y);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (aty[j] != -c[j]) throw std::logic_error("simplex: dual equality violated");
    if (-by != value) throw std::logic_error("simplex: duality gap");
}

}  // namespace

LpOutcome lp_feasible_point(const Polyhedron& P) {
    LpOutcome out;
    Simplex sx(P);
    if (sx.run_phase1() > 0) {
        out.status = LpStatus::Infeasible;
        out.farkas = sx.signed_multipliers(Rational(1));
        check_farkas(P, out.farkas);
        return out;
    }
    out.status = LpStatus::Optimal;
    out.point = sx.primal_point();
    out.value = 0;
    if (!P.contains(out.point)) throw std::logic_error("simplex: infeasible phase-one point");
    return out;
}

LpOutcome lp_optimize(const RatVector& c, const Polyhedron& P) {
    if (c.size() != P.dim()) throw std::invalid_argument("lp_optimize: dimension mismatch");
    LpOutcome out;
    Simplex sx(P);
    if (sx.run_phase1() > 0) {
        out.status = LpStatus::Infeasible;
        out.farkas = sx.signed_multipliers(Rational(1));
        check_farkas(P, out.farkas);
        return out;
    }
    const std::size_t e = sx.run_phase2(c);
    if (e != 2 * P.dim() + 2 * P.num_rows()) {
        out.status = LpStatus::Unbounded;
        out.ray = sx.primal_ray(e);
        const RatVector Ad = P.A.apply(out.ray);
        for (const Rational& v : Ad)
            if (v > 0) throw std::logic_error("simplex: invalid unbounded ray");
        if (dot(c, out.ray) >= 0) throw std::logic_error("simplex: non-improving ray");
        return out;
    }
    out.status = LpStatus::Optimal;
    out.point = sx.primal_point();
    out.value = -sx.objective_negated();
    out.dual = sx.signed_multipliers(Rational(0));
    if (!P.contains(out.point) || dot(c, out.point) != out.value)
        throw std::logic_error("simplex: inconsistent optimal point");
    check_dual(P, c, out.dual, out.value);
    return out;
}

RatVector farkas_certificate(const Polyhedron& P) {
    const LpOutcome out = lp_feasible_point(P);
    if (out.status != LpStatus::Infeasible)
        throw std::domain_error("farkas_certificate: polyhedron is feasible");
    Rational by(0);
    for (std::size_t i = 0; i < P.num_rows(); ++i) by += out.farkas[i] * P.b[i];
    return vec_scale(-1 / by, out.farkas);  // b^T y = -1 after scaling
}

ChebyshevBall chebyshev_inner_ball(const Polyhedron& P, const Rational& box_radius) {
    const std::size_t n = P.dim(), m = P.num_rows();
    RatMatrix Q(m + 2 * n + 2, n + 1);
    RatVector q(m + 2 * n + 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) Q.at(i, j) = P.A.at(i, j);
        Q.at(i, n) = norm_upper_bound(P.A.row(i));
        q[i] = P.b[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        Q.at(m + 2 * j, j) = 1;
        Q.at(m + 2 * j, n) = 1;
        q[m + 2 * j] = box_radius;
        Q.at(m + 2 * j + 1, j) = -1;
        Q.at(m + 2 * j + 1, n) = 1;
        q[m + 2 * j + 1] = box_radius;
    }
    Q.at(m + 2 * n, n) = -1;
    q[m + 2 * n] = 0;  // radius >= 0
    Q.at(m + 2 * n + 1, n) = 1;
    q[m + 2 * n + 1] = box_radius;  // radius <= box_radius, rules out unboundedness

    RatVector c(n + 1, Rational(0));
    c[n] = -1;
    const LpOutcome out = lp_optimize(c, {Q, q});
    if (out.status != LpStatus::Optimal)
        throw std::domain_error("chebyshev_inner_ball: no feasible center in the box");
    ChebyshevBall ball;
    ball.center.assign(out.point.begin(), out.point.begin() + n);
    ball.radius = out.point[n];
    return ball;
}

}  // namespace convexpoly

#include "convexpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace convexpoly {

std::size_t multi_index_degree(const MultiIndex& alpha) {
    std::size_t d = 0;
    for (auto e : alpha) d += e;
    return d;
}

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, const Rational& c) {
    SparsePolynomial p(num_vars);
    p.add_term(MultiIndex(num_vars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) throw std::invalid_argument("variable: index out of range");
    SparsePolynomial p(num_vars);
    MultiIndex alpha(num_vars, 0);
    alpha[i] = 1;
    p.add_term(alpha, Rational(1));
    return p;
}

SparsePolynomial SparsePolynomial::from_terms(
    std::size_t num_vars, const std::vector<std::pair<MultiIndex, Rational>>& terms) {
    SparsePolynomial p(num_vars);
    for (const auto& [alpha, c] : terms) p.add_term(alpha, c);
    return p;
}

std::size_t SparsePolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, multi_index_degree(alpha));
    return d;
}

Rational SparsePolynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const MultiIndex& alpha, const Rational& c) {
    if (alpha.size() != n_) throw std::invalid_argument("add_term: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

/// Powers of each coordinate up to the largest exponent that appears.
std::vector<std::vector<Rational>> coordinate_powers(const RatVector& point,
                                                     const SparsePolynomial::TermMap& terms) {
    std::vector<std::uint32_t> max_exp(point.size(), 0);
    for (const auto& [alpha, c] : terms)
        for (std::size_t i = 0; i < alpha.size(); ++i) max_exp[i] = std::max(max_exp[i], alpha[i]);
    std::vector<std::vector<Rational>> pw(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        pw[i].resize(max_exp[i] + 1);
        pw[i][0] = 1;
        for (std::uint32_t e = 1; e <= max_exp[i]; ++e) pw[i][e] = pw[i][e - 1] * point[i];
    }
    return pw;
}

}  // namespace

Rational SparsePolynomial::eval(const RatVector& point) const {
    if (point.size() != n_) throw std::invalid_argument("eval: dimension mismatch");
    const auto pw = coordinate_powers(point, terms_);
    Rational acc(0);
    for (const auto& [alpha, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < n_; ++i)
            if (alpha[i] > 0) t *= pw[i][alpha[i]];
        acc += t;
    }
    return acc;
}

SparsePolynomial SparsePolynomial::partial_derivative(std::size_t i) const {
    if (i >= n_) throw std::invalid_argument("partial_derivative: index out of range");
    SparsePolynomial d(n_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[i] == 0) continue;
        MultiIndex beta = alpha;
        beta[i] -= 1;
        d.add_term(beta, c * Rational(alpha[i]));
    }
    return d;
}

RatVector SparsePolynomial::gradient_at(const RatVector& point) const {
    RatVector g(n_);
    for (std::size_t i = 0; i < n_; ++i) g[i] = partial_derivative(i).eval(point);
    return g;
}

RatMatrix SparsePolynomial::hessian_at(const RatVector& point) const {
    RatMatrix H(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const SparsePolynomial di = partial_derivative(i);
        for (std::size_t j = i; j < n_; ++j) {
            const Rational v = di.partial_derivative(j).eval(point);
            H.at(i, j) = v;
            H.at(j, i) = v;
        }
    }
    return H;
}

std::size_t SparsePolynomial::encoding_length() const {
    std::size_t len = n_ + degree();
    for (const auto& [alpha, c] : terms_) len += bit_length(c);
    return len;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    if (n_ != other.n_) throw std::invalid_argument("polynomial add: arity mismatch");
    SparsePolynomial r = *this;
    for (const auto& [alpha, c] : other.terms_) r.add_term(alpha, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    if (n_ != other.n_) throw std::invalid_argument("polynomial sub: arity mismatch");
    SparsePolynomial r = *this;
    for (const auto& [alpha, c] : other.terms_) r.add_term(alpha, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (n_ != other.n_) throw std::invalid_argument("polynomial mul: arity mismatch");
    SparsePolynomial r(n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) {
            MultiIndex s(n_);
            for (std::size_t i = 0; i < n_; ++i) s[i] = a[i] + b[i];
            r.add_term(s, ca * cb);
        }
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const { return scale(Rational(-1)); }

SparsePolynomial SparsePolynomial::scale(const Rational& c) const {
    SparsePolynomial r(n_);
    if (c == 0) return r;
    for (const auto& [alpha, coef] : terms_) r.terms_.emplace(alpha, c * coef);
    return r;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Map order iterates low-degree terms first; render in reverse for the
    // conventional highest-degree-first layout.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [alpha, c] = *it;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Rational ac = mp::abs(c);
        const bool is_const = multi_index_degree(alpha) == 0;
        if (ac != 1 || is_const) os << to_fraction_string(ac);
        bool printed_var = false;
        for (std::size_t i = 0; i < n_; ++i) {
            if (alpha[i] == 0) continue;
            if (printed_var || ac != 1) os << "*";
            os << "x" << i;
            if (alpha[i] > 1) os << "^" << alpha[i];
            printed_var = true;
        }
    }
    return os.str();
}

SparsePolynomial substitute_affine(const SparsePolynomial& f, const std::vector<RatVector>& basis,
                                   const RatVector& offset) {
    const std::size_t n = f.num_vars(), k = basis.size();
    if (offset.size() != n) throw std::invalid_argument("substitute_affine: offset arity mismatch");
    for (const auto& col : basis)
        if (col.size() != n) throw std::invalid_argument("substitute_affine: basis arity mismatch");

    // Affine form for each original variable: aff[i](y) = sum_j B[i][j]*y_j + offset[i].
    std::vector<SparsePolynomial> aff(n, SparsePolynomial(k));
    for (std::size_t i = 0; i < n; ++i) {
        aff[i] = SparsePolynomial::constant(k, offset[i]);
        for (std::size_t j = 0; j < k; ++j)
            aff[i] = aff[i] + SparsePolynomial::variable(k, j).scale(basis[j][i]);
    }

    // Cache powers of each affine form up to its largest exponent.
    std::vector<std::uint32_t> max_exp(n, 0);
    for (const auto& [alpha, c] : f.terms())
        for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], alpha[i]);
    std::vector<std::vector<SparsePolynomial>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
        pw[i].reserve(max_exp[i] + 1);
        pw[i].push_back(SparsePolynomial::constant(k, Rational(1)));
        for (std::uint32_t e = 1; e <= max_exp[i]; ++e) pw[i].push_back(pw[i][e - 1] * aff[i]);
    }

    SparsePolynomial g(k);
    for (const auto& [alpha, c] : f.terms()) {
        SparsePolynomial t = SparsePolynomial::constant(k, c);
        for (std::size_t i = 0; i < n; ++i)
            if (alpha[i] > 0) t = t * pw[i][alpha[i]];
        g = g + t;
    }
    return g;
}

}  // namespace convexpoly

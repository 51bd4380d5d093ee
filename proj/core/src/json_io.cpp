#include "convexpoly/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace convexpoly {

namespace {

using nlohmann::json;

Integer parse_json_integer(const json& j, const char* field) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const Rational r = parse_rational(s);  // validates the decimal syntax
        if (denominator(r) != 1)
            throw std::invalid_argument(std::string(field) + " must be an integer: '" + s + "'");
        return numerator(r);
    }
    throw std::invalid_argument(std::string(field) + " must be an integer or a decimal string");
}

Rational parse_json_rational(const json& j, const char* field) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument(std::string(field) + " must be a rational string such as \"3/2\"");
}

json rational_json(const Rational& r) { return to_fraction_string(r); }

json vector_json(const RatVector& v) {
    json arr = json::array();
    for (const Rational& x : v) arr.push_back(rational_json(x));
    return arr;
}

json matrix_json(const RatMatrix& M) {
    json arr = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) arr.push_back(vector_json(M.row(i)));
    return arr;
}

json basis_json(const std::vector<RatVector>& vs) {
    json arr = json::array();
    for (const RatVector& v : vs) arr.push_back(vector_json(v));
    return arr;
}

json polynomial_json_object(const SparsePolynomial& f) {
    json terms = json::array();
    for (const auto& [alpha, c] : f.terms()) {
        json t;
        t["num"] = numerator(c).str();
        t["den"] = denominator(c).str();
        t["exp"] = alpha;
        terms.push_back(std::move(t));
    }
    json j;
    j["n"] = f.num_vars();
    j["terms"] = std::move(terms);
    return j;
}

SparsePolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON must be {\"n\": ..., \"terms\": [...]}");
    if (!j["n"].is_number_unsigned() && !(j["n"].is_number_integer() && j["n"].get<long long>() >= 0))
        throw std::invalid_argument("polynomial field 'n' must be a nonnegative integer");
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["terms"].is_array())
        throw std::invalid_argument("polynomial field 'terms' must be an array");

    std::vector<std::pair<MultiIndex, Rational>> terms;
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("num") || !t.contains("exp"))
            throw std::invalid_argument("each term needs 'num' and 'exp' (and optional 'den')");
        const Integer num = parse_json_integer(t["num"], "term 'num'");
        const Integer den = t.contains("den") ? parse_json_integer(t["den"], "term 'den'") : Integer(1);
        if (den <= 0) throw std::invalid_argument("term 'den' must be a positive integer");
        if (!t["exp"].is_array() || t["exp"].size() != n)
            throw std::invalid_argument("term 'exp' must list one exponent per variable");
        MultiIndex alpha(n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& e = t["exp"][i];
            if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
                throw std::invalid_argument("exponents must be nonnegative integers");
            alpha[i] = e.get<std::uint32_t>();
        }
        terms.emplace_back(std::move(alpha), Rational(num) / Rational(den));
    }
    return SparsePolynomial::from_terms(n, terms);
}

json parse_document(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string("malformed JSON in ") + what);
    return j;
}

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::EmptyPolyhedron: return "empty_polyhedron";
        case SolveStatus::NotConvex: return "not_convex";
    }
    return "unknown";
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text) {
    return polynomial_from_json(parse_document(text, "polynomial"));
}

std::string polynomial_to_json(const SparsePolynomial& f, int indent) {
    return dump(polynomial_json_object(f), indent);
}

Polyhedron parse_polyhedron(const std::string& text) {
    const json j = parse_document(text, "polyhedron");
    if (!j.is_object() || !j.contains("A") || !j.contains("b"))
        throw std::invalid_argument("polyhedron JSON must be {\"A\": [...], \"b\": [...]}");
    if (!j["A"].is_array() || !j["b"].is_array())
        throw std::invalid_argument("polyhedron fields 'A' and 'b' must be arrays");
    if (j["A"].size() != j["b"].size())
        throw std::invalid_argument("'A' and 'b' must have the same number of rows");

    const std::size_t m = j["A"].size();
    std::size_t n = 0;
    if (j.contains("n")) {
        if (!j["n"].is_number_unsigned())
            throw std::invalid_argument("polyhedron field 'n' must be a nonnegative integer");
        n = j["n"].get<std::size_t>();
    } else if (m > 0) {
        if (!j["A"][0].is_array())
            throw std::invalid_argument("rows of 'A' must be arrays of rational strings");
        n = j["A"][0].size();
    } else {
        throw std::invalid_argument("a polyhedron with no rows needs an explicit 'n'");
    }

    Polyhedron P{RatMatrix(m, n), RatVector(m)};
    for (std::size_t i = 0; i < m; ++i) {
        const json& row = j["A"][i];
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("every row of 'A' must have exactly n entries");
        for (std::size_t k = 0; k < n; ++k) P.A.at(i, k) = parse_json_rational(row[k], "'A' entry");
        P.b[i] = parse_json_rational(j["b"][i], "'b' entry");
    }
    return P;
}

std::string polyhedron_to_json(const Polyhedron& P, int indent) {
    json j;
    j["A"] = matrix_json(P.A);
    j["b"] = vector_json(P.b);
    j["n"] = P.dim();
    return dump(j, indent);
}

std::string solve_outcome_to_json(const SolveOutcome& outcome, int indent) {
    json j;
    j["status"] = status_name(outcome.status);

    json diag;
    diag["structure_rank"] = outcome.diagnostics.structure_rank;
    diag["kernel_dim"] = outcome.diagnostics.kernel_dim;
    diag["linear_only"] = outcome.diagnostics.linear_only;
    diag["has_linear_part"] = outcome.diagnostics.has_linear_part;
    if (!outcome.diagnostics.message.empty()) diag["message"] = outcome.diagnostics.message;

    switch (outcome.status) {
        case SolveStatus::Solved: {
            j["point"] = vector_json(outcome.point);
            json value;
            value["rat"] = rational_json(outcome.value);
            value["dec"] = to_decimal_string(outcome.value);
            j["value"] = std::move(value);
            j["radius"] = rational_json(outcome.radius);
            const MinimizeDiagnostics& md = outcome.diagnostics.minimize;
            json mj;
            mj["reduced_dim"] = md.reduced_dim;
            mj["bisection_rounds"] = md.bisection_rounds;
            mj["ellipsoid_iterations"] = md.ellipsoid_iterations;
            mj["chebyshev_radius"] = rational_json(md.chebyshev_radius);
            mj["lipschitz"] = rational_json(md.lipschitz);
            mj["tau_low"] = rational_json(md.tau_low);
            mj["tau_high"] = rational_json(md.tau_high);
            diag["minimize"] = std::move(mj);
            break;
        }
        case SolveStatus::Unbounded:
            j["ray"] = vector_json(outcome.ray);
            break;
        case SolveStatus::EmptyPolyhedron:
            j["farkas"] = vector_json(outcome.farkas);
            break;
        case SolveStatus::NotConvex:
            diag["exhaustive_search"] = outcome.diagnostics.exhaustive_search;
            break;
    }
    j["diagnostics"] = std::move(diag);
    return dump(j, indent);
}

std::string decomposition_to_json(const StructureDecomposition& dec, int indent) {
    json j;
    j["U"] = matrix_json(dec.U);
    j["scaled_basis"] = basis_json(dec.scaled_basis);
    j["w"] = vector_json(dec.w);
    j["kernel"] = basis_json(dec.kernel);
    j["f_hat"] = polynomial_json_object(dec.f_hat);
    return dump(j, indent);
}

std::string radius_bound_to_json(const RadiusBound& rb, int indent) {
    json j;
    j["B_U"] = rational_json(rb.B_U);
    j["B_w"] = rational_json(rb.B_w);
    j["B_UW"] = rational_json(rb.B_UW);
    j["R"] = rational_json(rb.R);
    j["feasible_point"] = vector_json(rb.feasible_point);
    return dump(j, indent);
}

}  // namespace convexpoly

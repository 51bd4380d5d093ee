#pragma once

/**
 * @file json_io.hpp
 * @brief JSON serialization for objectives, constraint systems, and results.
 *
 * Polynomials: {"n": 2, "terms": [{"num": "3", "den": "2", "exp": [4, 0]}]}.
 * Coefficients are decimal integer strings (den positive, defaulting to 1).
 * Polyhedra: {"A": [["1", "-1/2"]], "b": ["3"]} with rational strings "p/q";
 * an optional "n" pins the dimension when A has no rows.
 * All malformed input is reported as std::invalid_argument.
 */

#include <string>

#include "convexpoly/bounds.hpp"
#include "convexpoly/lp.hpp"
#include "convexpoly/polynomial.hpp"
#include "convexpoly/solver.hpp"
#include "convexpoly/structure.hpp"

namespace convexpoly {

SparsePolynomial parse_polynomial(const std::string& text);
std::string polynomial_to_json(const SparsePolynomial& f, int indent = 2);

Polyhedron parse_polyhedron(const std::string& text);
std::string polyhedron_to_json(const Polyhedron& P, int indent = 2);

/// Full result document for the solve subcommand; schema depends on status.
std::string solve_outcome_to_json(const SolveOutcome& outcome, int indent = 2);

std::string decomposition_to_json(const StructureDecomposition& dec, int indent = 2);

std::string radius_bound_to_json(const RadiusBound& rb, int indent = 2);

}  // namespace convexpoly

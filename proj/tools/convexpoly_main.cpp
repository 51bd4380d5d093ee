/**
 * @file convexpoly_main.cpp
 * @brief Command line front end for the convexpoly solver library.
 *
 * Subcommands:
 *   solve              minimize the objective over the constraint polyhedron
 *   decompose          print the structural decomposition of the objective
 *   bound              print the a-priori solution norm bound
 *   certify-unbounded  search for an explicit improving ray
 *   check-convexity    sampled Hessian test for non-convexity witnesses
 *
 * Exit codes: 0 solved / no finding, 2 unbounded, 3 empty polyhedron,
 * 4 not convex, 1 internal or usage error.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "convexpoly/bounds.hpp"
#include "convexpoly/json_io.hpp"
#include "convexpoly/solver.hpp"

namespace {

using namespace convexpoly;

constexpr int kExitSolved = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUnbounded = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitNotConvex = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << payload;
}

SearchMode parse_mode(const std::string& mode) {
    if (mode == "exhaustive") return SearchMode::Exhaustive;
    if (mode == "randomized") return SearchMode::Randomized;
    throw std::runtime_error("unknown search mode '" + mode + "' (use exhaustive or randomized)");
}

Polyhedron load_constraints(const std::string& path, std::size_t n) {
    if (path.empty()) return Polyhedron::universe(n);
    Polyhedron P = parse_polyhedron(read_file(path));
    if (P.dim() != n)
        throw std::runtime_error("constraint dimension " + std::to_string(P.dim()) +
                                 " does not match objective dimension " + std::to_string(n));
    return P;
}

int exit_code_for(SolveStatus status) {
    switch (status) {
        case SolveStatus::Solved: return kExitSolved;
        case SolveStatus::Unbounded: return kExitUnbounded;
        case SolveStatus::EmptyPolyhedron: return kExitEmpty;
        case SolveStatus::NotConvex: return kExitNotConvex;
    }
    return kExitInternal;
}

struct CommonArgs {
    std::string objective_path;
    std::string constraints_path;
    std::string out_path = "-";
    std::string eps = "1/1048576";
    std::string mode = "randomized";
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

int run_solve(const CommonArgs& args) {
    const SparsePolynomial f = parse_polynomial(read_file(args.objective_path));
    const Polyhedron P = load_constraints(args.constraints_path, f.num_vars());
    SolveOptions options;
    options.eps = parse_rational(args.eps);
    options.mode = parse_mode(args.mode);
    options.seed = args.seed;
    const SolveOutcome outcome = solve(f, P, options);
    write_output(args.out_path, solve_outcome_to_json(outcome));
    return exit_code_for(outcome.status);
}

int run_decompose(const CommonArgs& args) {
    const SparsePolynomial f = parse_polynomial(read_file(args.objective_path));
    write_output(args.out_path, decomposition_to_json(decompose(f)));
    return kExitSolved;
}

/// Shared front half of `bound` and `certify-unbounded`: feasibility first,
/// then the decomposition-driven ray search.
int run_ray_or(const CommonArgs& args, bool compute_bound) {
    const SparsePolynomial f = parse_polynomial(read_file(args.objective_path));
    const Polyhedron P = load_constraints(args.constraints_path, f.num_vars());

    const LpOutcome feas = lp_feasible_point(P);
    if (feas.status == LpStatus::Infeasible) {
        SolveOutcome stub;
        stub.status = SolveStatus::EmptyPolyhedron;
        Rational by(0);
        for (std::size_t i = 0; i < P.num_rows(); ++i) by += feas.farkas[i] * P.b[i];
        stub.farkas = vec_scale(-1 / by, feas.farkas);
        stub.diagnostics.message = "constraint system is infeasible";
        write_output(args.out_path, solve_outcome_to_json(stub));
        return kExitEmpty;
    }

    if (!compute_bound) {
        const StructureDecomposition dec = decompose(f);
        if (const auto ray = unboundedness_ray(P, dec)) {
            SolveOutcome stub;
            stub.status = SolveStatus::Unbounded;
            stub.ray = *ray;
            stub.diagnostics.message = "objective decreases without bound along the returned ray";
            write_output(args.out_path, solve_outcome_to_json(stub));
            return kExitUnbounded;
        }
        write_output(args.out_path, "{\n  \"status\": \"no_improving_ray\"\n}\n");
        return kExitSolved;
    }

    SearchOptions search;
    search.mode = parse_mode(args.mode);
    search.seed = args.seed;
    StructureWithBound swb;
    try {
        swb = structure_with_bound(f, search);
    } catch (const NotConvexEvidence& e) {
        SolveOutcome stub;
        stub.status = SolveStatus::NotConvex;
        stub.diagnostics.exhaustive_search = e.exhaustive;
        stub.diagnostics.message = e.what();
        write_output(args.out_path, solve_outcome_to_json(stub));
        return kExitNotConvex;
    }
    if (const auto ray = unboundedness_ray(P, swb.decomposition)) {
        SolveOutcome stub;
        stub.status = SolveStatus::Unbounded;
        stub.ray = *ray;
        stub.diagnostics.message = "objective decreases without bound along the returned ray";
        write_output(args.out_path, solve_outcome_to_json(stub));
        return kExitUnbounded;
    }
    const RadiusBound rb = radius_R(f, P, swb.decomposition, swb.bound);
    write_output(args.out_path, radius_bound_to_json(rb));
    return kExitSolved;
}

int run_check_convexity(const CommonArgs& args) {
    const SparsePolynomial f = parse_polynomial(read_file(args.objective_path));
    const auto witness = sampled_convexity_check(f, args.seed, args.samples);
    if (witness) {
        std::ostringstream os;
        os << "{\n  \"status\": \"not_convex\",\n  \"witness\": [";
        for (std::size_t i = 0; i < witness->size(); ++i)
            os << (i ? ", " : "") << '"' << to_fraction_string((*witness)[i]) << '"';
        os << "]\n}\n";
        write_output(args.out_path, os.str());
        return kExitNotConvex;
    }
    write_output(args.out_path, "{\n  \"status\": \"no_evidence\"\n}\n");
    return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimization of convex polynomials over rational polyhedra"};
    app.require_subcommand(1);
    CommonArgs args;

    auto add_io = [&](CLI::App* cmd, bool with_constraints) {
        cmd->add_option("--poly", args.objective_path, "Objective polynomial JSON file")
            ->required();
        if (with_constraints)
            cmd->add_option("--constraints", args.constraints_path,
                            "Constraint polyhedron JSON file (default: all of R^n)");
        cmd->add_option("--out", args.out_path, "Output path, '-' for stdout")
            ->capture_default_str();
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "Minimize the objective over the polyhedron");
    add_io(solve_cmd, true);
    solve_cmd->add_option("--eps", args.eps, "Accuracy as a rational")->capture_default_str();
    solve_cmd->add_option("--seed", args.seed, "Seed for the randomized search")
        ->capture_default_str();
    solve_cmd->add_option("--mode", args.mode, "Definite point search: exhaustive or randomized")
        ->capture_default_str();

    CLI::App* dec_cmd = app.add_subcommand("decompose", "Print the structural decomposition");
    add_io(dec_cmd, false);

    CLI::App* bound_cmd = app.add_subcommand("bound", "Print the a-priori solution norm bound");
    add_io(bound_cmd, true);
    bound_cmd->add_option("--seed", args.seed, "Seed for the randomized search")
        ->capture_default_str();
    bound_cmd->add_option("--mode", args.mode, "Definite point search: exhaustive or randomized")
        ->capture_default_str();

    CLI::App* ray_cmd =
        app.add_subcommand("certify-unbounded", "Search for an explicit improving ray");
    add_io(ray_cmd, true);

    CLI::App* conv_cmd =
        app.add_subcommand("check-convexity", "Sampled Hessian test for non-convexity");
    add_io(conv_cmd, false);
    conv_cmd->add_option("--seed", args.seed, "Sampling seed")->capture_default_str();
    conv_cmd->add_option("--trials", args.samples, "Number of sample points (0 = 64n + 1)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInternal;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(args);
        if (dec_cmd->parsed()) return run_decompose(args);
        if (bound_cmd->parsed()) return run_ray_or(args, /*compute_bound=*/true);
        if (ray_cmd->parsed()) return run_ray_or(args, /*compute_bound=*/false);
        if (conv_cmd->parsed()) return run_check_convexity(args);
    } catch (const std::exception& e) {
        std::cerr << "convexpoly: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

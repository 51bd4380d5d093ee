// Microbenchmarks for the hot paths: exact polynomial arithmetic, the
// rational simplex, structural decomposition, and the full solve pipeline.
// All instance data is generated from fixed seeds so runs are comparable.

#include <benchmark/benchmark.h>

#include <convexpoly/prng.hpp>
#include <convexpoly/solver.hpp>

namespace {

using namespace convexpoly;

Rational small_rational(SplitMix64& rng) {
    return Rational(rng.range(-8, 8)) / Rational(rng.range(1, 4));
}

SparsePolynomial dense_sextic(std::size_t n, std::uint64_t seed) {
    // Sum of squared and cubed affine forms: convex, degree 6, dense support.
    SplitMix64 rng(seed);
    SparsePolynomial f(n);
    for (int t = 0; t < 3; ++t) {
        SparsePolynomial aff = SparsePolynomial::constant(n, small_rational(rng));
        for (std::size_t i = 0; i < n; ++i)
            aff = aff + SparsePolynomial::variable(n, i).scale(small_rational(rng));
        SparsePolynomial sq = aff * aff;
        f = f + (t == 0 ? sq * sq * sq : sq);
    }
    return f;
}

Polyhedron random_polytope(std::size_t n, std::size_t extra, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<RatVector> rows;
    RatVector b;
    for (std::size_t j = 0; j < n; ++j) {
        for (int sign : {1, -1}) {
            RatVector row(n, Rational(0));
            row[j] = sign;
            rows.push_back(row);
            b.push_back(Rational(5));
        }
    }
    for (std::size_t e = 0; e < extra; ++e) {
        RatVector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = small_rational(rng);
        rows.push_back(row);
        b.push_back(Rational(rng.range(2, 9)));
    }
    return {RatMatrix::from_rows(rows, n), b};
}

void BM_PolynomialEval(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SparsePolynomial f = dense_sextic(n, 11);
    SplitMix64 rng(12);
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = small_rational(rng);
    for (auto _ : state) benchmark::DoNotOptimize(f.eval(x));
    state.SetLabel(std::to_string(f.terms().size()) + " terms");
}
BENCHMARK(BM_PolynomialEval)->Arg(2)->Arg(3)->Arg(4);

void BM_SubstituteAffine(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SparsePolynomial f = dense_sextic(n, 21);
    SplitMix64 rng(22);
    std::vector<RatVector> basis(n);
    RatVector offset(n);
    for (std::size_t j = 0; j < n; ++j) {
        offset[j] = small_rational(rng);
        basis[j] = RatVector(n);
        for (std::size_t i = 0; i < n; ++i) basis[j][i] = small_rational(rng);
    }
    for (auto _ : state) benchmark::DoNotOptimize(substitute_affine(f, basis, offset));
}
BENCHMARK(BM_SubstituteAffine)->Arg(2)->Arg(3);

void BM_SimplexOptimize(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Polyhedron P = random_polytope(n, 2 * n, 31);
    SplitMix64 rng(32);
    RatVector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = small_rational(rng);
    if (is_zero_vector(c)) c[0] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(lp_optimize(c, P));
}
BENCHMARK(BM_SimplexOptimize)->Arg(2)->Arg(4)->Arg(6);

void BM_Decompose(benchmark::State& state) {
    SparsePolynomial f = dense_sextic(static_cast<std::size_t>(state.range(0)), 41);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(3);

void BM_SolveQuartic(benchmark::State& state) {
    SparsePolynomial f =
        SparsePolynomial::from_terms(1, {{{4}, Rational(1)}, {{1}, Rational(1)}});
    SolveOptions opt;
    opt.eps = Rational(1) / Rational(int_pow(Integer(2), static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(solve(f, Polyhedron::universe(1), opt));
}
BENCHMARK(BM_SolveQuartic)->Arg(8)->Arg(14)->Arg(20);

void BM_MinimizeLinearOverPolytope(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Polyhedron P = random_polytope(n, n, 51);
    SparsePolynomial f(n);
    SplitMix64 rng(52);
    for (std::size_t i = 0; i < n; ++i)
        f = f + SparsePolynomial::variable(n, i).scale(small_rational(rng));
    Rational eps = Rational(1, 1 << 12);
    for (auto _ : state) benchmark::DoNotOptimize(minimize_over_ball(f, P, Rational(20), eps));
}
BENCHMARK(BM_MinimizeLinearOverPolytope)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();

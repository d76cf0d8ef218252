// Microbenchmarks for the hot paths: row reduction, element products,
// radical extraction, minimal polynomials and root lifting.

#include "qalg/algebra.hpp"
#include "qalg/lifting.hpp"
#include "qalg/structure.hpp"

#include <benchmark/benchmark.h>

#include <random>

using qalg::AlgebraPtr;
using qalg::Element;
using qalg::QMatrix;
using qalg::Rational;
using qalg::Subspace;
using qalg::Vec;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

Element random_element(const AlgebraPtr& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> c(-3, 3);
    Vec v(a->dim());
    for (auto& x : v) x = Rational(c(rng));
    return qalg::make_element(a, std::move(v));
}

void BM_rref(benchmark::State& state) {
    QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qalg::rref(m));
    }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_element_product(benchmark::State& state) {
    AlgebraPtr a = qalg::matrix_algebra(qalg::catalog_Cneg(Rational(-1)),
                                        static_cast<std::size_t>(state.range(0)));
    Element x = random_element(a, 1), y = random_element(a, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_element_product)->Arg(2)->Arg(3)->Arg(4);

void BM_radical(benchmark::State& state) {
    AlgebraPtr a = qalg::catalog_Tri(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qalg::radical(a));
    }
}
BENCHMARK(BM_radical)->Arg(3)->Arg(5)->Arg(7);

void BM_minimal_poly(benchmark::State& state) {
    AlgebraPtr a = qalg::matrix_algebra(qalg::catalog_Q(), 3);
    Element x = random_element(a, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qalg::minimal_poly_of_element(x));
    }
}
BENCHMARK(BM_minimal_poly);

void BM_hensel_lift(benchmark::State& state) {
    AlgebraPtr a = qalg::tensor_product(qalg::catalog_Tri(4), qalg::catalog_Cneg(Rational(-1)));
    std::vector<Element> gens;
    for (std::size_t p = 1; p < 4; ++p) {
        for (std::size_t i = 0; i < a->dim(); ++i) {
            if (a->basis_names()[i] == "e" + std::to_string(p) + std::to_string(p + 1)) {
                gens.push_back(qalg::basis_element(a, i));
            }
        }
    }
    Subspace ideal = qalg::two_sided_ideal_span(a, gens);
    Element u_scalar = qalg::make_element(a, Vec(a->dim()));
    for (std::size_t i = 0; i < a->dim(); ++i) {
        const std::string& n = a->basis_names()[i];
        if (n.size() == 5 && n[0] == 'e' && n[1] == n[2] && n.substr(3) == "*u") {
            u_scalar = u_scalar + qalg::basis_element(a, i);
        }
    }
    Element noise = random_element(a, 4);
    Vec in_ideal(a->dim());
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        in_ideal = qalg::vec_add(in_ideal,
                                 qalg::vec_scale(noise.coords[r], ideal.basis_vector(r)));
    }
    Element b = u_scalar + qalg::make_element(a, in_ideal);
    qalg::Poly f({Rational(1), Rational(0), Rational(1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qalg::hensel_lift(a, ideal, b, f));
    }
}
BENCHMARK(BM_hensel_lift);

}  // namespace

BENCHMARK_MAIN();

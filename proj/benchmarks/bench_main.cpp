#include <benchmark/benchmark.h>

#include "hopfforge/catalog.hpp"
#include "hopfforge/cohomology.hpp"

using namespace hopfforge;
namespace cat = hopfforge::catalog;

namespace {

void BM_FieldMul(benchmark::State& state) {
    auto F = FieldCtx::make(2, {15});  // GF(16)
    Fq a = F->generator(), b = F->root(15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = F->mul(a, b));
    }
}
BENCHMARK(BM_FieldMul);

void BM_XiBinomialRow(benchmark::State& state) {
    auto F = FieldCtx::make(2, {3});
    Fq xi = F->root(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(xi_binomial(*F, 12, 6, xi));
    }
}
BENCHMARK(BM_XiBinomialRow);

void BM_ReduceLongWord(benchmark::State& state) {
    auto F = FieldCtx::make(2, {});
    GenSet gens{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    RewriteSystem sys = RewriteSystem::orient(
        F.get(), gens,
        {g.pow(6) - NcPoly::unit(F.get()), g * x - x * g - g + g * g, x * x - x});
    Word w;
    for (int i = 0; i < 24; ++i) w += (i % 3 == 0) ? word_of(0) : word_of(1);
    for (auto _ : state) {
        RewriteSystem fresh = sys;  // shared cache; measures the memoized path
        benchmark::DoNotOptimize(fresh.reduce_word(w));
    }
}
BENCHMARK(BM_ReduceLongWord);

void BM_ConfluenceD3b2(benchmark::State& state) {
    // Largest catalog instance: dimension 147 at (p,q) = (7,3).
    for (auto _ : state) {
        cat::Instantiation inst = cat::instantiate(
            "D3b2", {7, 3, 0}, {{"lambda3", "1"}, {"nu1", "1"}}, cat::Strictness::Strict);
        benchmark::DoNotOptimize(inst.H.confluent());
        benchmark::DoNotOptimize(inst.H.basis().count);
    }
}
BENCHMARK(BM_ConfluenceD3b2)->Unit(benchmark::kMillisecond);

void BM_BialgebraAD(benchmark::State& state) {
    for (auto _ : state) {
        cat::Instantiation inst =
            cat::instantiate("AD", {2, 3, 0}, {{"lambda1", "1"}}, cat::Strictness::Strict);
        benchmark::DoNotOptimize(check_bialgebra(inst.H).pass);
    }
}
BENCHMARK(BM_BialgebraAD)->Unit(benchmark::kMillisecond);

void BM_AntipodeOrderA3(benchmark::State& state) {
    cat::Instantiation inst = cat::instantiate(
        "A3", {2, 3, 0}, {{"lambda1", "1"}, {"lambda2", "1"}}, cat::Strictness::Strict);
    derive_antipode(inst.H);
    for (auto _ : state) {
        benchmark::DoNotOptimize(antipode_order(inst.H));
    }
}
BENCHMARK(BM_AntipodeOrderA3);

void BM_TaftH2(benchmark::State& state) {
    // dim C = 9, so C^(x)3 has 729 basis elements.
    auto F = FieldCtx::make(2, {3});
    HopfData data;
    data.field = F;
    data.gens = GenSet{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    data.relations = {NcPoly::from_word(F.get(), word_of(1, 3), F->one()) -
                          NcPoly::unit(F.get()),
                      g * x - (x * g).scaled(F->root(3)),
                      NcPoly::from_word(F.get(), word_of(0, 3), F->one())};
    data.grouplike_gens = {1};
    data.grouplike_orders[1] = 3;
    data.coproduct[1] = TensorPoly::tensor(g, g);
    data.coproduct[0] =
        TensorPoly::tensor(x, NcPoly::unit(F.get())) + TensorPoly::tensor(g, x);
    data.counit[1] = F->one();
    data.counit[0] = F->zero();
    Coalgebra C = Coalgebra::from_hopf(HopfPresentation::build(std::move(data)));
    uint32_t one = C.grouplike_named("1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cohomology_dims(C, {one, one}, 2).dim_H);
    }
}
BENCHMARK(BM_TaftH2)->Unit(benchmark::kMillisecond);

void BM_CoradicalFiltrationD3b2(benchmark::State& state) {
    cat::Instantiation inst = cat::instantiate("D3b2", {7, 3, 0}, {}, cat::Strictness::Strict);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coradical_filtration(inst.H, false).dims.size());
    }
}
BENCHMARK(BM_CoradicalFiltrationD3b2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

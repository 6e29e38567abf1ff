#include <benchmark/benchmark.h>

#include "sepdiff/parser.hpp"
#include "sepdiff/pstructure.hpp"
#include "sepdiff/reduction.hpp"
#include "sepdiff/sampling.hpp"

using namespace sepdiff;

namespace {

const std::vector<std::string> X{"x"};

FieldPresentation gf5t() { return make_presentation(5, {}, true); }
FieldPresentation gf3ct() { return make_presentation(3, {"c"}, true); }

void BM_RationalMul(benchmark::State& state) {
    auto K = gf3ct();
    Sampler s(K, 1);
    std::vector<RationalFunction> xs;
    for (int i = 0; i < 64; ++i) xs.push_back(s.nonzero_element(3, 4));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = xs[i % 64] * xs[(i + 1) % 64];
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_RationalMul);

void BM_PCoordinates(benchmark::State& state) {
    auto K = gf3ct();
    Sampler s(K, 2);
    std::vector<RationalFunction> xs;
    for (int i = 0; i < 32; ++i) xs.push_back(s.element(3, 4));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = p_coordinates(xs[i % 32]);
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_PCoordinates);

void BM_Delta(benchmark::State& state) {
    auto K = gf5t();
    Sampler s(K, 3);
    std::vector<DiffPoly> fs;
    for (int i = 0; i < 32; ++i) fs.push_back(s.dpoly(1, state.range(0), 3, 5));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = fs[i % 32].delta();
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_Delta)->Arg(2)->Arg(4);

void BM_FullReduce(benchmark::State& state) {
    auto K = gf5t();
    DiffPoly f = parse_dpoly("x'^2 - x", K, X);
    Sampler s(K, 4);
    std::vector<DiffPoly> gs;
    for (int i = 0; i < 16; ++i) gs.push_back(s.dpoly(1, std::uint32_t(state.range(0)), 2, 3));
    std::size_t i = 0;
    for (auto _ : state) {
        auto cert = full_reduce(gs[i % 16], f);
        benchmark::DoNotOptimize(cert);
        ++i;
    }
}
BENCHMARK(BM_FullReduce)->Arg(2)->Arg(3);

void BM_Member(benchmark::State& state) {
    auto K = gf5t();
    DiffPoly f = parse_dpoly("x'^2 - x", K, X);
    SatIdeal P = make_satideal(f);
    Sampler s(K, 5);
    std::vector<DiffPoly> gs;
    for (int i = 0; i < 16; ++i)
        gs.push_back(s.dpoly(1, 1, 2, 2) * f + s.dpoly(1, 1, 2, 2) * f.delta());
    std::size_t i = 0;
    for (auto _ : state) {
        bool r = member(gs[i % 16], P);
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_Member);

void BM_LambdaFinite(benchmark::State& state) {
    auto K = gf3ct();
    Sampler s(K, 6);
    std::vector<RationalFunction> bs;
    for (int i = 0; i < 32; ++i) bs.push_back(s.constant_element(2, 3));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = lambda_finite(bs[i % 32]);
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_LambdaFinite);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "zzag/family23.hpp"
#include "zzag/moves.hpp"
#include "zzag/plane.hpp"
#include "zzag/uvp.hpp"
#include "zzag/word.hpp"

using namespace zzag;

namespace {

ZigzagType random_one_standard(std::mt19937_64& rng, std::size_t max_tail) {
    std::vector<Weight> w{Weight(0), Weight(-1)};
    std::size_t r = 1 + rng() % max_tail;
    for (std::size_t i = 0; i < r; ++i) w.emplace_back(-2 - static_cast<long long>(rng() % 5));
    return ZigzagType(std::move(w));
}

void bm_reversion_links(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<ZigzagType> types;
    for (int i = 0; i < 64; ++i) types.push_back(random_one_standard(rng, 6));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reversion_links(types[i++ % types.size()]));
    }
}
BENCHMARK(bm_reversion_links);

void bm_reversion_resolution(benchmark::State& state) {
    ZigzagType t = ZigzagType::parse("0,-1,-4,-3,-5,-2");
    for (auto _ : state) benchmark::DoNotOptimize(reversion_resolution(t));
}
BENCHMARK(bm_reversion_resolution);

void bm_word_reduce(benchmark::State& state) {
    std::mt19937_64 rng(2);
    ZigzagType base = ZigzagType::parse("0,-1,-2,-3");
    std::vector<MoveWord> words;
    for (int w = 0; w < 32; ++w) {
        std::vector<Move> moves;
        for (int i = 0; i < 12; ++i) {
            if (rng() % 2)
                moves.push_back(FiberedModification{Weight(2 + rng() % 3), "", false});
            else
                moves.push_back(Reversion{"p" + std::to_string(rng() % 3),
                                          "q" + std::to_string(rng() % 3)});
        }
        words.emplace_back(base, moves);
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(reduce(words[i++ % words.size()]));
}
BENCHMARK(bm_word_reduce);

void bm_jung_factorize(benchmark::State& state) {
    Field k = Field::prime(101);
    PolyAut f = PolyAut::identity(k);
    f = compose(PolyAut::triangular(Poly1::parse(k, "u^3+2u", 'u')), f);
    f = compose(PolyAut::swap_xy(k), f);
    f = compose(PolyAut::triangular(Poly1::parse(k, "3u^4+u^2", 'u')), f);
    f = compose(PolyAut::affine(k, k.from_int(2), k.from_int(1), k.zero(), k.from_int(1),
                                k.from_int(1), k.from_int(5)),
               f);
    for (auto _ : state) benchmark::DoNotOptimize(jung_factorize(f));
}
BENCHMARK(bm_jung_factorize);

void bm_family23_graph(benchmark::State& state) {
    Field k = Field::prime(101);
    for (auto _ : state) benchmark::DoNotOptimize(build_graph23(k));
}
BENCHMARK(bm_family23_graph);

void bm_uvp_relation(benchmark::State& state) {
    Field Q = Field::rationals();
    SurfaceUVP s(Poly1::parse(Q, "w^5-3w^2+1", 'w'));
    UVPAut w(Q, {GenT{Poly1::parse(Q, "1+u^2", 'u')}, GenI{}, GenT{Poly1::parse(Q, "2u", 'u')},
                 GenI{}, GenH{Q.from_int(3)}});
    for (auto _ : state) benchmark::DoNotOptimize(check_relation(w, s));
}
BENCHMARK(bm_uvp_relation);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "kmdgg/dgg.hpp"

using namespace kmdgg;

namespace {

struct Setup {
    std::unique_ptr<Ball> ball;
    GradedGraph strong;
    GradedGraph weak;
    int radius;
};

Setup make(const char* name, int radius) {
    Gcm g = named_gcm(name);
    auto ball = std::make_unique<Ball>(generate_ball(g, radius + 1));
    RootTable roots = RootTable::build(g, radius + 1);
    auto strong = strong_graph(*ball, roots, fundamental_weight(g, 0));
    auto weak = weak_graph(*ball, canonical_K(g));
    return {std::move(ball), std::move(strong), std::move(weak), radius};
}

const Setup& cached(const char* name, int radius) {
    static std::map<std::pair<std::string, int>, Setup> cache;
    auto key = std::pair{std::string(name), radius};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make(name, radius)).first;
    return it->second;
}

template <auto Verify>
void run(benchmark::State& state, const char* name) {
    const Setup& s = cached(name, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rep = Verify(s.strong, s.weak, s.radius);
        benchmark::DoNotOptimize(rep.ok);
    }
}

void parallel_a2(benchmark::State& st) { run<verify_duality>(st, "A2~"); }
void serial_a2(benchmark::State& st) { run<verify_duality_serial>(st, "A2~"); }
void parallel_c2(benchmark::State& st) { run<verify_duality>(st, "C2~"); }
void serial_c2(benchmark::State& st) { run<verify_duality_serial>(st, "C2~"); }

}  // namespace

BENCHMARK(parallel_a2)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_a2)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_c2)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_c2)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

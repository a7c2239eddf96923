#include <benchmark/benchmark.h>

#include "neutral/compactification.hpp"
#include "neutral/intersection.hpp"
#include "neutral/support_surface.hpp"
#include "neutral/tensor.hpp"

using namespace neutral;

static void BM_ricci(benchmark::State& state) {
    auto es = einstein_static_metric();
    Vec4 p(0.4, 0.1, 1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(ricci(es, p));
}
BENCHMARK(BM_ricci);

static void BM_conformal_pullback(benchmark::State& state) {
    auto es = einstein_static_metric();
    auto map = [](const Eigen::VectorXd& x) {
        CompactChartPoint c = to_compact(Vec4(x[0], x[1], x[2], x[3]));
        return Vec4(c.p, c.q, c.theta1, c.theta2);
    };
    Eigen::VectorXd p(4);
    p << 1.0, -2.0, 0.5, 3.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(pullback_metric(map, es, p));
}
BENCHMARK(BM_conformal_pullback);

static void BM_surface_jet(benchmark::State& state) {
    auto S = spheroid_support(2.0, 1.0);
    cplx nu(0.3, -0.7);
    for (auto _ : state) benchmark::DoNotOptimize(surface_jet(S, nu));
}
BENCHMARK(BM_surface_jet);

static void BM_induced_metric(benchmark::State& state) {
    auto S = spheroid_support(2.0, 1.0);
    auto j = surface_jet(S, cplx(0.3, -0.7));
    for (auto _ : state)
        benchmark::DoNotOptimize(induced_metric_H(j, 1.1));
}
BENCHMARK(BM_induced_metric);

static void BM_brute_force_intersection(benchmark::State& state) {
    IntersectionConfig cfg{2, 1, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            brute_force_intersection(cfg, state.range(0)));
}
BENCHMARK(BM_brute_force_intersection)->Arg(64)->Arg(128);

BENCHMARK_MAIN();

#include "kcr/reduce3d.hpp"
#include "kcr/reduceplanar.hpp"
#include "kcr/solver.hpp"
#include "kcr/sumset.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace kcr;

static void BM_FeSign(benchmark::State& st) {
    auto s = EpsScale::full(st.range(0));
    FieldElem a = FieldElem::surd(2) - FieldElem(BigRational(1414213562, 1000000000)) + FieldElem(eps_power(s, 15));
    for (auto _ : st) benchmark::DoNotOptimize(fe_sign(a));
}
BENCHMARK(BM_FeSign)->Arg(1)->Arg(100);

static void BM_Meb4(benchmark::State& st) {
    auto s = EpsScale::full(8);
    auto x = GapInstance::filled(8, 1);
    auto t = build_2center3d(x, s);
    std::vector<PointD> pts = {t.fp(0, 0), t.fp(1, 3), t.fp(2, -5), t.d_plus[0]};
    for (auto _ : st) benchmark::DoNotOptimize(meb(pts));
}
BENCHMARK(BM_Meb4);

static void BM_Build3D(benchmark::State& st) {
    auto x = gen_gap(st.range(0), true, 1);
    auto s = EpsScale::full(x.n);
    for (auto _ : st) benchmark::DoNotOptimize(build_2center3d(x, s));
}
BENCHMARK(BM_Build3D)->Arg(8)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Certify3D(benchmark::State& st) {
    auto x = gen_gap(st.range(0), false, 2);
    auto t = build_2center3d(x, EpsScale::full(x.n));
    for (auto _ : st) benchmark::DoNotOptimize(certify_no_3d(t).feasible);
}
BENCHMARK(BM_Certify3D)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CertifyPlanar(benchmark::State& st) {
    auto x = gen_gap(st.range(1), false, 3);
    auto s = EpsScale::full(x.n);
    auto p = st.range(0) == 6 ? build_6center(x, s) : build_10center(x, s);
    for (auto _ : st) benchmark::DoNotOptimize(certify_no_planar(p).feasible);
}
BENCHMARK(BM_CertifyPlanar)->Args({6, 2})->Args({10, 2})->Unit(benchmark::kMillisecond);

static void BM_DecideCover(benchmark::State& st) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-6, 6);
    GeometricInstance g;
    for (int i = 0; i < st.range(0); ++i) g.points.push_back({PointD(FieldElem(c(rng)), FieldElem(c(rng))), "P", std::nullopt});
    g.k = 3;
    g.sq_radius = FieldElem(BigRational(9, 2));
    for (auto _ : st) benchmark::DoNotOptimize(decide_cover(g).tag);
}
BENCHMARK(BM_DecideCover)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BruteSumset(benchmark::State& st) {
    auto c = gen_csp(grid_block(2, 2), st.range(0), 0.3, 4);
    auto s = csp_to_sumset(c);
    for (auto _ : st) benchmark::DoNotOptimize(brute_sumset(s));
}
BENCHMARK(BM_BruteSumset)->Arg(4)->Arg(8);

static void BM_BuildKCenter2D(benchmark::State& st) {
    SumSetInstance s;
    s.vertices = {{0, 0}, {0, 1}};
    s.edges = {{0, 1}};
    s.color = {0, 1};
    s.n = 1;
    s.dv = {{1}, {1}};
    s.de = {{2}};
    for (auto _ : st) benchmark::DoNotOptimize(build_kcenter2d(s, kcenter2d_scale(s)).geometric.points.size());
}
BENCHMARK(BM_BuildKCenter2D)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();

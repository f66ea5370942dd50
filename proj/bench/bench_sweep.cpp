#include <benchmark/benchmark.h>

#include <random>

#include "tmdim/bounds.hpp"
#include "tmdim/io.hpp"
#include "tmdim/oracle.hpp"
#include "tmdim/random_mesh.hpp"

using namespace tmdim;

namespace {

const MeshInput& fixture3() {
    static MeshInput in = parse_mesh_file(std::string(FIXTURE_DIR) + "/test3.json");
    return in;
}

const MeshInput& big_grid() {
    static MeshInput in = [] {
        std::mt19937_64 rng(1);
        return build_input(random_grid_doc(rng, 6, 0.4, 2));
    }();
    return in;
}

const std::vector<MeshInput>& random_meshes() {
    static std::vector<MeshInput> v = [] {
        std::mt19937_64 rng(2);
        std::vector<MeshInput> out;
        while (out.size() < 24) {
            MeshInput in = build_input(random_split_doc(rng));
            if (check_assumptions(all_levels(in.mesh, in.profile)).ok) out.push_back(std::move(in));
        }
        return out;
    }();
    return v;
}

// state.range(0): 1 parallel, 0 serial
void BM_DegreeSweep(benchmark::State& state) {
    const MeshInput& in = fixture3();
    auto degrees = parse_degree_range("0,0:" + std::to_string(state.range(1)) + "," + std::to_string(state.range(1)));
    BoundsOptions o;
    o.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(sweep(in.mesh, in.profile, in.smooth, degrees, o));
    state.counters["degrees"] = static_cast<double>(degrees.size());
}
BENCHMARK(BM_DegreeSweep)->ArgsProduct({{0, 1}, {4, 6, 8}})->Unit(benchmark::kMillisecond);

void BM_ConstraintAssembly(benchmark::State& state) {
    const MeshInput& in = big_grid();
    Bidegree m{static_cast<int>(state.range(1)), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_constraints(in.mesh, in.profile, in.smooth, m, state.range(0) != 0));
}
BENCHMARK(BM_ConstraintAssembly)->ArgsProduct({{0, 1}, {3, 5}})->Unit(benchmark::kMillisecond);

void BM_OracleDim(benchmark::State& state) {
    const MeshInput& in = big_grid();
    Bidegree m{static_cast<int>(state.range(1)), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_spline_dim(in.mesh, in.profile, in.smooth, m, state.range(0) != 0));
}
BENCHMARK(BM_OracleDim)->ArgsProduct({{0, 1}, {3, 5}})->Unit(benchmark::kMillisecond);

// the acceptance-style random suite, one mesh per iteration of the outer loop
void BM_RandomSuite(benchmark::State& state) {
    const auto& meshes = random_meshes();
    const bool par = state.range(0) != 0;
    for (auto _ : state) {
        long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (par)
        for (long k = 0; k < static_cast<long>(meshes.size()); ++k) {
            BoundsOptions o;
            o.parallel = false;
            o.with_oracle = true;
            const MeshInput& in = meshes[k];
            total += *bounds(in.mesh, in.profile, in.smooth, {4, 4}, o).oracle;
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_RandomSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

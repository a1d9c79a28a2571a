#include <benchmark/benchmark.h>

#include "tpi/path_generation.hpp"
#include "tpi/solver.hpp"

namespace {

using namespace tpi;

// Radial test bed: `feeders` junctions, each with a trunk of `depth` lines
// and one customer per trunk tip plus one per mid line.
Network radial_network(int feeders, int depth) {
    std::vector<Element> elements;
    std::map<ElementId, ElementId, NaturalLess> j2t;
    int next = 1;
    auto id = [&next](const char* p) { return std::string(p) + std::to_string(next++); };

    for (int f = 0; f < feeders; ++f) {
        const double x = 200.0 * f;
        const ElementId junction = id("j");
        const ElementId transformer = id("t");
        {
            Element e;
            e.id = junction;
            e.type = kJunction;
            e.coor = {x, -4.0};
            elements.push_back(e);
        }
        {
            Element e;
            e.id = transformer;
            e.type = kTransformer;
            e.coor = {x, -14.0};
            elements.push_back(e);
        }
        j2t[junction] = transformer;

        for (int i = 0; i < depth; ++i) {
            Element line;
            line.id = id("l");
            line.type = kLine;
            line.endpoints = {Coord{x, 20.0 * i}, Coord{x, 20.0 * i + 16.0}};
            line.coor = {x, 20.0 * i + 8.0};
            elements.push_back(line);

            if (i == depth - 1 || i == depth / 2) {
                Element c;
                c.id = id("c");
                c.type = kCustomer;
                c.coor = {x - 3.0, 20.0 * i + 19.0};
                c.junction = junction;
                elements.push_back(c);
            }
        }
    }
    return Network(std::move(elements), std::move(j2t));
}

SearchConfig bench_config() {
    SearchConfig cfg;
    cfg.max_paths = 5;
    cfg.max_connection_distance = 5.0;
    cfg.max_path_length = 1000.0;
    return cfg;
}

void BM_generate_candidates(benchmark::State& state) {
    const Network net = radial_network(static_cast<int>(state.range(0)), 5);
    const SearchConfig cfg = bench_config();
    for (auto _ : state) {
        auto result = generate_candidates(net, cfg);
        benchmark::DoNotOptimize(result.paths.size());
    }
}
BENCHMARK(BM_generate_candidates)->Arg(2)->Arg(5)->Arg(10);

void BM_build_and_solve(benchmark::State& state) {
    const Network net = radial_network(static_cast<int>(state.range(0)), 5);
    const auto generated = generate_candidates(net, bench_config());
    for (auto _ : state) {
        const auto m = build_matrices(generated.paths, net);
        const Rational lambda(1, static_cast<long long>(m.remaining.size() * m.terminals.size()) + 1);
        const auto sol = solve(build_problem(m, lambda));
        benchmark::DoNotOptimize(sol.objective);
    }
}
BENCHMARK(BM_build_and_solve)->Arg(2)->Arg(5)->Arg(10);

void BM_connections_scan(benchmark::State& state) {
    const Network net = radial_network(5, static_cast<int>(state.range(0)));
    const auto cond = ConnectionConditions::defaults(5.0);
    const auto customers = subset(net, kCustomer);
    for (auto _ : state) {
        for (const Element& c : customers) {
            auto near = connections(net, c, cond);
            benchmark::DoNotOptimize(near.size());
        }
    }
}
BENCHMARK(BM_connections_scan)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();

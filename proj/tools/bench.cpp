// Timing comparison between the serial reference kernels and their OpenMP
// counterparts: Kneser adjacency construction, homomorphism search, and the
// experiment row pool. Build with OpenMP and run, e.g.
//   OMP_NUM_THREADS=4 ./crlab-bench

#include "crlab/generate.hpp"
#include "crlab/hom.hpp"
#include "crlab/kneser.hpp"
#include "crlab/pipeline.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace crlab;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("threads: %d\n", threads);

    {
        auto labels = k_subsets_lex(16, 6); // 8008 vertices
        std::vector<std::vector<int>> serial_adj, parallel_adj;
        double s = time_ms([&] { serial_adj = kneser_adjacency_serial(labels); });
        double p = time_ms([&] { parallel_adj = kneser_adjacency_parallel(labels); });
        if (serial_adj != parallel_adj) {
            std::printf("kneser kernels disagree!\n");
            return 1;
        }
        report("kneser adjacency K(16,6)", s, p);
    }

    {
        KneserGraph k73 = kneser_graph({7, 3});
        std::vector<Graph> batch;
        for (uint64_t seed = 0; seed < 40; ++seed)
            batch.push_back(gen_constrained(14, Rational(7, 3), 7, seed));
        SearchOptions serial;
        SearchOptions parallel;
        parallel.threads = threads;
        int found_serial = 0, found_parallel = 0;
        double s = time_ms([&] {
            for (const Graph& g : batch)
                found_serial += find_hom(g, k73.graph, serial).status == SearchStatus::Found;
        });
        double p = time_ms([&] {
            for (const Graph& g : batch)
                found_parallel += find_hom(g, k73.graph, parallel).status == SearchStatus::Found;
        });
        if (found_serial != found_parallel) {
            std::printf("hom search kernels disagree!\n");
            return 1;
        }
        report("hom search into K(7,3)", s, p);
    }

    {
        PipelineConfig cfg;
        cfg.k = 2;
        double s = time_ms([&] { run_experiment(40, 12, cfg, 1, 1); });
        double p = time_ms([&] { run_experiment(40, 12, cfg, 1, threads); });
        report("experiment rows (40 x n=12)", s, p);
    }
    return 0;
}

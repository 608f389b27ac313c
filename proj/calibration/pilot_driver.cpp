#include "pesoa/pesoa.hpp"
#include "pesoa/benchmarks.hpp"
#include <cstdio>
using namespace pesoa;
int main(int argc, char** argv) {
    const auto& e = find_benchmark(argv[1]);
    PesoaConfig cfg;
    Budget b; b.max_evaluations = std::strtoul(argv[2],nullptr,10);
    cfg.migrate_keep_position = argc>3 && std::atoi(argv[3]);
    cfg.scalar_step_noise = argc>4 && std::atoi(argv[4]);
    if (argc>5) cfg.oxygen_init = std::atof(argv[5]);
    if (argc>6) cfg.max_dives = std::atoi(argv[6]);
    std::vector<double> finals;
    for (uint64_t s = 1; s <= 10; ++s) {
        RngStream rng(s);
        auto rec = run_pesoa(e.problem, cfg, b, rng);
        finals.push_back(rec.final_best_value);
    }
    std::sort(finals.begin(),finals.end());
    std::printf("min %.6g median %.6g max %.6g\n", finals[0], finals[5], finals[9]);
}

#ifndef PESOA_DE_HPP
#define PESOA_DE_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "pesoa/core.hpp"
#include "pesoa/record.hpp"
#include "pesoa/rng.hpp"

namespace pesoa {

/// Differential evolution, DE/rand/1/bin with greedy selection.
struct DeConfig {
    int population = 40;
    double differential_weight = 0.5; // F
    double crossover_rate = 0.9;      // CR
    std::uint64_t seed = 0;

    void validate() const
    {
        if (population < 4)
            throw ConfigError("de: population must be >= 4 for rand/1 mutation");
        if (differential_weight <= 0.0 || differential_weight > 2.0)
            throw ConfigError("de: differential weight must be in (0,2]");
        if (crossover_rate < 0.0 || crossover_rate > 1.0)
            throw ConfigError("de: crossover rate must be in [0,1]");
    }
};

inline RunRecord run_de(const Problem& problem, const DeConfig& config,
                        const Budget& budget, RngStream& rng)
{
    config.validate();
    problem.validate();

    const int dim = problem.dim;
    const int np = config.population;

    EvalCounter counter;
    std::vector<Vec> population(np);
    std::vector<double> value(np);
    Vec global_best;
    double global_best_value = std::numeric_limits<double>::infinity();

    for (int i = 0; i < np; ++i) {
        population[i].resize(dim);
        for (int d = 0; d < dim; ++d)
            population[i][d] = rng.uniform(problem.lower[d], problem.upper[d]);
        value[i] = evaluate(problem, population[i], counter, rng);
        if (value[i] < global_best_value) {
            global_best_value = value[i];
            global_best = population[i];
        }
    }

    RunRecord record;
    record.algorithm = "de";
    record.benchmark = problem.name;
    record.seed = rng.seed();
    record.trace.push_back({0, counter.count, global_best_value});

    std::size_t generation = 0;
    while (generation < budget.max_cycles && !budget.evals_exhausted(counter.count) &&
           !budget.reached_target(global_best_value)) {
        std::vector<Vec> next = population;
        std::vector<double> next_value = value;
        for (int i = 0; i < np; ++i) {
            if (budget.evals_exhausted(counter.count))
                break;
            // three distinct donors, all different from i
            int r1, r2, r3;
            do {
                r1 = static_cast<int>(rng.uniform_int(np));
            } while (r1 == i);
            do {
                r2 = static_cast<int>(rng.uniform_int(np));
            } while (r2 == i || r2 == r1);
            do {
                r3 = static_cast<int>(rng.uniform_int(np));
            } while (r3 == i || r3 == r1 || r3 == r2);

            const int forced = static_cast<int>(rng.uniform_int(dim));
            Vec trial = population[i];
            for (int d = 0; d < dim; ++d) {
                if (d == forced || rng.uniform01() < config.crossover_rate)
                    trial[d] = population[r1][d] +
                               config.differential_weight *
                                   (population[r2][d] - population[r3][d]);
            }
            trial = clamp_to_bounds(trial, problem);
            const double trial_value = evaluate(problem, trial, counter, rng);
            if (trial_value < value[i]) {
                next[i] = std::move(trial);
                next_value[i] = trial_value;
                if (trial_value < global_best_value) {
                    global_best_value = trial_value;
                    global_best = next[i];
                }
            }
        }
        population = std::move(next);
        value = std::move(next_value);
        ++generation;
        record.trace.push_back({generation, counter.count, global_best_value});
    }

    record.final_best_value = global_best_value;
    record.final_best_position = global_best;
    return record;
}

} // namespace pesoa

#endif

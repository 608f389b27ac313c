#ifndef PESOA_PSO_HPP
#define PESOA_PSO_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "pesoa/core.hpp"
#include "pesoa/record.hpp"
#include "pesoa/rng.hpp"

namespace pesoa {

/// Canonical global-best PSO with constriction-equivalent coefficients.
struct PsoConfig {
    int swarm_size = 40;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    /// Velocity clamp as a fraction of the per-dimension range.
    double velocity_clamp_fraction = 0.5;
    std::uint64_t seed = 0;

    void validate() const
    {
        if (swarm_size < 1)
            throw ConfigError("pso: swarm_size must be >= 1");
        if (inertia <= 0.0 || inertia >= 1.0)
            throw ConfigError("pso: inertia must be in (0,1)");
        if (cognitive <= 0.0 || social <= 0.0)
            throw ConfigError("pso: cognitive and social weights must be positive");
        if (velocity_clamp_fraction <= 0.0)
            throw ConfigError("pso: velocity_clamp_fraction must be positive");
    }
};

inline RunRecord run_pso(const Problem& problem, const PsoConfig& config,
                         const Budget& budget, RngStream& rng)
{
    config.validate();
    problem.validate();

    const int dim = problem.dim;
    Vec vmax(dim);
    for (int d = 0; d < dim; ++d)
        vmax[d] = config.velocity_clamp_fraction * problem.span(d);

    EvalCounter counter;
    std::vector<Vec> position(config.swarm_size), velocity(config.swarm_size),
        personal_best(config.swarm_size);
    std::vector<double> value(config.swarm_size), personal_best_value(config.swarm_size);
    Vec global_best;
    double global_best_value = std::numeric_limits<double>::infinity();

    for (int i = 0; i < config.swarm_size; ++i) {
        position[i].resize(dim);
        velocity[i].resize(dim);
        for (int d = 0; d < dim; ++d) {
            position[i][d] = rng.uniform(problem.lower[d], problem.upper[d]);
            velocity[i][d] = rng.uniform(-vmax[d], vmax[d]);
        }
        value[i] = evaluate(problem, position[i], counter, rng);
        personal_best[i] = position[i];
        personal_best_value[i] = value[i];
        if (value[i] < global_best_value) {
            global_best_value = value[i];
            global_best = position[i];
        }
    }

    RunRecord record;
    record.algorithm = "pso";
    record.benchmark = problem.name;
    record.seed = rng.seed();
    record.trace.push_back({0, counter.count, global_best_value});

    std::size_t iteration = 0;
    while (iteration < budget.max_cycles && !budget.evals_exhausted(counter.count) &&
           !budget.reached_target(global_best_value)) {
        for (int i = 0; i < config.swarm_size; ++i) {
            if (budget.evals_exhausted(counter.count))
                break;
            for (int d = 0; d < dim; ++d) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                double v = config.inertia * velocity[i][d] +
                           config.cognitive * r1 * (personal_best[i][d] - position[i][d]) +
                           config.social * r2 * (global_best[d] - position[i][d]);
                v = std::clamp(v, -vmax[d], vmax[d]);
                velocity[i][d] = v;
                position[i][d] =
                    std::clamp(position[i][d] + v, problem.lower[d], problem.upper[d]);
            }
            value[i] = evaluate(problem, position[i], counter, rng);
            if (value[i] < personal_best_value[i]) {
                personal_best_value[i] = value[i];
                personal_best[i] = position[i];
                if (value[i] < global_best_value) {
                    global_best_value = value[i];
                    global_best = position[i];
                }
            }
        }
        ++iteration;
        record.trace.push_back({iteration, counter.count, global_best_value});
    }

    record.final_best_value = global_best_value;
    record.final_best_position = global_best;
    return record;
}

} // namespace pesoa

#endif

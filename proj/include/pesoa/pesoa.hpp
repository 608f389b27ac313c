#ifndef PESOA_PESOA_HPP
#define PESOA_PESOA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "pesoa/core.hpp"
#include "pesoa/record.hpp"
#include "pesoa/rng.hpp"

namespace pesoa {

/// One candidate solution: a position, the cached objective value at that
/// position, and the oxygen reserve that fuels and scales its dives.
struct Penguin {
    Vec position;
    double oxygen = 0.0;
    double value = 0.0;
};

/// A sub-population foraging in one region of the search space.
struct Group {
    int id = 0;
    Vec center;
    double radius = 0.0;
    std::vector<Penguin> members;
    Vec local_best_position;
    double local_best_value = 0.0;
    double qef = 0.0; // cumulative food-abundance score
};

struct PesoaConfig {
    int groups = 5;
    int group_size = 40;
    /// Minimum pairwise separation between region centers. 0 selects the
    /// default: 0.25 * bounds diagonal / groups.
    double max_dist = 0.0;
    double oxygen_init = 1.0;
    /// Hard cap on dives per penguin per cycle. The oxygen rule alone does
    /// not bound the dive loop (oxygen grows on an improving path).
    int max_dives = 20;
    /// Lower clamp on group QEF; keeps the membership probabilities
    /// well-defined when every delta in a cycle is negative.
    double qef_floor = 1e-9;
    std::uint64_t seed = 0;
    /// Draw one scalar step factor per dive instead of one per dimension.
    bool scalar_step_noise = false;
    /// Migrants keep their position instead of re-sampling in the
    /// destination region.
    bool migrate_keep_position = false;
    /// Reset QEF each cycle instead of accumulating across cycles.
    bool qef_reset_each_cycle = false;

    void validate() const
    {
        if (groups < 1)
            throw ConfigError("pesoa: groups must be >= 1");
        if (group_size < 1)
            throw ConfigError("pesoa: group_size must be >= 1");
        if (max_dist < 0.0)
            throw ConfigError("pesoa: max_dist must be positive");
        if (oxygen_init <= 0.0)
            throw ConfigError("pesoa: oxygen_init must be positive");
        if (max_dives < 1)
            throw ConfigError("pesoa: max_dives must be >= 1");
        if (qef_floor <= 0.0)
            throw ConfigError("pesoa: qef_floor must be positive");
    }
};

/// Whole-swarm state at the end of a cycle.
struct SwarmState {
    std::vector<Group> groups;
    Vec global_best_position;
    double global_best_value = 0.0;
    std::size_t cycle = 0;
    /// Membership probabilities over live groups as of the last update.
    std::vector<double> probabilities;

    std::size_t population() const
    {
        std::size_t n = 0;
        for (const auto& g : groups)
            n += g.members.size();
        return n;
    }
};

inline double default_max_dist(const Problem& problem, int k)
{
    return 0.25 * problem.diagonal() / static_cast<double>(k);
}

inline double euclidean_distance(const Vec& a, const Vec& b)
{
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d)
        s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

/// Diversified region generation: K random centers inside the bounds, any
/// two more than max_dist apart. If 1000 consecutive draws fail for one
/// center the threshold is relaxed by 0.9 and kept relaxed for the rest of
/// the placement; relaxing below min_threshold_fraction * diagonal is a
/// configuration error. The threshold actually used is written to
/// effective_dist when given.
inline std::vector<Vec> generate_regions(const Problem& problem, int k, double max_dist,
                                         RngStream& rng, double* effective_dist = nullptr,
                                         double min_threshold_fraction = 1e-6)
{
    if (k < 1)
        throw ConfigError("generate_regions: need at least one group");
    if (max_dist <= 0.0)
        throw ConfigError("generate_regions: max_dist must be positive");
    problem.validate();

    const double floor_dist = min_threshold_fraction * problem.diagonal();
    double threshold = max_dist;
    std::vector<Vec> centers;
    centers.reserve(k);

    auto draw_point = [&] {
        Vec c(problem.dim);
        for (int d = 0; d < problem.dim; ++d)
            c[d] = rng.uniform(problem.lower[d], problem.upper[d]);
        return c;
    };

    centers.push_back(draw_point());
    while (static_cast<int>(centers.size()) < k) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            Vec c = draw_point();
            bool ok = true;
            for (const auto& prev : centers)
                if (euclidean_distance(c, prev) <= threshold) {
                    ok = false;
                    break;
                }
            if (ok) {
                centers.push_back(std::move(c));
                placed = true;
            }
        }
        if (!placed) {
            threshold *= 0.9;
            if (threshold < floor_dist)
                throw ConfigError(
                    "generate_regions: cannot place " + std::to_string(k) +
                    " centers with pairwise separation even after relaxing the "
                    "threshold to its floor; reduce the group count or max_dist");
        }
    }
    if (effective_dist)
        *effective_dist = threshold;
    return centers;
}

namespace detail {

/// Uniform sample in [center - radius, center + radius] clipped to bounds.
inline Vec sample_in_region(const Problem& problem, const Vec& center, double radius,
                            RngStream& rng)
{
    Vec x(problem.dim);
    for (int d = 0; d < problem.dim; ++d) {
        const double lo = std::max(problem.lower[d], center[d] - radius);
        const double hi = std::min(problem.upper[d], center[d] + radius);
        x[d] = rng.uniform(lo, hi);
    }
    return x;
}

} // namespace detail

/// Build the initial swarm: group_size penguins per region, each evaluated
/// once; local and global bests set; oxygen at oxygen_init and QEF at the
/// floor.
inline SwarmState init_population(const Problem& problem, const std::vector<Vec>& centers,
                                  const PesoaConfig& config, RngStream& rng,
                                  EvalCounter& counter)
{
    const double md = config.max_dist > 0.0 ? config.max_dist
                                            : default_max_dist(problem, config.groups);
    const double radius = md / 2.0;

    SwarmState state;
    state.global_best_value = std::numeric_limits<double>::infinity();
    int id = 0;
    for (const auto& center : centers) {
        Group g;
        g.id = id++;
        g.center = center;
        g.radius = radius;
        g.qef = config.qef_floor;
        g.local_best_value = std::numeric_limits<double>::infinity();
        for (int j = 0; j < config.group_size; ++j) {
            Penguin p;
            p.position = detail::sample_in_region(problem, center, radius, rng);
            p.value = evaluate(problem, p.position, counter, rng);
            p.oxygen = config.oxygen_init;
            if (p.value < g.local_best_value) {
                g.local_best_value = p.value;
                g.local_best_position = p.position;
            }
            g.members.push_back(std::move(p));
        }
        if (g.local_best_value < state.global_best_value) {
            state.global_best_value = g.local_best_value;
            state.global_best_position = g.local_best_position;
        }
        state.groups.push_back(std::move(g));
    }
    state.probabilities.assign(state.groups.size(),
                               1.0 / static_cast<double>(state.groups.size()));
    return state;
}

/// One trial swim toward the group's local best:
///   candidate_d = x_d + oxygen * u_d * (localbest_d - x_d),
/// u_d drawn uniform (0,1) per dimension (or once per dive with scalar
/// noise), then clamped to the bounds. The penguin is not mutated.
inline Vec dive_update(const Penguin& penguin, const Vec& local_best, RngStream& rng,
                       const Problem& problem, bool scalar_noise = false)
{
    Vec candidate(problem.dim);
    const double shared = scalar_noise ? rng.uniform01() : 0.0;
    for (int d = 0; d < problem.dim; ++d) {
        const double u = scalar_noise ? shared : rng.uniform01();
        candidate[d] =
            penguin.position[d] +
            penguin.oxygen * u * (local_best[d] - penguin.position[d]);
    }
    return clamp_to_bounds(candidate, problem);
}

/// Oxygen reserve after a dive: gain (old - new) scaled by the distance
/// swum, clamped below at zero. An improving dive replenishes oxygen, a
/// failed one burns it.
inline double oxygen_update(double oxygen, double old_value, double new_value,
                            const Vec& old_pos, const Vec& new_pos)
{
    const double next =
        oxygen + (old_value - new_value) * euclidean_distance(new_pos, old_pos);
    return std::max(next, 0.0);
}

/// One cycle of dives for a single penguin. Dives repeat while oxygen
/// lasts, up to max_dives and the evaluation budget. A candidate is
/// accepted only on strict improvement; oxygen is updated from every
/// attempted candidate, accepted or not.
inline void improve_penguin(Penguin& penguin, Group& group, const Problem& problem,
                            const PesoaConfig& config, RngStream& rng,
                            EvalCounter& counter, const Budget& budget)
{
    int dives = 0;
    while (penguin.oxygen > 0.0 && dives < config.max_dives &&
           !budget.evals_exhausted(counter.count)) {
        const Vec candidate = dive_update(penguin, group.local_best_position, rng, problem,
                                          config.scalar_step_noise);
        const double candidate_value = evaluate(problem, candidate, counter, rng);
        const double next_oxygen = oxygen_update(penguin.oxygen, penguin.value,
                                                 candidate_value, penguin.position,
                                                 candidate);
        if (candidate_value < penguin.value) {
            penguin.position = candidate;
            penguin.value = candidate_value;
            if (candidate_value < group.local_best_value) {
                group.local_best_value = candidate_value;
                group.local_best_position = candidate;
            }
        }
        penguin.oxygen = next_oxygen;
        ++dives;
    }
}

/// Group QEF after a cycle: previous QEF plus the members' oxygen deltas,
/// clamped at the floor.
inline double update_qef(const Group& group, const std::vector<double>& oxygen_deltas,
                         double qef_floor, bool reset = false)
{
    const double base = reset ? 0.0 : group.qef;
    const double sum = std::accumulate(oxygen_deltas.begin(), oxygen_deltas.end(), 0.0);
    return std::max(base + sum, qef_floor);
}

/// Membership probabilities: P_i = QEF_i / sum_j QEF_j.
inline std::vector<double> membership_probabilities(const std::vector<Group>& groups)
{
    if (groups.empty())
        throw ConfigError("membership_probabilities: no live groups");
    double total = 0.0;
    for (const auto& g : groups)
        total += g.qef;
    std::vector<double> p;
    p.reserve(groups.size());
    for (const auto& g : groups)
        p.push_back(g.qef / total);
    return p;
}

/// Roulette pick: smallest index whose cumulative probability exceeds u.
inline std::size_t roulette_pick(const std::vector<double>& probabilities, double u)
{
    double cum = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cum += probabilities[i];
        if (u < cum)
            return i;
    }
    return probabilities.size() - 1; // u at or beyond the rounded-off tail
}

/// Proportional migration. Every penguin samples a destination group via
/// roulette over state.probabilities; migrants are re-sampled in the
/// destination region and re-evaluated (unless migrate_keep_position).
/// Emptied groups are removed. Total penguin count is conserved.
inline void redistribute(SwarmState& state, const Problem& problem,
                         const PesoaConfig& config, RngStream& rng, EvalCounter& counter,
                         const Budget& budget)
{
    const std::size_t k = state.groups.size();
    if (k <= 1)
        return;

    std::vector<std::vector<Penguin>> arrivals(k);
    for (std::size_t gi = 0; gi < k; ++gi) {
        auto& members = state.groups[gi].members;
        std::vector<Penguin> staying;
        staying.reserve(members.size());
        for (auto& p : members) {
            const std::size_t dest = roulette_pick(state.probabilities, rng.uniform01());
            if (dest == gi) {
                staying.push_back(std::move(p));
                continue;
            }
            if (!config.migrate_keep_position) {
                if (budget.evals_exhausted(counter.count)) {
                    staying.push_back(std::move(p)); // out of budget: stay put
                    continue;
                }
                Group& target = state.groups[dest];
                p.position =
                    detail::sample_in_region(problem, target.center, target.radius, rng);
                p.value = evaluate(problem, p.position, counter, rng);
            }
            arrivals[dest].push_back(std::move(p));
        }
        members = std::move(staying);
    }

    for (std::size_t gi = 0; gi < k; ++gi) {
        Group& g = state.groups[gi];
        for (auto& p : arrivals[gi]) {
            if (p.value < g.local_best_value) {
                g.local_best_value = p.value;
                g.local_best_position = p.position;
            }
            if (p.value < state.global_best_value) {
                state.global_best_value = p.value;
                state.global_best_position = p.position;
            }
            g.members.push_back(std::move(p));
        }
    }

    std::erase_if(state.groups, [](const Group& g) { return g.members.empty(); });
}

/// Called after every completed cycle with the current state; used by the
/// harness and tests to observe invariants without touching the run.
using CycleObserver = std::function<void(const SwarmState&)>;

/// Full optimizer run: region generation, population init, then cycles of
/// {oxygen reset, per-penguin dive improvement, QEF update, global-best
/// update, membership probabilities, redistribution} until the budget
/// stops it.
inline RunRecord run_pesoa(const Problem& problem, const PesoaConfig& config,
                           const Budget& budget, RngStream& rng,
                           const CycleObserver& observer = {})
{
    config.validate();
    problem.validate();

    const double md = config.max_dist > 0.0 ? config.max_dist
                                            : default_max_dist(problem, config.groups);
    auto centers = generate_regions(problem, config.groups, md, rng);

    EvalCounter counter;
    SwarmState state = init_population(problem, centers, config, rng, counter);

    RunRecord record;
    record.algorithm = "pesoa";
    record.benchmark = problem.name;
    record.seed = rng.seed();
    record.trace.push_back({0, counter.count, state.global_best_value});

    while (state.cycle < budget.max_cycles && !budget.evals_exhausted(counter.count) &&
           !budget.reached_target(state.global_best_value)) {
        for (auto& g : state.groups)
            for (auto& p : g.members)
                p.oxygen = config.oxygen_init;

        for (auto& g : state.groups) {
            std::vector<double> deltas;
            deltas.reserve(g.members.size());
            for (auto& p : g.members) {
                const double before = p.oxygen;
                improve_penguin(p, g, problem, config, rng, counter, budget);
                deltas.push_back(p.oxygen - before);
            }
            g.qef = update_qef(g, deltas, config.qef_floor, config.qef_reset_each_cycle);
        }

        for (const auto& g : state.groups)
            if (g.local_best_value < state.global_best_value) {
                state.global_best_value = g.local_best_value;
                state.global_best_position = g.local_best_position;
            }

        state.probabilities = membership_probabilities(state.groups);
        redistribute(state, problem, config, rng, counter, budget);

        ++state.cycle;
        record.trace.push_back({state.cycle, counter.count, state.global_best_value});
        if (observer)
            observer(state);
    }

    record.final_best_value = state.global_best_value;
    record.final_best_position = state.global_best_position;
    return record;
}

} // namespace pesoa

#endif

#ifndef PESOA_CORE_HPP
#define PESOA_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pesoa/rng.hpp"

namespace pesoa {

using Vec = std::vector<double>;

/// Invalid configuration or misuse of an interface. Maps to exit code 2
/// in the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An objective function returned a non-finite value, or another
/// unrecoverable runtime failure. Maps to exit code 3 in the CLI.
struct ObjectiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Objective callable. Deterministic given its inputs; only noisy
/// objectives (Quartic with noise) may consume the stream.
using Objective = std::function<double(const Vec&, RngStream&)>;

/// A box-constrained minimization problem.
struct Problem {
    std::string name;
    int dim = 0;
    Vec lower;
    Vec upper;
    Objective objective;
    std::optional<double> known_optimum;
    std::optional<Vec> known_minimizer;

    double span(int d) const { return upper[d] - lower[d]; }

    /// Euclidean length of the bounds-box diagonal.
    double diagonal() const
    {
        double s = 0.0;
        for (int d = 0; d < dim; ++d)
            s += span(d) * span(d);
        return std::sqrt(s);
    }

    bool contains(const Vec& x) const
    {
        if (static_cast<int>(x.size()) != dim)
            return false;
        for (int d = 0; d < dim; ++d)
            if (x[d] < lower[d] || x[d] > upper[d])
                return false;
        return true;
    }

    void validate() const
    {
        if (dim <= 0)
            throw ConfigError("problem '" + name + "': dimension must be positive");
        if (static_cast<int>(lower.size()) != dim || static_cast<int>(upper.size()) != dim)
            throw ConfigError("problem '" + name + "': bounds size does not match dimension");
        for (int d = 0; d < dim; ++d)
            if (!(lower[d] < upper[d]))
                throw ConfigError("problem '" + name + "': lower must be strictly below upper");
    }
};

/// Stopping contract: a run halts when it exhausts cycles or evaluations,
/// or when the best value reaches target_value.
struct Budget {
    std::size_t max_cycles = std::numeric_limits<std::size_t>::max();
    std::size_t max_evaluations = std::numeric_limits<std::size_t>::max();
    std::optional<double> target_value;

    bool evals_exhausted(std::size_t evals) const { return evals >= max_evaluations; }

    bool reached_target(double best) const
    {
        return target_value.has_value() && best <= *target_value;
    }
};

/// Counts objective evaluations; incremented by exactly one per call to
/// evaluate(), never decremented.
struct EvalCounter {
    std::size_t count = 0;
};

/// Component-wise projection of x onto the problem's box. Idempotent.
inline Vec clamp_to_bounds(const Vec& x, const Problem& problem)
{
    if (static_cast<int>(x.size()) != problem.dim)
        throw ConfigError("clamp_to_bounds: vector size " + std::to_string(x.size()) +
                          " does not match problem dimension " + std::to_string(problem.dim));
    Vec y(x);
    for (int d = 0; d < problem.dim; ++d)
        y[d] = std::clamp(y[d], problem.lower[d], problem.upper[d]);
    return y;
}

/// Evaluate the objective at x, counting the evaluation. Non-finite
/// results abort the run: they indicate a broken objective, not a bad
/// candidate.
inline double evaluate(const Problem& problem, const Vec& x, EvalCounter& counter,
                       RngStream& rng)
{
    if (static_cast<int>(x.size()) != problem.dim)
        throw ConfigError("evaluate: vector size does not match dimension of problem '" +
                          problem.name + "'");
    const double v = problem.objective(x, rng);
    ++counter.count;
    if (!std::isfinite(v))
        throw ObjectiveError("objective '" + problem.name +
                             "' returned a non-finite value (" + std::to_string(v) + ")");
    return v;
}

} // namespace pesoa

#endif

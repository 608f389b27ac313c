#ifndef PESOA_RECORD_HPP
#define PESOA_RECORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pesoa/core.hpp"

namespace pesoa {

/// One sample of the convergence trace: best value seen so far after a
/// cycle, together with the cumulative evaluation count.
struct TracePoint {
    std::size_t cycle = 0;
    std::size_t evaluations = 0;
    double best_value = 0.0;
};

/// Outcome of one optimizer run.
struct RunRecord {
    std::string algorithm;
    std::string benchmark;
    std::uint64_t seed = 0;
    std::vector<TracePoint> trace;
    double final_best_value = 0.0;
    Vec final_best_position;
    double wall_time_s = 0.0;
};

} // namespace pesoa

#endif

#ifndef PESOA_HARNESS_HPP
#define PESOA_HARNESS_HPP

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pesoa/benchmarks.hpp"
#include "pesoa/core.hpp"
#include "pesoa/de.hpp"
#include "pesoa/pesoa.hpp"
#include "pesoa/pso.hpp"
#include "pesoa/record.hpp"

namespace pesoa {

/// A multi-seed, multi-benchmark experiment: |benchmarks| x |seeds|
/// independent runs of one algorithm.
struct ExperimentConfig {
    std::string algorithm = "pesoa"; // pesoa | pso | de
    std::vector<std::string> benchmarks;
    std::vector<std::uint64_t> seeds;
    Budget budget;
    PesoaConfig pesoa;
    PsoConfig pso;
    DeConfig de;
    std::filesystem::path out_dir;
    int threads = 1;
    /// When false, wall times are recorded as zero so report bytes are
    /// deterministic; ratio-based sweeps always measure.
    bool measure_time = true;

    void validate() const
    {
        if (algorithm != "pesoa" && algorithm != "pso" && algorithm != "de")
            throw ConfigError("unknown algorithm '" + algorithm + "'");
        if (benchmarks.empty())
            throw ConfigError("experiment needs at least one benchmark");
        if (seeds.empty())
            throw ConfigError("experiment needs at least one seed");
        for (const auto& b : benchmarks)
            find_benchmark(b); // throws on unknown ids
    }
};

/// One row of the mean +/- std comparison table.
struct SummaryRow {
    std::string benchmark;
    std::string algorithm;
    int n_runs = 0;
    double mean_best = 0.0;
    double std_best = 0.0; // unbiased (n-1) estimator
    double mean_wall_time_s = 0.0;
};

namespace detail {

inline RunRecord dispatch_run(const ExperimentConfig& config, const BenchmarkEntry& entry,
                              std::uint64_t seed, bool measure_time)
{
    RngStream rng(seed);
    const auto start = std::chrono::steady_clock::now();
    RunRecord rec;
    if (config.algorithm == "pesoa") {
        rec = run_pesoa(entry.problem, config.pesoa, config.budget, rng);
    } else if (config.algorithm == "pso") {
        rec = run_pso(entry.problem, config.pso, config.budget, rng);
    } else {
        rec = run_de(entry.problem, config.de, config.budget, rng);
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.benchmark = entry.id;
    rec.seed = seed;
    rec.wall_time_s =
        measure_time ? std::chrono::duration<double>(stop - start).count() : 0.0;
    return rec;
}

inline std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

/// Mean and unbiased standard deviation of the runs' final best values and
/// wall times, one row per benchmark. Records must be grouped runs of a
/// single algorithm.
inline std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records)
{
    std::vector<SummaryRow> rows;
    for (const auto& rec : records) {
        SummaryRow* row = nullptr;
        for (auto& r : rows)
            if (r.benchmark == rec.benchmark && r.algorithm == rec.algorithm)
                row = &r;
        if (!row) {
            rows.push_back({rec.benchmark, rec.algorithm, 0, 0.0, 0.0, 0.0});
            row = &rows.back();
        }
        ++row->n_runs;
        row->mean_best += rec.final_best_value;
        row->mean_wall_time_s += rec.wall_time_s;
    }
    for (auto& row : rows) {
        row.mean_best /= row.n_runs;
        row.mean_wall_time_s /= row.n_runs;
    }
    for (auto& row : rows) {
        if (row.n_runs < 2)
            continue;
        double ss = 0.0;
        for (const auto& rec : records)
            if (rec.benchmark == row.benchmark && rec.algorithm == row.algorithm)
                ss += (rec.final_best_value - row.mean_best) *
                      (rec.final_best_value - row.mean_best);
        row.std_best = std::sqrt(ss / (row.n_runs - 1));
    }
    return rows;
}

/// Run the experiment. Jobs are farmed to config.threads workers; results
/// are merged by (benchmark, seed) position, never by completion order, so
/// serial and concurrent execution give identical output.
inline std::pair<std::vector<RunRecord>, std::vector<SummaryRow>>
run_experiment(const ExperimentConfig& config)
{
    config.validate();

    struct Job {
        const BenchmarkEntry* entry;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& b : config.benchmarks) {
        const BenchmarkEntry& entry = find_benchmark(b);
        for (auto seed : config.seeds)
            jobs.push_back({&entry, seed});
    }

    std::vector<RunRecord> records(jobs.size());
    const int workers = std::max(1, config.threads);
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            records[i] =
                detail::dispatch_run(config, *jobs[i].entry, jobs[i].seed,
                                     config.measure_time);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size())
                    return;
                try {
                    records[i] = detail::dispatch_run(config, *jobs[i].entry, jobs[i].seed,
                                                      config.measure_time);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    return {records, summarize(records)};
}

/// Write per-run trace CSVs plus summary.csv and summary.json into out_dir.
inline void emit_reports(const std::vector<RunRecord>& records,
                         const std::vector<SummaryRow>& rows,
                         const std::filesystem::path& out_dir)
{
    if (records.empty())
        throw ConfigError("emit_reports: no run records");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw ObjectiveError("cannot create output directory " + out_dir.string() + ": " +
                             ec.message());

    auto open = [](const std::filesystem::path& p) {
        std::ofstream f(p, std::ios::binary); // binary: LF endings everywhere
        if (!f)
            throw ObjectiveError("cannot open " + p.string() + " for writing");
        return f;
    };

    for (const auto& rec : records) {
        const auto path = out_dir / ("trace_" + rec.benchmark + "_" + rec.algorithm +
                                     "_seed" + std::to_string(rec.seed) + ".csv");
        auto f = open(path);
        f << "cycle,evaluations,best_value\n";
        for (const auto& t : rec.trace)
            f << t.cycle << ',' << t.evaluations << ',' << detail::fmt_double(t.best_value)
              << '\n';
    }

    {
        auto f = open(out_dir / "summary.csv");
        f << "benchmark,algorithm,n_runs,mean_best,std_best,mean_wall_time_s\n";
        for (const auto& r : rows)
            f << r.benchmark << ',' << r.algorithm << ',' << r.n_runs << ','
              << detail::fmt_double(r.mean_best) << ',' << detail::fmt_double(r.std_best)
              << ',' << detail::fmt_double(r.mean_wall_time_s) << '\n';
    }

    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"benchmark", r.benchmark},
                           {"algorithm", r.algorithm},
                           {"n_runs", r.n_runs},
                           {"mean_best", r.mean_best},
                           {"std_best", r.std_best},
                           {"mean_wall_time_s", r.mean_wall_time_s}});
        auto f = open(out_dir / "summary.json");
        f << arr.dump(2) << '\n';
    }
}

/// One row of a parameter sweep: the swept value and the performance
/// ratio (mean objective amelioration / mean wall time of the optimizer).
struct SweepRow {
    int value = 0;
    double mean_amelioration = 0.0;
    double mean_wall_time_s = 0.0;
    double performance_ratio = 0.0;
};

namespace detail {

inline SweepRow sweep_point(const ExperimentConfig& base, int value, bool vary_groups)
{
    ExperimentConfig cfg = base;
    cfg.algorithm = "pesoa";
    cfg.measure_time = true; // the ratio denominator needs real timing
    if (vary_groups)
        cfg.pesoa.groups = value;
    else
        cfg.pesoa.group_size = value;

    auto [records, rows] = run_experiment(cfg);
    SweepRow out;
    out.value = value;
    for (const auto& rec : records) {
        out.mean_amelioration += rec.trace.front().best_value - rec.final_best_value;
        out.mean_wall_time_s += rec.wall_time_s;
    }
    out.mean_amelioration /= static_cast<double>(records.size());
    out.mean_wall_time_s /= static_cast<double>(records.size());
    out.performance_ratio = out.mean_amelioration / out.mean_wall_time_s;
    return out;
}

inline void write_sweep_csv(const std::filesystem::path& path, const char* column,
                            const std::vector<SweepRow>& rows,
                            const ExperimentConfig& config)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ObjectiveError("cannot open " + path.string() + " for writing");
    f << "# performance ratio sweep: mean objective amelioration / mean wall time\n";
    f << "# budget: max_evaluations=" << config.budget.max_evaluations
      << " seeds=" << config.seeds.size() << " benchmarks=";
    for (std::size_t i = 0; i < config.benchmarks.size(); ++i)
        f << (i ? "," : "") << config.benchmarks[i];
    f << "\n";
    f << "# observation (not asserted): the original study reports the best ratio "
         "near 5 groups and group sizes of 40-50\n";
    f << column << ",performance_ratio,mean_amelioration,mean_wall_time_s\n";
    for (const auto& r : rows)
        f << r.value << ',' << fmt_double(r.performance_ratio) << ','
          << fmt_double(r.mean_amelioration) << ',' << fmt_double(r.mean_wall_time_s)
          << '\n';
}

} // namespace detail

/// Sweep the number of groups; writes sweep_groups.csv and returns rows.
inline std::vector<SweepRow> sweep_groups(const std::vector<int>& k_values,
                                          const ExperimentConfig& base)
{
    ExperimentConfig cfg = base;
    cfg.validate();
    for (int k : k_values)
        if (k < 2 || k > 50)
            throw ConfigError("sweep-groups: k must lie in [2, 50]");
    std::vector<SweepRow> rows;
    for (int k : k_values)
        rows.push_back(detail::sweep_point(cfg, k, true));
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        detail::write_sweep_csv(cfg.out_dir / "sweep_groups.csv", "k", rows, cfg);
    }
    return rows;
}

/// Sweep the per-group population; writes sweep_size.csv and returns rows.
inline std::vector<SweepRow> sweep_group_size(const std::vector<int>& sizes,
                                              const ExperimentConfig& base)
{
    ExperimentConfig cfg = base;
    cfg.validate();
    for (int s : sizes)
        if (s < 1)
            throw ConfigError("sweep-size: group size must be positive");
    std::vector<SweepRow> rows;
    for (int s : sizes)
        rows.push_back(detail::sweep_point(cfg, s, false));
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        detail::write_sweep_csv(cfg.out_dir / "sweep_size.csv", "group_size", rows, cfg);
    }
    return rows;
}

} // namespace pesoa

#endif

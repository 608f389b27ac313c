// Command line for the PeSOA optimization library: single experiments
// (`run`) and parameter sweeps (`sweep-groups`, `sweep-size`).

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pesoa/harness.hpp"

namespace {

std::vector<std::string> resolve_benchmarks(const std::string& spec)
{
    std::vector<std::string> out;
    if (spec == "all") {
        for (const auto& e : pesoa::registry())
            out.push_back(e.id);
        return out;
    }
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

// "2,5,10", "2..50" or "5..100:5"
std::vector<int> parse_int_list(const std::string& spec)
{
    std::vector<int> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const auto colon = spec.find(':', dots);
        const int lo = std::stoi(spec.substr(0, dots));
        const int hi = std::stoi(spec.substr(
            dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
        const int step = colon == std::string::npos ? 1 : std::stoi(spec.substr(colon + 1));
        if (step < 1 || hi < lo)
            throw pesoa::ConfigError("bad range '" + spec + "'");
        for (int v = lo; v <= hi; v += step)
            out.push_back(v);
        return out;
    }
    std::string cur;
    for (char c : spec + ",") {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty())
        throw pesoa::ConfigError("empty list '" + spec + "'");
    return out;
}

struct CommonOpts {
    std::string bench = "all";
    int seeds = 10;
    std::uint64_t seed_base = 1;
    std::size_t max_evals = 200000;
    std::size_t max_cycles = 0; // 0: unlimited
    std::string out;
    int threads = 1;
    std::string timing = "real";
    int groups = 5;
    int group_size = 40;
    double max_dist = 0.0;
    int max_dives = 20;

    void add_to(CLI::App* cmd, bool sweeps)
    {
        cmd->add_option("--bench", bench, "Benchmark ids, comma separated, or 'all'");
        cmd->add_option("--seeds", seeds, "Number of independent seeded runs")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed-base", seed_base, "First seed; run i uses seed-base + i");
        cmd->add_option("--max-evals", max_evals, "Evaluation budget per run")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-cycles", max_cycles, "Cycle cap per run (0 = unlimited)");
        cmd->add_option("--out", out, "Output directory")->required();
        cmd->add_option("--threads", threads, "Concurrent runs")->check(CLI::PositiveNumber);
        if (!sweeps)
            cmd->add_option("--timing", timing,
                            "real: measure wall time; off: record zeros for "
                            "byte-reproducible reports")
                ->check(CLI::IsMember({"real", "off"}));
        cmd->add_option("--groups", groups, "Number of penguin groups");
        cmd->add_option("--group-size", group_size, "Penguins per group");
        cmd->add_option("--max-dist", max_dist,
                        "Minimum separation between region centers (0 = auto)");
        cmd->add_option("--max-dives", max_dives, "Dive cap per penguin per cycle");
    }

    pesoa::ExperimentConfig to_config() const
    {
        pesoa::ExperimentConfig cfg;
        cfg.benchmarks = resolve_benchmarks(bench);
        for (int i = 0; i < seeds; ++i)
            cfg.seeds.push_back(seed_base + static_cast<std::uint64_t>(i));
        cfg.budget.max_evaluations = max_evals;
        if (max_cycles > 0)
            cfg.budget.max_cycles = max_cycles;
        cfg.out_dir = out;
        cfg.threads = threads;
        cfg.measure_time = timing == "real";
        cfg.pesoa.groups = groups;
        cfg.pesoa.group_size = group_size;
        cfg.pesoa.max_dist = max_dist;
        cfg.pesoa.max_dives = max_dives;
        return cfg;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"PeSOA: penguin search optimization benchmark harness"};
    app.require_subcommand(1);

    CommonOpts run_opts, sg_opts, ss_opts;
    std::string algo = "pesoa";
    std::string k_spec = "2,5,10,20,50";
    std::string size_spec = "5..100:5";

    auto* run_cmd = app.add_subcommand("run", "Multi-seed comparison runs with "
                                              "trace and summary reports");
    run_cmd->add_option("--algo", algo, "Optimizer: pesoa, pso or de")
        ->check(CLI::IsMember({"pesoa", "pso", "de"}));
    run_opts.add_to(run_cmd, false);

    auto* sg_cmd = app.add_subcommand("sweep-groups",
                                      "Performance-ratio sweep over the group count");
    sg_cmd->add_option("--k", k_spec, "Group counts: list '2,5,10' or range '2..50'");
    sg_opts.bench = "ackley,sphere,rastrigin10,rosenbrock10,griewank10";
    sg_opts.seeds = 5;
    sg_opts.add_to(sg_cmd, true);

    auto* ss_cmd = app.add_subcommand("sweep-size",
                                      "Performance-ratio sweep over the group size");
    ss_cmd->add_option("--sizes", size_spec, "Group sizes, e.g. '5..100:5'");
    ss_opts.bench = "ackley,sphere,rastrigin10,rosenbrock10,griewank10";
    ss_opts.seeds = 5;
    ss_opts.add_to(ss_cmd, true);

    try {
        app.parse(argc, argv);

        if (run_cmd->parsed()) {
            auto cfg = run_opts.to_config();
            cfg.algorithm = algo;
            auto [records, rows] = pesoa::run_experiment(cfg);
            pesoa::emit_reports(records, rows, cfg.out_dir);
            std::printf("%-12s %-8s %6s %14s %14s %12s\n", "benchmark", "algorithm",
                        "n_runs", "mean_best", "std_best", "wall_s");
            for (const auto& r : rows)
                std::printf("%-12s %-8s %6d %14.6g %14.6g %12.4f\n", r.benchmark.c_str(),
                            r.algorithm.c_str(), r.n_runs, r.mean_best, r.std_best,
                            r.mean_wall_time_s);
            std::printf("budget: %zu evaluations per run; reports in %s\n",
                        cfg.budget.max_evaluations, cfg.out_dir.string().c_str());
        } else if (sg_cmd->parsed()) {
            auto rows = pesoa::sweep_groups(parse_int_list(k_spec), sg_opts.to_config());
            for (const auto& r : rows)
                std::printf("k=%-4d ratio=%.6g\n", r.value, r.performance_ratio);
        } else if (ss_cmd->parsed()) {
            auto rows =
                pesoa::sweep_group_size(parse_int_list(size_spec), ss_opts.to_config());
            for (const auto& r : rows)
                std::printf("size=%-4d ratio=%.6g\n", r.value, r.performance_ratio);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pesoa::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 3;
    }
}

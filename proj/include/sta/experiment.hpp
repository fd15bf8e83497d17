#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sta/crossover.hpp"
#include "sta/sta1.hpp"
#include "sta/stats.hpp"

namespace sta {

enum class Algorithm { Sta1, Sta2, RandomOpt };

std::string algorithm_name(Algorithm algo);

struct ExperimentConfig {
    Algorithm algo = Algorithm::Sta1;
    std::string fn_name = "sphere";
    std::size_t dim = 2;
    int trials = 30;
    int max_iters = 1000;
    std::uint64_t base_seed = 0;
    StaParams params;              // params.se is defaulted per algorithm by the CLI layer
    int sn = 30;                   // population size (sta2)
    int cf = 50;                   // communication frequency (sta2)
    double step_sigma = 1.0;       // perturbation scale (ro)
    BoundsPolicy bounds = BoundsPolicy::Clip;
    CrossoverConfig crossover;
    std::string out_path;          // summary file; empty = stdout report only
    std::string trace_dir;         // per-trial convergence traces; empty = none
    int threads = 0;               // concurrent trials; 0 = hardware default

    /// Throws std::invalid_argument before any evaluation happens.
    void validate() const;
};

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    StateVector best_state;
    double final_fitness = 0.0;
    std::vector<double> history;   // best fitness after each iteration
    std::uint64_t evals = 0;
    double wall_seconds = 0.0;
};

struct ExperimentResult {
    std::vector<TrialRecord> trials;
    SummaryStats stats;
    double evals_mean = 0.0;
    bool all_finite = true;        // false if some trial ended non-finite
};

/// Runs cfg.trials independent trials seeded base_seed + index. Trials may
/// execute concurrently; aggregation is by trial index, so results do not
/// depend on the thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Per-iteration mean of trial histories. Histories must share one length.
std::vector<double> average_fitness_curve(const std::vector<TrialRecord>& records);

void write_summary_header(std::ostream& os);
void write_summary_row(std::ostream& os, const ExperimentConfig& cfg,
                       const ExperimentResult& result);

/// One row per iteration: "iter,best_fitness", iter starting at 1.
void write_trace(std::ostream& os, const TrialRecord& rec);
std::string trace_filename(const ExperimentConfig& cfg, int trial_index);

/// Writes the summary file (header + one row) to cfg.out_path and, when
/// cfg.trace_dir is set, one trace file per trial. Rewrites from scratch, so
/// repeating a run reproduces the files byte for byte. Throws
/// std::runtime_error naming the offending path on I/O failure.
void write_results(const ExperimentConfig& cfg, const ExperimentResult& result);

} // namespace sta

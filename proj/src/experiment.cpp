#include "sta/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sta/benchmarks.hpp"
#include "sta/random_opt.hpp"
#include "sta/sta2.hpp"

namespace sta {

std::string algorithm_name(Algorithm algo) {
    switch (algo) {
    case Algorithm::Sta1: return "sta1";
    case Algorithm::Sta2: return "sta2";
    case Algorithm::RandomOpt: return "ro";
    }
    throw std::logic_error("algorithm_name: bad enum");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("config: iters must be >= 1");
    if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
    make_benchmark(fn_name, dim);   // rejects unknown names and bad dims
    switch (algo) {
    case Algorithm::Sta1:
        params.validate();
        break;
    case Algorithm::Sta2:
        params.validate();
        crossover.validate();
        if (sn < 1) throw std::invalid_argument("config: sn must be >= 1");
        if (cf < 1) throw std::invalid_argument("config: cf must be >= 1");
        break;
    case Algorithm::RandomOpt:
        if (!(step_sigma > 0.0))
            throw std::invalid_argument("config: sigma must be positive");
        break;
    }
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, const Objective& obj, int index) {
    TrialRecord rec;
    rec.index = index;
    rec.seed = cfg.base_seed + static_cast<std::uint64_t>(index);
    const auto t0 = std::chrono::steady_clock::now();
    switch (cfg.algo) {
    case Algorithm::Sta1: {
        StaIRun r = sta1_run(obj, cfg.params, cfg.max_iters, rec.seed, cfg.bounds);
        rec.best_state = std::move(r.best.state);
        rec.final_fitness = r.best.fitness;
        rec.history = std::move(r.history);
        rec.evals = r.counter.count;
        break;
    }
    case Algorithm::Sta2: {
        StaIIRun r = sta2_run(obj, cfg.params, cfg.sn, cfg.cf, cfg.max_iters, rec.seed,
                              cfg.bounds, cfg.crossover);
        rec.best_state = std::move(r.best.state);
        rec.final_fitness = r.best.fitness;
        rec.history = std::move(r.history);
        rec.evals = r.counter.count;
        break;
    }
    case Algorithm::RandomOpt: {
        RoRun r = random_optimization_run(obj, cfg.max_iters, cfg.step_sigma, rec.seed,
                                          cfg.bounds);
        rec.best_state = std::move(r.best.state);
        rec.final_fitness = r.best.fitness;
        rec.history = std::move(r.history);
        rec.evals = r.counter.count;
        break;
    }
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const Objective obj = make_benchmark(cfg.fn_name, cfg.dim);

    ExperimentResult result;
    result.trials.resize(static_cast<std::size_t>(cfg.trials));

    unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    if (workers > static_cast<unsigned>(cfg.trials))
        workers = static_cast<unsigned>(cfg.trials);

    if (workers == 1) {
        for (int t = 0; t < cfg.trials; ++t)
            result.trials[static_cast<std::size_t>(t)] = run_trial(cfg, obj, t);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int t = static_cast<int>(w); t < cfg.trials; t += static_cast<int>(workers))
                    result.trials[static_cast<std::size_t>(t)] = run_trial(cfg, obj, t);
            });
        }
        for (auto& th : pool)
            th.join();
    }

    std::vector<double> finals;
    finals.reserve(result.trials.size());
    std::uint64_t eval_sum = 0;
    for (const auto& rec : result.trials) {
        finals.push_back(rec.final_fitness);
        eval_sum += rec.evals;
        if (!std::isfinite(rec.final_fitness))
            result.all_finite = false;
    }
    result.stats = summarize(finals);
    result.evals_mean = static_cast<double>(eval_sum) / static_cast<double>(cfg.trials);
    return result;
}

std::vector<double> average_fitness_curve(const std::vector<TrialRecord>& records) {
    if (records.empty())
        throw std::invalid_argument("average_fitness_curve: no trials");
    const std::size_t len = records[0].history.size();
    for (const auto& rec : records)
        if (rec.history.size() != len)
            throw std::invalid_argument("average_fitness_curve: ragged histories");
    std::vector<double> curve(len, 0.0);
    for (const auto& rec : records)
        for (std::size_t t = 0; t < len; ++t)
            curve[t] += rec.history[t];
    const double inv = 1.0 / static_cast<double>(records.size());
    for (double& v : curve)
        v *= inv;
    return curve;
}

void write_summary_header(std::ostream& os) {
    os << "function,dim,algorithm,best,median,mean,worst,st_dev,trials,iters,evals_mean\n";
}

void write_summary_row(std::ostream& os, const ExperimentConfig& cfg,
                       const ExperimentResult& result) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%s,%zu,%s,%.17e,%.17e,%.17e,%.17e,%.17e,%d,%d,%.17e\n",
                  cfg.fn_name.c_str(), cfg.dim, algorithm_name(cfg.algo).c_str(),
                  result.stats.best, result.stats.median, result.stats.mean,
                  result.stats.worst, result.stats.st_dev, cfg.trials, cfg.max_iters,
                  result.evals_mean);
    os << buf;
}

void write_trace(std::ostream& os, const TrialRecord& rec) {
    os << "iter,best_fitness\n";
    char buf[64];
    for (std::size_t t = 0; t < rec.history.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.17e\n", t + 1, rec.history[t]);
        os << buf;
    }
}

std::string trace_filename(const ExperimentConfig& cfg, int trial_index) {
    return cfg.fn_name + "_" + std::to_string(cfg.dim) + "d_" + algorithm_name(cfg.algo) +
           "_trial" + std::to_string(trial_index) + ".csv";
}

void write_results(const ExperimentConfig& cfg, const ExperimentResult& result) {
    if (!cfg.out_path.empty()) {
        std::ofstream os(cfg.out_path, std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write summary file: " + cfg.out_path);
        write_summary_header(os);
        write_summary_row(os, cfg, result);
        if (!os)
            throw std::runtime_error("write failed: " + cfg.out_path);
    }
    if (!cfg.trace_dir.empty()) {
        std::filesystem::path dir(cfg.trace_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw std::runtime_error("cannot create trace directory: " + cfg.trace_dir);
        for (const auto& rec : result.trials) {
            const std::filesystem::path p = dir / trace_filename(cfg, rec.index);
            std::ofstream os(p, std::ios::trunc);
            if (!os)
                throw std::runtime_error("cannot write trace file: " + p.string());
            write_trace(os, rec);
            if (!os)
                throw std::runtime_error("write failed: " + p.string());
        }
    }
}

} // namespace sta

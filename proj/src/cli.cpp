#include "sta/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "sta/benchmarks.hpp"

namespace sta {
namespace {

struct KvPair {
    std::string key;
    std::string value;
};

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw UsageError("invalid value for " + key + ": '" + value + "'");
}

long long parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        bad_value(key, value);
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos)
        bad_value(key, value);
    return v;
}

double parse_real(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        bad_value(key, value);
    return v;
}

Algorithm parse_algo(const std::string& value) {
    if (value == "sta1") return Algorithm::Sta1;
    if (value == "sta2") return Algorithm::Sta2;
    if (value == "ro") return Algorithm::RandomOpt;
    throw UsageError("invalid value for algo: '" + value + "' (expected sta1, sta2 or ro)");
}

CrossoverKind parse_crossover(const std::string& value) {
    if (value == "proposed") return CrossoverKind::Proposed;
    if (value == "arithmetical") return CrossoverKind::Arithmetical;
    if (value == "linear") return CrossoverKind::Linear;
    if (value == "sbx") return CrossoverKind::Sbx;
    throw UsageError("invalid value for crossover: '" + value +
                     "' (expected proposed, arithmetical, linear or sbx)");
}

BoundsPolicy parse_bounds(const std::string& value) {
    if (value == "clip") return BoundsPolicy::Clip;
    if (value == "none") return BoundsPolicy::None;
    throw UsageError("invalid value for bounds: '" + value + "' (expected clip or none)");
}

void apply_option(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "algo")            cfg.algo = parse_algo(value);
    else if (key == "fn")         cfg.fn_name = value;
    else if (key == "dim")        cfg.dim = static_cast<std::size_t>(parse_u64(key, value));
    else if (key == "trials")     cfg.trials = static_cast<int>(parse_int(key, value));
    else if (key == "iters")      cfg.max_iters = static_cast<int>(parse_int(key, value));
    else if (key == "seed")       cfg.base_seed = parse_u64(key, value);
    else if (key == "se")         cfg.params.se = static_cast<int>(parse_int(key, value));
    else if (key == "sn")         cfg.sn = static_cast<int>(parse_int(key, value));
    else if (key == "cf")         cfg.cf = static_cast<int>(parse_int(key, value));
    else if (key == "alpha-max")  cfg.params.alpha_max = parse_real(key, value);
    else if (key == "alpha-min")  cfg.params.alpha_min = parse_real(key, value);
    else if (key == "beta")       cfg.params.beta = parse_real(key, value);
    else if (key == "gamma")      cfg.params.gamma = parse_real(key, value);
    else if (key == "delta")      cfg.params.delta = parse_real(key, value);
    else if (key == "fc")         cfg.params.fc = parse_real(key, value);
    else if (key == "crossover")  cfg.crossover.kind = parse_crossover(value);
    else if (key == "alpha-c")    cfg.crossover.alpha_c = parse_real(key, value);
    else if (key == "eta-c")      cfg.crossover.eta_c = parse_real(key, value);
    else if (key == "sigma")      cfg.step_sigma = parse_real(key, value);
    else if (key == "bounds")     cfg.bounds = parse_bounds(value);
    else if (key == "out")        cfg.out_path = value;
    else if (key == "trace")      cfg.trace_dir = value;
    else if (key == "threads")    cfg.threads = static_cast<int>(parse_int(key, value));
    else
        throw UsageError("unknown option: " + key);
}

ExperimentConfig config_from_kvs(const std::vector<KvPair>& kvs) {
    Algorithm algo = Algorithm::Sta1;
    for (const auto& kv : kvs)
        if (kv.key == "algo")
            algo = parse_algo(kv.value);

    ExperimentConfig cfg;
    cfg.algo = algo;
    cfg.params.se = (algo == Algorithm::Sta2) ? 10 : 30;
    for (const auto& kv : kvs)
        apply_option(cfg, kv.key, kv.value);

    // keep the running radius consistent with a reconfigured ceiling
    cfg.params.alpha = cfg.params.alpha_max;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::vector<KvPair> tokenize_argv(const std::vector<std::string>& args, CliRequest& req) {
    std::vector<KvPair> kvs;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok == "--help" || tok == "-h") {
            req.show_help = true;
            continue;
        }
        if (tok.rfind("--", 0) != 0)
            throw UsageError("unexpected argument: '" + tok + "'");
        const std::string key = tok.substr(2);
        if (key.empty())
            throw UsageError("unexpected argument: '--'");
        if (i + 1 >= args.size())
            throw UsageError("missing value for --" + key);
        kvs.push_back({key, args[++i]});
    }
    return kvs;
}

} // namespace

std::string usage_text() {
    std::ostringstream os;
    os << "usage: sta-bench [options]\n"
          "\n"
          "experiment options:\n"
          "  --algo sta1|sta2|ro      algorithm (default sta1)\n"
          "  --fn NAME                objective function (default sphere)\n"
          "  --dim N                  dimension (default 2)\n"
          "  --trials K               independent trials (default 30)\n"
          "  --iters M                iterations per trial (default 1000)\n"
          "  --seed S                 base seed; trial t uses S+t (default 0)\n"
          "  --se N                   candidates per transformation (default 30; 10 for sta2)\n"
          "  --sn N                   population size for sta2 (default 30)\n"
          "  --cf N                   communication period for sta2 (default 50)\n"
          "  --alpha-max X            rotation radius ceiling (default 1)\n"
          "  --alpha-min X            rotation radius floor (default 1e-4)\n"
          "  --beta X                 translation factor (default 1)\n"
          "  --gamma X                expansion factor (default 1)\n"
          "  --delta X                axesion factor (default 1)\n"
          "  --fc X                   radius decay divisor (default 2)\n"
          "  --crossover KIND         proposed|arithmetical|linear|sbx (default proposed)\n"
          "  --alpha-c X              arithmetical mix weight in [0,1] (default 0.5)\n"
          "  --eta-c X                sbx distribution index (default 2)\n"
          "  --sigma X                ro perturbation scale (default 1)\n"
          "  --bounds clip|none       box handling (default clip)\n"
          "  --out PATH               summary file (header + one row per experiment)\n"
          "  --trace DIR              write per-trial convergence traces into DIR\n"
          "  --threads N              concurrent trials (default: hardware)\n"
          "\n"
          "batch and export modes:\n"
          "  --suite FILE             run experiments listed in FILE (key=value lines)\n"
          "  --grid RES               export a RES x RES surface grid of a 2D --fn to --out\n"
          "\n"
          "functions:";
    for (const auto& n : benchmark_names())
        os << ' ' << n;
    os << '\n';
    return os.str();
}

CliRequest parse_cli(const std::vector<std::string>& args) {
    CliRequest req;
    std::vector<KvPair> kvs = tokenize_argv(args, req);
    if (req.show_help)
        return req;

    std::string suite_path;
    std::string grid_value;
    int threads_override = -1;
    std::vector<KvPair> rest;
    for (const auto& kv : kvs) {
        if (kv.key == "suite") suite_path = kv.value;
        else if (kv.key == "grid") grid_value = kv.value;
        else if (kv.key == "threads") threads_override = static_cast<int>(parse_int(kv.key, kv.value));
        else rest.push_back(kv);
    }

    if (!suite_path.empty() && !grid_value.empty())
        throw UsageError("--suite and --grid cannot be combined");

    if (!suite_path.empty()) {
        if (!rest.empty())
            throw UsageError("--suite cannot be combined with per-experiment flags (--" +
                             rest.front().key + ")");
        req.experiments = load_suite(suite_path);
        if (threads_override >= 0)
            for (auto& cfg : req.experiments)
                cfg.threads = threads_override;
        return req;
    }

    if (!grid_value.empty()) {
        req.grid_mode = true;
        const long long res = parse_int("grid", grid_value);
        if (res < 2)
            throw UsageError("invalid value for grid: '" + grid_value + "' (need >= 2)");
        req.grid_resolution = static_cast<std::size_t>(res);
        for (const auto& kv : rest) {
            if (kv.key == "fn") req.grid_fn = kv.value;
            else if (kv.key == "out") req.grid_out = kv.value;
            else if (kv.key == "dim") {
                if (parse_u64(kv.key, kv.value) != 2)
                    throw UsageError("--grid requires a two-dimensional function");
            } else
                throw UsageError("--grid cannot be combined with --" + kv.key);
        }
        try {
            make_benchmark(req.grid_fn, 2);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return req;
    }

    if (threads_override >= 0)
        rest.push_back({"threads", std::to_string(threads_override)});
    req.experiments.push_back(config_from_kvs(rest));
    return req;
}

std::vector<ExperimentConfig> load_suite(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw UsageError("cannot open suite file: " + path);

    std::vector<ExperimentConfig> experiments;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<KvPair> kvs;
        std::string tok;
        while (tokens >> tok) {
            const std::size_t eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw UsageError("suite file " + path + " line " + std::to_string(lineno) +
                                 ": expected key=value, got '" + tok + "'");
            kvs.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
        }
        if (kvs.empty())
            continue;
        try {
            experiments.push_back(config_from_kvs(kvs));
        } catch (const UsageError& e) {
            throw UsageError("suite file " + path + " line " + std::to_string(lineno) + ": " +
                             e.what());
        }
    }
    if (experiments.empty())
        throw UsageError("suite file " + path + " contains no experiments");
    return experiments;
}

namespace {

void report_experiment(std::ostream& out, const ExperimentConfig& cfg,
                       const ExperimentResult& result) {
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "%s %zud %s: best=%.10e median=%.10e mean=%.10e worst=%.10e "
                  "st_dev=%.10e evals_mean=%.1f\n",
                  cfg.fn_name.c_str(), cfg.dim, algorithm_name(cfg.algo).c_str(),
                  result.stats.best, result.stats.median, result.stats.mean,
                  result.stats.worst, result.stats.st_dev, result.evals_mean);
    out << buf;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliRequest req;
    try {
        req = parse_cli(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << usage_text();
        return 2;
    }
    if (req.show_help) {
        out << usage_text();
        return 0;
    }

    try {
        if (req.grid_mode) {
            const Objective obj = make_benchmark(req.grid_fn, 2);
            const auto rows = grid_sample(obj, req.grid_resolution);
            if (req.grid_out.empty()) {
                write_grid(out, rows);
            } else {
                std::ofstream os(req.grid_out, std::ios::trunc);
                if (!os)
                    throw std::runtime_error("cannot write grid file: " + req.grid_out);
                write_grid(os, rows);
                if (!os)
                    throw std::runtime_error("write failed: " + req.grid_out);
            }
            return 0;
        }

        // One summary stream per distinct path; a suite can accumulate many
        // rows under a single header.
        std::map<std::string, std::ofstream> summaries;
        for (const auto& cfg : req.experiments) {
            const ExperimentResult result = run_experiment(cfg);
            report_experiment(out, cfg, result);
            if (!result.all_finite)
                err << "warning: " << cfg.fn_name << " " << algorithm_name(cfg.algo)
                    << ": some trials ended with non-finite fitness\n";
            if (!cfg.out_path.empty()) {
                auto it = summaries.find(cfg.out_path);
                if (it == summaries.end()) {
                    std::ofstream os(cfg.out_path, std::ios::trunc);
                    if (!os)
                        throw std::runtime_error("cannot write summary file: " + cfg.out_path);
                    it = summaries.emplace(cfg.out_path, std::move(os)).first;
                    write_summary_header(it->second);
                }
                write_summary_row(it->second, cfg, result);
                if (!it->second)
                    throw std::runtime_error("write failed: " + cfg.out_path);
            }
            if (!cfg.trace_dir.empty()) {
                ExperimentConfig trace_cfg = cfg;
                trace_cfg.out_path.clear();
                write_results(trace_cfg, result);
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace sta

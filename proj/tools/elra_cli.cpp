// Command-line harness: 2-D benchmarks, saddle/rotation runs, network
// training, and CSV summaries. All randomness derives from --seed; repeated
// invocations with identical flags produce byte-identical CSV files.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "elra/csv.hpp"
#include "elra/dataset.hpp"
#include "elra/idx.hpp"
#include "elra/objectives.hpp"
#include "elra/runner.hpp"
#include "elra/stats.hpp"
#include "elra/train.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 2;
constexpr int kExitDiverged = 3;

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

struct OptimizerFlags {
    std::string name = "p2min";
    double alpha0 = 1e-5;
    double alpha = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double rho = 0.95;
    double alpha_min = 1e-8;
    double alpha_max = 1e6;
    double gamma_cap = 1e6;
    std::string restart = "damped";
};

void add_optimizer_flags(CLI::App* cmd, OptimizerFlags& flags) {
    cmd->add_option("--optimizer", flags.name, "c2min|p2min|sgd|adam|rmsprop|adadelta")
        ->check(CLI::IsMember({"c2min", "p2min", "sgd", "adam", "rmsprop", "adadelta"}));
    cmd->add_option("--alpha0", flags.alpha0, "initial learning rate for c2min/p2min");
    cmd->add_option("--alpha", flags.alpha, "learning rate for sgd/adam/rmsprop");
    cmd->add_option("--beta1", flags.beta1, "adam first-moment decay");
    cmd->add_option("--beta2", flags.beta2, "adam second-moment / rmsprop decay");
    cmd->add_option("--epsilon", flags.epsilon, "baseline denominator offset");
    cmd->add_option("--rho", flags.rho, "adadelta decay");
    cmd->add_option("--alpha-min", flags.alpha_min, "lower learning-rate bound");
    cmd->add_option("--alpha-max", flags.alpha_max, "upper learning-rate bound");
    cmd->add_option("--gamma-cap", flags.gamma_cap, "max per-step learning-rate growth factor");
    cmd->add_option("--restart-mode", flags.restart, "p2min restart policy: damped|fixed")
        ->check(CLI::IsMember({"damped", "fixed"}));
}

elra::OptimizerSpec to_spec(const OptimizerFlags& flags) {
    elra::OptimizerSpec spec;
    if (flags.name == "c2min") spec.kind = elra::OptimizerKind::c2min;
    else if (flags.name == "p2min") spec.kind = elra::OptimizerKind::p2min;
    else if (flags.name == "sgd") spec.kind = elra::OptimizerKind::sgd;
    else if (flags.name == "adam") spec.kind = elra::OptimizerKind::adam;
    else if (flags.name == "rmsprop") spec.kind = elra::OptimizerKind::rmsprop;
    else spec.kind = elra::OptimizerKind::adadelta;
    spec.alpha0 = flags.alpha0;
    spec.bounds = {flags.alpha_min, flags.alpha_max, flags.gamma_cap};
    spec.restart_mode =
        flags.restart == "fixed" ? elra::RestartMode::fixed_ratio : elra::RestartMode::damped;
    spec.baseline.alpha = flags.alpha;
    spec.baseline.beta1 = flags.beta1;
    spec.baseline.beta2 = flags.beta2;
    spec.baseline.epsilon = flags.epsilon;
    spec.baseline.rho = flags.rho;
    return spec;
}

std::shared_ptr<const elra::Objective> make_objective(const std::string& name,
                                                      const std::string& coeffs) {
    if (name == "bowl") {
        return std::make_shared<elra::BowlObjective>(parse_double_list(coeffs, "--coeffs"));
    }
    if (name == "rosenbrock") return std::make_shared<elra::RosenbrockObjective>();
    return std::make_shared<elra::SaddleObjective>();
}

elra::Vector default_start(const std::string& objective) {
    if (objective == "bowl") return {-5.75, 1.75};
    if (objective == "rosenbrock") return {-3.0, -2.0};
    return {1.0, 1e-9};
}

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_trajectory_csv(std::ostream& out, const elra::RunResult& result) {
    elra::write_csv_row(out, {"t", "x1", "x2", "f", "alpha", "cos_t", "restarted"});
    const auto& traj = result.trajectory;
    for (std::size_t i = 0; i < traj.records.size(); ++i) {
        const auto& r = traj.records[i];
        const auto& x = traj.iterates[i];
        elra::write_csv_row(out, {std::to_string(r.t), elra::format_double(x[0]),
                                  elra::format_double(x[1]), elra::format_double(r.f),
                                  elra::format_double(r.alpha), elra::format_double(r.cos_t),
                                  r.restarted ? "1" : "0"});
    }
}

// ---------------------------------------------------------------- bench2d

struct Bench2dArgs {
    OptimizerFlags opt;
    std::string objective = "bowl";
    std::string coeffs = "3,24";
    std::string start;
    std::string thresholds = "1e-1,1e-6";
    long max_steps = 10000;
    std::string out;
    std::string trajectory_out;
};

int run_bench2d(const Bench2dArgs& args) {
    auto objective = make_objective(args.objective, args.coeffs);
    elra::Vector start =
        args.start.empty() ? default_start(args.objective) : parse_double_list(args.start, "--start");
    if (start.size() != objective->dimension()) {
        std::cerr << "start point dimension does not match objective\n";
        return kExitDataError;
    }
    std::vector<double> thresholds = parse_double_list(args.thresholds, "--thresholds");
    std::sort(thresholds.rbegin(), thresholds.rend());

    const auto spec = to_spec(args.opt);
    const auto result =
        elra::run_fixed(*objective, start, spec, args.max_steps, thresholds.back());

    OutputTarget target(args.out);
    elra::write_csv_row(target.stream(), {"optimizer", "objective", "threshold", "steps"});
    bool all_reached = true;
    for (double eps : thresholds) {
        const auto steps = elra::steps_to_threshold(result.trajectory, eps);
        all_reached = all_reached && steps.has_value();
        elra::write_csv_row(target.stream(),
                            {args.opt.name, args.objective, elra::format_double(eps),
                             steps ? std::to_string(*steps) : (">" + std::to_string(args.max_steps))});
    }
    if (!args.trajectory_out.empty()) {
        std::ofstream traj_file(args.trajectory_out);
        if (!traj_file) {
            std::cerr << "cannot open " << args.trajectory_out << "\n";
            return kExitDataError;
        }
        write_trajectory_csv(traj_file, result);
    }
    std::cerr << "steps=" << result.trajectory.records.size() << " ppr="
              << elra::format_double(result.ppr) << (result.diverged ? " diverged" : "") << "\n";
    if (result.diverged && !all_reached) return kExitDiverged;
    return kExitOk;
}

// ----------------------------------------------------------------- saddle

struct SaddleArgs {
    OptimizerFlags opt;
    double rotate_deg = 0.0;
    double bound = 2.0;
    long max_steps = 1000;
    std::string out;
};

int run_saddle(const SaddleArgs& args) {
    const auto map = elra::OrthogonalMap::rotation_2d(args.rotate_deg * std::numbers::pi / 180.0);
    const elra::RotatedObjective objective(std::make_shared<elra::SaddleObjective>(), map);
    const elra::Vector start = map.apply_transpose({1.0, 1e-9});

    const auto spec = to_spec(args.opt);
    const auto result = elra::run_fixed(objective, start, spec, args.max_steps);

    OutputTarget target(args.out);
    write_trajectory_csv(target.stream(), result);

    const auto escape = elra::saddle_escape(result.trajectory, args.bound);
    std::cerr << "escape_step=" << (escape ? std::to_string(*escape) : "none")
              << " ppr=" << elra::format_double(result.ppr)
              << (result.diverged ? " diverged" : "") << "\n";
    if (!escape && result.diverged) return kExitDiverged;
    return kExitOk;
}

// ------------------------------------------------------------------ train

struct TrainArgs {
    OptimizerFlags opt;
    bool synthetic = false;
    std::string data_dir;
    std::size_t batch_size = 256;
    int epochs = 1;
    int seeds = 1;
    std::uint64_t seed = 0;
    std::size_t train_size = 10000;
    std::size_t test_size = 2000;
    bool full = false;
    std::string out_prefix;
};

int run_train(TrainArgs args) {
    if (args.full) {
        args.train_size = 60000;
        args.test_size = 10000;
    }
    elra::Dataset train_data, test_data;
    if (args.synthetic) {
        train_data = elra::make_synthetic_dataset(args.train_size, args.seed, 0);
        test_data = elra::make_synthetic_dataset(args.test_size, args.seed, 1);
    } else {
        std::string dir = args.data_dir;
        if (dir.empty()) {
            const char* env = std::getenv("ELRA_DATA_DIR");
            if (env) dir = env;
        }
        if (dir.empty()) {
            std::cerr << "no dataset: pass --synthetic, --data-dir, or set ELRA_DATA_DIR\n";
            return kExitDataError;
        }
        try {
            train_data = elra::load_idx(dir + "/train-images-idx3-ubyte",
                                        dir + "/train-labels-idx1-ubyte")
                             .subset(args.train_size);
            test_data = elra::load_idx(dir + "/t10k-images-idx3-ubyte",
                                       dir + "/t10k-labels-idx1-ubyte")
                            .subset(args.test_size);
        } catch (const elra::IdxParseError& e) {
            std::cerr << e.what() << "\n";
            return kExitDataError;
        }
    }

    elra::TrainConfig config;
    config.batch_size = args.batch_size;
    config.epochs = args.epochs;
    config.seed = args.seed;
    config.optimizer = to_spec(args.opt);
    if (config.optimizer.kind == elra::OptimizerKind::p2min) {
        config.optimizer.restart_mode = args.opt.restart == "damped"
                                            ? elra::RestartMode::damped
                                            : elra::RestartMode::fixed_ratio;
    }

    const auto multi = elra::train_multi(train_data, test_data, config, args.seeds);

    const std::string prefix = args.out_prefix.empty() ? "train" : args.out_prefix;
    for (int k = 0; k < args.seeds; ++k) {
        std::ofstream f(prefix + "_seed" + std::to_string(k) + ".csv");
        elra::write_csv_row(f, {"t", "train_loss", "test_loss", "alpha", "cos_t", "restarted"});
        for (const auto& p : multi.per_seed[static_cast<std::size_t>(k)].series) {
            elra::write_csv_row(f, {std::to_string(p.t), elra::format_double(p.train_loss),
                                    elra::format_double(p.test_loss), elra::format_double(p.alpha),
                                    elra::format_double(p.cos_t), p.restarted ? "1" : "0"});
        }
    }
    {
        std::ofstream f(prefix + "_summary.csv");
        elra::write_csv_row(f, {"seed", "steps", "initial_test_loss", "final_test_loss",
                                "best_test_loss", "max_alpha", "diverged"});
        for (int k = 0; k < args.seeds; ++k) {
            const auto& r = multi.per_seed[static_cast<std::size_t>(k)];
            elra::write_csv_row(
                f, {std::to_string(k), std::to_string(r.series.size()),
                    elra::format_double(r.initial_test_loss), elra::format_double(r.final_test_loss),
                    elra::format_double(r.best_test_loss), elra::format_double(r.max_alpha),
                    r.diverged ? "1" : "0"});
        }
    }
    {
        std::ofstream f(prefix + "_stats.csv");
        elra::write_csv_row(f, {"t", "median", "p16", "p56", "mean", "min", "max",
                                "runmin_median", "runmin_mean"});
        const auto& s = multi.test_loss_stats;
        for (std::size_t t = 0; t < s.median.size(); ++t) {
            elra::write_csv_row(
                f, {std::to_string(t), elra::format_double(s.median[t]),
                    elra::format_double(s.p16[t]), elra::format_double(s.p56[t]),
                    elra::format_double(s.mean[t]), elra::format_double(s.min[t]),
                    elra::format_double(s.max[t]), elra::format_double(s.runmin_median[t]),
                    elra::format_double(s.runmin_mean[t])});
        }
    }

    bool any_diverged = false;
    for (const auto& r : multi.per_seed) any_diverged = any_diverged || r.diverged;
    std::cerr << "wrote " << prefix << "_seed*.csv, _summary.csv, _stats.csv"
              << (any_diverged ? " (diverged seeds present)" : "") << "\n";
    return any_diverged ? kExitDiverged : kExitOk;
}

// ----------------------------------------------------------------- report

struct ReportArgs {
    std::string csv_path;
    std::string column;
    std::optional<double> threshold;
};

int run_report(const ReportArgs& args) {
    std::ifstream in(args.csv_path);
    if (!in) {
        std::cerr << "cannot open " << args.csv_path << "\n";
        return kExitDataError;
    }
    std::string line;
    if (!std::getline(in, line)) {
        std::cerr << args.csv_path << ": empty file\n";
        return kExitDataError;
    }
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    std::string column = args.column;
    if (column.empty()) {
        for (const auto& candidate : {"test_loss", "f"}) {
            if (std::find(header.begin(), header.end(), candidate) != header.end()) {
                column = candidate;
                break;
            }
        }
    }
    const auto col_it = std::find(header.begin(), header.end(), column);
    const auto t_it = std::find(header.begin(), header.end(), "t");
    if (col_it == header.end() || t_it == header.end()) {
        std::cerr << "column '" << column << "' or 't' not found in " << args.csv_path << "\n";
        return kExitDataError;
    }
    const std::size_t col_idx = static_cast<std::size_t>(col_it - header.begin());
    const std::size_t t_idx = static_cast<std::size_t>(t_it - header.begin());

    std::size_t rows = 0;
    double first = 0.0, last = 0.0, min_value = 0.0;
    long min_t = 0, last_t = 0;
    std::optional<long> threshold_step;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() <= std::max(col_idx, t_idx)) continue;
        const double v = std::stod(cells[col_idx]);
        const long t = std::stol(cells[t_idx]);
        if (rows == 0) {
            first = min_value = v;
            min_t = t;
        }
        if (v < min_value) {
            min_value = v;
            min_t = t;
        }
        if (args.threshold && !threshold_step && v < *args.threshold) threshold_step = t;
        last = v;
        last_t = t;
        ++rows;
    }
    if (rows == 0) {
        std::cerr << args.csv_path << ": no data rows\n";
        return kExitDataError;
    }
    std::cout << "column:   " << column << "\n"
              << "rows:     " << rows << "\n"
              << "first:    " << elra::format_double(first) << "\n"
              << "final:    " << elra::format_double(last) << " (t=" << last_t << ")\n"
              << "min:      " << elra::format_double(min_value) << " (t=" << min_t << ")\n";
    if (args.threshold) {
        std::cout << "steps to " << elra::format_double(*args.threshold) << ": "
                  << (threshold_step ? std::to_string(*threshold_step) : ">" + std::to_string(last_t))
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elra: exponentially adaptive learning-rate optimizers and benchmark harness"};
    app.require_subcommand(1);

    Bench2dArgs bench;
    auto* bench_cmd = app.add_subcommand("bench2d", "steps-to-threshold run on a 2-D landscape");
    add_optimizer_flags(bench_cmd, bench.opt);
    bench_cmd->add_option("--objective", bench.objective, "bowl|rosenbrock|saddle")
        ->check(CLI::IsMember({"bowl", "rosenbrock", "saddle"}));
    bench_cmd->add_option("--coeffs", bench.coeffs, "bowl coefficients, comma separated");
    bench_cmd->add_option("--start", bench.start, "start point, comma separated");
    bench_cmd->add_option("--thresholds", bench.thresholds, "f thresholds, comma separated");
    bench_cmd->add_option("--max-steps", bench.max_steps);
    bench_cmd->add_option("--out", bench.out, "summary CSV path (default: stdout)");
    bench_cmd->add_option("--trajectory-out", bench.trajectory_out, "per-step CSV path");

    SaddleArgs saddle;
    auto* saddle_cmd = app.add_subcommand("saddle", "saddle escape run, optionally rotated");
    add_optimizer_flags(saddle_cmd, saddle.opt);
    saddle_cmd->add_option("--rotate-deg", saddle.rotate_deg, "rotation angle in degrees");
    saddle_cmd->add_option("--bound", saddle.bound, "escape bound on max(|x1|,|x2|)");
    saddle_cmd->add_option("--max-steps", saddle.max_steps);
    saddle_cmd->add_option("--out", saddle.out, "trajectory CSV path (default: stdout)");

    TrainArgs train;
    train.opt.name = "c2min";
    train.opt.gamma_cap = 10.0;  // tighter growth cap suits stochastic gradients
    train.opt.restart = "fixed";
    auto* train_cmd = app.add_subcommand("train", "train the 784-10-10 network");
    add_optimizer_flags(train_cmd, train.opt);
    train_cmd->add_flag("--synthetic", train.synthetic, "use the built-in two-blob dataset");
    train_cmd->add_option("--data-dir", train.data_dir, "directory with MNIST idx files");
    train_cmd->add_option("--batch-size", train.batch_size);
    train_cmd->add_option("--epochs", train.epochs);
    train_cmd->add_option("--seeds", train.seeds, "number of independent runs");
    train_cmd->add_option("--seed", train.seed, "base seed");
    train_cmd->add_option("--train-size", train.train_size);
    train_cmd->add_option("--test-size", train.test_size);
    train_cmd->add_flag("--full", train.full, "use the full 60k/10k split");
    train_cmd->add_option("--out-prefix", train.out_prefix, "output file prefix");

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "summarize a CSV produced by this tool");
    report_cmd->add_option("csv", report.csv_path, "input CSV file")->required();
    report_cmd->add_option("--column", report.column, "column to summarize");
    double report_threshold = 0.0;
    auto* thr_opt = report_cmd->add_option("--threshold", report_threshold,
                                           "also report steps-to-threshold");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench_cmd->parsed()) return run_bench2d(bench);
        if (saddle_cmd->parsed()) return run_saddle(saddle);
        if (train_cmd->parsed()) return run_train(train);
        if (report_cmd->parsed()) {
            if (thr_opt->count() > 0) report.threshold = report_threshold;
            return run_report(report);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitDataError;
    }
    return kExitOk;
}

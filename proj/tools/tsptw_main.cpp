#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tsptw/bench.hpp"
#include "tsptw/duration.hpp"
#include "tsptw/errors.hpp"
#include "tsptw/instance_io.hpp"
#include "tsptw/model.hpp"
#include "tsptw/oracle.hpp"
#include "tsptw/preprocess.hpp"
#include "tsptw/search.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct GlobalOptions {
    std::optional<double> time_limit_s;
    std::optional<double> memory_limit_mb;
    int scale = 0;
    std::string format = "matrix";
    std::uint64_t seed = 0;
    bool reverse = false;
    std::string csv_path;
    bool verbose = false;

    tsptw::Limits limits(std::optional<double> default_seconds = std::nullopt) const {
        tsptw::Limits l;
        if (time_limit_s)
            l = tsptw::Limits::with_seconds(*time_limit_s);
        else if (default_seconds)
            l = tsptw::Limits::with_seconds(*default_seconds);
        if (memory_limit_mb)
            l.memory_limit_bytes = static_cast<std::uint64_t>(*memory_limit_mb * 1024.0 * 1024.0);
        return l;
    }

    tsptw::io::InstanceFormat instance_format() const {
        if (format == "matrix") return tsptw::io::InstanceFormat::Matrix;
        if (format == "coords") return tsptw::io::InstanceFormat::Coordinates;
        throw CLI::ValidationError("--format", "expected 'matrix' or 'coords'");
    }
};

int status_exit_code(tsptw::SolveStatus s) {
    switch (s) {
        case tsptw::SolveStatus::Optimal: return kExitSolved;
        case tsptw::SolveStatus::Infeasible: return kExitInfeasible;
        default: return kExitBudget;
    }
}

void write_csv(const GlobalOptions& g, const tsptw::bench::BenchRecord& rec) {
    if (g.csv_path.empty()) return;
    std::ofstream out(g.csv_path);
    out << tsptw::bench::csv_header() << "\n" << tsptw::bench::csv_row(rec) << "\n";
}

void print_stats(const tsptw::SearchStats& stats) {
    std::cout << "labels " << stats.labels_created << " dominated " << stats.labels_dominated
              << " pruned " << stats.labels_pruned << "\n";
}

int cmd_solve_makespan(const GlobalOptions& g, const std::string& file, const std::string& t0_text) {
    tsptw::Instance inst = tsptw::io::load_instance(file, g.instance_format(), g.scale);
    if (g.reverse) inst = tsptw::reverse(inst);
    tsptw::TimeInstant t0 = tsptw::parse_scaled_time(t0_text, inst.scale);
    if (t0 > inst.horizon) throw CLI::ValidationError("--t0", "departure beyond the horizon");
    tsptw::SolveOutcome out = tsptw::search::solve_makespan(inst, t0, g.limits());
    std::cout << "status " << tsptw::to_string(out.status) << "\n";
    if (out.objective)
        std::cout << "makespan " << tsptw::format_scaled_time(*out.objective, inst.scale) << "\n";
    if (out.route) std::cout << "route " << tsptw::to_string(*out.route) << "\n";
    if (g.verbose) {
        print_stats(out.stats);
        std::cout << "time_ms " << out.elapsed.count() << "\n";
    }
    tsptw::bench::BenchRecord rec;
    rec.instance = inst.name;
    rec.mode = tsptw::bench::BenchMode::Makespan;
    rec.status = out.status;
    rec.objective = out.objective;
    rec.scale = inst.scale;
    rec.time_ms = out.elapsed.count();
    rec.stats = out.stats;
    write_csv(g, rec);
    return status_exit_code(out.status);
}

int cmd_solve_duration(const GlobalOptions& g, const std::string& file, bool force_grid) {
    tsptw::Instance inst = tsptw::io::load_instance(file, g.instance_format(), g.scale);
    if (g.verbose)
        std::cout << "note: restart searches are capped at latest-departure bound + incumbent duration\n";
    tsptw::duration::DurationOutcome out =
        g.reverse ? tsptw::duration::solve_duration_reversed(inst, g.limits(), {}, force_grid)
                  : tsptw::duration::solve_duration(inst, g.limits(), {}, force_grid);
    std::cout << "status " << tsptw::to_string(out.status) << "\n";
    if (out.duration) {
        std::cout << "duration " << tsptw::format_scaled_time(*out.duration, inst.scale) << "\n";
        std::cout << "departure " << tsptw::format_scaled_time(*out.departure, inst.scale) << "\n";
    }
    if (out.route) std::cout << "route " << tsptw::to_string(*out.route) << "\n";
    if (g.verbose) {
        std::cout << "makespan_calls " << out.makespan_calls << " windows_scanned "
                  << out.windows_scanned << "\n";
        print_stats(out.stats);
        std::cout << "time_ms " << out.elapsed.count() << "\n";
    }
    tsptw::bench::BenchRecord rec;
    rec.instance = inst.name;
    rec.mode = g.reverse ? tsptw::bench::BenchMode::DurationReversed : tsptw::bench::BenchMode::Duration;
    rec.status = out.status;
    rec.objective = out.duration;
    rec.scale = inst.scale;
    rec.time_ms = out.elapsed.count();
    rec.stats = out.stats;
    rec.makespan_calls = out.makespan_calls;
    write_csv(g, rec);
    return status_exit_code(out.status);
}

int cmd_preprocess(const GlobalOptions& g, const std::string& file) {
    tsptw::Instance inst = tsptw::io::load_instance(file, g.instance_format(), g.scale);
    if (g.reverse) inst = tsptw::reverse(inst);
    tsptw::preprocess::PreprocessResult prep = tsptw::preprocess::build(inst);
    std::cout << tsptw::preprocess::dump_diagnostics(prep);
    return prep.feasible ? kExitSolved : kExitInfeasible;
}

int cmd_generate(const GlobalOptions& g, const std::string& family, int n, double sigma, double omega,
                 double beta, const std::string& output) {
    tsptw::io::GeneratorSpec spec;
    if (family == "snn")
        spec.family = tsptw::io::GeneratorFamily::SecondNearestNeighbor;
    else if (family == "random-route")
        spec.family = tsptw::io::GeneratorFamily::RandomRoute;
    else if (family == "beta")
        spec.family = tsptw::io::GeneratorFamily::BetaTightness;
    else
        throw CLI::ValidationError("--family", "expected snn, random-route or beta");
    spec.n = n;
    spec.sigma = sigma;
    spec.omega = omega;
    spec.beta = beta;
    spec.seed = g.seed;
    spec.scale = g.scale;
    tsptw::Instance inst = tsptw::io::generate(spec);
    std::string text = tsptw::io::serialize_matrix(inst, tsptw::io::generator_comments(spec));
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw tsptw::ParseError(tsptw::ParseError::Kind::Malformed, "cannot write " + output);
        out << text;
        if (g.verbose) std::cout << "wrote " << output << " (" << inst.name << ")\n";
    }
    return kExitSolved;
}

int cmd_bench(const GlobalOptions& g, const std::string& dir, const std::string& mode) {
    tsptw::bench::BenchConfig cfg;
    double default_seconds = 180.0;
    if (mode == "makespan") {
        cfg.mode = tsptw::bench::BenchMode::Makespan;
    } else if (mode == "duration") {
        cfg.mode = tsptw::bench::BenchMode::Duration;
        default_seconds = 1800.0;
    } else if (mode == "duration-reversed") {
        cfg.mode = tsptw::bench::BenchMode::DurationReversed;
        default_seconds = 1800.0;
    } else {
        throw CLI::ValidationError("--mode", "expected makespan, duration or duration-reversed");
    }
    cfg.limits = g.limits(default_seconds);
    cfg.format = g.instance_format();
    cfg.scale = g.scale;

    std::ofstream csv_file;
    std::ostream* csv = nullptr;
    if (!g.csv_path.empty()) {
        csv_file.open(g.csv_path);
        if (!csv_file) throw tsptw::ParseError(tsptw::ParseError::Kind::Malformed, "cannot write " + g.csv_path);
        csv = &csv_file;
    }
    if (csv) *csv << tsptw::bench::csv_header() << "\n";
    std::cout << tsptw::bench::csv_header() << "\n";
    tsptw::bench::BenchSummary summary =
        tsptw::bench::run_bench(dir, cfg, [&](const tsptw::bench::BenchRecord& rec) {
            std::string row = tsptw::bench::csv_row(rec);
            std::cout << row << "\n";
            if (csv) *csv << row << "\n";
            if (g.verbose && !rec.error.empty()) std::cerr << rec.instance << ": " << rec.error << "\n";
        });
    std::cout << "# solved " << summary.solved << "/" << summary.total << " mean_ms "
              << static_cast<std::int64_t>(summary.mean_ms_solved) << " max_ms "
              << summary.max_ms_solved << "\n";
    return kExitSolved;
}

int cmd_oracle(const GlobalOptions& g, const std::string& file, const std::string& op,
               const std::string& t0_text) {
    tsptw::Instance inst = tsptw::io::load_instance(file, g.instance_format(), g.scale);
    if (g.reverse) inst = tsptw::reverse(inst);
    tsptw::TimeInstant t0 = tsptw::parse_scaled_time(t0_text, inst.scale);
    if (op == "enumerate-makespan" || op == "heldkarp-makespan") {
        tsptw::oracle::OracleResult res = op == "enumerate-makespan"
                                              ? tsptw::oracle::enumerate_makespan(inst, t0)
                                              : tsptw::oracle::heldkarp_makespan(inst, t0);
        std::cout << "objective " << tsptw::format_scaled_time(res.objective, inst.scale) << "\n";
        if (res.route) std::cout << "route " << tsptw::to_string(*res.route) << "\n";
        return res.objective.finite() ? kExitSolved : kExitInfeasible;
    }
    if (op == "duration") {
        tsptw::oracle::DurationOracleResult res = tsptw::oracle::oracle_duration(inst);
        std::cout << "duration " << tsptw::format_scaled_time(res.objective, inst.scale) << "\n";
        if (res.route) {
            std::cout << "departure " << tsptw::format_scaled_time(res.departure, inst.scale) << "\n";
            std::cout << "route " << tsptw::to_string(*res.route) << "\n";
        }
        return res.objective.finite() ? kExitSolved : kExitInfeasible;
    }
    if (op == "feasible-routes") {
        std::vector<tsptw::Route> routes = tsptw::oracle::enumerate_feasible_routes(inst);
        for (const tsptw::Route& r : routes) std::cout << tsptw::to_string(r) << "\n";
        std::cout << "# count " << routes.size() << "\n";
        return routes.empty() ? kExitInfeasible : kExitSolved;
    }
    throw CLI::ValidationError("--op", "unknown oracle operation '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver toolkit for the TSP with time windows (makespan and duration objectives)"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--time-limit", g.time_limit_s, "Time limit in seconds");
    app.add_option("--memory-limit", g.memory_limit_mb, "Label memory limit in MB");
    app.add_option("--scale", g.scale, "Decimal digits kept as fixed-point units (0, 1, 4, ...)");
    app.add_option("--format", g.format, "Instance file format: matrix or coords");
    app.add_option("--seed", g.seed, "Seed for the instance generator");
    app.add_flag("--reverse", g.reverse, "Operate on the time-mirrored network");
    app.add_option("--csv", g.csv_path, "Write CSV records to this path");
    app.add_flag("--verbose", g.verbose, "Print solver statistics and notes");

    std::string file, t0_text = "0", family = "snn", output, dir, mode = "makespan";
    std::string oracle_op = "enumerate-makespan";
    int gen_n = 10;
    double gen_sigma = 100.0, gen_omega = 40.0, gen_beta = 0.5;
    bool force_grid = false;

    CLI::App* sm = app.add_subcommand("solve-makespan", "Minimize the arrival time at the end depot");
    sm->add_option("file", file, "Instance file")->required();
    sm->add_option("--t0", t0_text, "Departure time (instance units)");

    CLI::App* sd = app.add_subcommand("solve-duration", "Minimize arrival minus departure");
    sd->add_option("file", file, "Instance file")->required();
    sd->add_flag("--force-grid", force_grid, "Allow scales >= 4 despite the departure grid blowup");

    CLI::App* pp = app.add_subcommand("preprocess", "Dump tightened windows, precedences and the unreachable function");
    pp->add_option("file", file, "Instance file")->required();

    CLI::App* gen = app.add_subcommand("generate", "Write a reproducible random instance");
    gen->add_option("--family", family, "snn, random-route or beta");
    gen->add_option("--n", gen_n, "Customer count");
    gen->add_option("--sigma", gen_sigma, "Location square side");
    gen->add_option("--omega", gen_omega, "Window width (snn / random-route)");
    gen->add_option("--beta", gen_beta, "Window tightness in [0, 1] (beta family)");
    gen->add_option("-o,--output", output, "Output path ('-' for stdout)");

    CLI::App* bench = app.add_subcommand("bench", "Solve every instance in a directory, emitting CSV");
    bench->add_option("dir", dir, "Directory of instance files")->required();
    bench->add_option("--mode", mode, "makespan, duration or duration-reversed");

    CLI::App* orc = app.add_subcommand("oracle", "Brute-force reference solvers (small instances)");
    orc->add_option("file", file, "Instance file")->required();
    orc->add_option("--op", oracle_op,
                    "enumerate-makespan, heldkarp-makespan, duration or feasible-routes");
    orc->add_option("--t0", t0_text, "Departure time (instance units)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sm->parsed()) return cmd_solve_makespan(g, file, t0_text);
        if (sd->parsed()) return cmd_solve_duration(g, file, force_grid);
        if (pp->parsed()) return cmd_preprocess(g, file);
        if (gen->parsed()) return cmd_generate(g, family, gen_n, gen_sigma, gen_omega, gen_beta, output);
        if (bench->parsed()) return cmd_bench(g, dir, mode);
        if (orc->parsed()) return cmd_oracle(g, file, oracle_op, t0_text);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tsptw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

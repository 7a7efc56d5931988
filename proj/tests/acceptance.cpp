// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Criterion 5 needs user-supplied benchmark files and is
// skipped (not failed) when TSPTW_DUM_DIR is unset.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <vector>

#include "tsptw/bench.hpp"
#include "tsptw/duration.hpp"
#include "tsptw/instance_io.hpp"
#include "tsptw/model.hpp"
#include "tsptw/oracle.hpp"
#include "tsptw/preprocess.hpp"
#include "tsptw/rng.hpp"
#include "tsptw/search.hpp"

using namespace tsptw;

namespace {

int failures = 0;
std::uint64_t certificates_checked = 0;
std::uint64_t certificates_total = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
    if (!pass) ++failures;
}

void skip(int criterion, const std::string& detail) {
    std::cout << "criterion " << criterion << ": SKIP - " << detail << std::endl;
}

// Certifies an Optimal makespan outcome by replaying the route through the
// evaluation primitives.
bool certify_makespan(const Instance& inst, TimeInstant t0, const SolveOutcome& out) {
    ++certificates_total;
    if (!out.route || !out.objective) return false;
    if (!out.route->complete(inst) || !out.route->elementary()) return false;
    if (static_cast<int>(out.route->vertices.size()) != inst.n + 2) return false;
    if (arrival_time(inst, *out.route, t0) != *out.objective) return false;
    ++certificates_checked;
    return true;
}

bool certify_duration(const Instance& inst, const duration::DurationOutcome& out) {
    ++certificates_total;
    if (!out.route || !out.departure || !out.duration) return false;
    if (!out.route->complete(inst) || !out.route->elementary()) return false;
    TimeInstant arr = arrival_time(inst, *out.route, *out.departure);
    if (!arr.finite() || arr - *out.departure != *out.duration) return false;
    ++certificates_checked;
    return true;
}

// The criterion-1 instance family: seeded SNN and beta-tightness windows,
// n in [4, 9], integer times (scale 0).
io::GeneratorSpec family_spec(int i) {
    io::GeneratorSpec spec;
    spec.n = 4 + (i % 6);
    spec.sigma = 50;
    spec.scale = 0;
    spec.seed = 0xACCE97ULL * 1000003ULL + static_cast<std::uint64_t>(i);
    if (i % 2 == 0) {
        spec.family = io::GeneratorFamily::SecondNearestNeighbor;
        const double omegas[] = {20, 40, 60, 80};
        spec.omega = omegas[(i / 2) % 4];
    } else {
        spec.family = io::GeneratorFamily::BetaTightness;
        const double betas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
        spec.beta = betas[(i / 2) % 5];
    }
    return spec;
}

std::vector<Instance> criterion1_instances() {
    std::vector<Instance> out;
    out.reserve(1000);
    for (int i = 0; i < 1000; ++i) out.push_back(io::generate(family_spec(i)));
    return out;
}

Instance criterion2_instance(SplitMix64& rng, int i) {
    int n = 1 + (i % 8);
    std::int64_t horizon = 40 + static_cast<std::int64_t>(rng.next_below(160));
    std::int64_t max_tau = 3 + static_cast<std::int64_t>(rng.next_below(12));
    const std::size_t m = static_cast<std::size_t>(n + 2);
    Instance inst;
    inst.n = n;
    inst.horizon = TimeInstant::of(horizon);
    inst.scale = 0;
    inst.name = "c2-" + std::to_string(i);
    inst.travel.assign(m, std::vector<TimeInstant>(m, TimeInstant::zero()));
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w)
            if (v != w)
                inst.travel[v][w] =
                    TimeInstant::of(1 + static_cast<std::int64_t>(rng.next_below(
                                            static_cast<std::uint64_t>(max_tau - 1))));
    inst.window_open.assign(m, TimeInstant::zero());
    inst.window_close.assign(m, inst.horizon);
    for (int v = 1; v <= n; ++v) {
        std::int64_t a = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(horizon)));
        std::int64_t b = a + static_cast<std::int64_t>(
                                 rng.next_below(static_cast<std::uint64_t>(horizon - a)));
        inst.window_open[static_cast<std::size_t>(v)] = TimeInstant::of(a);
        inst.window_close[static_cast<std::size_t>(v)] = TimeInstant::of(b);
    }
    inst.validate();
    return inst;
}

std::string timed(std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start)
                  .count();
    std::ostringstream out;
    out << " [" << ms / 1000.0 << "s]";
    return out.str();
}

void criterion1_and_4() {
    auto start = std::chrono::steady_clock::now();
    std::vector<Instance> instances = criterion1_instances();
    int mismatches = 0, infeasible = 0;
    std::vector<TimeInstant> objectives;
    objectives.reserve(instances.size());
    for (const Instance& inst : instances) {
        oracle::OracleResult ref = oracle::enumerate_makespan(inst, TimeInstant::zero());
        SolveOutcome out = search::solve_makespan(inst, TimeInstant::zero());
        if (!ref.objective.finite()) {
            ++infeasible;
            if (out.status != SolveStatus::Infeasible) ++mismatches;
            objectives.push_back(TimeInstant::plus_inf());
            continue;
        }
        objectives.push_back(ref.objective);
        if (out.status != SolveStatus::Optimal || *out.objective != ref.objective ||
            !certify_makespan(inst, TimeInstant::zero(), out))
            ++mismatches;
    }
    {
        std::ostringstream d;
        d << "makespan equals enumeration on " << instances.size() << " seeded instances ("
          << infeasible << " infeasible, agreement included)" << timed(start);
        report(1, mismatches == 0, d.str());
    }

    // Criterion 4: the ablations must preserve every objective above.
    auto start4 = std::chrono::steady_clock::now();
    int ablation_mismatches = 0;
    search::SearchOptions no_dom;
    no_dom.use_dominance = false;
    search::SearchOptions no_unreach;
    no_unreach.use_unreachable = false;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (const search::SearchOptions& opts : {no_dom, no_unreach}) {
            SolveOutcome out = search::solve_makespan(instances[i], TimeInstant::zero(), {}, opts);
            if (objectives[i].is_plus_inf()) {
                if (out.status != SolveStatus::Infeasible) ++ablation_mismatches;
            } else if (out.status != SolveStatus::Optimal || *out.objective != objectives[i]) {
                ++ablation_mismatches;
            }
        }
    }
    {
        std::ostringstream d;
        d << "objectives preserved with dominance off and with unreachable pruning off ("
          << instances.size() << " instances each)" << timed(start4);
        report(4, ablation_mismatches == 0, d.str());
    }
}

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(0xD07A110ULL);
    int mismatches = 0, infeasible = 0;
    for (int i = 0; i < 500; ++i) {
        Instance inst = criterion2_instance(rng, i);
        oracle::DurationOracleResult ref = oracle::oracle_duration(inst);
        duration::DurationOutcome fwd = duration::solve_duration(inst);
        duration::DurationOutcome bwd = duration::solve_duration_reversed(inst);
        if (!ref.objective.finite()) {
            ++infeasible;
            if (fwd.status != SolveStatus::Infeasible || bwd.status != SolveStatus::Infeasible)
                ++mismatches;
            continue;
        }
        bool ok = fwd.status == SolveStatus::Optimal && *fwd.duration == ref.objective &&
                  bwd.status == SolveStatus::Optimal && *bwd.duration == ref.objective &&
                  certify_duration(inst, fwd) && certify_duration(inst, bwd);
        if (!ok) ++mismatches;
    }
    std::ostringstream d;
    d << "forward and reversed duration equal the scan oracle on 500 seeded instances (" << infeasible
      << " infeasible, agreement included)" << timed(start);
    report(2, mismatches == 0, d.str());
}

void criterion3() {
    auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(0x50BEAD5ULL);
    int violations = 0, nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
        int n = 2 + (i % 6);  // up to 7 customers
        std::int64_t horizon = 30 + static_cast<std::int64_t>(rng.next_below(80));
        const std::size_t m = static_cast<std::size_t>(n + 2);
        std::vector<std::vector<std::int64_t>> travel(m, std::vector<std::int64_t>(m, 0));
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w)
                if (v != w) travel[v][w] = 1 + static_cast<std::int64_t>(rng.next_below(11));
        std::vector<std::pair<std::int64_t, std::int64_t>> windows(m, {0, horizon});
        for (int v = 1; v <= n; ++v) {
            std::int64_t a = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(horizon)));
            std::int64_t b = a + static_cast<std::int64_t>(
                                     rng.next_below(static_cast<std::uint64_t>(horizon - a)));
            windows[static_cast<std::size_t>(v)] = {a, b};
        }
        Instance inst;
        {
            inst.n = n;
            inst.horizon = TimeInstant::of(horizon);
            inst.scale = 0;
            inst.name = "c3-" + std::to_string(i);
            inst.travel.assign(m, std::vector<TimeInstant>(m, TimeInstant::zero()));
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t w = 0; w < m; ++w) inst.travel[v][w] = TimeInstant::of(travel[v][w]);
            inst.window_open.resize(m);
            inst.window_close.resize(m);
            for (std::size_t v = 0; v < m; ++v) {
                inst.window_open[v] = TimeInstant::of(windows[v].first);
                inst.window_close[v] = TimeInstant::of(windows[v].second);
            }
            inst.validate();
        }
        std::vector<Route> before = oracle::enumerate_feasible_routes(inst);
        preprocess::PreprocessResult prep = preprocess::build(inst);
        if (!prep.feasible) {
            if (!before.empty()) ++violations;
            continue;
        }
        if (prep.iterations > 1) ++nontrivial;
        std::vector<Route> after = oracle::enumerate_feasible_routes(prep.tightened);
        if (before != after) ++violations;

        // Every membership claim of U must be consistent with enumeration:
        // a feasible route visiting w before v at time t refutes w in U(v, t).
        for (const Route& r : before) {
            TimeInstant visit = TimeInstant::zero();
            std::vector<TimeInstant> profile{visit};
            for (std::size_t j = 1; j < r.vertices.size(); ++j) {
                visit = std::max(visit + inst.tau(r.vertices[j - 1], r.vertices[j]),
                                 inst.open(r.vertices[j]));
                profile.push_back(visit);
            }
            for (std::size_t j = 1; j < r.vertices.size(); ++j) {
                const VertexSet& u = prep.unreachable.query(r.vertices[j], profile[j]);
                for (std::size_t k = 0; k < j; ++k)
                    if (u.contains(r.vertices[k])) ++violations;
            }
        }
    }
    std::ostringstream d;
    d << "feasible route sets unchanged by preprocessing and all unreachable-set claims hold on 300 "
         "seeded instances ("
      << nontrivial << " with actual tightening)" << timed(start);
    report(3, violations == 0, d.str());
}

void criterion5() {
    const char* dir = std::getenv("TSPTW_DUM_DIR");
    if (dir == nullptr || std::string(dir).empty()) {
        skip(5, "desk-scale reproduction needs user-supplied benchmark files; set TSPTW_DUM_DIR to a "
                "directory of matrix-format files with one-decimal travel times");
        return;
    }
    auto start = std::chrono::steady_clock::now();
    int checked = 0, mismatches = 0, too_slow = 0;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        Instance inst;
        try {
            inst = io::load_instance(path, io::InstanceFormat::Matrix, 1);
        } catch (const std::exception&) {
            continue;  // not a matrix-format instance
        }
        if (inst.n != 20) continue;
        ++checked;
        SolveOutcome out = search::solve_makespan(inst, TimeInstant::zero(), Limits::with_seconds(10));
        oracle::OracleResult ref = oracle::heldkarp_makespan(inst, TimeInstant::zero());
        if (out.status != SolveStatus::Optimal || *out.objective != ref.objective ||
            !certify_makespan(inst, TimeInstant::zero(), out))
            ++mismatches;
        if (out.elapsed.count() >= 10000) ++too_slow;
    }
    std::ostringstream d;
    d << checked << " n=20 instances solved to the subset-DP objective, each under 10s" << timed(start);
    report(5, checked > 0 && mismatches == 0 && too_slow == 0, d.str());
}

void criterion6() {
    std::ostringstream d;
    d << certificates_checked << "/" << certificates_total
      << " optimal outcomes re-evaluated to their reported objectives";
    report(6, certificates_total > 0 && certificates_checked == certificates_total, d.str());
}

std::string record_without_time(const bench::BenchRecord& rec) {
    bench::BenchRecord copy = rec;
    copy.time_ms = 0;
    return bench::csv_row(copy);
}

void criterion7() {
    auto start = std::chrono::steady_clock::now();
    int mismatches = 0;
    std::vector<Instance> sample;
    for (int i : {0, 1, 12, 13}) sample.push_back(io::generate(family_spec(i)));
    SplitMix64 rng(0xC0FFEEULL);
    for (int i = 0; i < 2; ++i) sample.push_back(criterion2_instance(rng, i));
    for (const Instance& inst : sample) {
        for (bench::BenchMode mode : {bench::BenchMode::Makespan, bench::BenchMode::Duration,
                                      bench::BenchMode::DurationReversed}) {
            bench::BenchRecord first = bench::run_instance(inst, mode, Limits{});
            bench::BenchRecord second = bench::run_instance(inst, mode, Limits{});
            if (record_without_time(first) != record_without_time(second)) ++mismatches;
        }
    }
    std::ostringstream d;
    d << "repeated solves produce byte-identical records (time_ms excluded) across "
      << sample.size() * 3 << " solve pairs" << timed(start);
    report(7, mismatches == 0, d.str());
}

void criterion8() {
    auto start = std::chrono::steady_clock::now();
    int violations = 0;
    SplitMix64 rng(0x6E6E6EULL);
    int feasible = 0;
    for (int i = 0; i < 200; ++i) {
        io::GeneratorSpec spec;
        switch (i % 3) {
            case 0: spec.family = io::GeneratorFamily::SecondNearestNeighbor; break;
            case 1: spec.family = io::GeneratorFamily::RandomRoute; break;
            default: spec.family = io::GeneratorFamily::BetaTightness; break;
        }
        spec.n = 2 + (i % 9);
        spec.sigma = 60;
        spec.omega = static_cast<double>(rng.next_below(80));
        spec.beta = static_cast<double>(i % 5) / 4.0;
        spec.seed = rng.next_u64();
        spec.scale = i % 2;

        std::string once = io::serialize_matrix(io::generate(spec), io::generator_comments(spec));
        std::string twice = io::serialize_matrix(io::generate(spec), io::generator_comments(spec));
        if (once != twice) ++violations;
        if (search::solve_makespan(io::generate(spec), TimeInstant::zero()).status ==
            SolveStatus::Optimal)
            ++feasible;
        else
            ++violations;
    }
    // Beta = 1 windows span exactly 80 raw units before clamping.
    io::GeneratorSpec beta1;
    beta1.family = io::GeneratorFamily::BetaTightness;
    beta1.n = 25;
    beta1.beta = 1.0;
    beta1.seed = 7;
    for (int scale : {0, 1}) {
        beta1.scale = scale;
        io::GeneratedInstance gen = io::generate_with_trace(beta1);
        std::int64_t width = 80;
        for (int s = 0; s < scale; ++s) width *= 10;
        for (int v = 1; v <= beta1.n; ++v) {
            auto [lo, hi] = gen.preclamp_windows[static_cast<std::size_t>(v)];
            if (hi - lo != TimeInstant::of(width)) ++violations;
        }
    }
    std::ostringstream d;
    d << "identical seeds give byte-identical files, " << feasible
      << "/200 generated instances feasible, beta=1 windows exactly 80 units pre-clamp" << timed(start);
    report(8, violations == 0, d.str());
}

}  // namespace

int main() {
    criterion1_and_4();
    criterion2();
    criterion3();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0)
        std::cout << "all criteria passed" << std::endl;
    else
        std::cout << failures << " criterion(s) failed" << std::endl;
    return failures == 0 ? 0 : 1;
}

#include "tsptw/bench.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "tsptw/duration.hpp"
#include "tsptw/search.hpp"

namespace tsptw {
namespace bench {

const char* to_string(BenchMode mode) {
    switch (mode) {
        case BenchMode::Makespan: return "makespan";
        case BenchMode::Duration: return "duration";
        case BenchMode::DurationReversed: return "duration-reversed";
    }
    return "?";
}

std::string csv_header() { return "instance,mode,status,objective,time_ms,labels,dominated,pruned"; }

std::string csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.instance << ',' << to_string(r.mode) << ',';
    if (r.status)
        out << tsptw::to_string(*r.status);
    else
        out << "ParseError";
    out << ',';
    if (r.objective) out << format_scaled_time(*r.objective, r.scale);
    out << ',' << r.time_ms << ',' << r.stats.labels_created << ',' << r.stats.labels_dominated
        << ',' << r.stats.labels_pruned;
    return out.str();
}

BenchRecord run_instance(const Instance& inst, BenchMode mode, const Limits& limits) {
    BenchRecord rec;
    rec.instance = inst.name;
    rec.mode = mode;
    rec.scale = inst.scale;
    if (mode == BenchMode::Makespan) {
        SolveOutcome out = search::solve_makespan(inst, TimeInstant::zero(), limits);
        rec.status = out.status;
        rec.objective = out.objective;
        rec.stats = out.stats;
        rec.time_ms = out.elapsed.count();
    } else {
        duration::DurationOutcome out =
            mode == BenchMode::Duration ? duration::solve_duration(inst, limits)
                                        : duration::solve_duration_reversed(inst, limits);
        rec.status = out.status;
        rec.objective = out.duration;
        rec.stats = out.stats;
        rec.makespan_calls = out.makespan_calls;
        rec.time_ms = out.elapsed.count();
    }
    return rec;
}

BenchSummary run_bench(const std::filesystem::path& directory, const BenchConfig& cfg,
                       const std::function<void(const BenchRecord&)>& emit) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(directory))
        for (const auto& entry : std::filesystem::directory_iterator(directory))
            if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    BenchSummary summary;
    double total_ms = 0;
    for (const auto& path : files) {
        BenchRecord rec;
        rec.mode = cfg.mode;
        rec.scale = cfg.scale;
        rec.instance = path.stem().string();
        try {
            Instance inst = io::load_instance(path, cfg.format, cfg.scale);
            rec = run_instance(inst, cfg.mode, cfg.limits);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        ++summary.total;
        if (rec.status && (*rec.status == SolveStatus::Optimal || *rec.status == SolveStatus::Infeasible)) {
            ++summary.solved;
            total_ms += static_cast<double>(rec.time_ms);
            summary.max_ms_solved = std::max(summary.max_ms_solved, rec.time_ms);
        }
        emit(rec);
    }
    if (summary.solved > 0) summary.mean_ms_solved = total_ms / summary.solved;
    return summary;
}

}  // namespace bench
}  // namespace tsptw

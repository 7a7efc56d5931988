#include "tsptw/duration.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "tsptw/model.hpp"
#include "tsptw/preprocess.hpp"
#include "tsptw/search.hpp"

namespace tsptw {
namespace duration {
namespace {

// Applies fn to every neighbor of r under op, stopping early when fn returns
// true (first improvement).  Only customer positions 1..n move.
template <typename Fn>
bool for_each_neighbor(const Route& r, LocalSearchConfig::Op op, Fn&& fn) {
    const int last = static_cast<int>(r.vertices.size()) - 2;  // last customer position
    Route cand = r;
    switch (op) {
        case LocalSearchConfig::Op::Swap:
            for (int i = 1; i <= last; ++i)
                for (int j = i + 1; j <= last; ++j) {
                    cand.vertices = r.vertices;
                    std::swap(cand.vertices[static_cast<std::size_t>(i)],
                              cand.vertices[static_cast<std::size_t>(j)]);
                    if (fn(cand)) return true;
                }
            break;
        case LocalSearchConfig::Op::TwoOpt:
            for (int i = 1; i <= last; ++i)
                for (int j = i + 1; j <= last; ++j) {
                    cand.vertices = r.vertices;
                    std::reverse(cand.vertices.begin() + i, cand.vertices.begin() + j + 1);
                    if (fn(cand)) return true;
                }
            break;
        case LocalSearchConfig::Op::Shift:
            for (int i = 1; i <= last; ++i)
                for (int j = 1; j <= last; ++j) {
                    if (i == j) continue;
                    cand.vertices = r.vertices;
                    int v = cand.vertices[static_cast<std::size_t>(i)];
                    cand.vertices.erase(cand.vertices.begin() + i);
                    cand.vertices.insert(cand.vertices.begin() + j, v);
                    if (fn(cand)) return true;
                }
            break;
    }
    return false;
}

// Generic first-improvement loop: restarts from the first operator after any
// improvement, stops after a full quiet pass over all operators.
template <typename Accept>
Route improve(Route r, const LocalSearchConfig& cfg, Accept&& accept) {
    for (int pass = 0; pass < cfg.max_passes; ++pass) {
        bool improved = false;
        for (LocalSearchConfig::Op op : cfg.operators) {
            improved = for_each_neighbor(r, op, [&](const Route& cand) {
                if (!accept(cand)) return false;
                r = cand;
                return true;
            });
            if (improved) break;
        }
        if (!improved) break;
    }
    return r;
}

struct DurationState {
    DurationOutcome out;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    DurationOutcome finish(SolveStatus status) {
        out.status = status;
        out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        return out;
    }

    void set_incumbent(const Route& r, TimeInstant t_star, TimeInstant delta) {
        out.route = r;
        out.departure = t_star;
        out.duration = delta;
    }
};

}  // namespace

Route ls_min_arrival(const Instance& inst, Route r, TimeInstant p, const LocalSearchConfig& cfg) {
    assert(!cfg.operators.empty());
    TimeInstant cur = arrival_time(inst, r, p);
    return improve(std::move(r), cfg, [&](const Route& cand) {
        TimeInstant arr = arrival_time(inst, cand, p);
        if (arr >= cur) return false;
        cur = arr;
        return true;
    });
}

std::pair<Route, TimeInstant> ls_max_departure(const Instance& inst, Route r, TimeInstant q,
                                               const LocalSearchConfig& cfg) {
    assert(!cfg.operators.empty());
    TimeInstant cur = latest_departure(inst, r, q);
    Route out = improve(std::move(r), cfg, [&](const Route& cand) {
        TimeInstant dep = latest_departure(inst, cand, q);
        if (dep <= cur) return false;
        cur = dep;
        return true;
    });
    return {std::move(out), cur};
}

namespace {

BoundResult last_departure_bound_impl(const Instance& inst, TimeInstant t_star, const Budget& budget,
                                      DurationState* state) {
    Instance rev = reverse(inst);
    preprocess::PreprocessResult prep = preprocess::build(rev);
    SolveOutcome run = search::solve_makespan_preprocessed(rev, prep, TimeInstant::zero(), budget, {},
                                                           inst.horizon - t_star);
    if (state) {
        ++state->out.makespan_calls;
        state->out.stats += run.stats;
    }
    BoundResult res;
    if (run.status == SolveStatus::Optimal) {
        res.value = inst.horizon - *run.objective;
    } else if (run.status == SolveStatus::Infeasible) {
        res.value = t_star;  // no elementary route departs later than t_star
    } else {
        res.value = t_star;
        res.status = run.status;
    }
    return res;
}

}  // namespace

BoundResult last_departure_bound(const Instance& inst, TimeInstant t_star, const Limits& limits) {
    assert(t_star.finite());
    return last_departure_bound_impl(inst, t_star, Budget::start(limits), nullptr);
}

DurationOutcome solve_duration(const Instance& inst, const Limits& limits,
                               const LocalSearchConfig& cfg, bool allow_large_grid) {
    inst.validate();
    if (inst.scale >= 4 && !allow_large_grid)
        throw std::invalid_argument(
            "solve_duration: decimal scale " + std::to_string(inst.scale) +
            " puts 10^" + std::to_string(inst.scale) +
            " departure grid points per raw time unit; pass the large-grid override to proceed");

    DurationState state;
    Budget budget = Budget::start(limits);
    preprocess::PreprocessResult prep = preprocess::build(inst);
    const TimeInstant horizon_ub = inst.horizon + TimeInstant::of(1);

    SolveOutcome first = search::solve_makespan_preprocessed(inst, prep, TimeInstant::zero(), budget,
                                                             {}, horizon_ub);
    ++state.out.makespan_calls;
    state.out.stats += first.stats;
    if (first.status == SolveStatus::Infeasible) return state.finish(SolveStatus::Infeasible);
    if (first.status != SolveStatus::Optimal) {
        if (first.route) {
            auto [delta, dep] = duration_of(inst, *first.route);
            state.set_incumbent(*first.route, dep, delta);
        }
        return state.finish(first.status);
    }

    // Seed the incumbent: push the departure of the makespan-optimal route as
    // late as the arrival value allows.
    TimeInstant q = *first.objective;
    auto [work, t_star] = ls_max_departure(inst, *first.route, q, cfg);
    Route best_route = work;
    TimeInstant best_delta = q - t_star;
    state.set_incumbent(best_route, t_star, best_delta);

    BoundResult bound = last_departure_bound_impl(inst, t_star, budget, &state);
    if (bound.status != SolveStatus::Optimal) return state.finish(bound.status);
    const TimeInstant last_p = bound.value;

    TimeInstant p = t_star + TimeInstant::of(1);
    while (p <= last_p) {
        if (budget.out_of_time()) return state.finish(SolveStatus::TimeLimit);
        ++state.out.windows_scanned;
        work = ls_min_arrival(inst, std::move(work), p, cfg);
        TimeInstant arr = arrival_time(inst, work, p);
        if (arr > q) {
            // Arrivals at or past last_p + best_delta cannot improve the
            // duration for any departure left in the window.
            TimeInstant ub = std::min(last_p + best_delta, horizon_ub);
            SolveOutcome run = search::solve_makespan_preprocessed(inst, prep, p, budget, {}, ub);
            ++state.out.makespan_calls;
            state.out.stats += run.stats;
            if (run.status == SolveStatus::Infeasible) break;
            if (run.status != SolveStatus::Optimal) return state.finish(run.status);
            work = *run.route;
            assert(*run.objective >= q);  // the arrival floor never drops as p grows
            q = *run.objective;
        }
        assert(arrival_time(inst, work, p) == q);
        auto [moved, p_max] = ls_max_departure(inst, std::move(work), q, cfg);
        if (!p_max.finite())
            throw std::logic_error("solve_duration: arrival floor invariant violated");
        work = std::move(moved);
        p = p_max;
        if (best_delta > q - p) {
            best_route = work;
            t_star = p;
            best_delta = q - p;
            state.set_incumbent(best_route, t_star, best_delta);
        }
        p += TimeInstant::of(1);
    }
    return state.finish(SolveStatus::Optimal);
}

DurationOutcome solve_duration_reversed(const Instance& inst, const Limits& limits,
                                        const LocalSearchConfig& cfg, bool allow_large_grid) {
    DurationOutcome out = solve_duration(reverse(inst), limits, cfg, allow_large_grid);
    if (out.route) {
        Route mapped = map_route_from_reverse(inst, *out.route);
        // A schedule departing t* and lasting delta mirrors to one departing
        // T - (t* + delta) with the same duration.
        TimeInstant mapped_departure = inst.horizon - (*out.departure + *out.duration);
        out.route = std::move(mapped);
        out.departure = mapped_departure;
        out.duration = arrival_time(inst, *out.route, mapped_departure) - mapped_departure;
    }
    return out;
}

}  // namespace duration
}  // namespace tsptw

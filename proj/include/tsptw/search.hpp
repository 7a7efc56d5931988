#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "tsptw/instance.hpp"
#include "tsptw/preprocess.hpp"
#include "tsptw/solve_types.hpp"
#include "tsptw/vertex_set.hpp"

namespace tsptw {
namespace search {

// A partial route suffix ending at the end depot, grown backwards by
// prepending vertices.  The four characteristic times are relative to the
// decision call's t0 and ub:
//   latest_departure: largest departure from first_vertex with arrival <= ub
//   earliest_arrival: arrival when departing at max(t0, a(first_vertex))
// plus the arrivals/departures paired with those two extremes.  Walking the
// parent links yields the vertex sequence in route order.
struct Label {
    int first_vertex = 0;
    VertexSet visited;
    TimeInstant latest_departure;
    TimeInstant earliest_arrival;
    TimeInstant arrival_at_latest_departure;
    TimeInstant departure_for_earliest_arrival;
    const Label* parent = nullptr;

    int length() const { return visited.count() - 1; }  // arc count
    Route to_route() const;
};

Label make_root(const Instance& inst, TimeInstant t0, TimeInstant ub);

// Prepends w to the partial route of parent.  Returns nothing when the new
// suffix cannot beat ub or when some vertex outside it can no longer be
// visited before w (unreachable-set test); the unreachable test can be
// bypassed for ablation runs.
std::optional<Label> extend(const Label& parent, int w, const Instance& inst,
                            const preprocess::PreprocessResult& prep, TimeInstant t0, TimeInstant ub,
                            bool use_unreachable = true);

// One priority queue per suffix length, keyed by (earliest_arrival,
// departure_for_earliest_arrival) ascending with FIFO tie-breaking.
class Frontier {
public:
    explicit Frontier(int max_length);
    void push(const Label* label);
    const Label* pop(int length);  // nullptr when that length is empty
    bool empty(int length) const;
    bool any() const { return total_ > 0; }

private:
    struct Item {
        TimeInstant key1, key2;
        std::uint64_t seq;
        const Label* label;
        bool operator>(const Item& o) const {
            if (key1 != o.key1) return key1 > o.key1;
            if (key2 != o.key2) return key2 > o.key2;
            return seq > o.seq;
        }
    };
    std::vector<std::priority_queue<Item, std::vector<Item>, std::greater<>>> queues_;
    std::uint64_t next_seq_ = 0;
    std::size_t total_ = 0;
};

// Per first-vertex map from visited set to the best (latest departure,
// arrival at that departure) seen among processed labels.
class BestTable {
public:
    struct Entry {
        TimeInstant best_departure;
        TimeInstant best_arrival;
    };

    explicit BestTable(int vertex_count) : by_vertex_(static_cast<std::size_t>(vertex_count)) {}

    const Entry* find(int v, const VertexSet& visited) const;
    void store(int v, const VertexSet& visited, Entry e);

private:
    std::vector<std::unordered_map<VertexSet, Entry, VertexSetHash>> by_vertex_;
};

enum class DominanceDecision { Process, Discard };

// Discards a popped label that is ub-dominated by an already processed one
// over the same (visited set, first vertex); otherwise records its times.
DominanceDecision dominance_filter(BestTable& best, const Label& label, TimeInstant ub);

struct SearchOptions {
    bool use_dominance = true;    // ablation hook; disabling must not change objectives
    bool use_unreachable = true;  // ablation hook for the unreachable-set test
};

enum class DecisionStatus { Found, Exhausted, TimeLimit, MemoryLimit };

struct DecisionResult {
    DecisionStatus status = DecisionStatus::Exhausted;
    std::optional<Route> route;
};

// Backward best-first decision search: returns some elementary complete
// route with arrival < ub departing at t0, proves none exists, or stops on a
// budget.  inst must be the instance prep was built on.
DecisionResult decision_search(const Instance& inst, const preprocess::PreprocessResult& prep,
                               TimeInstant t0, TimeInstant ub, const Budget& budget,
                               SearchStats& stats, const SearchOptions& opts = {});

// Exact makespan solve: preprocesses once, then shrinks ub over repeated
// decision searches until none remains.  Anytime: on a budget stop the best
// route found so far is returned with the matching status.
SolveOutcome solve_makespan(const Instance& inst, TimeInstant t0, const Limits& limits = {},
                            const SearchOptions& opts = {},
                            std::optional<TimeInstant> initial_ub = std::nullopt);

// Same, for callers that already hold a preprocessing result and a running
// budget (the duration solver reuses both across many calls).
SolveOutcome solve_makespan_preprocessed(const Instance& original,
                                         const preprocess::PreprocessResult& prep, TimeInstant t0,
                                         const Budget& budget, const SearchOptions& opts = {},
                                         std::optional<TimeInstant> initial_ub = std::nullopt);

}  // namespace search
}  // namespace tsptw

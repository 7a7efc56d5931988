#include "tsptw/search.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

#include "tsptw/model.hpp"

namespace tsptw {
namespace search {
namespace {

// Arena cost estimate per label: the record itself, the bitset words and the
// frontier/table bookkeeping it drags along.
std::uint64_t label_bytes(int vertex_count) {
    return sizeof(Label) + 8u * ((static_cast<std::uint64_t>(vertex_count) + 63) / 64) + 64;
}

}  // namespace

Route Label::to_route() const {
    Route r;
    for (const Label* l = this; l != nullptr; l = l->parent) r.vertices.push_back(l->first_vertex);
    return r;
}

Label make_root(const Instance& inst, TimeInstant t0, TimeInstant ub) {
    const int end = inst.end_depot();
    Label root;
    root.first_vertex = end;
    root.visited = VertexSet(inst.vertex_count());
    root.visited.insert(end);
    root.latest_departure = std::min(std::min(ub, inst.close(end)), inst.horizon);
    if (root.latest_departure < inst.open(end)) root.latest_departure = TimeInstant::minus_inf();
    TimeInstant start = std::max(t0, inst.open(end));
    root.earliest_arrival = start <= inst.close(end) ? start : TimeInstant::plus_inf();
    root.arrival_at_latest_departure = root.latest_departure.finite()
                                           ? std::max(root.latest_departure, inst.open(end))
                                           : TimeInstant::minus_inf();
    root.departure_for_earliest_arrival = root.earliest_arrival;
    root.parent = nullptr;
    return root;
}

std::optional<Label> extend(const Label& parent, int w, const Instance& inst,
                            const preprocess::PreprocessResult& prep, TimeInstant t0, TimeInstant ub,
                            bool use_unreachable) {
    assert(!parent.visited.contains(w) && w <= inst.n);
    assert(parent.latest_departure.finite());

    // Latest departure with arrival <= ub, incrementally: leaving w at time s
    // keeps the suffix within ub iff s <= b(w) and s + tau(w, first) stays
    // within the parent's latest departure.  When that bound falls below the
    // earliest useful departure the extension is hopeless, which settles the
    // window checks and all arrivals past ub in O(1).
    const TimeInstant start = std::max(t0, inst.open(w));
    const TimeInstant latest_departure =
        std::min(inst.close(w), parent.latest_departure - inst.tau(w, parent.first_vertex));
    if (latest_departure < start) return std::nullopt;

    Label out;
    out.first_vertex = w;
    out.visited = parent.visited;
    out.visited.insert(w);
    out.latest_departure = latest_departure;
    out.parent = &parent;

    if (use_unreachable && !out.visited.contains_all(prep.unreachable.query(w, latest_departure)))
        return std::nullopt;

    // Departing at any s <= latest_departure is feasible (earlier departures
    // only shift visits towards the window openings), so one forward walk
    // yields both arrival extremes without deadline checks.
    TimeInstant early = start;
    TimeInstant late = latest_departure;
    int prev = w;
    for (const Label* l = &parent; l != nullptr; l = l->parent) {
        const TimeInstant tau = inst.tau(prev, l->first_vertex);
        const TimeInstant open = inst.open(l->first_vertex);
        early = std::max(early + tau, open);
        late = std::max(late + tau, open);
        prev = l->first_vertex;
    }
    if (early >= ub) return std::nullopt;  // departing at the earliest still arrives at ub
    out.earliest_arrival = early;
    out.arrival_at_latest_departure = late;
    assert(late <= ub);

    // Backward pass over the materialized sequence for the latest departure
    // that still achieves the earliest arrival.
    thread_local std::vector<int> seq;
    seq.clear();
    seq.push_back(w);
    for (const Label* l = &parent; l != nullptr; l = l->parent) seq.push_back(l->first_vertex);
    TimeInstant lat = early;
    for (std::size_t i = seq.size() - 1; i > 0; --i)
        lat = std::min(lat - inst.tau(seq[i - 1], seq[i]), inst.close(seq[i - 1]));
    out.departure_for_earliest_arrival = std::min(lat, inst.horizon);
    assert(out.departure_for_earliest_arrival >= inst.open(w));

    return out;
}

Frontier::Frontier(int max_length) : queues_(static_cast<std::size_t>(max_length) + 1) {}

void Frontier::push(const Label* label) {
    queues_[static_cast<std::size_t>(label->length())].push(
        Item{label->earliest_arrival, label->departure_for_earliest_arrival, next_seq_++, label});
    ++total_;
}

const Label* Frontier::pop(int length) {
    auto& q = queues_[static_cast<std::size_t>(length)];
    if (q.empty()) return nullptr;
    const Label* label = q.top().label;
    q.pop();
    --total_;
    return label;
}

bool Frontier::empty(int length) const { return queues_[static_cast<std::size_t>(length)].empty(); }

const BestTable::Entry* BestTable::find(int v, const VertexSet& visited) const {
    const auto& map = by_vertex_[static_cast<std::size_t>(v)];
    auto it = map.find(visited);
    return it == map.end() ? nullptr : &it->second;
}

void BestTable::store(int v, const VertexSet& visited, Entry e) {
    by_vertex_[static_cast<std::size_t>(v)][visited] = e;
}

DominanceDecision dominance_filter(BestTable& best, const Label& label, TimeInstant ub) {
    if (const BestTable::Entry* e = best.find(label.first_vertex, label.visited)) {
        if (label.latest_departure < e->best_departure) return DominanceDecision::Discard;
        if (label.latest_departure == e->best_departure) {
            if (e->best_arrival < ub) return DominanceDecision::Discard;
            if (label.arrival_at_latest_departure == ub) return DominanceDecision::Discard;
        }
    }
    best.store(label.first_vertex, label.visited,
               {label.latest_departure, label.arrival_at_latest_departure});
    return DominanceDecision::Process;
}

DecisionResult decision_search(const Instance& inst, const preprocess::PreprocessResult& prep,
                               TimeInstant t0, TimeInstant ub, const Budget& budget,
                               SearchStats& stats, const SearchOptions& opts) {
    if (!prep.feasible || prep.unreachable.empty())
        throw std::invalid_argument("decision_search: needs a feasible preprocessing result");
    const int n = inst.n;
    const std::uint64_t bytes_each = label_bytes(inst.vertex_count());
    const std::uint64_t max_labels = std::max<std::uint64_t>(budget.memory_limit_bytes / bytes_each, 2);

    std::deque<Label> arena;
    Frontier frontier(n + 1);
    BestTable best(inst.vertex_count());

    arena.push_back(make_root(inst, t0, ub));
    ++stats.labels_created;
    frontier.push(&arena.back());

    while (frontier.any()) {
        if (budget.out_of_time()) return {DecisionStatus::TimeLimit, std::nullopt};
        for (int k = 0; k <= n + 1; ++k) {
            const Label* label = frontier.pop(k);
            if (!label) continue;
            if (k == n + 1) return {DecisionStatus::Found, label->to_route()};
            if (opts.use_dominance &&
                dominance_filter(best, *label, ub) == DominanceDecision::Discard) {
                ++stats.labels_dominated;
                continue;
            }
            for (int w = 0; w <= n; ++w) {
                // The start depot is only prepended once every customer is
                // on the suffix, so any completed label is a proper route.
                if (w == 0 && k < n) continue;
                if (label->visited.contains(w)) continue;
                std::optional<Label> child = extend(*label, w, inst, prep, t0, ub, opts.use_unreachable);
                if (!child) {
                    ++stats.labels_pruned;
                    continue;
                }
                if (static_cast<std::uint64_t>(arena.size()) + 1 > max_labels)
                    return {DecisionStatus::MemoryLimit, std::nullopt};
                arena.push_back(std::move(*child));
                ++stats.labels_created;
                frontier.push(&arena.back());
            }
        }
    }
    return {DecisionStatus::Exhausted, std::nullopt};
}

SolveOutcome solve_makespan_preprocessed(const Instance& original,
                                         const preprocess::PreprocessResult& prep, TimeInstant t0,
                                         const Budget& budget, const SearchOptions& opts,
                                         std::optional<TimeInstant> initial_ub) {
    SolveOutcome out;
    if (!prep.feasible) {
        out.status = SolveStatus::Infeasible;
        return out;
    }
    TimeInstant ub = initial_ub.value_or(original.horizon + TimeInstant::of(1));
    while (true) {
        DecisionResult res = decision_search(prep.tightened, prep, t0, ub, budget, out.stats, opts);
        if (res.status == DecisionStatus::Found) {
            // Certify and shrink on the original network; tightening keeps
            // arrival profiles of feasible complete routes intact.
            TimeInstant arrival = arrival_time(original, *res.route, t0);
            assert(arrival < ub);
            out.route = std::move(res.route);
            out.objective = arrival;
            ub = arrival;
            continue;
        }
        if (res.status == DecisionStatus::Exhausted)
            out.status = out.route ? SolveStatus::Optimal : SolveStatus::Infeasible;
        else if (res.status == DecisionStatus::TimeLimit)
            out.status = SolveStatus::TimeLimit;
        else
            out.status = SolveStatus::MemoryLimit;
        return out;
    }
}

SolveOutcome solve_makespan(const Instance& inst, TimeInstant t0, const Limits& limits,
                            const SearchOptions& opts, std::optional<TimeInstant> initial_ub) {
    const auto started = std::chrono::steady_clock::now();
    inst.validate();
    Budget budget = Budget::start(limits);
    preprocess::PreprocessResult prep = preprocess::build(inst);
    SolveOutcome out = solve_makespan_preprocessed(inst, prep, t0, budget, opts, initial_ub);
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    return out;
}

}  // namespace search
}  // namespace tsptw

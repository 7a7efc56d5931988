#include "tsptw/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tsptw {
namespace oracle {
namespace {

constexpr std::int64_t kInf = INT64_MAX;

// Plain re-derivation of the earliest-arrival recurrence on raw units.
// Returns kInf when some visit misses its deadline or t < a(first).
std::int64_t seq_arrival(const Instance& inst, const std::vector<int>& seq, std::int64_t t) {
    if (t < inst.open(seq.front()).units()) return kInf;
    std::int64_t visit = t;
    if (visit > inst.close(seq.front()).units()) return kInf;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        visit = std::max(visit + inst.tau(seq[i - 1], seq[i]).units(), inst.open(seq[i]).units());
        if (visit > inst.close(seq[i]).units()) return kInf;
    }
    return visit;
}

std::vector<int> complete_sequence(const Instance& inst, const std::vector<int>& order) {
    std::vector<int> seq;
    seq.reserve(order.size() + 2);
    seq.push_back(inst.start_depot());
    seq.insert(seq.end(), order.begin(), order.end());
    seq.push_back(inst.end_depot());
    return seq;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

OracleResult enumerate_makespan(const Instance& inst, TimeInstant t0) {
    require(inst.n <= 10, "enumerate_makespan: instance too large (n > 10)");
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    std::iota(order.begin(), order.end(), 1);
    OracleResult best;
    do {
        std::vector<int> seq = complete_sequence(inst, order);
        std::int64_t arr = seq_arrival(inst, seq, t0.units());
        if (arr < best.objective.units()) {
            best.objective = TimeInstant::of(arr);
            best.route = Route(std::move(seq));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!best.objective.finite()) best.objective = TimeInstant::plus_inf();
    return best;
}

OracleResult heldkarp_makespan(const Instance& inst, TimeInstant t0) {
    require(inst.n <= 20, "heldkarp_makespan: instance too large (n > 20)");
    const int n = inst.n;
    const std::int64_t dep0 = std::max(t0.units(), inst.open(0).units());
    OracleResult best;
    if (dep0 > inst.close(0).units()) return best;
    if (n == 0) {
        std::vector<int> seq{0, 1};
        std::int64_t arr = seq_arrival(inst, seq, t0.units());
        if (arr < kInf) {
            best.objective = TimeInstant::of(arr);
            best.route = Route(std::move(seq));
        }
        return best;
    }

    // state[mask][j]: earliest visit time at customer j+1 after visiting
    // exactly the customers in mask (bit j set).  Earliest arrival dominates
    // every later one, so one value per state suffices.
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::int64_t> dp(states * static_cast<std::size_t>(n), kInf);
    std::vector<std::int16_t> parent(states * static_cast<std::size_t>(n), -1);
    auto at = [n](std::size_t mask, int j) { return mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };

    for (int j = 0; j < n; ++j) {
        std::int64_t visit = std::max(dep0 + inst.tau(0, j + 1).units(), inst.open(j + 1).units());
        if (visit <= inst.close(j + 1).units()) dp[at(std::size_t{1} << j, j)] = visit;
    }
    for (std::size_t mask = 1; mask < states; ++mask) {
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            std::int64_t cur = dp[at(mask, j)];
            if (cur == kInf) continue;
            for (int k = 0; k < n; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                std::int64_t visit = std::max(cur + inst.tau(j + 1, k + 1).units(), inst.open(k + 1).units());
                if (visit > inst.close(k + 1).units()) continue;
                std::size_t next = mask | (std::size_t{1} << k);
                if (visit < dp[at(next, k)]) {
                    dp[at(next, k)] = visit;
                    parent[at(next, k)] = static_cast<std::int16_t>(j);
                }
            }
        }
    }

    const std::size_t full = states - 1;
    int best_last = -1;
    for (int j = 0; j < n; ++j) {
        std::int64_t cur = dp[at(full, j)];
        if (cur == kInf) continue;
        std::int64_t arr = std::max(cur + inst.tau(j + 1, inst.end_depot()).units(),
                                    inst.open(inst.end_depot()).units());
        if (arr > inst.close(inst.end_depot()).units()) continue;
        if (arr < best.objective.units()) {
            best.objective = TimeInstant::of(arr);
            best_last = j;
        }
    }
    if (best_last >= 0) {
        std::vector<int> order;
        std::size_t mask = full;
        int j = best_last;
        while (j >= 0) {
            order.push_back(j + 1);
            int prev = parent[at(mask, j)];
            mask &= ~(std::size_t{1} << j);
            j = prev;
        }
        std::reverse(order.begin(), order.end());
        best.route = Route(complete_sequence(inst, order));
    }
    return best;
}

DurationOracleResult oracle_duration(const Instance& inst) {
    require(inst.n <= 8, "oracle_duration: instance too large (n > 8)");
    require(inst.horizon.units() <= 100000, "oracle_duration: horizon too large (> 1e5 units)");
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    std::iota(order.begin(), order.end(), 1);
    DurationOracleResult best;
    do {
        std::vector<int> seq = complete_sequence(inst, order);
        std::int64_t route_best = kInf, route_dep = -1;
        for (std::int64_t t = 0; t <= inst.horizon.units(); ++t) {
            std::int64_t arr = seq_arrival(inst, seq, t);
            if (arr == kInf) break;  // arrivals only grow with t, so later departures stay infeasible
            std::int64_t dur = arr - t;
            if (dur <= route_best) {  // keep the largest minimizer for this order
                route_best = dur;
                route_dep = t;
            }
        }
        if (route_best < best.objective.units()) {
            best.objective = TimeInstant::of(route_best);
            best.departure = TimeInstant::of(route_dep);
            best.route = Route(std::move(seq));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::vector<Route> enumerate_feasible_routes(const Instance& inst) {
    require(inst.n <= 7, "enumerate_feasible_routes: instance too large (n > 7)");
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<Route> out;
    do {
        std::vector<int> seq = complete_sequence(inst, order);
        if (seq_arrival(inst, seq, 0) < kInf) out.push_back(Route(std::move(seq)));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace oracle
}  // namespace tsptw

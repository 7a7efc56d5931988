#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tsptw/model.hpp"

using namespace tsptw;
using testsupport::e2;
using testsupport::scan_latest_departure;

namespace {

Route route(std::initializer_list<int> v) { return Route(std::vector<int>(v)); }

std::vector<std::int64_t> units_of(const std::vector<TimeInstant>& ts) {
    std::vector<std::int64_t> out;
    for (TimeInstant t : ts) out.push_back(t.units());
    return out;
}

}  // namespace

TEST_CASE("arrival profile follows the recurrence") {
    Instance inst = e2();
    CHECK(units_of(arrival_profile(inst, route({0, 1, 2, 3}), TimeInstant::zero())) ==
          std::vector<std::int64_t>{0, 3, 5, 7});
    CHECK(units_of(arrival_profile(inst, route({0, 2, 1, 3}), TimeInstant::zero())) ==
          std::vector<std::int64_t>{0, 5, 7, 12});
    // Base case: a one-vertex route is just the clamped departure.
    Instance depot_only = testsupport::make_instance(0, 10, {{0, 1}, {1, 0}}, {{0, 10}, {0, 10}});
    CHECK(units_of(arrival_profile(depot_only, route({0}), TimeInstant::zero())) ==
          std::vector<std::int64_t>{0});
}

TEST_CASE("arrival time reports infeasibility as plus_inf") {
    Instance inst = e2();
    CHECK(arrival_time(inst, route({0, 1, 2, 3}), TimeInstant::zero()) == TimeInstant::of(7));
    CHECK(arrival_time(inst, route({0, 2, 1, 3}), TimeInstant::zero()) == TimeInstant::plus_inf());
    for (std::int64_t t = 3; t <= 6; ++t)  // single vertex inside its window
        CHECK(arrival_time(inst, route({1}), TimeInstant::of(t)) == TimeInstant::of(t));
    CHECK(arrival_time(inst, route({1}), TimeInstant::of(2)) == TimeInstant::plus_inf());
}

TEST_CASE("latest departure hits the target arrival exactly") {
    Instance inst = e2();
    Route r = route({0, 1, 2, 3});
    CHECK(scan_latest_departure(inst, r.vertices, 7) == 1);
    CHECK(latest_departure(inst, r, TimeInstant::of(7)) == TimeInstant::of(1));
    CHECK(testsupport::scan_latest_departure(inst, r.vertices, 6) == INT64_MIN);
    CHECK(latest_departure(inst, r, TimeInstant::of(6)) == TimeInstant::minus_inf());
    CHECK(latest_departure(inst, route({1}), TimeInstant::of(5)) == TimeInstant::of(5));
    // Out-of-range targets fail loudly instead of clamping.
    CHECK(latest_departure(inst, r, TimeInstant::of(21)) == TimeInstant::minus_inf());
    CHECK(latest_departure(inst, r, TimeInstant::of(-1)) == TimeInstant::minus_inf());
}

TEST_CASE("latest departure within a bound") {
    Instance inst = e2();
    Route r = route({0, 1, 2, 3});
    // Largest departure arriving at most t, even when t is past the horizon.
    CHECK(latest_departure_within(inst, r, TimeInstant::of(21)) == TimeInstant::of(4));
    CHECK(latest_departure_within(inst, r, TimeInstant::of(8)) == TimeInstant::of(2));
    CHECK(latest_departure_within(inst, r, TimeInstant::of(6)) == TimeInstant::minus_inf());
}

TEST_CASE("duration and its largest minimizer") {
    Instance inst = e2();
    auto [delta, dep] = duration_of(inst, route({0, 1, 2, 3}));
    CHECK(delta == TimeInstant::of(6));
    CHECK(dep == TimeInstant::of(4));
    CHECK(testsupport::scan_duration(inst, {0, 1, 2, 3}) == std::pair<std::int64_t, std::int64_t>{6, 4});

    auto [bad_delta, bad_dep] = duration_of(inst, route({0, 2, 1, 3}));
    CHECK(bad_delta == TimeInstant::plus_inf());
    CHECK(bad_dep == TimeInstant::minus_inf());

    auto [v_delta, v_dep] = duration_of(inst, route({1}));
    CHECK(v_delta == TimeInstant::zero());
    CHECK(v_dep == inst.close(1));
}

TEST_CASE("reverse is an involution with mirrored windows") {
    Instance inst = e2();
    Instance rev = reverse(inst);
    CHECK(reverse(rev) == inst);
    CHECK(rev.open(1) == TimeInstant::of(14));
    CHECK(rev.close(1) == TimeInstant::of(17));
    CHECK(rev.open(0) == TimeInstant::zero());
    CHECK(rev.close(0) == inst.horizon);

    // The mirrored route of 0,1,2,3 departs T - arrival and stays feasible;
    // its earliest-arrival profile is 13,15,17,19.
    Route mirrored = map_route_from_reverse(inst, route({0, 1, 2, 3}));
    CHECK(mirrored == route({0, 2, 1, 3}));  // reverse(inst) coordinates
    CHECK(units_of(arrival_profile(rev, mirrored, TimeInstant::of(13))) ==
          std::vector<std::int64_t>{13, 15, 17, 19});
    CHECK(arrival_time(rev, mirrored, TimeInstant::of(13)).finite());
    CHECK(map_route_from_reverse(rev, mirrored) == route({0, 1, 2, 3}));
}

TEST_CASE("model properties on random instances") {
    SplitMix64 rng(20240817);
    int feasible_seen = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + static_cast<int>(rng.next_below(4));
        Instance inst = testsupport::random_instance(rng, n, 12, 60);
        Instance rev = reverse(inst);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        do {
            Route r(testsupport::complete_seq(inst, order));
            // Monotonicity: later departures never arrive earlier.
            TimeInstant prev = arrival_time(inst, r, TimeInstant::zero());
            for (std::int64_t t = 1; t <= inst.horizon.units(); t += 7) {
                TimeInstant cur = arrival_time(inst, r, TimeInstant::of(t));
                CHECK(cur >= prev);
                prev = cur;
            }
            // Inversion: a finite arrival is reproduced at its latest departure.
            for (std::int64_t t = 0; t <= inst.horizon.units(); t += 5) {
                TimeInstant u = arrival_time(inst, r, TimeInstant::of(t));
                if (!u.finite()) continue;
                TimeInstant back = latest_departure(inst, r, u);
                CHECK(back >= TimeInstant::of(t));
                CHECK(arrival_time(inst, r, back) == u);
            }
            // Duration agrees with the full scan.
            auto [delta, dep] = duration_of(inst, r);
            auto [scan_delta, scan_dep] = testsupport::scan_duration(inst, r.vertices);
            if (delta.finite()) {
                ++feasible_seen;
                CHECK(delta.units() == scan_delta);
                CHECK(dep.units() == scan_dep);
            } else {
                CHECK(scan_delta == INT64_MAX);
            }
            // Reverse duality: feasible at t arriving u iff the mirrored
            // route is feasible at T - u and reaches T - t.
            Route mirrored = map_route_from_reverse(inst, r);
            for (std::int64_t t = 0; t <= inst.horizon.units(); t += 5) {
                TimeInstant u = arrival_time(inst, r, TimeInstant::of(t));
                if (u.finite()) {
                    TimeInstant mdep = inst.horizon - u;
                    TimeInstant marr = arrival_time(rev, mirrored, mdep);
                    CHECK(marr.finite());
                    CHECK(marr <= inst.horizon - TimeInstant::of(t));
                } else {
                    // No schedule departs at or after t, so no mirrored
                    // schedule arrives by T - t.
                    CHECK(arrival_time(rev, mirrored, TimeInstant::zero()) >
                          inst.horizon - TimeInstant::of(t));
                }
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    CHECK(feasible_seen > 50);  // the family must exercise the feasible side
}

#pragma once

#include <string>
#include <vector>

#include "tsptw/time.hpp"

namespace tsptw {

// A transport network: complete digraph on vertices 0..n+1 where 0 is the
// start depot, n+1 the end depot and 1..n the customers.  Immutable after
// construction; evaluation helpers are free functions in model.hpp.
struct Instance {
    int n = 0;                                     // customer count
    TimeInstant horizon;                           // T; depot windows are [0, T]
    std::vector<std::vector<TimeInstant>> travel;  // (n+2)x(n+2); diagonal unused
    std::vector<TimeInstant> window_open;          // a(v)
    std::vector<TimeInstant> window_close;         // b(v)
    int scale = 0;                                 // decimal exponent d of the file units
    std::string name;

    int vertex_count() const { return n + 2; }
    int start_depot() const { return 0; }
    int end_depot() const { return n + 1; }

    TimeInstant open(int v) const { return window_open[static_cast<std::size_t>(v)]; }
    TimeInstant close(int v) const { return window_close[static_cast<std::size_t>(v)]; }
    TimeInstant tau(int v, int w) const {
        return travel[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
    }

    // Throws std::invalid_argument when a structural invariant is violated
    // (sizes, empty or out-of-horizon windows, negative or infinite times).
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// A sequence of vertices.  A complete route starts at the start depot and
// ends at the end depot; an elementary one repeats no vertex.
struct Route {
    std::vector<int> vertices;

    Route() = default;
    explicit Route(std::vector<int> v) : vertices(std::move(v)) {}

    int length() const { return static_cast<int>(vertices.size()) - 1; }  // arc count
    bool elementary() const;
    bool complete(const Instance& inst) const;

    friend bool operator==(const Route&, const Route&) = default;
    friend auto operator<=>(const Route&, const Route&) = default;
};

std::string to_string(const Route& r);

}  // namespace tsptw

#include "tsptw/instance.hpp"

#include <stdexcept>
#include <unordered_set>

namespace tsptw {

void Instance::validate() const {
    auto fail = [this](const std::string& what) {
        throw std::invalid_argument("instance '" + name + "': " + what);
    };
    if (n < 0) fail("negative customer count");
    if (!horizon.finite() || horizon < TimeInstant::zero()) fail("horizon must be a finite nonnegative time");
    const std::size_t m = static_cast<std::size_t>(vertex_count());
    if (window_open.size() != m || window_close.size() != m) fail("window arrays have wrong length");
    if (travel.size() != m) fail("travel matrix has wrong row count");
    for (std::size_t v = 0; v < m; ++v) {
        if (travel[v].size() != m) fail("travel matrix has wrong column count");
        for (std::size_t w = 0; w < m; ++w) {
            if (v == w) continue;  // diagonal unused
            if (!travel[v][w].finite() || travel[v][w] < TimeInstant::zero())
                fail("travel times must be finite and nonnegative");
        }
        if (!window_open[v].finite() || !window_close[v].finite()) fail("windows must be finite");
        if (window_open[v] > window_close[v]) fail("empty window at vertex " + std::to_string(v));
        if (window_open[v] < TimeInstant::zero() || window_close[v] > horizon)
            fail("window at vertex " + std::to_string(v) + " leaves [0, T]");
    }
    if (window_open[0] != TimeInstant::zero() || window_open[m - 1] != TimeInstant::zero() ||
        window_close[0] != horizon || window_close[m - 1] != horizon)
        fail("depot windows must equal [0, T]");
}

bool Route::elementary() const {
    std::unordered_set<int> seen;
    for (int v : vertices)
        if (!seen.insert(v).second) return false;
    return true;
}

bool Route::complete(const Instance& inst) const {
    return !vertices.empty() && vertices.front() == inst.start_depot() &&
           vertices.back() == inst.end_depot();
}

std::string to_string(const Route& r) {
    std::string out = "<";
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.vertices[i]);
    }
    out += '>';
    return out;
}

}  // namespace tsptw

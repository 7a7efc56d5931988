#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsptw/instance.hpp"
#include "tsptw/time.hpp"
#include "tsptw/vertex_set.hpp"

namespace tsptw {
namespace preprocess {

using TimeMatrix = std::vector<std::vector<TimeInstant>>;

// eat[w][v]: earliest arrival at v over feasible partial routes starting at w
// departing a(w); plus_inf when unreachable.  ldt[w][v]: latest departure
// from w that still reaches v by b(v); minus_inf when unreachable.
struct BoundMatrices {
    TimeMatrix eat;
    TimeMatrix ldt;
};

// before[v] holds {w : v must precede w in every feasible route}.
struct PrecedenceRelation {
    std::vector<VertexSet> before;

    bool precedes(int v, int w) const { return before[static_cast<std::size_t>(v)].contains(w); }
};

// Step function t -> U(v, t): vertices that cannot be visited before v in a
// feasible route that visits v at or before t.  Monotone nonincreasing in t;
// stored as at most n+2 change points per vertex.
class UnreachableFunction {
public:
    struct Entry {
        TimeInstant threshold;
        VertexSet unreachable;
    };

    UnreachableFunction() = default;
    explicit UnreachableFunction(std::vector<std::vector<Entry>> steps) : steps_(std::move(steps)) {}

    // Set for the largest threshold <= t (binary search, O(log n) + O(n) use).
    const VertexSet& query(int v, TimeInstant t) const;

    const std::vector<std::vector<Entry>>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

private:
    std::vector<std::vector<Entry>> steps_;
};

struct PreprocessResult {
    Instance tightened;
    BoundMatrices bounds;
    PrecedenceRelation precedence;
    UnreachableFunction unreachable;
    bool feasible = true;
    int iterations = 0;
};

TimeMatrix compute_eat(const Instance& inst);
TimeMatrix compute_ldt(const Instance& inst);
PrecedenceRelation compute_precedence(const BoundMatrices& bounds);

// One round of window updates from the precedence pairs (customers only;
// depot windows stay pinned at [0, T]).  The returned instance may carry an
// empty window, which the fixpoint driver reports as infeasible.
std::pair<Instance, bool> tighten_windows(const Instance& inst, const PrecedenceRelation& prec,
                                          const BoundMatrices& bounds);

// Fixpoint driver: {EAT/LDT -> precedence -> tighten} until stable, then
// materializes the unreachable function.  Mutual precedence between two
// customers or an emptied window stops early with feasible = false.
PreprocessResult build(const Instance& inst);

// Text dump of tightened windows, precedence pairs and U change points.
std::string dump_diagnostics(const PreprocessResult& prep);

}  // namespace preprocess
}  // namespace tsptw

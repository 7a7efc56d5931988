#include "tsptw/preprocess.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "tsptw/model.hpp"

namespace tsptw {
namespace preprocess {
namespace {

// Dense earliest-arrival search from source w departing at a(w).  Earliest
// arrival with waiting is monotone under extension, so settled vertices never
// improve and revisits cannot help; the relaxation over non-elementary
// partial routes is exactly the EAT bound.
void earliest_arrivals_from(const Instance& inst, int w, std::vector<TimeInstant>& dist) {
    const int m = inst.vertex_count();
    dist.assign(static_cast<std::size_t>(m), TimeInstant::plus_inf());
    std::vector<bool> settled(static_cast<std::size_t>(m), false);
    dist[static_cast<std::size_t>(w)] = inst.open(w);
    for (int round = 0; round < m; ++round) {
        int v = -1;
        for (int u = 0; u < m; ++u)
            if (!settled[static_cast<std::size_t>(u)] &&
                (v < 0 || dist[static_cast<std::size_t>(u)] < dist[static_cast<std::size_t>(v)]))
                v = u;
        if (v < 0 || !dist[static_cast<std::size_t>(v)].finite()) break;
        settled[static_cast<std::size_t>(v)] = true;
        for (int u = 0; u < m; ++u) {
            if (settled[static_cast<std::size_t>(u)] || u == v) continue;
            TimeInstant visit = std::max(dist[static_cast<std::size_t>(v)] + inst.tau(v, u), inst.open(u));
            if (visit <= inst.close(u) && visit < dist[static_cast<std::size_t>(u)])
                dist[static_cast<std::size_t>(u)] = visit;
        }
    }
}

bool window_empty(const Instance& inst, int v) { return inst.open(v) > inst.close(v); }

}  // namespace

const VertexSet& UnreachableFunction::query(int v, TimeInstant t) const {
    const auto& list = steps_[static_cast<std::size_t>(v)];
    // Last entry with threshold <= t; the first entry has threshold -inf.
    std::size_t lo = 0, hi = list.size();
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (list[mid].threshold <= t)
            lo = mid;
        else
            hi = mid;
    }
    return list[lo].unreachable;
}

TimeMatrix compute_eat(const Instance& inst) {
    const int m = inst.vertex_count();
    TimeMatrix eat(static_cast<std::size_t>(m));
    for (int w = 0; w < m; ++w) earliest_arrivals_from(inst, w, eat[static_cast<std::size_t>(w)]);
    return eat;
}

TimeMatrix compute_ldt(const Instance& inst) {
    // Latest departures mirror earliest arrivals on the reverse network:
    // LDT(w, v) = T - EAT_rev(rho(v), rho(w)) with rho swapping the depots.
    const int m = inst.vertex_count();
    Instance rev = reverse(inst);
    TimeMatrix eat_rev = compute_eat(rev);
    auto rho = [m](int v) { return v == 0 ? m - 1 : (v == m - 1 ? 0 : v); };
    TimeMatrix ldt(static_cast<std::size_t>(m), std::vector<TimeInstant>(static_cast<std::size_t>(m)));
    for (int w = 0; w < m; ++w)
        for (int v = 0; v < m; ++v) {
            TimeInstant e = eat_rev[static_cast<std::size_t>(rho(v))][static_cast<std::size_t>(rho(w))];
            ldt[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] =
                e.is_plus_inf() ? TimeInstant::minus_inf() : inst.horizon - e;
        }
    return ldt;
}

PrecedenceRelation compute_precedence(const BoundMatrices& bounds) {
    const int m = static_cast<int>(bounds.eat.size());
    PrecedenceRelation prec;
    prec.before.assign(static_cast<std::size_t>(m), VertexSet(m));
    const auto& eat = bounds.eat;
    const auto& ldt = bounds.ldt;
    for (int v = 0; v < m; ++v) {
        for (int w = 0; w < m; ++w) {
            if (v == w) continue;
            bool holds = eat[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)].is_plus_inf();
            for (int z = 0; !holds && z < m; ++z) {
                if (z == v || z == w) continue;
                holds = eat[static_cast<std::size_t>(z)][static_cast<std::size_t>(w)] >
                            ldt[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] &&
                        eat[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] >
                            ldt[static_cast<std::size_t>(v)][static_cast<std::size_t>(z)] &&
                        eat[static_cast<std::size_t>(w)][static_cast<std::size_t>(z)] >
                            ldt[static_cast<std::size_t>(z)][static_cast<std::size_t>(v)];
            }
            if (holds) prec.before[static_cast<std::size_t>(v)].insert(w);
        }
    }
    return prec;
}

std::pair<Instance, bool> tighten_windows(const Instance& inst, const PrecedenceRelation& prec,
                                          const BoundMatrices& bounds) {
    Instance out = inst;
    bool changed = false;
    const TimeInstant beyond = inst.horizon + TimeInstant::of(1);
    for (int v = 1; v <= inst.n; ++v) {
        for (int w = 1; w <= inst.n; ++w) {
            if (v == w || !prec.precedes(v, w)) continue;
            TimeInstant eat_vw = bounds.eat[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            TimeInstant ldt_vw = bounds.ldt[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            // Cap sentinels so an unreachable pair leaves a finite, visibly
            // empty window for the driver instead of an infinity.
            TimeInstant lo = std::min(eat_vw, beyond);
            TimeInstant hi = std::max(ldt_vw, TimeInstant::of(-1));
            if (lo > out.window_open[static_cast<std::size_t>(w)]) {
                out.window_open[static_cast<std::size_t>(w)] = lo;
                changed = true;
            }
            if (hi < out.window_close[static_cast<std::size_t>(v)]) {
                out.window_close[static_cast<std::size_t>(v)] = hi;
                changed = true;
            }
        }
    }
    return {std::move(out), changed};
}

PreprocessResult build(const Instance& inst) {
    if (inst.vertex_count() > VertexSet::kMaxUniverse)
        throw std::invalid_argument("preprocess: instance exceeds the supported " +
                                    std::to_string(VertexSet::kMaxUniverse - 2) + " customers");
    PreprocessResult res;
    res.tightened = inst;
    const int m = inst.vertex_count();
    const double iteration_bound = 2.0 * m * static_cast<double>(inst.horizon.units()) + 2.0;
    while (true) {
        ++res.iterations;
        if (static_cast<double>(res.iterations) > iteration_bound)
            throw std::logic_error("preprocess: fixpoint exceeded its termination bound");
        res.bounds.eat = compute_eat(res.tightened);
        res.bounds.ldt = compute_ldt(res.tightened);
        res.precedence = compute_precedence(res.bounds);
        for (int v = 1; v <= inst.n; ++v)
            for (int w = v + 1; w <= inst.n; ++w)
                if (res.precedence.precedes(v, w) && res.precedence.precedes(w, v)) {
                    res.feasible = false;
                    return res;
                }
        auto [tight, changed] = tighten_windows(res.tightened, res.precedence, res.bounds);
        if (changed) {
            for (int v = 0; v < m; ++v)
                if (window_empty(tight, v)) {
                    res.tightened = std::move(tight);
                    res.feasible = false;
                    return res;
                }
            res.tightened = std::move(tight);
            continue;
        }
        break;
    }

    // Materialize U from the stable bounds: w stays in U(v, .) forever when
    // v must precede w, and otherwise drops out once t reaches EAT(w, v).
    std::vector<std::vector<UnreachableFunction::Entry>> steps(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
        std::vector<std::pair<TimeInstant, int>> dropouts;
        VertexSet all(m);
        for (int w = 0; w < m; ++w) {
            if (w == v) continue;
            all.insert(w);
            if (res.precedence.precedes(v, w)) continue;
            TimeInstant e = res.bounds.eat[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
            assert(e.finite());  // infinite EAT(w, v) implies v precedes w
            dropouts.emplace_back(e, w);
        }
        std::sort(dropouts.begin(), dropouts.end());
        auto& list = steps[static_cast<std::size_t>(v)];
        list.push_back({TimeInstant::minus_inf(), all});
        VertexSet cur = all;
        for (std::size_t i = 0; i < dropouts.size();) {
            TimeInstant threshold = dropouts[i].first;
            for (; i < dropouts.size() && dropouts[i].first == threshold; ++i) cur.erase(dropouts[i].second);
            list.push_back({threshold, cur});
        }
    }
    res.unreachable = UnreachableFunction(std::move(steps));
    return res;
}

std::string dump_diagnostics(const PreprocessResult& prep) {
    const Instance& inst = prep.tightened;
    const int scale = inst.scale;
    std::ostringstream out;
    out << "instance " << inst.name << "\n";
    out << "feasible " << (prep.feasible ? "yes" : "no") << "\n";
    out << "iterations " << prep.iterations << "\n";
    out << "windows\n";
    for (int v = 0; v < inst.vertex_count(); ++v)
        out << "  " << v << " [" << format_scaled_time(inst.open(v), scale) << ", "
            << format_scaled_time(inst.close(v), scale) << "]\n";
    out << "precedence\n";
    for (int v = 0; v < inst.vertex_count(); ++v)
        for (int w : prep.precedence.before[static_cast<std::size_t>(v)].elements())
            out << "  " << v << " -> " << w << "\n";
    if (!prep.unreachable.empty()) {
        out << "unreachable\n";
        for (int v = 0; v < inst.vertex_count(); ++v) {
            for (const auto& entry : prep.unreachable.steps()[static_cast<std::size_t>(v)]) {
                out << "  " << v << " @ " << format_scaled_time(entry.threshold, scale) << " {";
                bool first = true;
                for (int w : entry.unreachable.elements()) {
                    if (!first) out << ',';
                    out << w;
                    first = false;
                }
                out << "}\n";
            }
        }
    }
    return out.str();
}

}  // namespace preprocess
}  // namespace tsptw

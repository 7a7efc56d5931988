#include "tsptw/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tsptw/rng.hpp"

namespace tsptw {
namespace io {
namespace {

constexpr const char* kGeneratorName = "splitmix64-v1";

bool is_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return false;  // blank
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// Token stream over non-comment lines; rows may wrap, only total counts are
// enforced.
struct Tokens {
    std::vector<std::string> items;
    std::size_t next = 0;

    explicit Tokens(const std::string& text) {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (is_comment(line)) continue;
            std::istringstream fields(line);
            std::string tok;
            while (fields >> tok) items.push_back(tok);
        }
    }

    std::string take(const char* what) {
        if (next >= items.size())
            throw ParseError(ParseError::Kind::Malformed, std::string("unexpected end of file, expected ") + what);
        return items[next++];
    }

    bool exhausted() const { return next == items.size(); }
};

std::int64_t take_count(Tokens& toks, const char* what) {
    std::string tok = toks.take(what);
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::Malformed,
                         std::string("expected ") + what + ", got '" + tok + "'");
    }
}

std::string header_name(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!is_comment(line)) {
            if (is_blank(line)) continue;
            break;
        }
        std::size_t hash = line.find('#');
        std::istringstream rest(line.substr(hash + 1));
        std::string key, value;
        if (rest >> key && key == "name:" && rest >> value) return value;
    }
    return {};
}

// Builds the internal (n+2)-vertex instance from single-depot file data:
// vertex n+1 duplicates the depot row/column.
Instance assemble(int file_vertices, int scale, const std::string& name,
                  const std::vector<std::vector<TimeInstant>>& file_travel,
                  const std::vector<TimeInstant>& open, const std::vector<TimeInstant>& close) {
    const int n = file_vertices - 1;
    const int m = n + 2;
    if (open[0] != TimeInstant::zero())
        throw ParseError(ParseError::Kind::Malformed, "depot window must open at 0");
    Instance inst;
    inst.n = n;
    inst.scale = scale;
    inst.name = name;
    inst.horizon = close[0];
    inst.travel.assign(static_cast<std::size_t>(m), std::vector<TimeInstant>(static_cast<std::size_t>(m)));
    inst.window_open.resize(static_cast<std::size_t>(m));
    inst.window_close.resize(static_cast<std::size_t>(m));
    auto src = [n](int v) { return v == n + 1 ? 0 : v; };
    for (int v = 0; v < m; ++v) {
        inst.window_open[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(src(v))];
        inst.window_close[static_cast<std::size_t>(v)] = close[static_cast<std::size_t>(src(v))];
        for (int w = 0; w < m; ++w)
            inst.travel[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
                file_travel[static_cast<std::size_t>(src(v))][static_cast<std::size_t>(src(w))];
    }
    inst.validate();
    return inst;
}

}  // namespace

Instance parse_matrix(const std::string& text, int scale, const std::string& name) {
    Tokens toks(text);
    std::int64_t vertices = take_count(toks, "vertex count");
    if (vertices < 1 || vertices > 100000)
        throw ParseError(ParseError::Kind::Malformed, "unreasonable vertex count");
    const int N = static_cast<int>(vertices);
    std::vector<std::vector<TimeInstant>> travel(static_cast<std::size_t>(N),
                                                 std::vector<TimeInstant>(static_cast<std::size_t>(N)));
    for (int v = 0; v < N; ++v)
        for (int w = 0; w < N; ++w)
            travel[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
                parse_scaled_time(toks.take("travel time"), scale);
    std::vector<TimeInstant> open(static_cast<std::size_t>(N)), close(static_cast<std::size_t>(N));
    for (int v = 0; v < N; ++v) {
        open[static_cast<std::size_t>(v)] = parse_scaled_time(toks.take("window open"), scale);
        close[static_cast<std::size_t>(v)] = parse_scaled_time(toks.take("window close"), scale);
    }
    if (!toks.exhausted())
        throw ParseError(ParseError::Kind::Malformed, "trailing data after the window rows");
    std::string file_name = header_name(text);
    return assemble(N, scale, file_name.empty() ? name : file_name, travel, open, close);
}

Instance parse_coordinates(const std::string& text, int scale, const std::string& name) {
    struct Row {
        double x, y;
        TimeInstant ready, due, service;
    };
    std::vector<Row> rows;
    std::istringstream lines(text);
    std::string line;
    bool in_data = false;
    while (std::getline(lines, line)) {
        if (is_comment(line) || is_blank(line)) continue;
        std::istringstream fields(line);
        std::string id, xs, ys, demand, ready, due, service;
        if (!(fields >> id >> xs >> ys >> demand >> ready >> due >> service) ||
            !std::isdigit(static_cast<unsigned char>(id[0]))) {
            if (in_data) break;  // trailing non-data section
            continue;            // still in the header
        }
        in_data = true;
        Row row;
        try {
            if (std::stoll(id) >= 999) break;  // customary end-of-list sentinel
            row.x = std::stod(xs);
            row.y = std::stod(ys);
        } catch (const std::exception&) {
            throw ParseError(ParseError::Kind::Malformed, "bad customer row: " + line);
        }
        row.ready = parse_scaled_time(ready, scale);
        row.due = parse_scaled_time(due, scale);
        row.service = parse_scaled_time(service, scale);
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError(ParseError::Kind::Malformed, "no customer rows found");

    const int N = static_cast<int>(rows.size());
    const double unit = std::pow(10.0, scale);
    std::vector<std::vector<TimeInstant>> travel(static_cast<std::size_t>(N),
                                                 std::vector<TimeInstant>(static_cast<std::size_t>(N)));
    for (int v = 0; v < N; ++v)
        for (int w = 0; w < N; ++w) {
            if (v == w) {
                travel[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = TimeInstant::zero();
                continue;
            }
            double d = std::hypot(rows[static_cast<std::size_t>(v)].x - rows[static_cast<std::size_t>(w)].x,
                                  rows[static_cast<std::size_t>(v)].y - rows[static_cast<std::size_t>(w)].y);
            // Round half-up at the scale-th decimal digit, then fold the
            // origin's service time into the arc.
            std::int64_t rounded = static_cast<std::int64_t>(std::floor(d * unit + 0.5));
            travel[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
                TimeInstant::of(rounded) + rows[static_cast<std::size_t>(v)].service;
        }
    std::vector<TimeInstant> open, close;
    for (const Row& r : rows) {
        open.push_back(r.ready);
        close.push_back(r.due);
    }
    return assemble(N, scale, name, travel, open, close);
}

Instance load_instance(const std::filesystem::path& path, InstanceFormat format, int scale) {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseError::Kind::Malformed, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string name = path.stem().string();
    return format == InstanceFormat::Matrix ? parse_matrix(buf.str(), scale, name)
                                            : parse_coordinates(buf.str(), scale, name);
}

std::string serialize_matrix(const Instance& inst, const std::vector<std::string>& comments) {
    std::ostringstream out;
    out << "# name: " << inst.name << "\n";
    for (const std::string& c : comments) out << "# " << c << "\n";
    const int N = inst.n + 1;
    out << N << "\n";
    for (int v = 0; v < N; ++v) {
        for (int w = 0; w < N; ++w) {
            // Column 0 carries the return arc to the depot copy.
            TimeInstant t = w == 0 ? inst.tau(v, inst.end_depot()) : inst.tau(v, w);
            if (v == w) t = inst.tau(v, v);
            out << (w ? " " : "") << format_scaled_time(t, inst.scale);
        }
        out << "\n";
    }
    for (int v = 0; v < N; ++v)
        out << format_scaled_time(inst.open(v), inst.scale) << " "
            << format_scaled_time(inst.close(v), inst.scale) << "\n";
    return out.str();
}

namespace {

struct Point {
    double x, y;
};

std::vector<int> second_nearest_route(const std::vector<std::vector<TimeInstant>>& dist, int n) {
    // Greedy from the depot: go to the second-closest unvisited customer,
    // or the closest when only one candidate remains.  Ties by index.
    std::vector<int> order;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    int cur = 0;
    for (int step = 0; step < n; ++step) {
        std::vector<int> cand;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)]) cand.push_back(v);
        std::sort(cand.begin(), cand.end(), [&](int a, int b) {
            TimeInstant da = dist[static_cast<std::size_t>(cur)][static_cast<std::size_t>(a)];
            TimeInstant db = dist[static_cast<std::size_t>(cur)][static_cast<std::size_t>(b)];
            return da != db ? da < db : a < b;
        });
        int pick = cand.size() >= 2 ? cand[1] : cand[0];
        used[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        cur = pick;
    }
    return order;
}

}  // namespace

GeneratedInstance generate_with_trace(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator: n must be at least 1");
    if (spec.scale < 0 || spec.scale > 9) throw std::invalid_argument("generator: bad scale");
    if (spec.family == GeneratorFamily::BetaTightness && (spec.beta < 0.0 || spec.beta > 1.0))
        throw std::invalid_argument("generator: beta must lie in [0, 1]");
    if (spec.family != GeneratorFamily::BetaTightness && spec.omega < 0.0)
        throw std::invalid_argument("generator: omega must be nonnegative");

    SplitMix64 rng(spec.seed);
    const int n = spec.n;
    const int m = n + 2;
    const double unit = std::pow(10.0, spec.scale);

    // Locations: depot first, then customers, x before y.
    std::vector<Point> pts(static_cast<std::size_t>(n + 1));
    for (auto& p : pts) {
        p.x = rng.next_double() * spec.sigma;
        p.y = rng.next_double() * spec.sigma;
    }

    std::vector<std::vector<TimeInstant>> dist(static_cast<std::size_t>(n + 1),
                                               std::vector<TimeInstant>(static_cast<std::size_t>(n + 1),
                                                                        TimeInstant::zero()));
    for (int v = 0; v <= n; ++v)
        for (int w = 0; w <= n; ++w) {
            if (v == w) continue;
            double d = std::hypot(pts[static_cast<std::size_t>(v)].x - pts[static_cast<std::size_t>(w)].x,
                                  pts[static_cast<std::size_t>(v)].y - pts[static_cast<std::size_t>(w)].y);
            dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
                TimeInstant::of(static_cast<std::int64_t>(std::floor(d * unit + 0.5)));
        }

    std::vector<int> order;
    if (spec.family == GeneratorFamily::SecondNearestNeighbor) {
        order = second_nearest_route(dist, n);
    } else {
        // Fisher-Yates over 1..n, highest index first.
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[rng.next_below(static_cast<std::uint64_t>(i))]);
    }

    // Visit times of the generating route (no waiting: windows do not exist
    // yet), including the return leg.
    std::vector<TimeInstant> visit(static_cast<std::size_t>(n));
    TimeInstant clock = TimeInstant::zero();
    int prev = 0;
    for (int i = 0; i < n; ++i) {
        clock += dist[static_cast<std::size_t>(prev)][static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        visit[static_cast<std::size_t>(i)] = clock;
        prev = order[static_cast<std::size_t>(i)];
    }
    const TimeInstant completion = clock + dist[static_cast<std::size_t>(prev)][0];

    const std::int64_t omega_units = static_cast<std::int64_t>(std::llround(spec.omega * unit));
    TimeInstant horizon = completion;
    if (spec.family == GeneratorFamily::RandomRoute) horizon += TimeInstant::of(omega_units);

    GeneratedInstance out;
    out.instance.n = n;
    out.instance.scale = spec.scale;
    out.instance.horizon = horizon;
    out.instance.travel.assign(static_cast<std::size_t>(m),
                               std::vector<TimeInstant>(static_cast<std::size_t>(m), TimeInstant::zero()));
    out.instance.window_open.assign(static_cast<std::size_t>(m), TimeInstant::zero());
    out.instance.window_close.assign(static_cast<std::size_t>(m), horizon);
    auto loc = [n](int v) { return v == n + 1 ? 0 : v; };
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w)
            out.instance.travel[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
                dist[static_cast<std::size_t>(loc(v))][static_cast<std::size_t>(loc(w))];

    out.preclamp_windows.resize(static_cast<std::size_t>(m),
                                {TimeInstant::zero(), horizon});
    const std::int64_t forty = static_cast<std::int64_t>(std::llround(40.0 * unit));
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        const TimeInstant c = visit[static_cast<std::size_t>(i)];
        TimeInstant lo, hi;
        if (spec.family == GeneratorFamily::BetaTightness) {
            // a = beta * visit - 40, b = visit + 40 (raw units), half-up.
            std::int64_t scaled = static_cast<std::int64_t>(
                std::floor(spec.beta * static_cast<double>(c.units()) + 0.5));
            lo = TimeInstant::of(scaled - forty);
            hi = c + TimeInstant::of(forty);
        } else {
            // Two independent draws per customer: the opening slack first.
            std::int64_t half = omega_units / 2;
            lo = c - TimeInstant::of(static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(half))));
            hi = c + TimeInstant::of(static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(half))));
        }
        out.preclamp_windows[static_cast<std::size_t>(v)] = {lo, hi};
        out.instance.window_open[static_cast<std::size_t>(v)] = std::max(lo, TimeInstant::zero());
        out.instance.window_close[static_cast<std::size_t>(v)] = std::min(hi, horizon);
    }

    std::ostringstream name;
    switch (spec.family) {
        case GeneratorFamily::SecondNearestNeighbor: name << "snn"; break;
        case GeneratorFamily::RandomRoute: name << "rr"; break;
        case GeneratorFamily::BetaTightness: name << "beta"; break;
    }
    name << "-n" << n << "-seed" << spec.seed;
    out.instance.name = name.str();

    out.generating_route.vertices.push_back(0);
    for (int v : order) out.generating_route.vertices.push_back(v);
    out.generating_route.vertices.push_back(n + 1);

    out.instance.validate();
    return out;
}

Instance generate(const GeneratorSpec& spec) { return generate_with_trace(spec).instance; }

std::vector<std::string> generator_comments(const GeneratorSpec& spec) {
    std::ostringstream line;
    line << "generator: " << kGeneratorName;
    std::vector<std::string> out{line.str()};
    std::ostringstream params;
    params << "family: ";
    switch (spec.family) {
        case GeneratorFamily::SecondNearestNeighbor: params << "snn omega: " << spec.omega; break;
        case GeneratorFamily::RandomRoute: params << "random-route omega: " << spec.omega; break;
        case GeneratorFamily::BetaTightness: params << "beta-tightness beta: " << spec.beta; break;
    }
    params << " n: " << spec.n << " sigma: " << spec.sigma << " seed: " << spec.seed
           << " scale: " << spec.scale;
    out.push_back(params.str());
    return out;
}

}  // namespace io
}  // namespace tsptw

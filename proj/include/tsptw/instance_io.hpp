#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tsptw/errors.hpp"
#include "tsptw/instance.hpp"

namespace tsptw {
namespace io {

enum class InstanceFormat { Matrix, Coordinates };

// Matrix layout: optional '#' comment lines, then N (vertex count with one
// depot), N*N travel entries, and N "a b" window rows, depot first.  Values
// are decimals with at most `scale` significant fractional digits.  The
// single file depot becomes vertices 0 and n+1 internally.
Instance parse_matrix(const std::string& text, int scale, const std::string& name);

// Coordinate layout: header lines, then rows "id x y demand ready due
// service"; a row with id >= 999 ends the list.  Travel times are Euclidean
// distances rounded half-up at the scale-th decimal digit, with the origin's
// service time folded into every outgoing arc.
Instance parse_coordinates(const std::string& text, int scale, const std::string& name);

Instance load_instance(const std::filesystem::path& path, InstanceFormat format, int scale);

// Matrix-format text that parses back to an identical instance.  Extra
// comment lines are emitted verbatim after the name line.
std::string serialize_matrix(const Instance& inst, const std::vector<std::string>& comments = {});

enum class GeneratorFamily { SecondNearestNeighbor, RandomRoute, BetaTightness };

struct GeneratorSpec {
    GeneratorFamily family = GeneratorFamily::SecondNearestNeighbor;
    int n = 1;              // customers
    double sigma = 100.0;   // square side for locations
    double omega = 0.0;     // window width (SNN / RandomRoute)
    double beta = 0.0;      // tightness in [0, 1] (BetaTightness)
    std::uint64_t seed = 0;
    int scale = 0;
};

struct GeneratedInstance {
    Instance instance;
    Route generating_route;  // feasible at departure 0 by construction
    std::vector<std::pair<TimeInstant, TimeInstant>> preclamp_windows;
};

// Deterministic in the seed: locations are uniform on [0, sigma]^2, windows
// are placed around the visit times of a constructed route (second nearest
// neighbor or random, by family), then clamped to [0, T].
GeneratedInstance generate_with_trace(const GeneratorSpec& spec);
Instance generate(const GeneratorSpec& spec);

// Provenance header lines (generator name, family, parameters, seed) for
// serialize_matrix.
std::vector<std::string> generator_comments(const GeneratorSpec& spec);

}  // namespace io
}  // namespace tsptw

#include "tsptw/solve_types.hpp"

namespace tsptw {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::TimeLimit: return "TimeLimit";
        case SolveStatus::MemoryLimit: return "MemoryLimit";
    }
    return "?";
}

}  // namespace tsptw

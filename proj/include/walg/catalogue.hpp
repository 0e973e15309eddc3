#pragma once

// Weighted Dynkin diagrams (Bourbaki numbering) of rigid nilpotent orbits.

#include "walg/rational.hpp"

#include <string>
#include <vector>

namespace walg {

struct OrbitEntry {
    char type;
    int rank;
    std::string name;
    std::vector<int> labels;
    int centralizer_dim; // dim g^e
    bool extended_runtime;
};

inline const std::vector<OrbitEntry> &orbit_catalogue() {
    static const std::vector<OrbitEntry> table{
        {'G', 2, "A1", {0, 1}, 8, false},
        {'G', 2, "~A1", {1, 0}, 6, false},
        {'F', 4, "A1", {1, 0, 0, 0}, 36, false},
        {'F', 4, "~A1", {0, 0, 0, 1}, 30, false},
        {'F', 4, "A1+~A1", {0, 1, 0, 0}, 24, false},
        {'F', 4, "A2+~A1", {0, 0, 1, 0}, 18, false},
        {'F', 4, "~A2+A1", {0, 1, 0, 1}, 16, false},
        {'E', 6, "A1", {0, 1, 0, 0, 0, 0}, 56, true},
        {'E', 6, "3A1", {0, 0, 0, 1, 0, 0}, 38, true},
        {'E', 6, "2A2+A1", {1, 0, 0, 1, 0, 1}, 24, true},
        {'E', 7, "A1", {1, 0, 0, 0, 0, 0, 0}, 99, true},
        {'E', 7, "2A1", {0, 0, 0, 0, 0, 1, 0}, 81, true},
        {'E', 7, "(3A1)''", {0, 0, 0, 0, 0, 0, 2}, 79, true},
        {'E', 7, "4A1", {0, 1, 0, 0, 0, 0, 1}, 63, true},
        {'E', 7, "A2+2A1", {0, 0, 0, 1, 0, 0, 0}, 51, true},
        {'E', 7, "2A2+A1", {0, 0, 1, 0, 0, 1, 0}, 43, true},
        {'E', 7, "(A3+A1)''", {2, 0, 0, 0, 0, 0, 2}, 47, true},
    };
    return table;
}

/// Accepts "~A1" or "A1~" style tildes and ignores spaces.
inline std::string normalize_orbit_name(std::string s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

inline const OrbitEntry &find_orbit(char type, int rank, const std::string &name) {
    const std::string key = normalize_orbit_name(name);
    for (const auto &e : orbit_catalogue())
        if (e.type == type && e.rank == rank && e.name == key) return e;
    std::string known;
    for (const auto &e : orbit_catalogue())
        if (e.type == type && e.rank == rank) known += (known.empty() ? "" : ", ") + e.name;
    throw InvalidInput("unknown orbit '" + name + "' for " + std::string(1, type) + std::to_string(rank) +
                       (known.empty() ? "" : " (known: " + known + ")"));
}

} // namespace walg

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/rational.hpp"

namespace ecg {

// Desk limits are policy, not correctness: they keep every exact run in the
// minutes range. override_size lifts them.
struct OracleLimits {
    int search_limit = 14;
    int enum_limit = 6;
    bool override_size = false;
};

// Maximum-length properly coloured path, exact. Memoized DFS over
// (visited set, last vertex, last colour); deterministic lexicographic
// tie-breaking.
PcWalk longest_pc_path(const EdgeColouredGraph& g, const OracleLimits& limits = {});

// Cycle variant; nullopt when the graph has no properly coloured cycle.
std::optional<PcWalk> longest_pc_cycle(const EdgeColouredGraph& g, const OracleLimits& limits = {});

struct PathCount {
    std::uint64_t count; // |P_l(x; y, C_y)|
    Rational mu;         // count / n^(l-1)
};

// Exact count of properly coloured x-y paths of length len whose final edge
// colour lies in allowed_end_colours (empty set means all colours).
PathCount count_pc_paths(const EdgeColouredGraph& g, VertexId x, VertexId y, int len,
                         const std::set<ColourId>& allowed_end_colours,
                         const OracleLimits& limits = {});

// Every connected edge-coloured graph on n vertices with at most max_colours
// colours, one per (vertex permutation x colour permutation) class. Canonical
// form: lexicographically minimal colour-adjacency matrix over both actions.
std::vector<EdgeColouredGraph> enumerate_small(int n, int max_colours,
                                               const OracleLimits& limits = {});

struct ScanReport {
    int n_max = 0;
    int colour_budget = 0;
    long long instances_checked = 0;
    std::vector<std::string> violators; // .ecg serializations
    std::string to_json() const;
};

// For every enumerated connected graph with min colour degree d, checks
// "PC Hamilton cycle exists OR longest PC path >= floor(3d/2)".
ScanReport conjecture_scan(int n_max, int max_colours, const OracleLimits& limits = {});

} // namespace ecg

#pragma once

#include <tuple>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg::testing {

using EdgeList = std::vector<std::tuple<int, int, ColourLabel>>;

inline EdgeColouredGraph rainbow_triangle() {
    return EdgeColouredGraph::from_edges(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
}

inline EdgeColouredGraph mono_star(int leaves) {
    EdgeList e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 7});
    return EdgeColouredGraph::from_edges(leaves + 1, e);
}

inline EdgeColouredGraph mono_complete(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j, 0});
    return EdgeColouredGraph::from_edges(n, e);
}

inline EdgeColouredGraph rainbow_complete(int n) {
    EdgeList e;
    ColourLabel c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j, c++});
    return EdgeColouredGraph::from_edges(n, e);
}

// K_4 properly 3-edge-coloured by perfect matchings.
inline EdgeColouredGraph proper_k4() {
    return EdgeColouredGraph::from_edges(
        4, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2}, {1, 2, 2}});
}

} // namespace ecg::testing

#pragma once

#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

// Simple digraph: no self-loops, no duplicate arcs; 2-cycles allowed.
class Digraph {
public:
    explicit Digraph(int n) : n_(n), out_(static_cast<size_t>(n)), in_(static_cast<size_t>(n)) {}

    int n() const { return n_; }
    void add_arc(int u, int v);
    bool has_arc(int u, int v) const;
    const std::vector<int>& out(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in(int v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

private:
    int n_;
    std::vector<std::vector<int>> out_, in_;
};

using Matching = std::vector<std::pair<VertexId, VertexId>>;

// Maximum matching in a bipartite graph via augmenting paths, lowest-index
// first. Edges of g must cross left/right.
Matching max_bipartite_matching(const EdgeColouredGraph& g, const std::vector<VertexId>& left,
                                const std::vector<VertexId>& right);

// Same, on plain adjacency lists (left index -> right indices).
std::vector<int> kuhn_matching(const std::vector<std::vector<int>>& adj, int n_right);

// Maximum matching in a general graph (blossom contraction). The size always
// meets the e/(Delta+1) bound an edge-colouring argument would give, which is
// all downstream callers consume.
Matching bounded_degree_matching(const EdgeColouredGraph& g);

// Directed Hamilton cycle under the min-semi-degree >= n/2 precondition.
// Rotation-insertion heuristic first, exact backtracking as fallback; the
// returned order is certificate-checked, never trusted from the heuristic.
// Errors: DegreeTooLow(v) when the precondition fails; NoCycleFound only
// reachable without the precondition.
std::vector<int> gh_hamilton_cycle(const Digraph& d);

bool is_directed_hamilton_cycle(const Digraph& d, const std::vector<int>& order);

} // namespace ecg

#pragma once

#include <limits>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/rational.hpp"

namespace ecg {

constexpr int kInfDist = std::numeric_limits<int>::max() / 4;

// Oriented properly coloured 1-path-cycle with parameters rho-(x; y): one
// path from x.vertex to y.vertex plus vertex-disjoint cycles, every cycle and
// the path of length >= rho*n, and the path-edge colours at the endpoints
// pinned to the anchors' forbidden colours.
//
// Construction goes through verify::check_one_path_cycle, which enforces the
// four parameter clauses; code here only provides orientation bookkeeping.
class ParamOnePathCycle {
public:
    ParamOnePathCycle() : host_(nullptr) {}

    ParamOnePathCycle(const EdgeColouredGraph& host, std::vector<VertexId> path,
                      std::vector<std::vector<VertexId>> cycles, AnchoredVertex x,
                      AnchoredVertex y, Rational rho);

    const EdgeColouredGraph& host() const { return *host_; }
    const std::vector<VertexId>& path() const { return path_; }
    const std::vector<std::vector<VertexId>>& cycles() const { return cycles_; }
    const AnchoredVertex& x() const { return x_; }
    const AnchoredVertex& y() const { return y_; }
    const Rational& rho() const { return rho_; }

    int order() const; // |V(H)|
    bool spanning() const { return order() == host().n(); }
    bool contains(VertexId v) const { return comp_of(v) >= 0; }
    std::vector<VertexId> vertex_set() const;

    // -1 when v is not in H; 0 is the path, i >= 1 is cycles()[i-1].
    int comp_of(VertexId v) const;
    int pos_of(VertexId v) const;

    // Successor / predecessor along the orientation; -1 where undefined
    // (successor of y, predecessor of x).
    VertexId succ(VertexId v) const;
    VertexId pred(VertexId v) const;

    ColourId c_plus(VertexId v) const;  // colour(v, succ(v)); kNoColour if no successor
    ColourId c_minus(VertexId v) const; // colour(v, pred(v)); kNoColour if no predecessor

    // Colours of H-edges at v (1 or 2 values).
    std::vector<ColourId> colours_at(VertexId v) const;

    int dist_h(VertexId a, VertexId b) const; // kInfDist across components

    // Undirected edge list of H.
    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

    ParamOnePathCycle reversed() const;

private:
    const EdgeColouredGraph* host_;
    std::vector<VertexId> path_;
    std::vector<std::vector<VertexId>> cycles_;
    AnchoredVertex x_{-1, kNoColour}, y_{-1, kNoColour};
    Rational rho_;
    std::vector<int> comp_of_, pos_of_;

    void index();
};

} // namespace ecg

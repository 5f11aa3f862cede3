#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ecg/errors.hpp"

namespace ecg {

using VertexId = int;
using ColourId = int;        // dense internal id, 0..colour_count()-1
using ColourLabel = long long; // external label as it appears in .ecg files

constexpr ColourId kNoColour = -1;

struct Edge {
    VertexId u, v; // u < v
    ColourId colour;

    bool operator==(const Edge&) const = default;
};

// The pair (x, c_x): a vertex with one forbidden colour at it.
struct AnchoredVertex {
    VertexId vertex;
    ColourId forbidden_colour;
};

enum class WalkKind { Path, Cycle };

// A verified properly coloured walk. colours[i] joins vertices[i] and
// vertices[i+1] (wrapping for cycles).
struct PcWalk {
    WalkKind kind;
    std::vector<VertexId> vertices;
    std::vector<ColourId> colours;

    int length() const {
        return kind == WalkKind::Path ? static_cast<int>(vertices.size()) - 1
                                      : static_cast<int>(vertices.size());
    }
};

// Simple undirected graph with one colour per edge. Immutable after
// construction; every operation on it is a pure function, so instances can
// be shared freely across threads.
//
// Edges are kept sorted by (u, v) and colour labels interned to dense ids in
// first-seen order over that sorted list, so two graphs with the same edge
// set have identical internal representations.
class EdgeColouredGraph {
public:
    EdgeColouredGraph() : n_(0) {}

    static EdgeColouredGraph from_edges(int n,
                                        const std::vector<std::tuple<int, int, ColourLabel>>& edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    int colour_count() const { return static_cast<int>(colour_labels_.size()); }
    ColourLabel label(ColourId c) const { return colour_labels_.at(static_cast<size_t>(c)); }
    std::optional<ColourId> id_of_label(ColourLabel l) const;

    // (neighbour, colour) pairs sorted by neighbour.
    const std::vector<std::pair<VertexId, ColourId>>& neighbours(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    bool has_edge(VertexId u, VertexId v) const { return colour_of(u, v).has_value(); }
    std::optional<ColourId> colour_of(VertexId u, VertexId v) const;

    int degree(VertexId v) const { return static_cast<int>(neighbours(v).size()); }

    int colour_degree(VertexId v) const;
    int colour_degree_within(VertexId v, const std::vector<VertexId>& S) const;
    int min_colour_degree() const;

    std::vector<VertexId> anchored_neighbourhood(const AnchoredVertex& x) const;

    bool operator==(const EdgeColouredGraph& other) const;

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_) fail("VertexRange", "vertex " + std::to_string(v) + " out of range");
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, ColourId>>> adj_;
    std::vector<ColourLabel> colour_labels_;
};

// Spanning subgraph with all colour degrees preserved in which every further
// edge removal would lower an endpoint's colour degree. Candidate edges are
// examined in lexicographic (u, v) order until a fixpoint.
EdgeColouredGraph critical_reduction(const EdgeColouredGraph& g);

bool is_critical(const EdgeColouredGraph& g);

// Recolours so distinct monochromatic components get distinct fresh colours.
// Requires a critical input, after which every colour class is a star.
EdgeColouredGraph star_normalize(const EdgeColouredGraph& g);

// Line-oriented text format:
//   p ecg <n> <m>
//   e <u> <v> <c>     (1-indexed, u < v, emitted sorted by (u, v))
// '#' starts a comment line.
EdgeColouredGraph parse_ecg(const std::string& text);
std::string serialize_ecg(const EdgeColouredGraph& g);

std::uint64_t fnv1a64(const std::string& bytes);
inline std::uint64_t graph_hash(const EdgeColouredGraph& g) { return fnv1a64(serialize_ecg(g)); }

// Induced subgraph on `keep` (ids are relabelled 0..k-1 in the order given);
// returns the map new id -> old id alongside.
std::pair<EdgeColouredGraph, std::vector<VertexId>>
induced_subgraph(const EdgeColouredGraph& g, const std::vector<VertexId>& keep);

} // namespace ecg

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/one_path_cycle.hpp"
#include "ecg/rational.hpp"

namespace ecg {

// (A, B, c_a, delta, eps) certifying (delta,eps)-extremality or, with the
// finer clauses, eps-extremality of the ordered pair (A, B).
struct ExtremalWitness {
    std::vector<VertexId> A;
    std::vector<VertexId> B;
    std::map<VertexId, ColourId> colour_map; // a -> c_a, injective
    Rational delta;
    Rational eps;
};

// Throws Error with codes NotAPath(index) / NotProper(index) / NotSimple(vertex).
PcWalk check_pc_path(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices);
PcWalk check_pc_cycle(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices);

// Non-throwing forms.
bool is_pc_path(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices);
bool is_pc_cycle(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices);

// Validates the four parameter clauses and returns the oriented structure.
// Error codes name the clause: ClauseA / ClauseB / ClauseC / ClauseD.
ParamOnePathCycle check_one_path_cycle(const EdgeColouredGraph& g,
                                       const std::vector<VertexId>& path,
                                       const std::vector<std::vector<VertexId>>& cycles,
                                       const Rational& rho, const AnchoredVertex& x,
                                       const AnchoredVertex& y);

bool is_valid_one_path_cycle(const EdgeColouredGraph& g, const std::vector<VertexId>& path,
                             const std::vector<std::vector<VertexId>>& cycles, const Rational& rho,
                             const AnchoredVertex& x, const AnchoredVertex& y);

// (A1)-(A3) with all thresholds compared as exact rationals.
bool check_delta_extremal(const EdgeColouredGraph& g, const ExtremalWitness& w);

// (E1)-(E3). The within-A clause of (E2) uses |A|-1 as the attainable
// universe for a vertex's good neighbours (a vertex is never its own
// neighbour), so zero-slack instances with eps*n < 1 verify.
bool check_eps_extremal(const EdgeColouredGraph& g, const ExtremalWitness& w);

// JSON certificate {kind, vertices, colours, host_hash} binding a walk to the
// instance via FNV-1a of the canonical serialization. Colours are stored as
// external labels.
std::string walk_certificate(const EdgeColouredGraph& g, const PcWalk& walk);

// Re-checks a certificate against an instance; throws on hash mismatch or
// any walk violation.
PcWalk verify_certificate(const EdgeColouredGraph& g, const std::string& certificate_json);

bool good_edge(const EdgeColouredGraph& g, const ExtremalWitness& w, VertexId a, VertexId a2);

} // namespace ecg

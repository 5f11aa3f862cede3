#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/rational.hpp"
#include "ecg/subroutines.hpp"
#include "ecg/verify.hpp"

namespace ecg {

// Vertex-disjoint properly coloured paths, all endpoints in the witness's
// B side; carrier for the contraction step.
struct PathSystem {
    std::vector<PcWalk> paths;
};

struct ExtremalConfig {
    Rational alpha = Rational(1, 6); // path-system balance parameter
};

// Prunes A* down to the vertices rich in good edges, yielding an
// eps'-extremal pair with eps' a rational upper bound on 4*sqrt(eps).
// The c_a map is derived as the per-vertex majority colour into B*.
ExtremalWitness refine_extremal_pair(const EdgeColouredGraph& g, const std::vector<VertexId>& A_star,
                                     const std::vector<VertexId>& B_star, const Rational& delta,
                                     const Rational& eps);

// Properly coloured Hamilton cycle on A u B when |A| = 2m, |B| = m and the
// pair is eps-extremal with eps < 1/36: matchings into B, triples, auxiliary
// digraph, Ghouila-Houri, splice. Output verified before return.
PcWalk hamilton_in_extremal(const EdgeColouredGraph& g, const ExtremalWitness& w);

// PC cycle on exactly A u B u V(P): pads with a greedy A-path when |B| is
// short of |A|/2 + l, contracts each path to a fresh vertex joined to its
// common-colour neighbourhood, closes a Hamilton cycle there and expands.
PcWalk cycle_from_path_system(const EdgeColouredGraph& g, const ExtremalWitness& w,
                              const PathSystem& ps, const ExtremalConfig& cfg = {});

struct YZPartition {
    std::vector<VertexId> Y;
    std::vector<VertexId> Z;
    Rational eps;                          // threshold the split was computed at
    std::vector<VertexId> prop_violations; // z in Z failing the |A|-24*eps*n star bound
};

YZPartition partition_YZ(const EdgeColouredGraph& g, const ExtremalWitness& w);

// Grows M u M' into a path system covering Y (the Q1-Q4 bookkeeping is
// asserted), then closes a cycle through cycle_from_path_system.
PcWalk cycle_from_matchings(const EdgeColouredGraph& g, const ExtremalWitness& w,
                            const YZPartition& yz, const Matching& M, const Matching& M_prime,
                            const ExtremalConfig& cfg = {});

struct LongCycleResult {
    PcWalk cycle;
    long long achieved = 0;
    long long target = 0; // min{floor(3*delta*n/2), n}
    std::string case_tag; // "case1" | "case2a" | "case2b"
    std::string log;
};

// Full pipeline driver. The (delta,eps) witness comes from the caller (a
// generator sidecar or rotation's extractor); delta and eps are read off it.
// The achieved length is reported against the target, never asserted.
LongCycleResult extremal_long_cycle(const EdgeColouredGraph& g, const ExtremalWitness& w,
                                    const ExtremalConfig& cfg = {});

bool colour_classes_are_stars(const EdgeColouredGraph& g);

} // namespace ecg

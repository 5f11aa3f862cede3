#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/oracle.hpp"
#include "ecg/rational.hpp"

namespace ecg {

// P = z1 z2 z3 z4 can swallow x between z2 and z3 while staying properly
// coloured.
bool is_absorbing_for_vertex(const EdgeColouredGraph& g, const PcWalk& P, VertexId x);

// Ordered variant for an edge pair: z1 z2 x1 x2 and y1 y2 z3 z4 must both be
// properly coloured paths. The ordering of (x1, x2; y1, y2) matters.
bool is_absorbing_for_pair(const EdgeColouredGraph& g, const PcWalk& P, VertexId x1, VertexId x2,
                           VertexId y1, VertexId y2);

// z1 z2 [inner] z3 z4 for an inner path of >= 4 vertices whose end pairs the
// outer path absorbs; verified before return.
PcWalk splice(const EdgeColouredGraph& g, const PcWalk& outer, const PcWalk& inner);

struct AbsorbingFamily {
    std::vector<PcWalk> members; // vertex-disjoint PC paths of length 3
    Rational gamma;

    // member indices absorbing each vertex, precomputed at construction
    std::vector<std::vector<int>> vertex_absorbers;

    // lazily cached member indices absorbing an ordered edge pair
    const std::vector<int>& absorbers_for_pair(const EdgeColouredGraph& g, VertexId x1, VertexId x2,
                                               VertexId y1, VertexId y2) const;

    static AbsorbingFamily build(const EdgeColouredGraph& g, std::vector<PcWalk> members,
                                 Rational gamma);

private:
    mutable std::map<std::tuple<VertexId, VertexId, VertexId, VertexId>, std::vector<int>>
        pair_cache_;
};

struct FamilyAudit {
    int size = 0;
    long long min_vertex_coverage = 0;
    long long min_sampled_pair_coverage = 0;
    long long pair_samples = 0;
    std::uint64_t seed = 0;
    std::string to_json() const;
};

struct FamilySearchResult {
    AbsorbingFamily family;
    FamilyAudit audit;
    bool coverage_met = false; // false is the FamilySearchFailed outcome
};

struct AbsorbConfig {
    Rational min_degree_eps = Rational(1, 100); // delta^c >= (1/2 + eps)n precondition
    long long retry_cap = 20000;
    long long pair_samples = 10000;
    int len_max = 8;
};

// Seeded randomized greedy family search. Stops when every vertex has
// >= gamma*n absorbers and the sampled pair coverage target is met, or when
// the |F| <= sqrt(gamma)*n budget / retry cap binds; the audit reports what
// was reached either way.
FamilySearchResult find_absorbing_family(const EdgeColouredGraph& g, const Rational& gamma,
                                         std::uint64_t seed, const AbsorbConfig& cfg = {});

// Shortest properly coloured x-y path (iterative deepening, lowest index
// first) whose first edge avoids x.forbidden_colour and last edge avoids
// y.forbidden_colour. nullopt = NoConnector.
std::optional<PcWalk> connect(const EdgeColouredGraph& g, const AnchoredVertex& x,
                              const AnchoredVertex& y, int len_max = 8);

// Same, restricted to vertices with banned[v] == 0 (x, y always allowed).
std::optional<PcWalk> connect_within(const EdgeColouredGraph& g, const AnchoredVertex& x,
                                     const AnchoredVertex& y, int len_max,
                                     const std::vector<char>& banned);

// mu_{<=ell}(x; y, C \ c0) as an exact rational; excluded = kNoColour means
// no exclusion. Counts paths by its own enumeration, independent of
// count_pc_paths.
Rational reachability_mu(const EdgeColouredGraph& g, VertexId x, VertexId y, int ell,
                         ColourId excluded = kNoColour, const OracleLimits& limits = {});

struct ReachabilityClass {
    std::string kind; // "strong" | "unique-colour" | "unreachable"
    Rational mu_total;
    std::optional<ColourId> unique_colour;
};

// Trichotomy at threshold eta: strongly reachable / reachable with a unique
// dominant final colour / unreachable.
ReachabilityClass classify_reachability(const EdgeColouredGraph& g, VertexId x, VertexId y, int ell,
                                        const Rational& eta, const OracleLimits& limits = {});

// The absorbing cycle: family members chained by connectors, respecting the
// eps*n/2 length budget (the member count is lowered until the assembled
// cycle fits). Returns the cycle plus the family of chained members.
std::pair<PcWalk, AbsorbingFamily> build_absorbing_cycle(const EdgeColouredGraph& g,
                                                         const Rational& gamma, const Rational& eps,
                                                         std::uint64_t seed,
                                                         const AbsorbConfig& cfg = {});

// Splices every path (paths of <= 3 vertices first broken into singletons)
// into C using an unused family member each; returns the verified cycle on
// V(C) u V(paths).
PcWalk absorb_paths(const EdgeColouredGraph& g, const PcWalk& C, const AbsorbingFamily& fam,
                    const std::vector<PcWalk>& paths);

} // namespace ecg

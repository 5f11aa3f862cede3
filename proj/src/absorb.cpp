#include "ecg/absorb.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "ecg/rng.hpp"
#include "ecg/verify.hpp"

namespace ecg {

namespace {

bool distinct_colours(ColourId a, ColourId b) { return a != b; }

} // namespace

bool is_absorbing_for_vertex(const EdgeColouredGraph& g, const PcWalk& P, VertexId x) {
    if (P.kind != WalkKind::Path || P.vertices.size() != 4) return false;
    if (!is_pc_path(g, P.vertices)) return false;
    const auto& z = P.vertices;
    if (x == z[0] || x == z[1] || x == z[2] || x == z[3]) return false;
    return is_pc_path(g, {z[0], z[1], x, z[2], z[3]});
}

bool is_absorbing_for_pair(const EdgeColouredGraph& g, const PcWalk& P, VertexId x1, VertexId x2,
                           VertexId y1, VertexId y2) {
    if (!g.has_edge(x1, x2) || !g.has_edge(y1, y2))
        fail("BadArgument", "pair absorption needs edges x1x2 and y1y2");
    std::set<VertexId> four{x1, x2, y1, y2};
    if (four.size() != 4) fail("BadArgument", "pair absorption needs four distinct vertices");
    if (P.kind != WalkKind::Path || P.vertices.size() != 4) return false;
    if (!is_pc_path(g, P.vertices)) return false;
    const auto& z = P.vertices;
    for (VertexId v : z)
        if (four.count(v)) return false;
    return is_pc_path(g, {z[0], z[1], x1, x2}) && is_pc_path(g, {y1, y2, z[2], z[3]});
}

PcWalk splice(const EdgeColouredGraph& g, const PcWalk& outer, const PcWalk& inner) {
    if (inner.vertices.size() < 4) fail("AbsorbMismatch", "inner path needs at least 4 vertices");
    const auto& x = inner.vertices;
    if (!is_absorbing_for_pair(g, outer, x[0], x[1], x[x.size() - 2], x.back()))
        fail("AbsorbMismatch", "outer path does not absorb the inner path's end pairs");
    std::vector<VertexId> joined{outer.vertices[0], outer.vertices[1]};
    for (VertexId v : x) {
        if (v == outer.vertices[0] || v == outer.vertices[1] || v == outer.vertices[2] ||
            v == outer.vertices[3])
            fail("AbsorbMismatch", "outer and inner paths overlap");
        joined.push_back(v);
    }
    joined.push_back(outer.vertices[2]);
    joined.push_back(outer.vertices[3]);
    return check_pc_path(g, joined);
}

AbsorbingFamily AbsorbingFamily::build(const EdgeColouredGraph& g, std::vector<PcWalk> members,
                                       Rational gamma) {
    AbsorbingFamily fam;
    fam.gamma = std::move(gamma);
    fam.members = std::move(members);
    std::set<VertexId> seen;
    for (const PcWalk& p : fam.members) {
        check_pc_path(g, p.vertices);
        if (p.vertices.size() != 4) fail("BadArgument", "family members must have 4 vertices");
        for (VertexId v : p.vertices)
            if (!seen.insert(v).second) fail("BadArgument", "family members overlap");
    }
    fam.vertex_absorbers.assign(static_cast<size_t>(g.n()), {});
    for (VertexId v = 0; v < g.n(); ++v)
        for (size_t i = 0; i < fam.members.size(); ++i)
            if (is_absorbing_for_vertex(g, fam.members[i], v))
                fam.vertex_absorbers[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    return fam;
}

const std::vector<int>& AbsorbingFamily::absorbers_for_pair(const EdgeColouredGraph& g, VertexId x1,
                                                            VertexId x2, VertexId y1,
                                                            VertexId y2) const {
    auto key = std::tuple(x1, x2, y1, y2);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    std::vector<int> out;
    for (size_t i = 0; i < members.size(); ++i)
        if (is_absorbing_for_pair(g, members[i], x1, x2, y1, y2)) out.push_back(static_cast<int>(i));
    return pair_cache_.emplace(key, std::move(out)).first->second;
}

std::string FamilyAudit::to_json() const {
    nlohmann::json j;
    j["size"] = size;
    j["min_vertex_coverage"] = min_vertex_coverage;
    j["sampled_pair_coverage"] = min_sampled_pair_coverage;
    j["pair_samples"] = pair_samples;
    j["seed"] = seed;
    return j.dump();
}

FamilySearchResult find_absorbing_family(const EdgeColouredGraph& g, const Rational& gamma,
                                         std::uint64_t seed, const AbsorbConfig& cfg) {
    long long n = g.n();
    if (Rational(g.min_colour_degree()) < (Rational(1, 2) + cfg.min_degree_eps) * n)
        fail("DegreeTooLow", "family search requires delta^c >= (1/2 + eps)n");

    Xorshift64Star rng(seed);
    std::vector<PcWalk> members;
    std::vector<char> taken(static_cast<size_t>(n), 0);
    std::vector<long long> coverage(static_cast<size_t>(n), 0);
    Rational vertex_target = gamma * n;

    auto budget_allows = [&](size_t next_size) {
        // |F| <= sqrt(gamma) * n, compared in squares to stay exact
        return Rational(static_cast<long long>(next_size * next_size)) <= gamma * n * n;
    };
    auto vertex_coverage_met = [&] {
        for (VertexId v = 0; v < g.n(); ++v)
            if (Rational(coverage[static_cast<size_t>(v)]) < vertex_target) return false;
        return true;
    };

    long long tries = 0;
    while (tries < cfg.retry_cap && budget_allows(members.size() + 1) && !vertex_coverage_met()) {
        ++tries;
        std::vector<VertexId> z;
        std::set<VertexId> zs;
        for (int i = 0; i < 4; ++i) {
            VertexId v = static_cast<VertexId>(rng.range(static_cast<std::uint64_t>(n)));
            if (taken[static_cast<size_t>(v)] || zs.count(v)) break;
            z.push_back(v);
            zs.insert(v);
        }
        if (z.size() != 4 || !is_pc_path(g, z)) continue;
        PcWalk member = check_pc_path(g, z);
        members.push_back(member);
        for (VertexId v : z) taken[static_cast<size_t>(v)] = 1;
        for (VertexId v = 0; v < g.n(); ++v)
            if (is_absorbing_for_vertex(g, member, v)) ++coverage[static_cast<size_t>(v)];
    }

    FamilySearchResult out{AbsorbingFamily::build(g, members, gamma), {}, false};
    out.audit.size = static_cast<int>(out.family.members.size());
    out.audit.seed = seed;
    out.audit.min_vertex_coverage =
        n == 0 ? 0 : *std::min_element(coverage.begin(), coverage.end());

    // Monte-Carlo pair coverage (the exact audit would cost Theta(m^2 |F|))
    long long min_pair = -1;
    long long samples_done = 0;
    int m_edges = g.edge_count();
    if (m_edges >= 2 && !out.family.members.empty()) {
        for (long long s = 0; s < cfg.pair_samples; ++s) {
            const Edge& e1 = g.edges()[static_cast<size_t>(rng.range(static_cast<std::uint64_t>(m_edges)))];
            const Edge& e2 = g.edges()[static_cast<size_t>(rng.range(static_cast<std::uint64_t>(m_edges)))];
            if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
            VertexId x1 = rng.range(2) ? e1.u : e1.v;
            VertexId x2 = x1 == e1.u ? e1.v : e1.u;
            VertexId y1 = rng.range(2) ? e2.u : e2.v;
            VertexId y2 = y1 == e2.u ? e2.v : e2.u;
            long long cnt = 0;
            for (const PcWalk& p : out.family.members)
                if (is_absorbing_for_pair(g, p, x1, x2, y1, y2)) ++cnt;
            ++samples_done;
            if (min_pair < 0 || cnt < min_pair) min_pair = cnt;
        }
    }
    out.audit.pair_samples = samples_done;
    out.audit.min_sampled_pair_coverage = std::max(0LL, min_pair);

    bool pair_met = samples_done == 0 || Rational(out.audit.min_sampled_pair_coverage) >= vertex_target;
    out.coverage_met = vertex_coverage_met() && pair_met;
    return out;
}

namespace {

bool connect_dfs(const EdgeColouredGraph& g, VertexId cur, ColourId last, int remaining,
                 const AnchoredVertex& x, const AnchoredVertex& y, const std::vector<char>& banned,
                 std::vector<char>& visited, std::vector<VertexId>& path) {
    for (auto [w, c] : g.neighbours(cur)) {
        if (c == last) continue;
        if (cur == x.vertex && c == x.forbidden_colour) continue;
        if (w == y.vertex) {
            if (remaining >= 1 && c != y.forbidden_colour) {
                path.push_back(w);
                return true;
            }
            continue;
        }
        if (remaining <= 1) continue;
        if (banned[static_cast<size_t>(w)] || visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        if (connect_dfs(g, w, c, remaining - 1, x, y, banned, visited, path)) return true;
        path.pop_back();
        visited[static_cast<size_t>(w)] = 0;
    }
    return false;
}

} // namespace

std::optional<PcWalk> connect_within(const EdgeColouredGraph& g, const AnchoredVertex& x,
                                     const AnchoredVertex& y, int len_max,
                                     const std::vector<char>& banned) {
    if (x.vertex == y.vertex) fail("BadArgument", "connect needs distinct endpoints");
    for (int depth = 1; depth <= len_max; ++depth) {
        std::vector<char> visited(static_cast<size_t>(g.n()), 0);
        visited[static_cast<size_t>(x.vertex)] = 1;
        std::vector<VertexId> path{x.vertex};
        if (connect_dfs(g, x.vertex, kNoColour, depth, x, y, banned, visited, path))
            return check_pc_path(g, path);
    }
    return std::nullopt;
}

std::optional<PcWalk> connect(const EdgeColouredGraph& g, const AnchoredVertex& x,
                              const AnchoredVertex& y, int len_max) {
    return connect_within(g, x, y, len_max, std::vector<char>(static_cast<size_t>(g.n()), 0));
}

namespace {

// counts[len][final colour] over all PC x-y paths of length <= ell
void mu_dfs(const EdgeColouredGraph& g, VertexId cur, ColourId last, int len, int ell, VertexId y,
            std::vector<char>& visited, std::vector<std::vector<std::uint64_t>>& counts) {
    for (auto [w, c] : g.neighbours(cur)) {
        if (c == last) continue;
        if (w == y) {
            ++counts[static_cast<size_t>(len + 1)][static_cast<size_t>(c)];
            continue;
        }
        if (len + 1 >= ell || visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        mu_dfs(g, w, c, len + 1, ell, y, visited, counts);
        visited[static_cast<size_t>(w)] = 0;
    }
}

std::vector<std::vector<std::uint64_t>> mu_counts(const EdgeColouredGraph& g, VertexId x, VertexId y,
                                                  int ell, const OracleLimits& limits) {
    if (g.n() > limits.search_limit && !limits.override_size)
        fail("RefuseSize", "reachability_mu limited to n <= " + std::to_string(limits.search_limit));
    if (ell < 1) fail("BadArgument", "need ell >= 1");
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) fail("BadArgument", "need x != y");
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<size_t>(ell + 1), std::vector<std::uint64_t>(static_cast<size_t>(g.colour_count()), 0));
    std::vector<char> visited(static_cast<size_t>(g.n()), 0);
    visited[static_cast<size_t>(x)] = 1;
    mu_dfs(g, x, kNoColour, 0, ell, y, visited, counts);
    return counts;
}

Rational mu_from_counts(const std::vector<std::vector<std::uint64_t>>& counts, int n, int ell,
                        ColourId excluded) {
    Rational total(0);
    for (int len = 1; len <= ell; ++len) {
        BigInt num = 0;
        for (size_t c = 0; c < counts[static_cast<size_t>(len)].size(); ++c) {
            if (excluded != kNoColour && static_cast<ColourId>(c) == excluded) continue;
            num += counts[static_cast<size_t>(len)][c];
        }
        BigInt den = 1;
        for (int i = 1; i < len; ++i) den *= n;
        total += Rational(num, den);
    }
    return total;
}

} // namespace

Rational reachability_mu(const EdgeColouredGraph& g, VertexId x, VertexId y, int ell,
                         ColourId excluded, const OracleLimits& limits) {
    return mu_from_counts(mu_counts(g, x, y, ell, limits), g.n(), ell, excluded);
}

ReachabilityClass classify_reachability(const EdgeColouredGraph& g, VertexId x, VertexId y, int ell,
                                        const Rational& eta, const OracleLimits& limits) {
    auto counts = mu_counts(g, x, y, ell, limits);
    ReachabilityClass out;
    out.mu_total = mu_from_counts(counts, g.n(), ell, kNoColour);

    // strongly reachable <=> excluding the heaviest final colour keeps mu >= eta
    Rational worst = out.mu_total;
    for (int c = 0; c < g.colour_count(); ++c)
        worst = std::min(worst, mu_from_counts(counts, g.n(), ell, c));
    if (worst >= eta) {
        out.kind = "strong";
        return out;
    }
    if (out.mu_total >= 2 * eta) {
        for (int c = 0; c < g.colour_count(); ++c) {
            Rational only(0);
            for (int len = 1; len <= ell; ++len) {
                BigInt den = 1;
                for (int i = 1; i < len; ++i) den *= g.n();
                only += Rational(BigInt(counts[static_cast<size_t>(len)][static_cast<size_t>(c)]), den);
            }
            if (only >= eta) {
                out.kind = "unique-colour";
                out.unique_colour = c;
                return out;
            }
        }
    }
    out.kind = "unreachable";
    return out;
}

std::pair<PcWalk, AbsorbingFamily> build_absorbing_cycle(const EdgeColouredGraph& g,
                                                         const Rational& gamma, const Rational& eps,
                                                         std::uint64_t seed,
                                                         const AbsorbConfig& cfg) {
    long long n = g.n();
    if (Rational(g.min_colour_degree()) < (Rational(1, 2) + eps) * n)
        fail("DegreeTooLow", "absorbing cycle requires delta^c >= (1/2 + eps)n");

    AbsorbConfig fam_cfg = cfg;
    fam_cfg.min_degree_eps = eps;
    FamilySearchResult found = find_absorbing_family(g, gamma, seed, fam_cfg);
    if (found.family.members.empty())
        fail("FamilySearchFailed", "no absorbing path found; audit: " + found.audit.to_json());

    int len_cap = cfg.len_max;
    if (eps > 0) {
        Rational inv = 1 / (eps * eps);
        len_cap = static_cast<int>(std::min<long long>(cfg.len_max, std::max(1LL, ceil_ll(inv))));
    }
    Rational length_budget = eps * n / 2;

    std::string last_error = "no attempt";
    for (size_t k = found.family.members.size(); k >= 1; --k) {
        std::vector<PcWalk> chained(found.family.members.begin(),
                                    found.family.members.begin() + static_cast<long>(k));
        std::vector<char> banned(static_cast<size_t>(n), 0);
        for (const PcWalk& p : chained)
            for (VertexId v : p.vertices) banned[static_cast<size_t>(v)] = 1;

        std::vector<VertexId> cyc;
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j) {
            const PcWalk& pj = chained[j];
            const PcWalk& pnext = chained[(j + 1) % k];
            AnchoredVertex from{pj.vertices.back(), pj.colours.back()};
            AnchoredVertex to{pnext.vertices.front(), pnext.colours.front()};
            std::vector<char> blocked = banned;
            blocked[static_cast<size_t>(from.vertex)] = 0;
            blocked[static_cast<size_t>(to.vertex)] = 0;
            auto q = connect_within(g, from, to, len_cap, blocked);
            if (!q) {
                last_error = "AssemblyFailed: no connector for member " + std::to_string(j) +
                             " at family size " + std::to_string(k);
                ok = false;
                break;
            }
            // connectors must stay disjoint from each other
            for (size_t t = 1; t + 1 < q->vertices.size(); ++t)
                banned[static_cast<size_t>(q->vertices[t])] = 1;
            cyc.insert(cyc.end(), pj.vertices.begin(), pj.vertices.end());
            for (size_t t = 1; t + 1 < q->vertices.size(); ++t) cyc.push_back(q->vertices[t]);
        }
        if (!ok) continue;
        PcWalk cycle = check_pc_cycle(g, cyc);
        if (Rational(cycle.length()) > length_budget) {
            last_error = "AssemblyFailed: cycle length " + std::to_string(cycle.length()) +
                         " exceeds eps*n/2 at family size " + std::to_string(k);
            continue;
        }
        return {cycle, AbsorbingFamily::build(g, chained, gamma)};
    }
    fail("AssemblyFailed", last_error);
}

namespace {

// locate the member as a contiguous run in the cycle (the member may sit in
// either direction); returns the run in cycle order, or empty
std::vector<VertexId> member_run_in_cycle(const std::vector<VertexId>& cyc, const PcWalk& member) {
    size_t n = cyc.size();
    std::vector<VertexId> rev{member.vertices[3], member.vertices[2], member.vertices[1],
                              member.vertices[0]};
    for (size_t i = 0; i < n; ++i) {
        auto at = [&](size_t off) { return cyc[(i + off) % n]; };
        std::vector<VertexId> fwd{at(0), at(1), at(2), at(3)};
        if (fwd == member.vertices || fwd == rev) return fwd;
    }
    return {};
}

} // namespace

PcWalk absorb_paths(const EdgeColouredGraph& g, const PcWalk& C, const AbsorbingFamily& fam,
                    const std::vector<PcWalk>& paths) {
    check_pc_cycle(g, C.vertices);
    std::set<VertexId> cset(C.vertices.begin(), C.vertices.end());
    std::set<VertexId> pset;
    for (const PcWalk& p : paths) {
        check_pc_path(g, p.vertices);
        for (VertexId v : p.vertices) {
            if (cset.count(v)) fail("BadArgument", "paths must avoid the cycle");
            if (!pset.insert(v).second) fail("BadArgument", "paths overlap");
        }
    }
    if (Rational(static_cast<long long>(paths.size())) > fam.gamma * g.n())
        fail("BadArgument", "more paths than gamma*n");

    // units: singletons from short paths, whole paths of >= 4 vertices
    std::vector<std::vector<VertexId>> units;
    for (const PcWalk& p : paths) {
        if (p.vertices.size() <= 3)
            for (VertexId v : p.vertices) units.push_back({v});
        else
            units.push_back(p.vertices);
    }

    std::vector<VertexId> cyc = C.vertices;
    std::vector<char> used(fam.members.size(), 0);

    for (const auto& unit : units) {
        bool placed = false;
        for (size_t mi = 0; mi < fam.members.size() && !placed; ++mi) {
            if (used[mi]) continue;
            std::vector<VertexId> run = member_run_in_cycle(cyc, fam.members[mi]);
            if (run.empty()) continue;
            PcWalk run_path{WalkKind::Path, run, {}};
            for (int t = 0; t < 3; ++t)
                run_path.colours.push_back(
                    g.colour_of(run[static_cast<size_t>(t)], run[static_cast<size_t>(t + 1)]).value());

            std::vector<VertexId> insert_seq;
            if (unit.size() == 1) {
                if (is_absorbing_for_vertex(g, run_path, unit[0])) insert_seq = unit;
            } else {
                if (is_absorbing_for_pair(g, run_path, unit[0], unit[1], unit[unit.size() - 2],
                                          unit.back())) {
                    insert_seq = unit;
                } else {
                    std::vector<VertexId> rev(unit.rbegin(), unit.rend());
                    if (is_absorbing_for_pair(g, run_path, rev[0], rev[1], rev[rev.size() - 2],
                                              rev.back()))
                        insert_seq = rev;
                }
            }
            if (insert_seq.empty()) continue;

            // splice between run[1] and run[2] (consecutive in cycle order)
            for (size_t i = 0; i < cyc.size(); ++i) {
                size_t jn = (i + 1) % cyc.size();
                if (cyc[i] == run[1] && cyc[jn] == run[2]) {
                    cyc.insert(cyc.begin() + static_cast<long>(jn), insert_seq.begin(),
                               insert_seq.end());
                    placed = true;
                    break;
                }
            }
            if (placed) used[mi] = 1;
        }
        if (!placed)
            fail("AbsorberExhausted",
                 "no unused family member absorbs a unit starting at vertex " +
                     std::to_string(unit[0]));
    }

    PcWalk out = check_pc_cycle(g, cyc);
    std::set<VertexId> expect = cset;
    expect.insert(pset.begin(), pset.end());
    if (std::set<VertexId>(out.vertices.begin(), out.vertices.end()) != expect)
        fail("Internal", "absorbed cycle vertex set mismatch");
    return out;
}

} // namespace ecg

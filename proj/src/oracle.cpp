#include "ecg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "ecg/verify.hpp"

namespace ecg {

namespace {

void refuse_if_large(int n, int limit, bool override_size, const char* what) {
    if (n > limit && !override_size)
        fail("RefuseSize", std::string(what) + " limited to n <= " + std::to_string(limit) +
                               " (pass the override flag to lift)");
}

using Mask = std::uint32_t;

std::uint64_t pack(Mask mask, int last, int c_plus1, int extra = 0) {
    return static_cast<std::uint64_t>(mask) | (static_cast<std::uint64_t>(last) << 32) |
           (static_cast<std::uint64_t>(c_plus1) << 40) | (static_cast<std::uint64_t>(extra) << 52);
}

// Max number of edges extendable from (mask, last, lastc).
int path_dp(const EdgeColouredGraph& g, Mask mask, int last, ColourId lastc,
            std::unordered_map<std::uint64_t, int>& memo) {
    std::uint64_t key = pack(mask, last, lastc + 1);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (auto [w, c] : g.neighbours(last)) {
        if (mask & (Mask(1) << w)) continue;
        if (c == lastc) continue;
        best = std::max(best, 1 + path_dp(g, mask | (Mask(1) << w), w, c, memo));
    }
    memo.emplace(key, best);
    return best;
}

} // namespace

PcWalk longest_pc_path(const EdgeColouredGraph& g, const OracleLimits& limits) {
    refuse_if_large(g.n(), limits.search_limit, limits.override_size, "longest_pc_path");
    if (g.n() == 0) fail("BadArgument", "empty graph");

    std::unordered_map<std::uint64_t, int> memo;
    int best = -1, best_start = 0;
    for (int s = 0; s < g.n(); ++s) {
        int v = path_dp(g, Mask(1) << s, s, kNoColour, memo);
        if (v > best) {
            best = v;
            best_start = s;
        }
    }

    // Reconstruct, lowest-index extension first.
    std::vector<VertexId> path{best_start};
    Mask mask = Mask(1) << best_start;
    ColourId lastc = kNoColour;
    int remaining = best;
    while (remaining > 0) {
        for (auto [w, c] : g.neighbours(path.back())) {
            if (mask & (Mask(1) << w)) continue;
            if (c == lastc) continue;
            if (1 + path_dp(g, mask | (Mask(1) << w), w, c, memo) == remaining) {
                path.push_back(w);
                mask |= Mask(1) << w;
                lastc = c;
                --remaining;
                break;
            }
        }
    }
    return check_pc_path(g, path);
}

namespace {

// Max cycle length closable from the state; start vertex s is the lowest set
// bit of mask and only vertices > s may be visited.
int cycle_dp(const EdgeColouredGraph& g, Mask mask, int last, ColourId lastc, ColourId firstc,
             int s, std::unordered_map<std::uint64_t, int>& memo) {
    std::uint64_t key = pack(mask, last, lastc + 1, firstc + 1);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = 0;
    int size = std::popcount(mask);
    if (size >= 3) {
        auto c = g.colour_of(last, s);
        if (c && *c != lastc && *c != firstc) best = size;
    }
    for (auto [w, c] : g.neighbours(last)) {
        if (w <= s || (mask & (Mask(1) << w))) continue;
        if (c == lastc) continue;
        ColourId fc = firstc == kNoColour ? c : firstc;
        best = std::max(best, cycle_dp(g, mask | (Mask(1) << w), w, c, fc, s, memo));
    }
    memo.emplace(key, best);
    return best;
}

} // namespace

std::optional<PcWalk> longest_pc_cycle(const EdgeColouredGraph& g, const OracleLimits& limits) {
    refuse_if_large(g.n(), limits.search_limit, limits.override_size, "longest_pc_cycle");
    std::unordered_map<std::uint64_t, int> memo;
    int best = 0, best_start = -1;
    for (int s = 0; s < g.n(); ++s) {
        int v = cycle_dp(g, Mask(1) << s, s, kNoColour, kNoColour, s, memo);
        if (v > best) {
            best = v;
            best_start = s;
        }
    }
    if (best == 0) return std::nullopt;

    int s = best_start;
    std::vector<VertexId> cyc{s};
    Mask mask = Mask(1) << s;
    ColourId lastc = kNoColour, firstc = kNoColour;
    while (static_cast<int>(cyc.size()) < best) {
        for (auto [w, c] : g.neighbours(cyc.back())) {
            if (w <= s || (mask & (Mask(1) << w))) continue;
            if (c == lastc) continue;
            ColourId fc = firstc == kNoColour ? c : firstc;
            if (cycle_dp(g, mask | (Mask(1) << w), w, c, fc, s, memo) == best) {
                cyc.push_back(w);
                mask |= Mask(1) << w;
                lastc = c;
                firstc = fc;
                break;
            }
        }
    }
    return check_pc_cycle(g, cyc);
}

namespace {

void count_dfs(const EdgeColouredGraph& g, VertexId v, ColourId lastc, int depth, int len,
               VertexId y, const std::set<ColourId>& allowed, std::vector<char>& visited,
               std::uint64_t& count) {
    for (auto [w, c] : g.neighbours(v)) {
        if (c == lastc || visited[static_cast<size_t>(w)]) continue;
        if (depth + 1 == len) {
            if (w == y && (allowed.empty() || allowed.count(c))) ++count;
            continue;
        }
        if (w == y) continue; // y may only appear as the final vertex
        visited[static_cast<size_t>(w)] = 1;
        count_dfs(g, w, c, depth + 1, len, y, allowed, visited, count);
        visited[static_cast<size_t>(w)] = 0;
    }
}

} // namespace

PathCount count_pc_paths(const EdgeColouredGraph& g, VertexId x, VertexId y, int len,
                         const std::set<ColourId>& allowed_end_colours, const OracleLimits& limits) {
    refuse_if_large(g.n(), limits.search_limit, limits.override_size, "count_pc_paths");
    refuse_if_large(len, limits.search_limit, limits.override_size, "count_pc_paths length");
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) fail("BadArgument", "count_pc_paths requires x != y");
    if (len < 1) fail("BadArgument", "length must be at least 1");

    std::uint64_t count = 0;
    std::vector<char> visited(static_cast<size_t>(g.n()), 0);
    visited[static_cast<size_t>(x)] = 1;
    count_dfs(g, x, kNoColour, 0, len, y, allowed_end_colours, visited, count);

    BigInt denom = 1;
    for (int i = 1; i < len; ++i) denom *= g.n();
    return {count, Rational(BigInt(count), denom)};
}

namespace {

// Lexicographically minimal upper-triangle colour matrix over vertex
// permutations; colours canonicalized per permutation by first occurrence.
std::vector<int> canonical_form(int n, const std::vector<std::vector<int>>& mat) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> flat;
        flat.reserve(static_cast<size_t>(n * (n - 1) / 2));
        std::vector<int> relabel; // old colour id -> new (index = order of first occurrence)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int entry = mat[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                               [static_cast<size_t>(perm[static_cast<size_t>(j)])];
                if (entry == 0) {
                    flat.push_back(0);
                    continue;
                }
                int old = entry - 1;
                int pos = -1;
                for (size_t k = 0; k < relabel.size(); ++k)
                    if (relabel[k] == old) pos = static_cast<int>(k);
                if (pos == -1) {
                    pos = static_cast<int>(relabel.size());
                    relabel.push_back(old);
                }
                flat.push_back(pos + 1);
            }
        if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool subset_connected(int n, const std::vector<std::pair<int, int>>& pairs, Mask mask) {
    if (n == 1) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask & (Mask(1) << i)) {
            adj[static_cast<size_t>(pairs[i].first)].push_back(pairs[i].second);
            adj[static_cast<size_t>(pairs[i].second)].push_back(pairs[i].first);
        }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

} // namespace

std::vector<EdgeColouredGraph> enumerate_small(int n, int max_colours, const OracleLimits& limits) {
    refuse_if_large(n, limits.enum_limit, limits.override_size, "enumerate_small");
    if (n < 1 || max_colours < 1) fail("BadArgument", "need n >= 1 and max_colours >= 1");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    int m_all = static_cast<int>(pairs.size());

    std::set<std::vector<int>> seen;
    std::vector<EdgeColouredGraph> out;

    auto emit_canonical = [&](const std::vector<int>& canon) {
        if (!seen.insert(canon).second) return;
        std::vector<std::tuple<int, int, ColourLabel>> edges;
        size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                if (canon[idx] != 0) edges.emplace_back(i, j, canon[idx] - 1);
        out.push_back(EdgeColouredGraph::from_edges(n, edges));
    };

    for (Mask mask = 0; mask < (Mask(1) << m_all); ++mask) {
        std::vector<int> chosen;
        for (int i = 0; i < m_all; ++i)
            if (mask & (Mask(1) << i)) chosen.push_back(i);
        if (n > 1 && chosen.empty()) continue;
        if (!subset_connected(n, pairs, mask)) continue;

        // Colourings in restricted-growth form (kills pure colour renamings).
        int m = static_cast<int>(chosen.size());
        std::vector<int> col(static_cast<size_t>(m), 0);
        for (;;) {
            std::vector<std::vector<int>> mat(static_cast<size_t>(n),
                                              std::vector<int>(static_cast<size_t>(n), 0));
            for (int i = 0; i < m; ++i) {
                auto [u, v] = pairs[static_cast<size_t>(chosen[static_cast<size_t>(i)])];
                mat[static_cast<size_t>(u)][static_cast<size_t>(v)] = col[static_cast<size_t>(i)] + 1;
                mat[static_cast<size_t>(v)][static_cast<size_t>(u)] = col[static_cast<size_t>(i)] + 1;
            }
            emit_canonical(canonical_form(n, mat));

            // next restricted-growth string
            int i = m - 1;
            for (; i >= 1; --i) {
                int cap = *std::max_element(col.begin(), col.begin() + i) + 1;
                cap = std::min(cap, max_colours - 1);
                if (col[static_cast<size_t>(i)] < cap) break;
            }
            if (i < 1) break;
            ++col[static_cast<size_t>(i)];
            std::fill(col.begin() + i + 1, col.end(), 0);
        }
        if (n == 1) emit_canonical({});
    }
    if (n == 1 && out.empty()) out.push_back(EdgeColouredGraph::from_edges(1, {}));
    return out;
}

std::string ScanReport::to_json() const {
    nlohmann::json j;
    j["n"] = n_max;
    j["colour_budget"] = colour_budget;
    j["instances_checked"] = instances_checked;
    j["violators"] = violators;
    return j.dump(2);
}

ScanReport conjecture_scan(int n_max, int max_colours, const OracleLimits& limits) {
    if (n_max > 5 && !limits.override_size)
        fail("RefuseSize", "conjecture_scan limited to n_max <= 5 (pass the override flag to lift)");
    ScanReport report;
    report.n_max = n_max;
    report.colour_budget = max_colours;
    for (int n = 2; n <= n_max; ++n) {
        for (const EdgeColouredGraph& g : enumerate_small(n, max_colours, limits)) {
            ++report.instances_checked;
            int d = g.min_colour_degree();
            long long path_target = 3LL * d / 2;
            auto cyc = longest_pc_cycle(g, limits);
            bool hamilton = cyc && cyc->length() == n;
            if (hamilton) continue;
            PcWalk p = longest_pc_path(g, limits);
            if (p.length() < path_target) report.violators.push_back(serialize_ecg(g));
        }
    }
    return report;
}

} // namespace ecg

#include <doctest.h>

#include <algorithm>

#include "ecg/gen.hpp"
#include "ecg/rng.hpp"
#include "ecg/subroutines.hpp"
#include "helpers.hpp"

using namespace ecg;
using namespace ecg::testing;

namespace {

// brute-force maximum matching over the edge list (include/exclude)
int brute_max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    int best = 0;
    std::function<void(size_t, std::vector<char>&, int)> rec = [&](size_t i,
                                                                   std::vector<char>& used,
                                                                   int size) {
        best = std::max(best, size);
        if (i == edges.size()) return;
        rec(i + 1, used, size);
        auto [u, v] = edges[i];
        if (!used[static_cast<size_t>(u)] && !used[static_cast<size_t>(v)]) {
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
            rec(i + 1, used, size + 1);
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 0;
        }
    };
    std::vector<char> used(static_cast<size_t>(n), 0);
    rec(0, used, 0);
    return best;
}

bool is_matching(const Matching& m) {
    std::set<int> seen;
    for (auto [u, v] : m) {
        if (!seen.insert(u).second) return false;
        if (!seen.insert(v).second) return false;
    }
    return true;
}

} // namespace

TEST_CASE("max_bipartite_matching basics") {
    // complete bipartite K_{4,4}
    std::vector<std::tuple<int, int, ColourLabel>> e;
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) e.push_back({i, j, 0});
    auto g = EdgeColouredGraph::from_edges(8, e);
    auto m = max_bipartite_matching(g, {0, 1, 2, 3}, {4, 5, 6, 7});
    CHECK(m.size() == 4);
    CHECK(is_matching(m));

    // star K_{1,3}
    auto star = mono_star(3);
    CHECK(max_bipartite_matching(star, {0}, {1, 2, 3}).size() == 1);

    // non-bipartite edge is rejected
    auto tri = rainbow_triangle();
    CHECK_THROWS_AS(max_bipartite_matching(tri, {0, 1}, {2}), Error);
}

TEST_CASE("max_bipartite_matching dense min degree has perfect matching") {
    // both sides m=12, min degree >= 11: Hall's condition holds
    int m = 12;
    Xorshift64Star rng(5);
    std::vector<std::tuple<int, int, ColourLabel>> e;
    for (int i = 0; i < m; ++i) {
        int skip = rng.range_int(m + 3); // at most one missing partner per left vertex
        for (int j = 0; j < m; ++j)
            if (j != skip) e.push_back({i, m + j, 0});
    }
    auto g = EdgeColouredGraph::from_edges(2 * m, e);
    std::vector<int> L, R;
    for (int i = 0; i < m; ++i) L.push_back(i), R.push_back(m + i);
    CHECK(max_bipartite_matching(g, L, R).size() == static_cast<size_t>(m));
}

TEST_CASE("max_bipartite_matching equals brute force on small graphs") {
    Xorshift64Star rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int nl = 1 + rng.range_int(4), nr = 1 + rng.range_int(4);
        std::vector<std::tuple<int, int, ColourLabel>> e;
        std::vector<std::pair<int, int>> plain;
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (rng.range(2)) {
                    e.push_back({i, nl + j, 0});
                    plain.push_back({i, nl + j});
                }
        auto g = EdgeColouredGraph::from_edges(nl + nr, e);
        std::vector<int> L, R;
        for (int i = 0; i < nl; ++i) L.push_back(i);
        for (int j = 0; j < nr; ++j) R.push_back(nl + j);
        auto m = max_bipartite_matching(g, L, R);
        CHECK(is_matching(m));
        CHECK(static_cast<int>(m.size()) == brute_max_matching(nl + nr, plain));
    }
}

TEST_CASE("bounded_degree_matching meets the e/(Delta+1) bound") {
    auto tri = rainbow_triangle();
    CHECK(bounded_degree_matching(tri).size() == 1);

    // disjoint perfect matching graph
    auto pm = EdgeColouredGraph::from_edges(6, {{0, 1, 0}, {2, 3, 0}, {4, 5, 0}});
    CHECK(bounded_degree_matching(pm).size() == 3);

    Xorshift64Star rng(123);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + rng.range_int(17); // up to 20
        std::vector<std::tuple<int, int, ColourLabel>> e;
        std::vector<std::pair<int, int>> plain;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.range(100) < 30) {
                    e.push_back({i, j, 0});
                    plain.push_back({i, j});
                }
        auto g = EdgeColouredGraph::from_edges(n, e);
        auto m = bounded_degree_matching(g);
        CHECK(is_matching(m));
        int delta = 0;
        for (int v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
        CHECK(static_cast<long long>(m.size()) * (delta + 1) >= g.edge_count());
        if (n <= 12) CHECK(static_cast<int>(m.size()) == brute_max_matching(n, plain));
    }
}

TEST_CASE("gh_hamilton_cycle basics") {
    // complete digraph on 3 vertices
    Digraph d3(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) d3.add_arc(i, j);
    auto cyc = gh_hamilton_cycle(d3);
    CHECK(is_directed_hamilton_cycle(d3, cyc));
    CHECK(cyc == std::vector<int>{0, 1, 2});

    // directed 4-cycle: semi-degree 1 < 2
    Digraph c4(4);
    c4.add_arc(0, 1);
    c4.add_arc(1, 2);
    c4.add_arc(2, 3);
    c4.add_arc(3, 0);
    CHECK_THROWS_AS(gh_hamilton_cycle(c4), Error);
}

TEST_CASE("gh_hamilton_cycle exhaustive n=4") {
    // all digraphs on 4 vertices with min semi-degree >= 2
    int pairs[12][2];
    int idx = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) {
                pairs[idx][0] = i;
                pairs[idx][1] = j;
                ++idx;
            }
    int checked = 0;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        Digraph d(4);
        for (int k = 0; k < 12; ++k)
            if (mask & (1u << k)) d.add_arc(pairs[k][0], pairs[k][1]);
        bool ok = true;
        for (int v = 0; v < 4; ++v)
            if (std::min(d.out_degree(v), d.in_degree(v)) < 2) ok = false;
        if (!ok) continue;
        ++checked;
        auto cyc = gh_hamilton_cycle(d);
        CHECK(is_directed_hamilton_cycle(d, cyc));
    }
    CHECK(checked > 0);
}

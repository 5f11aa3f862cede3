#include "ecg/subroutines.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ecg {

void Digraph::add_arc(int u, int v) {
    if (u == v) fail("SelfLoop", "self-arc at " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) fail("VertexRange", "arc endpoint out of range");
    if (has_arc(u, v)) fail("DuplicateArc", "duplicate arc");
    out_[static_cast<size_t>(u)].push_back(v);
    in_[static_cast<size_t>(v)].push_back(u);
}

bool Digraph::has_arc(int u, int v) const {
    const auto& o = out_[static_cast<size_t>(u)];
    return std::find(o.begin(), o.end(), v) != o.end();
}

std::vector<int> kuhn_matching(const std::vector<std::vector<int>>& adj, int n_right) {
    int n_left = static_cast<int>(adj.size());
    std::vector<int> match_l(static_cast<size_t>(n_left), -1);
    std::vector<int> match_r(static_cast<size_t>(n_right), -1);
    std::vector<char> used;

    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int v : adj[static_cast<size_t>(u)]) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            if (match_r[static_cast<size_t>(v)] == -1 || try_augment(match_r[static_cast<size_t>(v)])) {
                match_l[static_cast<size_t>(u)] = v;
                match_r[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };

    for (int u = 0; u < n_left; ++u) {
        used.assign(static_cast<size_t>(n_right), 0);
        try_augment(u);
    }
    return match_l;
}

Matching max_bipartite_matching(const EdgeColouredGraph& g, const std::vector<VertexId>& left,
                                const std::vector<VertexId>& right) {
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < left.size(); ++i) side[static_cast<size_t>(left[i])] = 0;
    for (size_t i = 0; i < right.size(); ++i) side[static_cast<size_t>(right[i])] = 1;

    std::vector<int> rindex(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < right.size(); ++i) rindex[static_cast<size_t>(right[i])] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(left.size());
    for (const Edge& e : g.edges()) {
        int su = side[static_cast<size_t>(e.u)], sv = side[static_cast<size_t>(e.v)];
        if (su == -1 && sv == -1) continue; // edge outside both classes is ignorable
        if (su == sv) fail("NotBipartite", "edge inside one class");
        if (su == -1 || sv == -1) fail("NotBipartite", "edge leaves the bipartition");
    }
    for (size_t i = 0; i < left.size(); ++i)
        for (auto [w, c] : g.neighbours(left[i]))
            if (rindex[static_cast<size_t>(w)] >= 0) adj[i].push_back(rindex[static_cast<size_t>(w)]);
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> ml = kuhn_matching(adj, static_cast<int>(right.size()));
    Matching m;
    for (size_t i = 0; i < left.size(); ++i)
        if (ml[i] != -1) m.emplace_back(left[i], right[static_cast<size_t>(ml[i])]);
    return m;
}

namespace {

// Standard blossom-contraction maximum matching, O(V^3).
class Blossom {
public:
    explicit Blossom(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

    void add_edge(int u, int v) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }

    std::vector<int> solve() {
        match_.assign(static_cast<size_t>(n_), -1);
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<size_t>(v)] == -1) augment(v);
        return match_;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, blossom_;

    int lca(int a, int b) {
        std::vector<char> used(static_cast<size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<size_t>(a)];
            used[static_cast<size_t>(a)] = 1;
            if (match_[static_cast<size_t>(a)] == -1) break;
            a = p_[static_cast<size_t>(match_[static_cast<size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<size_t>(b)];
            if (used[static_cast<size_t>(b)]) return b;
            b = p_[static_cast<size_t>(match_[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<size_t>(v)] != b) {
            blossom_[static_cast<size_t>(base_[static_cast<size_t>(v)])] = 1;
            blossom_[static_cast<size_t>(base_[static_cast<size_t>(match_[static_cast<size_t>(v)])])] = 1;
            p_[static_cast<size_t>(v)] = child;
            child = match_[static_cast<size_t>(v)];
            v = p_[static_cast<size_t>(match_[static_cast<size_t>(v)])];
        }
    }

    int find_path(int root) {
        used_.assign(static_cast<size_t>(n_), 0);
        p_.assign(static_cast<size_t>(n_), -1);
        base_.resize(static_cast<size_t>(n_));
        std::iota(base_.begin(), base_.end(), 0);

        used_[static_cast<size_t>(root)] = 1;
        std::vector<int> q{root};
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : adj_[static_cast<size_t>(v)]) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
                    match_[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<size_t>(to)] != -1 && p_[static_cast<size_t>(match_[static_cast<size_t>(to)])] != -1)) {
                    int curbase = lca(v, to);
                    blossom_.assign(static_cast<size_t>(n_), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
                            base_[static_cast<size_t>(i)] = curbase;
                            if (!used_[static_cast<size_t>(i)]) {
                                used_[static_cast<size_t>(i)] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p_[static_cast<size_t>(to)] == -1) {
                    p_[static_cast<size_t>(to)] = v;
                    if (match_[static_cast<size_t>(to)] == -1) return to;
                    used_[static_cast<size_t>(match_[static_cast<size_t>(to)])] = 1;
                    q.push_back(match_[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void augment(int root) {
        int v = find_path(root);
        if (v == -1) return;
        while (v != -1) {
            int pv = p_[static_cast<size_t>(v)];
            int ppv = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = ppv;
        }
    }
};

} // namespace

Matching bounded_degree_matching(const EdgeColouredGraph& g) {
    Blossom b(g.n());
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
    std::vector<int> match = b.solve();
    Matching m;
    for (int v = 0; v < g.n(); ++v)
        if (match[static_cast<size_t>(v)] > v) m.emplace_back(v, match[static_cast<size_t>(v)]);
    return m;
}

bool is_directed_hamilton_cycle(const Digraph& d, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != d.n() || d.n() < 2) return false;
    std::set<int> seen(order.begin(), order.end());
    if (static_cast<int>(seen.size()) != d.n()) return false;
    for (size_t i = 0; i < order.size(); ++i)
        if (!d.has_arc(order[i], order[(i + 1) % order.size()])) return false;
    return true;
}

namespace {

// Insertion heuristic: greedy directed path from 0, close it, then insert
// the remaining vertices between consecutive cycle vertices.
std::vector<int> gh_heuristic(const Digraph& d) {
    int n = d.n();
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<int> path{0};
    used[0] = 1;
    bool grown = true;
    while (grown) {
        grown = false;
        for (int v : d.out(path.back()))
            if (!used[static_cast<size_t>(v)]) {
                path.push_back(v);
                used[static_cast<size_t>(v)] = 1;
                grown = true;
                break;
            }
        if (!grown)
            for (int v : d.in(path.front()))
                if (!used[static_cast<size_t>(v)]) {
                    path.insert(path.begin(), v);
                    used[static_cast<size_t>(v)] = 1;
                    grown = true;
                    break;
                }
    }
    if (!d.has_arc(path.back(), path.front())) return {};
    std::vector<int> cycle = path;

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)]) rest.push_back(v);
    bool progress = true;
    while (!rest.empty() && progress) {
        progress = false;
        for (size_t ri = 0; ri < rest.size(); ++ri) {
            int w = rest[ri];
            for (size_t i = 0; i < cycle.size(); ++i) {
                int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
                if (d.has_arc(u, w) && d.has_arc(w, v)) {
                    cycle.insert(cycle.begin() + static_cast<long>(i) + 1, w);
                    rest.erase(rest.begin() + static_cast<long>(ri));
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }
    if (!rest.empty()) return {};
    return cycle;
}

bool gh_backtrack(const Digraph& d, std::vector<int>& order, std::vector<char>& used) {
    if (static_cast<int>(order.size()) == d.n())
        return d.has_arc(order.back(), order.front());
    std::vector<int> nexts = d.out(order.back());
    std::sort(nexts.begin(), nexts.end());
    for (int v : nexts) {
        if (used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = 1;
        order.push_back(v);
        if (gh_backtrack(d, order, used)) return true;
        order.pop_back();
        used[static_cast<size_t>(v)] = 0;
    }
    return false;
}

} // namespace

std::vector<int> gh_hamilton_cycle(const Digraph& d) {
    int n = d.n();
    for (int v = 0; v < n; ++v)
        if (2 * std::min(d.out_degree(v), d.in_degree(v)) < n)
            fail("DegreeTooLow", "vertex " + std::to_string(v) + " has semi-degree below n/2");

    std::vector<int> cycle = gh_heuristic(d);
    if (!cycle.empty() && is_directed_hamilton_cycle(d, cycle)) return cycle;

    std::vector<int> order{0};
    std::vector<char> used(static_cast<size_t>(n), 0);
    used[0] = 1;
    if (gh_backtrack(d, order, used) && is_directed_hamilton_cycle(d, order)) return order;
    fail("NoCycleFound", "exhaustive search found no directed Hamilton cycle");
}

} // namespace ecg

#include "ecg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ecg {

EdgeColouredGraph EdgeColouredGraph::from_edges(
    int n, const std::vector<std::tuple<int, int, ColourLabel>>& edges) {
    if (n < 0) fail("BadArgument", "negative vertex count");
    EdgeColouredGraph g;
    g.n_ = n;

    std::vector<std::tuple<int, int, ColourLabel>> sorted;
    sorted.reserve(edges.size());
    for (auto [u, v, c] : edges) {
        if (u == v) fail("SelfLoop", "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) fail("VertexRange", "edge endpoint out of range");
        if (c < 0) fail("BadColour", "negative colour label");
        sorted.emplace_back(u, v, c);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) {
                  return std::pair(std::get<0>(a), std::get<1>(a)) <
                         std::pair(std::get<0>(b), std::get<1>(b));
              });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (std::get<0>(sorted[i]) == std::get<0>(sorted[i - 1]) &&
            std::get<1>(sorted[i]) == std::get<1>(sorted[i - 1]))
            fail("DuplicateEdge", "parallel edge " + std::to_string(std::get<0>(sorted[i])) + "-" +
                                      std::to_string(std::get<1>(sorted[i])));

    std::map<ColourLabel, ColourId> intern;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v, label] : sorted) {
        auto it = intern.find(label);
        ColourId id;
        if (it == intern.end()) {
            id = static_cast<ColourId>(g.colour_labels_.size());
            g.colour_labels_.push_back(label);
            intern.emplace(label, id);
        } else {
            id = it->second;
        }
        g.edges_.push_back({u, v, id});
        g.adj_[static_cast<size_t>(u)].emplace_back(v, id);
        g.adj_[static_cast<size_t>(v)].emplace_back(u, id);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

std::optional<ColourId> EdgeColouredGraph::id_of_label(ColourLabel l) const {
    for (size_t i = 0; i < colour_labels_.size(); ++i)
        if (colour_labels_[i] == l) return static_cast<ColourId>(i);
    return std::nullopt;
}

std::optional<ColourId> EdgeColouredGraph::colour_of(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair(v, ColourId(-1)));
    if (it != a.end() && it->first == v) return it->second;
    return std::nullopt;
}

int EdgeColouredGraph::colour_degree(VertexId v) const {
    check_vertex(v);
    std::set<ColourId> cs;
    for (auto [w, c] : adj_[static_cast<size_t>(v)]) cs.insert(c);
    return static_cast<int>(cs.size());
}

int EdgeColouredGraph::colour_degree_within(VertexId v, const std::vector<VertexId>& S) const {
    check_vertex(v);
    std::vector<char> in_s(static_cast<size_t>(n_), 0);
    for (VertexId s : S) {
        check_vertex(s);
        in_s[static_cast<size_t>(s)] = 1;
    }
    std::set<ColourId> cs;
    for (auto [w, c] : adj_[static_cast<size_t>(v)])
        if (in_s[static_cast<size_t>(w)]) cs.insert(c);
    return static_cast<int>(cs.size());
}

int EdgeColouredGraph::min_colour_degree() const {
    int best = n_ == 0 ? 0 : colour_degree(0);
    for (VertexId v = 1; v < n_; ++v) best = std::min(best, colour_degree(v));
    return best;
}

std::vector<VertexId> EdgeColouredGraph::anchored_neighbourhood(const AnchoredVertex& x) const {
    check_vertex(x.vertex);
    std::vector<VertexId> out;
    for (auto [w, c] : adj_[static_cast<size_t>(x.vertex)])
        if (c != x.forbidden_colour) out.push_back(w);
    return out;
}

bool EdgeColouredGraph::operator==(const EdgeColouredGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
        if (colour_labels_[static_cast<size_t>(edges_[i].colour)] !=
            other.colour_labels_[static_cast<size_t>(other.edges_[i].colour)])
            return false;
    }
    return true;
}

namespace {

std::vector<std::tuple<int, int, ColourLabel>> labelled_edges(const EdgeColouredGraph& g) {
    std::vector<std::tuple<int, int, ColourLabel>> out;
    out.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, g.label(e.colour));
    return out;
}

// Edge uv is redundant when both endpoints keep another edge of its colour.
bool removable(const EdgeColouredGraph& g, const Edge& e) {
    int at_u = 0, at_v = 0;
    for (auto [w, c] : g.neighbours(e.u))
        if (c == e.colour) ++at_u;
    for (auto [w, c] : g.neighbours(e.v))
        if (c == e.colour) ++at_v;
    return at_u >= 2 && at_v >= 2;
}

} // namespace

EdgeColouredGraph critical_reduction(const EdgeColouredGraph& g) {
    EdgeColouredGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : cur.edges()) {
            if (removable(cur, e)) {
                auto edges = labelled_edges(cur);
                std::erase_if(edges, [&](const auto& t) {
                    return std::get<0>(t) == e.u && std::get<1>(t) == e.v;
                });
                cur = EdgeColouredGraph::from_edges(cur.n(), edges);
                changed = true;
                break; // restart the lexicographic scan on the reduced graph
            }
        }
    }
    return cur;
}

bool is_critical(const EdgeColouredGraph& g) {
    for (const Edge& e : g.edges())
        if (removable(g, e)) return false;
    return true;
}

EdgeColouredGraph star_normalize(const EdgeColouredGraph& g) {
    if (!is_critical(g)) fail("NotCritical", "star_normalize requires a critical graph");

    // Union-find over edges of equal colour sharing a vertex.
    int m = g.edge_count();
    std::vector<int> parent(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

    std::map<std::pair<VertexId, ColourId>, int> seen; // (vertex, colour) -> edge index
    const auto& edges = g.edges();
    for (int i = 0; i < m; ++i) {
        for (VertexId end : {edges[static_cast<size_t>(i)].u, edges[static_cast<size_t>(i)].v}) {
            auto key = std::pair(end, edges[static_cast<size_t>(i)].colour);
            auto it = seen.find(key);
            if (it == seen.end())
                seen.emplace(key, i);
            else
                unite(i, it->second);
        }
    }

    ColourLabel next_fresh = 0;
    for (int c = 0; c < g.colour_count(); ++c) next_fresh = std::max(next_fresh, g.label(c) + 1);

    // First component of each colour (in edge order) keeps the colour; later
    // ones get fresh labels.
    std::map<ColourId, int> first_comp;
    std::map<int, ColourLabel> comp_label;
    std::vector<std::tuple<int, int, ColourLabel>> out;
    for (int i = 0; i < m; ++i) {
        const Edge& e = edges[static_cast<size_t>(i)];
        int root = find(i);
        auto fc = first_comp.find(e.colour);
        if (fc == first_comp.end()) first_comp.emplace(e.colour, root), fc = first_comp.find(e.colour);
        ColourLabel lab;
        if (fc->second == root) {
            lab = g.label(e.colour);
        } else {
            auto cl = comp_label.find(root);
            if (cl == comp_label.end()) {
                lab = next_fresh++;
                comp_label.emplace(root, lab);
            } else {
                lab = cl->second;
            }
        }
        out.emplace_back(e.u, e.v, lab);
    }
    return EdgeColouredGraph::from_edges(g.n(), out);
}

EdgeColouredGraph parse_ecg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::tuple<int, int, ColourLabel>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "ecg" || n < 0 || m < 0)
                fail("BadFormat", "malformed problem line at line " + std::to_string(lineno));
        } else if (tag == "e") {
            if (n < 0) fail("BadFormat", "edge before problem line");
            int u, v;
            ColourLabel c;
            if (!(ls >> u >> v >> c))
                fail("BadFormat", "malformed edge at line " + std::to_string(lineno));
            if (u < 1 || v < 1 || u >= v || v > n)
                fail("BadFormat", "edge endpoints out of range at line " + std::to_string(lineno));
            if (c < 0) fail("BadFormat", "negative colour at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1, c);
        } else {
            fail("BadFormat", "unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0) fail("BadFormat", "missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        fail("BadFormat", "edge count mismatch: header says " + std::to_string(m) + ", found " +
                              std::to_string(edges.size()));
    return EdgeColouredGraph::from_edges(n, edges); // rejects duplicates/self-loops
}

std::string serialize_ecg(const EdgeColouredGraph& g) {
    std::ostringstream out;
    out << "p ecg " << g.n() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << " " << e.v + 1 << " " << g.label(e.colour) << "\n";
    return out.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::pair<EdgeColouredGraph, std::vector<VertexId>>
induced_subgraph(const EdgeColouredGraph& g, const std::vector<VertexId>& keep) {
    std::vector<int> new_id(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        g.check_vertex(keep[i]);
        if (new_id[static_cast<size_t>(keep[i])] != -1) fail("BadArgument", "duplicate vertex in keep set");
        new_id[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<std::tuple<int, int, ColourLabel>> edges;
    for (const Edge& e : g.edges()) {
        int nu = new_id[static_cast<size_t>(e.u)], nv = new_id[static_cast<size_t>(e.v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv, g.label(e.colour));
    }
    return {EdgeColouredGraph::from_edges(static_cast<int>(keep.size()), edges), keep};
}

} // namespace ecg

#include "ecg/verify.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace ecg {

namespace {

// Fills walk colours; reports the first violation.
PcWalk check_walk(const EdgeColouredGraph& g, const std::vector<VertexId>& vs, WalkKind kind) {
    size_t len = vs.size();
    if (kind == WalkKind::Path && len < 1) fail("NotAPath", "empty vertex sequence");
    if (kind == WalkKind::Cycle && len < 3) fail("NotAPath", "cycle needs at least 3 vertices");

    std::set<VertexId> seen;
    for (VertexId v : vs) {
        g.check_vertex(v);
        if (!seen.insert(v).second) fail("NotSimple", "repeated vertex " + std::to_string(v));
    }

    PcWalk walk{kind, vs, {}};
    size_t edges = kind == WalkKind::Path ? len - 1 : len;
    for (size_t i = 0; i < edges; ++i) {
        VertexId a = vs[i], b = vs[(i + 1) % len];
        auto c = g.colour_of(a, b);
        if (!c) fail("NotAPath", "missing edge at index " + std::to_string(i));
        walk.colours.push_back(*c);
    }
    size_t joints = kind == WalkKind::Path ? (edges >= 1 ? edges - 1 : 0) : edges;
    for (size_t i = 0; i < joints; ++i) {
        if (walk.colours[i] == walk.colours[(i + 1) % edges])
            fail("NotProper", "equal consecutive colours at index " + std::to_string(i));
    }
    return walk;
}

} // namespace

PcWalk check_pc_path(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices) {
    return check_walk(g, vertices, WalkKind::Path);
}

PcWalk check_pc_cycle(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices) {
    return check_walk(g, vertices, WalkKind::Cycle);
}

bool is_pc_path(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices) {
    try {
        check_pc_path(g, vertices);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool is_pc_cycle(const EdgeColouredGraph& g, const std::vector<VertexId>& vertices) {
    try {
        check_pc_cycle(g, vertices);
        return true;
    } catch (const Error&) {
        return false;
    }
}

ParamOnePathCycle check_one_path_cycle(const EdgeColouredGraph& g,
                                       const std::vector<VertexId>& path,
                                       const std::vector<std::vector<VertexId>>& cycles,
                                       const Rational& rho, const AnchoredVertex& x,
                                       const AnchoredVertex& y) {
    Rational min_len = rho * g.n();

    // (a) every component properly coloured, all vertex-disjoint
    std::set<VertexId> all;
    auto note = [&](const std::vector<VertexId>& vs) {
        for (VertexId v : vs)
            if (!all.insert(v).second)
                fail("ClauseA", "components share vertex " + std::to_string(v));
    };
    if (path.empty()) fail("ClauseC", "missing path component");
    check_pc_path(g, path);
    note(path);
    for (const auto& cyc : cycles) {
        check_pc_cycle(g, cyc);
        note(cyc);
    }

    // (b) each cycle length >= rho n
    for (size_t i = 0; i < cycles.size(); ++i)
        if (Rational(static_cast<long long>(cycles[i].size())) < min_len)
            fail("ClauseB", "cycle " + std::to_string(i) + " shorter than rho*n");

    // (c) path length >= rho n with endpoints x and y
    if (Rational(static_cast<long long>(path.size()) - 1) < min_len)
        fail("ClauseC", "path shorter than rho*n");
    if (path.front() != x.vertex || path.back() != y.vertex)
        fail("ClauseC", "path endpoints do not match the anchors");

    // (d) C_H(x) = {c_x} and C_H(y) = {c_y}: the endpoints lie on the path
    // only, so each has exactly one H-edge.
    if (path.size() >= 2) {
        ColourId cx = g.colour_of(path[0], path[1]).value();
        ColourId cy = g.colour_of(path[path.size() - 2], path.back()).value();
        if (cx != x.forbidden_colour) fail("ClauseD", "path colour at x differs from anchor");
        if (cy != y.forbidden_colour) fail("ClauseD", "path colour at y differs from anchor");
    }

    return ParamOnePathCycle(g, path, cycles, x, y, rho);
}

bool is_valid_one_path_cycle(const EdgeColouredGraph& g, const std::vector<VertexId>& path,
                             const std::vector<std::vector<VertexId>>& cycles, const Rational& rho,
                             const AnchoredVertex& x, const AnchoredVertex& y) {
    try {
        check_one_path_cycle(g, path, cycles, rho, x, y);
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace {

bool witness_well_formed(const ExtremalWitness& w) {
    std::set<VertexId> a(w.A.begin(), w.A.end()), b(w.B.begin(), w.B.end());
    if (a.size() != w.A.size() || b.size() != w.B.size()) return false;
    for (VertexId v : w.B)
        if (a.count(v)) return false;
    std::set<ColourId> cs;
    for (VertexId v : w.A) {
        auto it = w.colour_map.find(v);
        if (it == w.colour_map.end()) return false;
        if (!cs.insert(it->second).second) return false; // c_a pairwise distinct
    }
    return true;
}

// Count of b in B adjacent to a with c(ab) = c_a.
int star_count(const EdgeColouredGraph& g, const std::vector<VertexId>& B, VertexId a, ColourId ca) {
    std::vector<char> in_b(static_cast<size_t>(g.n()), 0);
    for (VertexId v : B) in_b[static_cast<size_t>(v)] = 1;
    int cnt = 0;
    for (auto [w, c] : g.neighbours(a))
        if (in_b[static_cast<size_t>(w)] && c == ca) ++cnt;
    return cnt;
}

} // namespace

bool good_edge(const EdgeColouredGraph& g, const ExtremalWitness& w, VertexId a, VertexId a2) {
    auto c = g.colour_of(a, a2);
    if (!c) return false;
    auto ia = w.colour_map.find(a), ia2 = w.colour_map.find(a2);
    if (ia == w.colour_map.end() || ia2 == w.colour_map.end()) return false;
    return ia->second != *c && *c != ia2->second;
}

bool check_delta_extremal(const EdgeColouredGraph& g, const ExtremalWitness& w) {
    if (!witness_well_formed(w)) return false;
    Rational n(g.n());
    Rational eps_n = w.eps * n;

    // (A1)
    if (Rational(static_cast<long long>(w.A.size())) < (w.delta - w.eps) * n) return false;
    if (Rational(static_cast<long long>(w.B.size())) < (1 - w.delta - w.eps) * n) return false;

    // (A2)
    Rational b_target = Rational(static_cast<long long>(w.B.size())) - eps_n;
    for (VertexId a : w.A)
        if (Rational(star_count(g, w.B, a, w.colour_map.at(a))) < b_target) return false;

    // (A3)
    Rational a_target = Rational(static_cast<long long>(w.A.size())) - eps_n;
    std::map<VertexId, ColourId> amap = w.colour_map;
    for (VertexId b : w.B) {
        if (Rational(g.degree(b)) > (w.delta + w.eps) * n) return false;
        int cnt = 0;
        for (auto [v, c] : g.neighbours(b)) {
            auto it = amap.find(v);
            if (it != amap.end() && it->second == c) ++cnt;
        }
        if (Rational(cnt) < a_target) return false;
    }
    return true;
}

bool check_eps_extremal(const EdgeColouredGraph& g, const ExtremalWitness& w) {
    if (!witness_well_formed(w)) return false; // (E1)
    Rational n(g.n());
    Rational eps_n = w.eps * n;
    std::set<VertexId> a_set(w.A.begin(), w.A.end());

    // (E2)
    Rational b_target = Rational(static_cast<long long>(w.B.size())) - eps_n;
    Rational good_target =
        Rational(static_cast<long long>(w.A.size()) - 1) - eps_n; // a is not its own neighbour
    for (VertexId a : w.A) {
        if (Rational(star_count(g, w.B, a, w.colour_map.at(a))) < b_target) return false;
        int good = 0;
        for (auto [v, c] : g.neighbours(a))
            if (a_set.count(v) && good_edge(g, w, a, v)) ++good;
        if (Rational(good) < good_target) return false;
    }

    // (E3)
    Rational a_target = Rational(static_cast<long long>(w.A.size())) - eps_n;
    for (VertexId b : w.B) {
        int cnt = 0;
        for (auto [v, c] : g.neighbours(b)) {
            auto it = w.colour_map.find(v);
            if (it != w.colour_map.end() && it->second == c) ++cnt;
        }
        if (Rational(cnt) < a_target) return false;
    }
    return true;
}

std::string walk_certificate(const EdgeColouredGraph& g, const PcWalk& walk) {
    nlohmann::json j;
    j["kind"] = walk.kind == WalkKind::Path ? "path" : "cycle";
    j["vertices"] = walk.vertices;
    std::vector<ColourLabel> labels;
    for (ColourId c : walk.colours) labels.push_back(g.label(c));
    j["colours"] = labels;
    j["host_hash"] = graph_hash(g);
    return j.dump(2);
}

PcWalk verify_certificate(const EdgeColouredGraph& g, const std::string& certificate_json) {
    nlohmann::json j = nlohmann::json::parse(certificate_json);
    if (j.at("host_hash").get<std::uint64_t>() != graph_hash(g))
        fail("HostMismatch", "certificate host hash does not match the instance");
    std::vector<VertexId> vs = j.at("vertices").get<std::vector<VertexId>>();
    std::string kind = j.at("kind").get<std::string>();
    PcWalk walk = kind == "cycle" ? check_pc_cycle(g, vs) : check_pc_path(g, vs);
    std::vector<ColourLabel> labels = j.at("colours").get<std::vector<ColourLabel>>();
    if (labels.size() != walk.colours.size()) fail("BadCertificate", "colour list length mismatch");
    for (size_t i = 0; i < labels.size(); ++i)
        if (g.label(walk.colours[i]) != labels[i])
            fail("NotProper", "certificate colour differs from instance at index " + std::to_string(i));
    return walk;
}

} // namespace ecg

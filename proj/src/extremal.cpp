#include "ecg/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ecg {

namespace {

Rational size_r(const std::vector<VertexId>& v) { return Rational(static_cast<long long>(v.size())); }

std::set<VertexId> to_set(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

} // namespace

bool colour_classes_are_stars(const EdgeColouredGraph& g) {
    std::map<ColourId, std::vector<std::pair<int, int>>> classes;
    for (const Edge& e : g.edges()) classes[e.colour].push_back({e.u, e.v});
    for (const auto& [c, es] : classes) {
        if (es.size() <= 1) continue;
        // a single star <=> one endpoint of the first edge covers every edge
        bool star = false;
        for (int centre : {es[0].first, es[0].second}) {
            bool all = true;
            for (auto [u, v] : es)
                if (u != centre && v != centre) all = false;
            if (all) star = true;
        }
        if (!star) return false;
    }
    return true;
}

ExtremalWitness refine_extremal_pair(const EdgeColouredGraph& g, const std::vector<VertexId>& A_star,
                                     const std::vector<VertexId>& B_star, const Rational& delta,
                                     const Rational& eps) {
    // derive c_a as the majority colour into B*, smallest id on ties
    ExtremalWitness base;
    base.A = A_star;
    base.B = B_star;
    base.delta = delta;
    base.eps = eps;
    std::set<VertexId> bset(B_star.begin(), B_star.end());
    for (VertexId a : A_star) {
        std::map<ColourId, int> cnt;
        for (auto [v, c] : g.neighbours(a))
            if (bset.count(v)) ++cnt[c];
        ColourId best = kNoColour;
        int best_cnt = -1;
        for (auto [c, k] : cnt)
            if (k > best_cnt) {
                best = c;
                best_cnt = k;
            }
        if (best == kNoColour) fail("NotExtremalInput", "vertex in A* has no edge into B*");
        base.colour_map[a] = best;
    }
    if (!check_delta_extremal(g, base))
        fail("NotExtremalInput", "(A*, B*) does not satisfy (A1)-(A3) at the given parameters");

    Rational eps2 = sqrt_upper(Rational(16) * eps); // 4*sqrt(eps), rounded up
    Rational prune_below = size_r(A_star) - eps2 * g.n();

    std::set<VertexId> aset(A_star.begin(), A_star.end());
    ExtremalWitness out;
    out.B = B_star;
    out.delta = delta;
    out.eps = eps2;
    for (VertexId a : A_star) {
        int good = 0;
        for (auto [v, c] : g.neighbours(a))
            if (aset.count(v) && good_edge(g, base, a, v)) ++good;
        if (Rational(good) > prune_below) {
            out.A.push_back(a);
            out.colour_map[a] = base.colour_map.at(a);
        }
    }

    if (size_r(out.A) < (delta - eps2) * g.n())
        fail("RefineFailed", "pruned A dropped below (delta - eps')n");
    if (!check_eps_extremal(g, out))
        fail("RefineFailed", "refined pair does not satisfy (E1)-(E3) at eps'");
    return out;
}

PcWalk hamilton_in_extremal(const EdgeColouredGraph& g, const ExtremalWitness& w) {
    size_t m = w.B.size();
    if (w.A.size() != 2 * m) fail("NotExtremalInput", "need |A| = 2|B|");
    if (w.A.size() + w.B.size() != static_cast<size_t>(g.n()))
        fail("NotExtremalInput", "witness must cover the whole vertex set");
    if (!(w.eps < Rational(1, 36))) fail("NotExtremalInput", "need eps < 1/36");
    if (!check_eps_extremal(g, w)) fail("NotExtremalInput", "pair is not eps-extremal");
    if (m < 2) fail("NotExtremalInput", "need |B| >= 2");

    std::vector<VertexId> A_sorted = w.A;
    std::sort(A_sorted.begin(), A_sorted.end());
    std::vector<VertexId> X(A_sorted.begin(), A_sorted.begin() + static_cast<long>(m));
    std::vector<VertexId> Ya(A_sorted.begin() + static_cast<long>(m), A_sorted.end());
    std::vector<VertexId> B_sorted = w.B;
    std::sort(B_sorted.begin(), B_sorted.end());

    // H_X: edges x-b of colour c_x; perfect matchings via augmenting paths
    auto side_matching = [&](const std::vector<VertexId>& side) {
        std::vector<std::vector<int>> adj(side.size());
        for (size_t i = 0; i < side.size(); ++i) {
            ColourId ca = w.colour_map.at(side[i]);
            for (size_t j = 0; j < m; ++j) {
                auto c = g.colour_of(side[i], B_sorted[j]);
                if (c && *c == ca) adj[i].push_back(static_cast<int>(j));
            }
        }
        std::vector<int> match = kuhn_matching(adj, static_cast<int>(m));
        for (int v : match)
            if (v == -1) fail("HallFailure", "no perfect matching into B");
        return match;
    };
    std::vector<int> mx = side_matching(X);  // X index -> B index
    std::vector<int> my = side_matching(Ya); // Y index -> B index

    // triples x_i b_i y_i, keyed by the B index
    std::vector<int> x_of(m, -1), y_of(m, -1);
    for (size_t i = 0; i < m; ++i) x_of[static_cast<size_t>(mx[i])] = static_cast<int>(i);
    for (size_t i = 0; i < m; ++i) y_of[static_cast<size_t>(my[i])] = static_cast<int>(i);

    Digraph F(static_cast<int>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            VertexId yi = Ya[static_cast<size_t>(y_of[i])], xj = X[static_cast<size_t>(x_of[j])];
            auto c = g.colour_of(yi, xj);
            if (!c) continue;
            if (w.colour_map.at(yi) != *c && *c != w.colour_map.at(xj))
                F.add_arc(static_cast<int>(i), static_cast<int>(j));
        }

    std::vector<int> order = gh_hamilton_cycle(F);
    std::vector<VertexId> cyc;
    for (int b : order) {
        cyc.push_back(X[static_cast<size_t>(x_of[static_cast<size_t>(b)])]);
        cyc.push_back(B_sorted[static_cast<size_t>(b)]);
        cyc.push_back(Ya[static_cast<size_t>(y_of[static_cast<size_t>(b)])]);
    }
    PcWalk walk = check_pc_cycle(g, cyc);
    if (static_cast<int>(walk.vertices.size()) != g.n())
        fail("Internal", "hamilton_in_extremal missed vertices");
    return walk;
}

namespace {

struct PathEnds {
    VertexId front, back;
    ColourId front_colour, back_colour; // path-edge colours at the endpoints
};

PathEnds ends_of(const EdgeColouredGraph& g, const std::vector<VertexId>& p) {
    PathEnds e;
    e.front = p.front();
    e.back = p.back();
    e.front_colour = g.colour_of(p[0], p[1]).value();
    e.back_colour = g.colour_of(p[p.size() - 2], p.back()).value();
    return e;
}

} // namespace

PcWalk cycle_from_path_system(const EdgeColouredGraph& g, const ExtremalWitness& w,
                              const PathSystem& ps, const ExtremalConfig& cfg) {
    long long n = g.n();
    std::set<VertexId> a_set = to_set(w.A), b_set = to_set(w.B);

    std::set<VertexId> used; // vertices of the system
    for (const PcWalk& p : ps.paths) {
        check_pc_path(g, p.vertices);
        if (p.vertices.size() < 2) fail("BadPathSystem", "paths need at least one edge");
        if (!b_set.count(p.vertices.front()) || !b_set.count(p.vertices.back()))
            fail("BadPathSystem", "path endpoint outside B");
        for (size_t i = 0; i < p.vertices.size(); ++i) {
            VertexId v = p.vertices[i];
            if (!used.insert(v).second) fail("BadPathSystem", "paths overlap");
            bool endpoint = i == 0 || i + 1 == p.vertices.size();
            if (!endpoint && (a_set.count(v) || b_set.count(v)))
                fail("BadPathSystem", "path interior meets A u B");
        }
    }
    long long ell = static_cast<long long>(ps.paths.size());
    if (cfg.alpha * n + ell + 1 > size_r(w.B))
        fail("BadPathSystem", "|B| below alpha*n + l + 1");
    if (size_r(w.B) > Rational(static_cast<long long>(w.A.size()), 2) + ell)
        fail("BadPathSystem", "|B| above |A|/2 + l");

    std::vector<VertexId> A_cur = w.A;
    std::sort(A_cur.begin(), A_cur.end());
    std::vector<std::vector<VertexId>> paths;
    for (const PcWalk& p : ps.paths) paths.push_back(p.vertices);

    // Padding: reach |A| = 2(|B| - l) exactly with one greedy properly
    // coloured path b a_1 .. a_p b' through A.
    long long size_b = static_cast<long long>(w.B.size());
    if (Rational(size_b) < Rational(static_cast<long long>(A_cur.size()), 2) + ell) {
        long long p_len = static_cast<long long>(A_cur.size()) - 2 * (size_b - ell - 1);
        if (p_len < 1) fail("Internal", "padding length underflow");
        std::vector<VertexId> pad;
        std::set<VertexId> pad_used;
        VertexId b_first = -1;
        for (VertexId b : w.B)
            if (!used.count(b)) {
                b_first = b;
                break;
            }
        if (b_first < 0) fail("PaddingFailure", "no free B vertex to start the padding path");
        pad.push_back(b_first);
        ColourId prev = kNoColour;
        for (long long i = 0; i < p_len; ++i) {
            VertexId pick = -1;
            ColourId pick_colour = kNoColour;
            for (VertexId a : A_cur) {
                if (pad_used.count(a) || used.count(a)) continue;
                auto c = g.colour_of(pad.back(), a);
                if (!c) continue;
                ColourId ca = w.colour_map.at(a);
                if (i == 0) {
                    if (*c != ca) continue; // first edge carries the star colour
                } else {
                    if (*c == prev || *c == ca) continue; // good edge
                }
                pick = a;
                pick_colour = *c;
                break;
            }
            if (pick < 0) fail("PaddingFailure", "greedy A-path extension stuck");
            pad.push_back(pick);
            pad_used.insert(pick);
            prev = pick_colour;
        }
        VertexId b_last = -1;
        ColourId ca_last = w.colour_map.at(pad.back());
        for (VertexId b : w.B) {
            if (used.count(b) || b == b_first) continue;
            auto c = g.colour_of(pad.back(), b);
            if (c && *c == ca_last && ca_last != prev) {
                b_last = b;
                break;
            }
        }
        if (b_last < 0) fail("PaddingFailure", "no closing B vertex for the padding path");
        pad.push_back(b_last);
        check_pc_path(g, pad);

        paths.push_back(pad);
        ++ell;
        for (VertexId v : pad) used.insert(v);
        std::erase_if(A_cur, [&](VertexId a) { return pad_used.count(a) > 0; });
    }

    long long m = size_b - ell;
    if (static_cast<long long>(A_cur.size()) != 2 * m)
        fail("Internal", "contraction sides out of balance");

    std::vector<VertexId> b_rest;
    for (VertexId b : w.B)
        if (!used.count(b)) b_rest.push_back(b);
    std::sort(b_rest.begin(), b_rest.end());

    // contracted host: A_cur first, then the B remainder, then one x_i per path
    std::vector<VertexId> base = A_cur;
    base.insert(base.end(), b_rest.begin(), b_rest.end());
    int nh = static_cast<int>(base.size() + paths.size());
    std::vector<int> new_id(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < base.size(); ++i) new_id[static_cast<size_t>(base[i])] = static_cast<int>(i);

    std::vector<std::tuple<int, int, ColourLabel>> h_edges;
    for (const Edge& e : g.edges()) {
        int u = new_id[static_cast<size_t>(e.u)], v = new_id[static_cast<size_t>(e.v)];
        if (u >= 0 && v >= 0) h_edges.emplace_back(u, v, g.label(e.colour));
    }
    for (size_t i = 0; i < paths.size(); ++i) {
        PathEnds pe = ends_of(g, paths[i]);
        std::vector<VertexId> Ni;
        for (VertexId a : A_cur) {
            ColourId ca = w.colour_map.at(a);
            if (ca == pe.front_colour || ca == pe.back_colour) continue;
            auto c1 = g.colour_of(a, pe.front), c2 = g.colour_of(a, pe.back);
            if (c1 && c2 && *c1 == ca && *c2 == ca) Ni.push_back(a);
        }
        if (Ni.empty()) fail("ContractionFailure", "path " + std::to_string(i) + " has empty N_i");
        int xi = static_cast<int>(base.size() + i);
        for (VertexId a : Ni)
            h_edges.emplace_back(new_id[static_cast<size_t>(a)], xi, g.label(w.colour_map.at(a)));
    }
    EdgeColouredGraph h = EdgeColouredGraph::from_edges(nh, h_edges);

    ExtremalWitness wh;
    wh.delta = Rational(2, 3);
    wh.eps = std::min(sqrt_upper(w.eps), Rational(1, 37));
    for (VertexId a : A_cur) {
        int id = new_id[static_cast<size_t>(a)];
        wh.A.push_back(id);
        auto hc = h.id_of_label(g.label(w.colour_map.at(a)));
        if (!hc) fail("Internal", "star colour missing in contracted host");
        wh.colour_map[id] = *hc;
    }
    for (int i = static_cast<int>(A_cur.size()); i < nh; ++i) wh.B.push_back(i);

    PcWalk hc = hamilton_in_extremal(h, wh);

    // expand: base ids map straight back; each x_i becomes its path, front
    // endpoint toward the cycle predecessor (both neighbours are N_i members,
    // so either attachment is properly coloured)
    std::vector<VertexId> cyc;
    int first_x = static_cast<int>(base.size());
    for (size_t pos = 0; pos < hc.vertices.size(); ++pos) {
        int hv = hc.vertices[pos];
        if (hv < first_x) {
            cyc.push_back(base[static_cast<size_t>(hv)]);
            continue;
        }
        const auto& path = paths[static_cast<size_t>(hv - first_x)];
        cyc.insert(cyc.end(), path.begin(), path.end());
    }
    PcWalk out = check_pc_cycle(g, cyc);

    // exact vertex-set equality: A u B u V(P)
    std::set<VertexId> expect = to_set(w.A);
    for (VertexId b : w.B) expect.insert(b);
    for (const PcWalk& p : ps.paths)
        for (VertexId v : p.vertices) expect.insert(v);
    if (to_set(out.vertices) != expect) fail("Internal", "cycle vertex set mismatch");
    return out;
}

YZPartition partition_YZ(const EdgeColouredGraph& g, const ExtremalWitness& w) {
    YZPartition out;
    out.eps = w.eps;
    Rational threshold = Rational(10) * w.eps * g.n();
    std::set<VertexId> ab = to_set(w.A);
    for (VertexId b : w.B) ab.insert(b);

    for (VertexId v = 0; v < g.n(); ++v) {
        if (ab.count(v)) continue;
        int cd_b = g.colour_degree_within(v, w.B);
        std::set<ColourId> off_colours;
        for (auto [u, c] : g.neighbours(v)) {
            auto it = w.colour_map.find(u);
            if (it != w.colour_map.end() && c != it->second) off_colours.insert(c);
        }
        if (Rational(cd_b) >= threshold ||
            Rational(static_cast<long long>(off_colours.size())) >= threshold)
            out.Y.push_back(v);
        else
            out.Z.push_back(v);
    }

    // consequence check: each z must look like a B vertex toward A
    Rational star_target = size_r(w.A) - Rational(24) * w.eps * g.n();
    for (VertexId z : out.Z) {
        int cnt = 0;
        for (auto [u, c] : g.neighbours(z)) {
            auto it = w.colour_map.find(u);
            if (it != w.colour_map.end() && c == it->second) ++cnt;
        }
        if (Rational(cnt) < star_target) out.prop_violations.push_back(z);
    }
    return out;
}

PcWalk cycle_from_matchings(const EdgeColouredGraph& g, const ExtremalWitness& w,
                            const YZPartition& yz, const Matching& M, const Matching& M_prime,
                            const ExtremalConfig& cfg) {
    long long n = g.n();
    std::set<VertexId> a_set = to_set(w.A), b_set = to_set(w.B);
    std::set<VertexId> z_set = to_set(yz.Z);

    // Lemma hypotheses (i)-(iii)
    if (Rational(static_cast<long long>(M.size() + M_prime.size())) > Rational(2) * w.eps * n)
        fail("BadMatchings", "|M u M'| exceeds 2*eps*n");
    std::set<VertexId> mv;
    for (auto [u, v] : M) {
        if (a_set.count(u) || a_set.count(v)) fail("BadMatchings", "M touches A");
        if (!g.has_edge(u, v)) fail("BadMatchings", "M edge missing in G");
        if (!mv.insert(u).second || !mv.insert(v).second) fail("BadMatchings", "M not a matching");
    }
    for (auto [u, v] : M_prime) {
        VertexId a = a_set.count(u) ? u : v;
        VertexId other = a == u ? v : u;
        if (!a_set.count(a) || !(b_set.count(other) || z_set.count(other)))
            fail("BadMatchings", "M' edge not in G[A, B u Z]");
        auto c = g.colour_of(a, other);
        if (!c) fail("BadMatchings", "M' edge missing in G");
        if (*c == w.colour_map.at(a)) fail("BadMatchings", "M' edge carries the star colour c_a");
        if (!mv.insert(u).second || !mv.insert(v).second)
            fail("BadMatchings", "M' overlaps M or itself");
    }

    // P_0 := M u M', each M' edge completed by a c_a edge into B
    std::vector<std::vector<VertexId>> paths;
    std::set<VertexId> used = mv;
    for (auto [u, v] : M) paths.push_back({std::min(u, v), std::max(u, v)});
    for (auto [u, v] : M_prime) {
        VertexId a = a_set.count(u) ? u : v;
        VertexId other = a == u ? v : u;
        ColourId ca = w.colour_map.at(a);
        VertexId b_pick = -1;
        for (VertexId b : w.B) {
            if (used.count(b)) continue;
            auto c = g.colour_of(a, b);
            if (c && *c == ca) {
                b_pick = b;
                break;
            }
        }
        if (b_pick < 0) fail("ExtensionFailure", "no free c_a partner for an M' edge");
        used.insert(b_pick);
        paths.push_back({other, a, b_pick});
    }

    // Y in order: M-covered vertices first
    std::vector<VertexId> y_order;
    for (VertexId y : yz.Y)
        if (mv.count(y)) y_order.push_back(y);
    long long q = static_cast<long long>(y_order.size());
    for (VertexId y : yz.Y)
        if (!mv.count(y)) y_order.push_back(y);

    Rational branch_threshold = Rational(10) * yz.eps * n;

    // one growth step at y: attach b directly, or a then its c_a partner b;
    // prev constrains the colour of the new edge at y
    auto attach = [&](std::vector<VertexId>& seq, bool at_front, VertexId y, ColourId prev) {
        auto push = [&](VertexId v) {
            if (at_front)
                seq.insert(seq.begin(), v);
            else
                seq.push_back(v);
            used.insert(v);
        };
        bool b_branch = Rational(g.colour_degree_within(y, w.B)) >= branch_threshold;
        for (int round = 0; round < 2; ++round, b_branch = !b_branch) {
            if (b_branch) {
                for (VertexId b : w.B) {
                    if (used.count(b)) continue;
                    auto c = g.colour_of(y, b);
                    if (c && *c != prev) {
                        push(b);
                        return true;
                    }
                }
            } else {
                for (VertexId a : w.A) {
                    if (used.count(a)) continue;
                    auto c = g.colour_of(y, a);
                    if (!c) continue;
                    ColourId ca = w.colour_map.at(a);
                    if (*c == prev || *c == ca) continue;
                    VertexId b_pick = -1;
                    for (VertexId b : w.B) {
                        if (used.count(b)) continue;
                        auto cb = g.colour_of(a, b);
                        if (cb && *cb == ca) {
                            b_pick = b;
                            break;
                        }
                    }
                    if (b_pick < 0) continue;
                    push(a);
                    push(b_pick);
                    return true;
                }
            }
        }
        return false;
    };

    for (VertexId y : y_order) {
        if (mv.count(y)) {
            // degree 1: y is an endpoint of its M path; extend past it
            std::vector<VertexId>* host = nullptr;
            bool at_front = false;
            for (auto& p : paths) {
                if (p.front() == y) {
                    host = &p;
                    at_front = true;
                } else if (p.back() == y) {
                    host = &p;
                    at_front = false;
                }
            }
            if (!host) fail("Internal", "M-covered Y vertex is not a path endpoint");
            ColourId prev = at_front ? g.colour_of((*host)[0], (*host)[1]).value()
                                     : g.colour_of((*host)[host->size() - 2], host->back()).value();
            if (!attach(*host, at_front, y, prev))
                fail("ExtensionFailure", "could not extend through a covered Y vertex");
        } else {
            // degree 0: build b .. y .. b' in two independent steps
            std::vector<VertexId> p{y};
            used.insert(y);
            if (!attach(p, false, y, kNoColour))
                fail("ExtensionFailure", "could not grow the first side at a Y vertex");
            size_t ypos = static_cast<size_t>(std::find(p.begin(), p.end(), y) - p.begin());
            ColourId first = g.colour_of(p[ypos], p[ypos + 1]).value();
            if (!attach(p, true, y, first))
                fail("ExtensionFailure", "could not grow the second side at a Y vertex");
            paths.push_back(std::move(p));
        }
    }

    // Q1-Q4 bookkeeping
    long long ell_star = static_cast<long long>(paths.size());
    if (ell_star != static_cast<long long>(M.size() + M_prime.size()) +
                        static_cast<long long>(yz.Y.size()) - q)
        fail("Clm2Violation", "path count differs from |M| + |M'| + |Y| - q");
    {
        std::set<VertexId> covered;
        long long bz_total = 0, bz_endpoints = 0, a_total = 0;
        for (const auto& p : paths) {
            for (size_t i = 0; i < p.size(); ++i) {
                VertexId v = p[i];
                covered.insert(v);
                bool endpoint = i == 0 || i + 1 == p.size();
                if (b_set.count(v) || z_set.count(v)) {
                    ++bz_total;
                    if (endpoint) ++bz_endpoints;
                }
                if (a_set.count(v)) ++a_total;
            }
        }
        for (VertexId y : yz.Y)
            if (!covered.count(y)) fail("Clm2Violation", "Y not covered");
        if (bz_total != 2 * ell_star || bz_endpoints != bz_total)
            fail("Clm2Violation", "B u Z vertices of the system are not exactly the 2l* endpoints");
        if (a_total >
            static_cast<long long>(M_prime.size()) + 2 * static_cast<long long>(yz.Y.size()) - q)
            fail("Clm2Violation", "too many A vertices in the system");
    }

    // endpoints may sit in Z, so fold Z into the B side: A* = A \ V(P),
    // B* = forced endpoints plus lowest-index fill from B u Z
    std::set<VertexId> sys;
    for (const auto& p : paths)
        for (VertexId v : p) sys.insert(v);

    ExtremalWitness w_star;
    w_star.delta = w.delta;
    w_star.eps = Rational(24) * w.eps;
    for (VertexId a : w.A)
        if (!sys.count(a)) {
            w_star.A.push_back(a);
            w_star.colour_map[a] = w.colour_map.at(a);
        }

    std::vector<VertexId> pool = w.B;
    pool.insert(pool.end(), yz.Z.begin(), yz.Z.end());
    std::sort(pool.begin(), pool.end());
    long long b_star_target = std::min(static_cast<long long>(pool.size()),
                                       static_cast<long long>(w_star.A.size()) / 2 + ell_star);
    std::vector<VertexId> forced;
    for (VertexId v : pool)
        if (sys.count(v)) forced.push_back(v);
    if (static_cast<long long>(forced.size()) > b_star_target)
        fail("BadMatchings", "path system endpoints exceed the B* budget");
    w_star.B = forced;
    for (VertexId v : pool) {
        if (static_cast<long long>(w_star.B.size()) >= b_star_target) break;
        if (!sys.count(v)) w_star.B.push_back(v);
    }

    PathSystem ps;
    for (const auto& p : paths) ps.paths.push_back(check_pc_path(g, p));
    return cycle_from_path_system(g, w_star, ps, cfg);
}

LongCycleResult extremal_long_cycle(const EdgeColouredGraph& g, const ExtremalWitness& w,
                                    const ExtremalConfig& cfg) {
    std::ostringstream log;
    long long n = g.n();
    if (!is_critical(g)) fail("NotCritical", "driver requires a critical graph");
    if (!colour_classes_are_stars(g)) fail("NotStarNormalized", "driver requires star colour classes");
    if (Rational(g.min_colour_degree()) < w.delta * n)
        fail("DegreeTooLow", "min colour degree below delta*n");

    ExtremalWitness ref = refine_extremal_pair(g, w.A, w.B, w.delta, w.eps);
    Rational eps2 = ref.eps;
    log << "refined |A|=" << ref.A.size() << " eps'=" << rational_str(eps2) << "; ";

    YZPartition yz = partition_YZ(g, ref);
    log << "|Y|=" << yz.Y.size() << " |Z|=" << yz.Z.size() << "; ";
    Rational p = std::max(Rational(0), eps2 * n - Rational(static_cast<long long>(yz.Y.size())));

    // F = G \ A with the R/S degree split at 10*eps'*n
    std::set<VertexId> a_set = to_set(ref.A);
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!a_set.count(v)) rest.push_back(v);
    auto [F, f_map] = induced_subgraph(g, rest);
    Rational deg_split = Rational(10) * eps2 * n;
    std::set<VertexId> S; // high-degree side, original ids
    for (int v = 0; v < F.n(); ++v)
        if (Rational(F.degree(v)) > deg_split) S.insert(f_map[static_cast<size_t>(v)]);

    std::vector<VertexId> r_local;
    for (int v = 0; v < F.n(); ++v)
        if (!S.count(f_map[static_cast<size_t>(v)])) r_local.push_back(v);
    auto [FR, fr_map] = induced_subgraph(F, r_local);
    Matching m_r;
    for (auto [u, v] : bounded_degree_matching(FR)) {
        VertexId a = f_map[static_cast<size_t>(fr_map[static_cast<size_t>(u)])];
        VertexId b = f_map[static_cast<size_t>(fr_map[static_cast<size_t>(v)])];
        m_r.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(m_r.begin(), m_r.end());
    log << "|M_R|=" << m_r.size() << " |S|=" << S.size() << " p=" << rational_str(p) << "; ";

    std::set<VertexId> y_set = to_set(yz.Y);

    // grow `base` by disjoint F-edges up to `target`; `avoid` is a hard
    // exclusion, `shun` a try-last preference
    auto extend_matching = [&](Matching base, long long target, const std::set<VertexId>& avoid,
                               const std::set<VertexId>& shun) {
        std::set<VertexId> taken;
        for (auto [u, v] : base) {
            taken.insert(u);
            taken.insert(v);
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const Edge& e : F.edges()) {
                if (static_cast<long long>(base.size()) >= target) break;
                VertexId u = f_map[static_cast<size_t>(e.u)], v = f_map[static_cast<size_t>(e.v)];
                if (taken.count(u) || taken.count(v) || avoid.count(u) || avoid.count(v)) continue;
                if (pass == 0 && (shun.count(u) || shun.count(v))) continue;
                base.emplace_back(std::min(u, v), std::max(u, v));
                taken.insert(u);
                taken.insert(v);
            }
        }
        std::sort(base.begin(), base.end());
        return base;
    };

    LongCycleResult out;
    long long s_in_y = 0;
    for (VertexId s : S)
        if (y_set.count(s)) ++s_in_y;

    Rational case1_threshold = eps2 * n + p / 2;
    if (Rational(static_cast<long long>(m_r.size()) + static_cast<long long>(S.size())) >=
        case1_threshold) {
        out.case_tag = "case1";
        long long target = ceil_ll(case1_threshold);
        Matching M = m_r;
        if (static_cast<long long>(M.size()) > target) M.resize(static_cast<size_t>(target));
        M = extend_matching(M, target, {}, {});
        out.cycle = cycle_from_matchings(g, ref, yz, M, {}, cfg);
    } else if (Rational(s_in_y) <= eps2 * n - Rational(10) * p / 3) {
        out.case_tag = "case2a";
        long long target = ceil_ll(eps2 * n);
        Matching M = extend_matching(m_r, target, {}, y_set);
        out.cycle = cycle_from_matchings(g, ref, yz, M, {}, cfg);
    } else {
        out.case_tag = "case2b";
        // F' = G[A, B u Z] without the star colours, away from V(M_R) u S
        std::set<VertexId> blocked = S;
        for (auto [u, v] : m_r) {
            blocked.insert(u);
            blocked.insert(v);
        }
        std::set<VertexId> bz = to_set(ref.B);
        for (VertexId z : yz.Z) bz.insert(z);
        std::vector<VertexId> left, right;
        std::map<VertexId, int> rid;
        for (VertexId a : ref.A)
            if (!blocked.count(a)) left.push_back(a);
        for (VertexId v : bz)
            if (!blocked.count(v)) {
                rid[v] = static_cast<int>(right.size());
                right.push_back(v);
            }
        std::vector<std::vector<int>> adj(left.size());
        for (size_t i = 0; i < left.size(); ++i) {
            ColourId ca = ref.colour_map.at(left[i]);
            for (auto [u, c] : g.neighbours(left[i])) {
                auto it = rid.find(u);
                if (it != rid.end() && c != ca) adj[i].push_back(it->second);
            }
        }
        std::vector<int> km = kuhn_matching(adj, static_cast<int>(right.size()));
        Matching m_prime;
        long long want = ceil_ll(p);
        for (size_t i = 0; i < left.size() && static_cast<long long>(m_prime.size()) < want; ++i)
            if (km[i] != -1) m_prime.emplace_back(left[i], right[static_cast<size_t>(km[i])]);
        std::set<VertexId> avoid;
        for (auto [u, v] : m_prime) {
            avoid.insert(u);
            avoid.insert(v);
        }
        long long target = ceil_ll(eps2 * n);
        Matching M = extend_matching(m_r, target, avoid, {});
        log << "|M|=" << M.size() << " |M'|=" << m_prime.size() << "; ";
        ExtremalWitness cw = ref;
        cw.eps = Rational(2) * eps2;
        YZPartition yz2 = yz;
        out.cycle = cycle_from_matchings(g, cw, yz2, M, m_prime, cfg);
    }

    out.achieved = out.cycle.length();
    out.target = std::min(n, floor_ll(Rational(3) * w.delta * n / 2));
    out.log = log.str();
    return out;
}

} // namespace ecg

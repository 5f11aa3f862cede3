#include "ecg/gen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ecg/rng.hpp"

namespace ecg {

EdgeColouredGraph gen_sharpness(int d, int n) {
    if (d < 1) fail("BadArgument", "need d >= 1");
    if (2 * n < 3 * d) fail("BadArgument", "need n >= ceil(3d/2)");

    std::vector<std::tuple<int, int, ColourLabel>> edges;
    ColourLabel fresh = d;
    // x_i = vertex i-1 with colour c_i = i-1; Y = {d..n-1} independent.
    for (int i = 0; i < d; ++i)
        for (int y = d; y < n; ++y) edges.emplace_back(i, y, i);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) edges.emplace_back(i, j, fresh++);

    EdgeColouredGraph g = EdgeColouredGraph::from_edges(n, edges);
    if (g.min_colour_degree() != d) fail("Internal", "sharpness construction broke delta^c = d");
    return g;
}

std::pair<EdgeColouredGraph, ExtremalWitness> gen_eps_extremal_exact(int m) {
    if (m < 2) fail("BadArgument", "need m >= 2");
    int n = 3 * m;
    std::vector<std::tuple<int, int, ColourLabel>> edges;
    ColourLabel fresh = 2 * m;
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 2 * m; b < n; ++b) edges.emplace_back(a, b, a); // c_a = a
    for (int a = 0; a < 2 * m; ++a)
        for (int a2 = a + 1; a2 < 2 * m; ++a2) edges.emplace_back(a, a2, fresh++);

    EdgeColouredGraph g = EdgeColouredGraph::from_edges(n, edges);
    ExtremalWitness w;
    for (int a = 0; a < 2 * m; ++a) {
        w.A.push_back(a);
        w.colour_map[a] = g.id_of_label(a).value();
    }
    for (int b = 2 * m; b < n; ++b) w.B.push_back(b);
    w.delta = Rational(2, 3);
    w.eps = Rational(1, 36 * m + 1);
    if (!check_eps_extremal(g, w)) fail("Internal", "exact extremal instance failed its own check");
    return {g, w};
}

namespace {

struct EdgeMap {
    std::map<std::pair<int, int>, ColourLabel> colours;

    void set(int u, int v, ColourLabel c) {
        if (u > v) std::swap(u, v);
        colours[{u, v}] = c;
    }
    bool has(int u, int v) const {
        if (u > v) std::swap(u, v);
        return colours.count({u, v}) > 0;
    }
    std::vector<std::tuple<int, int, ColourLabel>> to_edges() const {
        std::vector<std::tuple<int, int, ColourLabel>> out;
        for (const auto& [uv, c] : colours) out.emplace_back(uv.first, uv.second, c);
        return out;
    }
};

} // namespace

std::pair<EdgeColouredGraph, ExtremalWitness> gen_extremal(const Rational& delta,
                                                           const Rational& eps, int n,
                                                           std::uint64_t seed, int plant_z) {
    if (!(delta > Rational(1, 2) && delta < 1)) fail("BadArgument", "need delta in (1/2, 1)");
    if (eps < 0 || eps * 10 >= delta) fail("BadArgument", "need eps in [0, delta/10)");
    if (n < 20) fail("BadArgument", "need n >= 20");

    int size_a = static_cast<int>(ceil_ll((delta - eps / 2) * n));
    int size_b = static_cast<int>(ceil_ll((1 - delta - eps / 2) * n));
    int size_w = n - size_a - size_b;
    if (size_w < 0) fail("Infeasible", "rounding collision: |A| + |B| exceeds n");
    if (plant_z < 0 || plant_z > size_w) fail("Infeasible", "plant_z exceeds leftover vertices");
    long long min_cd = ceil_ll(delta * n);

    // A = [0, size_a), B = [size_a, size_a+size_b), then Y-like, then Z-like.
    int b0 = size_a, w0 = size_a + size_b;
    int y_count = size_w - plant_z;

    EdgeMap em;
    ColourLabel fresh = size_a; // c_a = a for a in A
    for (int a = 0; a < size_a; ++a)
        for (int b = b0; b < w0; ++b) em.set(a, b, a);
    for (int a = 0; a < size_a; ++a)
        for (int a2 = a + 1; a2 < size_a; ++a2) em.set(a, a2, fresh++);
    for (int w = w0; w < w0 + y_count; ++w)
        for (int a = 0; a < size_a; ++a) em.set(w, a, fresh++); // Y-like: fresh star into A
    for (int z = w0 + y_count; z < n; ++z)
        for (int a = 0; a < size_a; ++a) em.set(z, a, a); // Z-like: colour-c_a edges

    // Seeded recolouring noise inside the per-vertex eps budgets (margin 1).
    // The same budgets are shared with the colour-degree repair below.
    Xorshift64Star rng(seed);
    long long cap = std::max(0LL, floor_ll(eps * n) - 1);
    std::vector<int> wrong_a(static_cast<size_t>(n), 0), wrong_b(static_cast<size_t>(n), 0);
    if (cap > 0 && size_a > 0 && size_b > 0) {
        long long attempts = static_cast<long long>(size_a);
        for (long long t = 0; t < attempts; ++t) {
            int a = rng.range_int(size_a);
            int b = b0 + rng.range_int(size_b);
            if (wrong_a[static_cast<size_t>(a)] >= cap || wrong_b[static_cast<size_t>(b)] >= cap)
                continue;
            em.set(a, b, fresh++);
            ++wrong_a[static_cast<size_t>(a)];
            ++wrong_b[static_cast<size_t>(b)];
        }
    }

    // Colour-degree repair: every vertex must reach ceil(delta*n) distinct
    // colours. A-vertices gain colours by recolouring a few of their B-edges
    // (within the eps budgets); everyone else gains fresh edges away from A,
    // which leaves (A2)/(A3) untouched.
    auto build = [&]() { return EdgeColouredGraph::from_edges(n, em.to_edges()); };
    EdgeColouredGraph g = build();
    long long degree_cap = floor_ll((delta + eps) * n) - 1; // (A3) margin
    for (int a = 0; a < size_a; ++a) {
        long long shortfall = min_cd - g.colour_degree(a);
        for (int b = w0 - 1; b >= b0 && shortfall > 0; --b) {
            if (wrong_a[static_cast<size_t>(a)] >= cap || wrong_b[static_cast<size_t>(b)] >= cap)
                continue;
            em.set(a, b, fresh++);
            ++wrong_a[static_cast<size_t>(a)];
            ++wrong_b[static_cast<size_t>(b)];
            --shortfall;
        }
        if (shortfall > 0)
            fail("Infeasible", "eps budget too small to reach the colour-degree floor in A");
    }
    g = build();

    std::vector<long long> deg(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = size_a; v < n; ++v) {
            long long shortfall = min_cd - g.colour_degree(v);
            if (shortfall <= 0) continue;
            for (int u = size_a; u < n && shortfall > 0; ++u) {
                if (u == v || em.has(u, v)) continue;
                bool u_in_b = u >= b0 && u < w0, v_in_b = v >= b0 && v < w0;
                if (u_in_b && deg[static_cast<size_t>(u)] >= degree_cap) continue;
                if (v_in_b && deg[static_cast<size_t>(v)] >= degree_cap) continue;
                em.set(u, v, fresh++);
                ++deg[static_cast<size_t>(u)];
                ++deg[static_cast<size_t>(v)];
                --shortfall;
                changed = true;
            }
        }
        if (changed) g = build();
    }
    for (int v = 0; v < n; ++v)
        if (g.colour_degree(v) < min_cd)
            fail("Infeasible", "could not reach the colour-degree floor at vertex " +
                                   std::to_string(v));

    ExtremalWitness w;
    for (int a = 0; a < size_a; ++a) {
        w.A.push_back(a);
        w.colour_map[a] = g.id_of_label(a).value();
    }
    for (int b = b0; b < w0; ++b) w.B.push_back(b);
    w.delta = delta;
    w.eps = eps;
    if (!check_delta_extremal(g, w)) fail("Infeasible", "generated instance failed (A1)-(A3)");
    return {g, w};
}

EdgeColouredGraph gen_random_mcd(int n, const Rational& delta, int colour_budget,
                                 std::uint64_t seed) {
    if (n < 2) fail("BadArgument", "need n >= 2");
    long long floor_cd = ceil_ll(delta * n);
    if (colour_budget < floor_cd)
        fail("BadArgument", "colour budget below ceil(delta*n)");

    const int kResampleCap = 200;
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        Xorshift64Star rng(seed + 0x9E37ULL * static_cast<std::uint64_t>(attempt));
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.range(100) < 85) pairs.emplace_back(i, j); // density 0.85

        // Colour each edge (random order) with the least-used colour at its
        // endpoints to spread colours; ties broken by seeded choice.
        std::vector<std::pair<int, int>> order = pairs;
        rng.shuffle(order);
        std::vector<std::vector<int>> use(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(colour_budget), 0));
        std::map<std::pair<int, int>, ColourLabel> colour;
        for (auto [u, v] : order) {
            int best_score = -1;
            std::vector<int> cands;
            for (int c = 0; c < colour_budget; ++c) {
                int score = use[static_cast<size_t>(u)][static_cast<size_t>(c)] +
                            use[static_cast<size_t>(v)][static_cast<size_t>(c)];
                if (best_score == -1 || score < best_score) {
                    best_score = score;
                    cands.assign(1, c);
                } else if (score == best_score) {
                    cands.push_back(c);
                }
            }
            int c = cands[static_cast<size_t>(rng.range(cands.size()))];
            colour[{u, v}] = c;
            ++use[static_cast<size_t>(u)][static_cast<size_t>(c)];
            ++use[static_cast<size_t>(v)][static_cast<size_t>(c)];
        }

        std::vector<std::tuple<int, int, ColourLabel>> edges;
        for (auto [u, v] : pairs) edges.emplace_back(u, v, colour[{u, v}]);
        EdgeColouredGraph g = EdgeColouredGraph::from_edges(n, edges);
        if (g.min_colour_degree() >= floor_cd) return g;
    }
    fail("GenerationFailed", "resample cap exceeded");
}

EdgeColouredGraph gen_locally_bounded(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > n - 1) fail("BadArgument", "need 1 <= k <= n-1");
    Xorshift64Star rng(seed);
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) order.emplace_back(i, j);
    rng.shuffle(order);

    std::vector<std::map<ColourLabel, int>> count(static_cast<size_t>(n));
    std::vector<std::tuple<int, int, ColourLabel>> edges;
    for (auto [u, v] : order) {
        ColourLabel start = static_cast<ColourLabel>(rng.range(static_cast<std::uint64_t>(n)));
        for (ColourLabel off = 0;; ++off) {
            ColourLabel c = (start + off) % (2LL * n); // palette large enough for first-fit
            if (count[static_cast<size_t>(u)][c] < k && count[static_cast<size_t>(v)][c] < k) {
                edges.emplace_back(u, v, c);
                ++count[static_cast<size_t>(u)][c];
                ++count[static_cast<size_t>(v)][c];
                break;
            }
        }
    }
    return EdgeColouredGraph::from_edges(n, edges);
}

} // namespace ecg

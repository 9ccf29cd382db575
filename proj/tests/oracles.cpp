#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pls::testing {

int brute_degeneracy(const Graph& g) {
    int n = g.node_count();
    // f(S) = min over v in S of max(deg_S(v), f(S \ v)); degeneracy = f(V).
    std::vector<int> f(1u << n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int best = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int d = 0;
            for (auto [u, e] : g.adj(v))
                if (mask >> u & 1) ++d;
            best = std::min(best, std::max(d, f[mask & ~(1u << v)]));
        }
        f[mask] = best;
    }
    return f[(1u << n) - 1];
}

namespace {

bool d2_colorable(const Graph& g, int k, std::vector<int>& col, int v) {
    int n = g.node_count();
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (auto [u, e1] : g.adj(v)) {
            if (col[u] == c) ok = false;
            for (auto [w, e2] : g.adj(u))
                if (w != v && col[w] == c) ok = false;
        }
        if (!ok) continue;
        col[v] = c;
        if (d2_colorable(g, k, col, v + 1)) return true;
        col[v] = -1;
    }
    return false;
}

} // namespace

int brute_distance2_chromatic(const Graph& g) {
    for (int k = 1;; ++k) {
        std::vector<int> col(g.node_count(), -1);
        if (d2_colorable(g, k, col, 0)) return k;
    }
}

std::uint64_t brute_max_flow(const Graph& g, int s, int t) {
    int n = g.node_count();
    std::vector<std::vector<std::int64_t>> res(n, std::vector<std::int64_t>(n, 0));
    for (const auto& e : g.edges()) {
        std::int64_t c = static_cast<std::int64_t>(e.capacity.value_or(0));
        res[e.u][e.v] += c;
        res[e.v][e.u] += c;
    }
    std::uint64_t total = 0;
    for (;;) {
        std::vector<int> prev(n, -1);
        std::vector<int> stack{s};
        prev[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (res[v][u] > 0 && prev[u] == -1) {
                    prev[u] = v;
                    stack.push_back(u);
                }
        }
        if (prev[t] == -1) return total;
        std::int64_t aug = 1LL << 62;
        for (int v = t; v != s; v = prev[v]) aug = std::min(aug, res[prev[v]][v]);
        for (int v = t; v != s; v = prev[v]) {
            res[prev[v]][v] -= aug;
            res[v][prev[v]] += aug;
        }
        total += static_cast<std::uint64_t>(aug);
    }
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

bool is_spanning_forest_per_component(const Graph& g, const std::vector<bool>& in_set) {
    int n = g.node_count();
    Dsu forest(n), all(n);
    int chosen = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        all.unite(g.edge(e).u, g.edge(e).v);
        if (in_set[e]) {
            if (!forest.unite(g.edge(e).u, g.edge(e).v)) return false; // cycle
            ++chosen;
        }
    }
    int comps = 0;
    for (int v = 0; v < n; ++v)
        if (all.find(v) == v) ++comps;
    if (chosen != n - comps) return false;
    // Forest components must match graph components.
    for (int v = 0; v < n; ++v)
        for (auto [u, e] : g.adj(v))
            if (forest.find(u) != forest.find(v)) return false;
    return true;
}

std::uint64_t brute_msf_weight(const Graph& g) {
    int m = g.edge_count();
    std::uint64_t best = ~std::uint64_t{0};
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<bool> in(m);
        std::uint64_t w = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                in[e] = true;
                w += g.edge(e).weight.value_or(1);
            }
        if (is_spanning_forest_per_component(g, in)) best = std::min(best, w);
    }
    return best;
}

std::uint64_t count_matchings(const Graph& g) {
    int m = g.edge_count();
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> hit(g.node_count(), 0);
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
            if (mask >> e & 1) {
                if (++hit[g.edge(e).u] > 1 || ++hit[g.edge(e).v] > 1) ok = false;
            }
        if (ok) ++count;
    }
    return count;
}

} // namespace pls::testing

#include "pls/graph.hpp"

#include "pls/bits.hpp"
#include "pls/errors.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace pls {

int Graph::add_node(NodeId id) {
    if (index_.count(id)) throw InvalidParams("duplicate node id " + std::to_string(id));
    int idx = node_count();
    ids_.push_back(id);
    index_[id] = idx;
    adj_.emplace_back();
    return idx;
}

int Graph::add_edge(NodeId uid, NodeId vid, std::optional<std::uint64_t> weight,
                    std::optional<std::uint64_t> capacity) {
    auto ui = index_of(uid), vi = index_of(vid);
    if (!ui || !vi) throw InvalidParams("edge endpoint not a node");
    int u = *ui, v = *vi;
    if (u == v) throw InvalidParams("self-loop rejected");
    auto key = std::minmax(u, v);
    if (edge_set_.count({key.first, key.second})) throw InvalidParams("parallel edge rejected");
    edge_set_.insert({key.first, key.second});
    int e = edge_count();
    edges_.push_back({u, v, weight, capacity});
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
    return e;
}

std::optional<int> Graph::index_of(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_edge(int u, int v) const {
    auto key = std::minmax(u, v);
    return edge_set_.count({key.first, key.second}) > 0;
}

int Graph::port_of_edge(int v, int e) const {
    for (std::size_t p = 0; p < adj_[v].size(); ++p)
        if (adj_[v][p].edge == e) return static_cast<int>(p);
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

NodeId Graph::max_id() const {
    NodeId m = 0;
    for (NodeId id : ids_) m = std::max(m, id);
    return m;
}

bool Graph::connected() const {
    if (node_count() == 0) return true;
    std::vector<bool> seen(node_count(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [to, e] : adj_[v])
            if (!seen[to]) {
                seen[to] = true;
                ++reached;
                q.push(to);
            }
    }
    return reached == node_count();
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
    int n = g.node_count();
    if (n == 0) throw InvalidParams("degeneracy of empty graph");
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    // Min-degree node each step, ties broken by smallest id.
    std::set<std::pair<std::pair<int, NodeId>, int>> pq; // ((deg, id), v)
    for (int v = 0; v < n; ++v) pq.insert({{deg[v], g.id_of(v)}, v});

    DegeneracyResult res;
    res.order.reserve(n);
    while (!pq.empty()) {
        auto [key, v] = *pq.begin();
        pq.erase(pq.begin());
        res.degeneracy = std::max(res.degeneracy, deg[v]);
        removed[v] = true;
        res.order.push_back(v);
        for (auto [to, e] : g.adj(v)) {
            if (removed[to]) continue;
            pq.erase({{deg[to], g.id_of(to)}, to});
            --deg[to];
            pq.insert({{deg[to], g.id_of(to)}, to});
        }
    }
    return res;
}

Orientation minimizing_orientation(const Graph& g) {
    Orientation o;
    o.out_degree.assign(g.node_count(), 0);
    o.from_u.assign(g.edge_count(), false);
    if (g.node_count() == 0) return o;
    auto peel = degeneracy_ordering(g);
    std::vector<int> rank(g.node_count());
    for (std::size_t i = 0; i < peel.order.size(); ++i) rank[peel.order[i]] = static_cast<int>(i);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        bool u_first = rank[ed.u] < rank[ed.v];
        o.from_u[e] = u_first;
        ++o.out_degree[u_first ? ed.u : ed.v];
    }
    for (int d : o.out_degree) o.max_out_degree = std::max(o.max_out_degree, d);
    return o;
}

Coloring distance2_coloring(const Graph& g) {
    int n = g.node_count();
    Coloring col;
    col.color.assign(n, -1);
    std::vector<int> by_id(n);
    for (int v = 0; v < n; ++v) by_id[v] = v;
    std::sort(by_id.begin(), by_id.end(),
              [&](int a, int b) { return g.id_of(a) < g.id_of(b); });
    for (int v : by_id) {
        std::set<int> used;
        for (auto [u, e1] : g.adj(v)) {
            if (col.color[u] >= 0) used.insert(col.color[u]);
            for (auto [w, e2] : g.adj(u)) {
                if (w == v) continue;
                if (col.color[w] >= 0) used.insert(col.color[w]);
            }
        }
        int c = 0;
        while (used.count(c)) ++c;
        col.color[v] = c;
        col.colors_used = std::max(col.colors_used, c + 1);
    }
    return col;
}

ArboricityBounds arboricity_bounds(const Graph& g, int exact_limit) {
    if (exact_limit < 0) throw InvalidParams("exact_limit must be >= 0");
    ArboricityBounds b;
    if (g.edge_count() == 0) {
        if (g.node_count() <= exact_limit) b.exact = 0;
        return b;
    }
    int deg = degeneracy_ordering(g).degeneracy;
    b.upper = deg;
    b.lower = deg / 2 + 1;
    int n = g.node_count();
    if (n <= exact_limit) {
        // Nash-Williams over every induced subgraph with >= 2 nodes.
        int best = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            int nh = __builtin_popcount(mask);
            if (nh < 2) continue;
            int mh = 0;
            for (const auto& e : g.edges())
                if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++mh;
            best = std::max(best, (mh + nh - 2) / (nh - 1)); // ceil(mh/(nh-1))
        }
        b.exact = best;
    }
    return b;
}

int color_bits(int max_degree) {
    // Colors are < Delta^2 + Delta + 1.
    std::uint64_t d = static_cast<std::uint64_t>(max_degree);
    return bit_width(d * d + d);
}

Graph make_path(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node(i);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    Graph g;
    for (int i = 0; i < a + b; ++i) g.add_node(i);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph make_star(int leaves) {
    Graph g;
    for (int i = 0; i <= leaves; ++i) g.add_node(i);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph make_random_connected(int n, int extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node(i);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(i, pick(rng));
    }
    int attempts = 0;
    int added = 0;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (added < extra && attempts < 50 * (extra + 1)) {
        ++attempts;
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

} // namespace pls

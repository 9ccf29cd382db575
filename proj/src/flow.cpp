#include "pls/flow.hpp"

#include "pls/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace pls {

namespace {

std::int64_t cap_of(const Graph& g, int e) {
    return static_cast<std::int64_t>(g.edge(e).capacity.value_or(0));
}

// Residual capacity from v across edge e given current signed flow.
std::int64_t residual(const Graph& g, const std::vector<std::int64_t>& flow, int v, int e) {
    std::int64_t f = (g.edge(e).u == v) ? flow[e] : -flow[e];
    return cap_of(g, e) - f;
}

std::int64_t signed_from(const Graph& g, const std::vector<std::int64_t>& flow, int v, int e) {
    return (g.edge(e).u == v) ? flow[e] : -flow[e];
}

} // namespace

FlowResult max_flow(const Graph& g, int s, int t) {
    if (s == t) throw InvalidParams("max_flow requires s != t");
    int n = g.node_count();
    FlowResult res;
    res.flow.assign(g.edge_count(), 0);

    for (;;) {
        std::vector<int> via_edge(n, -1), prev(n, -1);
        prev[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && prev[t] == -1) {
            int v = q.front();
            q.pop();
            for (auto [u, e] : g.adj(v)) {
                if (prev[u] != -1 || residual(g, res.flow, v, e) <= 0) continue;
                prev[u] = v;
                via_edge[u] = e;
                q.push(u);
            }
        }
        if (prev[t] == -1) break;
        std::int64_t aug = INT64_MAX;
        for (int v = t; v != s; v = prev[v])
            aug = std::min(aug, residual(g, res.flow, prev[v], via_edge[v]));
        for (int v = t; v != s; v = prev[v]) {
            int e = via_edge[v];
            res.flow[e] += (g.edge(e).u == prev[v]) ? aug : -aug;
        }
        res.value += static_cast<std::uint64_t>(aug);
    }

    // Min cut: nodes reachable from s in the final residual graph.
    res.source_side.assign(n, false);
    std::queue<int> q;
    q.push(s);
    res.source_side[s] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [u, e] : g.adj(v))
            if (!res.source_side[u] && residual(g, res.flow, v, e) > 0) {
                res.source_side[u] = true;
                q.push(u);
            }
    }
    return res;
}

std::int64_t flow_at_port(const Graph& g, const std::vector<std::int64_t>& flow, int v, int port) {
    auto [u, e] = g.adj(v)[port];
    return g.edge(e).u == v ? flow[e] : -flow[e];
}

void cancel_flow_cycles(const Graph& g, std::vector<std::int64_t>& flow, int /*s*/, int /*t*/) {
    int n = g.node_count();
    for (;;) {
        std::vector<int> state(n, 0); // 0 unvisited, 1 on stack, 2 done
        std::vector<int> via_edge(n, -1), prev(n, -1);
        int head = -1, tail = -1, closing = -1;

        std::function<bool(int)> dfs = [&](int v) {
            state[v] = 1;
            for (auto [u, e] : g.adj(v)) {
                if (signed_from(g, flow, v, e) <= 0) continue;
                if (state[u] == 1) {
                    head = u;
                    tail = v;
                    closing = e;
                    return true;
                }
                if (state[u] == 0) {
                    prev[u] = v;
                    via_edge[u] = e;
                    if (dfs(u)) return true;
                }
            }
            state[v] = 2;
            return false;
        };
        bool found = false;
        for (int v = 0; v < n && !found; ++v)
            if (state[v] == 0) found = dfs(v);
        if (!found) return;

        // Forward node sequence head -> ... -> tail, then closing edge back.
        std::vector<int> nodes;
        for (int v = tail; v != head; v = prev[v]) nodes.push_back(v);
        nodes.push_back(head);
        std::reverse(nodes.begin(), nodes.end());

        std::vector<std::pair<int, int>> directed; // (from node, edge)
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            directed.push_back({nodes[i], via_edge[nodes[i + 1]]});
        directed.push_back({tail, closing});

        std::int64_t reduce = INT64_MAX;
        for (auto [from, e] : directed) reduce = std::min(reduce, signed_from(g, flow, from, e));
        for (auto [from, e] : directed) flow[e] += (g.edge(e).u == from) ? -reduce : reduce;
    }
}

} // namespace pls

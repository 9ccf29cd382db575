#include "pls/config.hpp"

#include "pls/errors.hpp"

#include <algorithm>

namespace pls {

Configuration::Configuration(Graph g) : graph_(std::move(g)) {
    states_.resize(graph_.node_count());
    finalize();
}

void Configuration::finalize() {
    states_.resize(graph_.node_count());
    max_degree_ = max_degree_override_ > 0 ? max_degree_override_ : graph_.max_degree();
    if (id_bits_ == 0) id_bits_ = std::max(1, bit_width(graph_.max_id()));

    auto check_shape = [&](std::size_t sz, int v, const char* what) {
        if (sz != 0 && sz != static_cast<std::size_t>(graph_.degree(v)))
            throw InvalidParams(std::string(what) + " vector size mismatch at node " +
                                std::to_string(graph_.id_of(v)));
    };
    std::int64_t max_abs_flow = 0;
    std::size_t b_seen = 0;
    bool any_bits = false;
    for (int v = 0; v < graph_.node_count(); ++v) {
        const auto& s = states_[v];
        check_shape(s.edge_bits.size(), v, "edge_bits");
        check_shape(s.marks.size(), v, "marks");
        check_shape(s.flow.size(), v, "flow");
        check_shape(s.clique_input.size(), v, "clique_input");
        check_shape(s.clique_weight.size(), v, "clique_weight");
        for (const auto& bs : s.edge_bits) {
            if (any_bits && bs.size() != b_seen)
                throw InvalidParams("edge bit strings must share one width b");
            b_seen = bs.size();
            any_bits = true;
        }
        for (std::int64_t f : s.flow) max_abs_flow = std::max(max_abs_flow, std::abs(f));
    }
    if (b_ == 0 && any_bits) b_ = static_cast<int>(b_seen);
    if (b_ != 0 && any_bits && b_seen != static_cast<std::size_t>(b_))
        throw InvalidParams("edge bit strings disagree with header b");
    if (flow_bits_ == 0)
        flow_bits_ = bit_width(static_cast<std::uint64_t>(max_abs_flow)) + 1;
    if (w_max_ == 0) {
        for (const auto& e : graph_.edges())
            if (e.weight) w_max_ = std::max(w_max_, *e.weight);
    }
}

std::optional<std::uint64_t> Configuration::port_weight(int v, int port) const {
    return graph_.edge(graph_.adj(v)[port].edge).weight;
}

std::optional<std::uint64_t> Configuration::port_capacity(int v, int port) const {
    return graph_.edge(graph_.adj(v)[port].edge).capacity;
}

std::optional<int> Configuration::source() const {
    std::optional<int> s;
    for (int v = 0; v < n(); ++v)
        if (states_[v].is_source) {
            if (s) throw InvalidParams("multiple source nodes");
            s = v;
        }
    return s;
}

std::optional<int> Configuration::sink() const {
    std::optional<int> t;
    for (int v = 0; v < n(); ++v)
        if (states_[v].is_sink) {
            if (t) throw InvalidParams("multiple sink nodes");
            t = v;
        }
    return t;
}

LocalView local_view(const Configuration& cfg, int v) {
    LocalView view;
    view.id = cfg.graph().id_of(v);
    view.index = v;
    view.degree = cfg.graph().degree(v);
    view.state = &cfg.state(v);
    view.weight.reserve(view.degree);
    view.capacity.reserve(view.degree);
    for (int p = 0; p < view.degree; ++p) {
        view.weight.push_back(cfg.port_weight(v, p));
        view.capacity.push_back(cfg.port_capacity(v, p));
    }
    view.n = cfg.n();
    view.m = cfg.m();
    view.max_degree = cfg.max_degree();
    view.id_bits = cfg.id_bits();
    view.b = cfg.b();
    view.flow_bits = cfg.flow_bits();
    view.w_max = cfg.w_max();
    return view;
}

} // namespace pls

#include "pls/engine.hpp"

#include "pls/errors.hpp"

#include <algorithm>
#include <set>

namespace pls {

MessagePattern::MessagePattern(const Graph& g) {
    out_.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) out_[v].resize(g.degree(v));
}

const BitString& MessagePattern::received(const Graph& g, int v, int port) const {
    auto [u, e] = g.adj(v)[port];
    int back = g.port_of_edge(u, e);
    return out_[u][back];
}

std::size_t MessagePattern::max_bits() const {
    std::size_t m = 0;
    for (const auto& node : out_)
        for (const auto& s : node) m = std::max(m, s.size());
    return m;
}

double MessagePattern::mean_bits() const {
    std::size_t total = 0, count = 0;
    for (const auto& node : out_)
        for (const auto& s : node) {
            total += s.size();
            ++count;
        }
    return count == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(count);
}

namespace {

void validate_partition(const NeighborPartition& part, int degree, int r, NodeId id) {
    std::vector<bool> seen(degree, false);
    if (static_cast<int>(part.size()) > r)
        throw ConstraintViolation("node " + std::to_string(id) + " uses " +
                                  std::to_string(part.size()) + " groups > r=" + std::to_string(r));
    int covered = 0;
    for (const auto& group : part)
        for (int p : group) {
            if (p < 0 || p >= degree || seen[p])
                throw ConstraintViolation("node " + std::to_string(id) +
                                          ": ill-formed neighbor partition");
            seen[p] = true;
            ++covered;
        }
    if (covered != degree)
        throw ConstraintViolation("node " + std::to_string(id) +
                                  ": partition does not cover all ports");
}

} // namespace

RunResult run(const Scheme& scheme, const Configuration& cfg,
              const std::optional<LabelAssignment>& labels) {
    const Graph& g = cfg.graph();
    int n = g.node_count();
    LabelAssignment la = labels ? *labels : scheme.prover(cfg);
    if (static_cast<int>(la.label.size()) != n)
        throw InvalidParams("labels must be defined on all nodes");

    RunResult res;
    res.pattern = MessagePattern(g);
    res.partitions.resize(n);

    // Phase 1: partitions, then messages per group.
    for (int v = 0; v < n; ++v) {
        LocalView view = local_view(cfg, v);
        NeighborPartition part = scheme.partition(view, la.label[v]);
        validate_partition(part, view.degree, scheme.r, view.id);
        std::set<BitString> distinct;
        for (const auto& group : part) {
            if (group.empty()) continue; // nothing is sent for an empty group
            BitString msg = scheme.message(view, la.label[v], group);
            distinct.insert(msg);
            for (int p : group) res.pattern.sent(v, p) = msg;
        }
        if (static_cast<int>(distinct.size()) > scheme.r)
            throw ConstraintViolation("node " + std::to_string(view.id) + " sends " +
                                      std::to_string(distinct.size()) +
                                      " distinct messages > r=" + std::to_string(scheme.r));
        res.partitions[v] = std::move(part);
    }

    // Phase 2: deliver and decide.
    res.verdict.output.resize(n);
    for (int v = 0; v < n; ++v) {
        LocalView view = local_view(cfg, v);
        std::vector<BitString> inbox(view.degree);
        for (int p = 0; p < view.degree; ++p) inbox[p] = res.pattern.received(g, v, p);
        res.verdict.output[v] = scheme.decide(view, la.label[v], inbox);
    }
    return res;
}

MessagePattern communication_pattern(const Scheme& scheme, const Configuration& cfg,
                                     const std::optional<LabelAssignment>& labels) {
    return run(scheme, cfg, labels).pattern;
}

std::size_t measure_complexity(const Scheme& scheme, std::span<const Configuration> configs,
                               std::span<const bool> legal) {
    if (!legal.empty() && legal.size() != configs.size())
        throw InvalidParams("legal flags must match configs");
    std::size_t worst = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (!legal.empty() && !legal[i])
            throw IllegalInput("measure_complexity given a known-illegal configuration");
        worst = std::max(worst, run(scheme, configs[i]).pattern.max_bits());
    }
    return worst;
}

bool decide_with_inbox(const Scheme& scheme, const Configuration& cfg, int v,
                       const BitString& label, std::span<const BitString> inbox) {
    LocalView view = local_view(cfg, v);
    return scheme.decide(view, label, inbox);
}

} // namespace pls

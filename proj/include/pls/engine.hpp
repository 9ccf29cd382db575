#ifndef PLS_ENGINE_HPP
#define PLS_ENGINE_HPP

#include "pls/bits.hpp"
#include "pls/config.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pls {

/// Per-node label bit strings, indexed by node index.
struct LabelAssignment {
    std::vector<BitString> label;
};

/// Per node: groups of ports that receive the same message. Groups must be
/// disjoint, cover every port, and number at most r.
using NeighborPartition = std::vector<std::vector<int>>;

/// Outgoing message per (node, port): both directions of every edge.
class MessagePattern {
public:
    explicit MessagePattern(const Graph& g);
    MessagePattern() = default;

    const BitString& sent(int v, int port) const { return out_[v][port]; }
    BitString& sent(int v, int port) { return out_[v][port]; }
    // Message arriving at v on `port` (what the peer sent toward v).
    const BitString& received(const Graph& g, int v, int port) const;

    std::size_t max_bits() const;
    double mean_bits() const;

    bool operator==(const MessagePattern&) const = default;

private:
    std::vector<std::vector<BitString>> out_;
};

struct Verdict {
    std::vector<bool> output; // per node index
    bool accept() const {
        for (bool b : output)
            if (!b) return false;
        return true;
    }
    std::vector<int> rejecting() const {
        std::vector<int> r;
        for (std::size_t v = 0; v < output.size(); ++v)
            if (!output[v]) r.push_back(static_cast<int>(v));
        return r;
    }
};

/// A proof-labeling scheme: prover oracle plus the local verifier split
/// into its oblivious partition, message, and decision parts. The verifier
/// pieces see only a LocalView, so locality holds by construction. All
/// functions must be total: undecodable labels make `decide` return false
/// (never throw) and `partition`/`message` fall back to one group of all
/// ports carrying the empty message.
struct Scheme {
    std::string name;
    int r = 1;
    std::function<LabelAssignment(const Configuration&)> prover;
    std::function<NeighborPartition(const LocalView&, const BitString&)> partition;
    std::function<BitString(const LocalView&, const BitString&, std::span<const int>)> message;
    std::function<bool(const LocalView&, const BitString&, std::span<const BitString>)> decide;
    // Conservative pruning oracle for adversarial search: returning false
    // promises that decide() is false for every inbox. Optional.
    std::function<bool(const LocalView&, const BitString&)> label_parses;
};

struct RunResult {
    Verdict verdict;
    MessagePattern pattern;
    std::vector<NeighborPartition> partitions;
};

/// Runs one synchronous verification round: partitions, messages, delivery,
/// decisions. Labels default to prover output. Throws ConstraintViolation
/// when a node's partition is ill-formed or it emits more than r distinct
/// messages (counting the empty message).
RunResult run(const Scheme& scheme, const Configuration& cfg,
              const std::optional<LabelAssignment>& labels = std::nullopt);

MessagePattern communication_pattern(const Scheme& scheme, const Configuration& cfg,
                                     const std::optional<LabelAssignment>& labels = std::nullopt);

/// Max message bit-length over legal configurations under prover labels.
/// `legal`, when nonempty, flags each config; a false flag raises
/// IllegalInput (the measure is defined over legal configurations only).
std::size_t measure_complexity(const Scheme& scheme, std::span<const Configuration> configs,
                               std::span<const bool> legal = {});

// Replays a single node's decision against a recorded inbox (locality and
// adversarial-search helper; no messages are exchanged).
bool decide_with_inbox(const Scheme& scheme, const Configuration& cfg, int v,
                       const BitString& label, std::span<const BitString> inbox);

} // namespace pls

#endif // PLS_ENGINE_HPP

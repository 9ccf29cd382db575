#include "pls/schemes.hpp"

#include "pls/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pls {

PsiPredicate psi_equality(int b) {
    if (b < 1) throw InvalidParams("psi bit-width must be >= 1");
    return {b, "eq", [](const BitString& x, const BitString& y) { return x == y; }};
}

PsiPredicate psi_antisymmetry(int b) {
    if (b < 1 || b > 63) throw InvalidParams("antisymmetry width out of range");
    return {b, "antisym", [b](const BitString& x, const BitString& y) {
                if (x.size() != static_cast<std::size_t>(b) || y.size() != static_cast<std::size_t>(b))
                    return false;
                BitReader rx(x), ry(y);
                auto vx = rx.read_int(b), vy = ry.read_int(b);
                return vx && vy && *vx == -*vy;
            }};
}

namespace {

std::int64_t clamp_to_width(std::int64_t v, int width) {
    std::int64_t lo = -(std::int64_t{1} << (width - 1));
    std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
    return std::clamp(v, lo, hi);
}

BitString twos(std::int64_t v, int width) {
    BitString s;
    s.append_int(clamp_to_width(v, width), width);
    return s;
}

// ---------------------------------------------------------------------------
// Edge-psi core, shared by EA, MF and k-MF.
//
// Label layout: [raw:1][outgoing bit per port] and, in pair mode,
// [own color][expected color per port]. Raw mode sends the bare input
// string on each outgoing edge; pair mode composes color addressing with
// lists of (color, input) pairs chunked into at most r parts. `active`
// selects which outgoing ports carry an input at all (k-MF sends nothing
// across zero-flow edges); an inactive or missing pair at a receiving port
// is only accepted when the receiver's own input is inactive too.
// ---------------------------------------------------------------------------

struct PsiLabel {
    bool raw = false;
    std::vector<bool> outgoing;
    std::uint64_t own_col = 0;
    std::vector<std::uint64_t> expected;
};

void psi_encode_label(BitString& out, const PsiLabel& pl, int col_bits) {
    out.append_bit(pl.raw);
    for (bool o : pl.outgoing) out.append_bit(o);
    if (!pl.raw) {
        out.append_uint(pl.own_col, col_bits);
        for (auto c : pl.expected) out.append_uint(c, col_bits);
    }
}

std::optional<PsiLabel> psi_decode_label(BitReader& r, int degree, int col_bits) {
    PsiLabel pl;
    auto raw = r.read_bit();
    if (!raw) return std::nullopt;
    pl.raw = *raw;
    pl.outgoing.resize(degree);
    for (int p = 0; p < degree; ++p) {
        auto bit = r.read_bit();
        if (!bit) return std::nullopt;
        pl.outgoing[p] = *bit;
    }
    if (!pl.raw) {
        auto own = r.read_uint(col_bits);
        if (!own) return std::nullopt;
        pl.own_col = *own;
        pl.expected.resize(degree);
        for (int p = 0; p < degree; ++p) {
            auto c = r.read_uint(col_bits);
            if (!c) return std::nullopt;
            pl.expected[p] = *c;
        }
    }
    return pl;
}

std::vector<int> psi_active_out(const PsiLabel& pl, const std::vector<bool>& active) {
    std::vector<int> out;
    for (std::size_t p = 0; p < pl.outgoing.size(); ++p)
        if (pl.outgoing[p] && active[p]) out.push_back(static_cast<int>(p));
    return out;
}

// nullopt when the claimed orientation cannot meet the r-message budget;
// callers fall back to one silent group and a rejecting verdict.
std::optional<NeighborPartition> psi_partition(const PsiLabel& pl, int degree, int r,
                                               const std::vector<bool>& active) {
    std::vector<int> act = psi_active_out(pl, active);
    NeighborPartition part;
    if (pl.raw) {
        bool others = static_cast<int>(act.size()) < degree;
        if (static_cast<int>(act.size()) + (others ? 1 : 0) > r) return std::nullopt;
        for (int p : act) part.push_back({p});
        if (others) {
            std::vector<int> rest;
            for (int p = 0; p < degree; ++p)
                if (!(pl.outgoing[p] && active[p])) rest.push_back(p);
            part.push_back(std::move(rest));
        }
        return part;
    }
    if (act.empty()) {
        if (degree > 0) {
            std::vector<int> all(degree);
            for (int p = 0; p < degree; ++p) all[p] = p;
            part.push_back(std::move(all));
        }
        return part;
    }
    int q = static_cast<int>((act.size() + r - 1) / r); // ceil(|act| / r)
    for (std::size_t i = 0; i < act.size(); i += q)
        part.emplace_back(act.begin() + i, act.begin() + std::min(act.size(), i + q));
    // Remaining ports (incoming and inactive) reuse the first part's message.
    std::vector<bool> placed(degree, false);
    for (int p : act) placed[p] = true;
    for (int p = 0; p < degree; ++p)
        if (!placed[p]) part[0].push_back(p);
    return part;
}

BitString psi_group_message(const PsiLabel& pl, std::span<const int> group,
                            const std::vector<BitString>& inputs, const std::vector<bool>& active,
                            int col_bits) {
    BitString msg;
    if (pl.raw) {
        if (group.size() == 1 && pl.outgoing[group[0]] && active[group[0]])
            return inputs[group[0]];
        return msg;
    }
    msg.append_uint(pl.own_col, col_bits);
    std::vector<int> sorted(group.begin(), group.end());
    std::sort(sorted.begin(), sorted.end());
    BitString pairs;
    for (int p : sorted)
        if (pl.outgoing[p] && active[p]) {
            pairs.append_uint(pl.expected[p], col_bits);
            pairs.append(inputs[p]);
        }
    append_field(msg, pairs);
    return msg;
}

bool psi_decide(const PsiLabel& pl, int degree, int r, std::span<const BitString> inbox,
                const std::vector<BitString>& inputs, const std::vector<bool>& active,
                const PsiPredicate& psi, int col_bits) {
    if (!psi_partition(pl, degree, r, active)) return false;
    if (!pl.raw) {
        std::set<std::uint64_t> distinct(pl.expected.begin(), pl.expected.end());
        if (static_cast<int>(distinct.size()) != degree) return false;
        if (distinct.count(pl.own_col)) return false;
    }
    int b = psi.b;
    for (int p = 0; p < degree; ++p) {
        const BitString& rec = inbox[p];
        if (pl.raw) {
            if (pl.outgoing[p]) {
                if (!rec.empty()) return false;
            } else if (rec.empty()) {
                if (active[p]) return false;
            } else {
                if (rec.size() != static_cast<std::size_t>(b)) return false;
                if (!psi.fn(rec, inputs[p])) return false;
            }
        } else {
            BitReader br(rec);
            auto sender_col = br.read_uint(col_bits);
            if (!sender_col) return false;
            auto pairs = br.read_field();
            if (!pairs || !br.done()) return false;
            if (*sender_col != pl.expected[p]) return false;
            if (pairs->size() % (col_bits + b) != 0) return false;
            BitReader pr(*pairs);
            int matched = 0;
            BitString match;
            while (!pr.done()) {
                auto c = pr.read_uint(col_bits);
                auto x = pr.read_bits(b);
                if (!c || !x) return false;
                if (*c == pl.own_col) {
                    ++matched;
                    match = *x;
                }
            }
            if (pl.outgoing[p]) {
                if (matched != 0) return false;
            } else if (matched == 0) {
                if (active[p]) return false;
            } else if (matched > 1) {
                return false;
            } else if (!psi.fn(match, inputs[p])) {
                return false;
            }
        }
    }
    return true;
}

PsiLabel psi_prover_label(const Graph& g, int v, int r, const DegeneracyResult& peel,
                          const Orientation& orient, const Coloring& col) {
    PsiLabel pl;
    pl.raw = r >= 2 * peel.degeneracy && peel.degeneracy > 0;
    if (peel.degeneracy == 0) pl.raw = true; // edgeless: trivially raw
    int d = g.degree(v);
    pl.outgoing.resize(d);
    for (int p = 0; p < d; ++p) pl.outgoing[p] = orient.outgoing(g, v, g.adj(v)[p].edge);
    if (!pl.raw) {
        pl.own_col = static_cast<std::uint64_t>(col.color[v]);
        pl.expected.resize(d);
        for (int p = 0; p < d; ++p)
            pl.expected[p] = static_cast<std::uint64_t>(col.color[g.adj(v)[p].to]);
    }
    return pl;
}

NeighborPartition fallback_partition(int degree) {
    NeighborPartition part;
    if (degree > 0) {
        std::vector<int> all(degree);
        for (int p = 0; p < degree; ++p) all[p] = p;
        part.push_back(std::move(all));
    }
    return part;
}

void require_r_fits(int r, const Graph& g) {
    int delta = g.max_degree();
    if (delta > 0 && r > delta)
        throw InvalidR("r=" + std::to_string(r) + " exceeds max degree " + std::to_string(delta));
}

// ---------------------------------------------------------------------------
// Color addressing
// ---------------------------------------------------------------------------

struct ColLabel {
    std::uint64_t own = 0;
    std::vector<std::uint64_t> expected;
};

std::optional<ColLabel> col_decode(const BitString& label, int degree, int col_bits) {
    BitReader r(label);
    ColLabel cl;
    auto own = r.read_uint(col_bits);
    if (!own) return std::nullopt;
    cl.own = *own;
    cl.expected.resize(degree);
    for (int p = 0; p < degree; ++p) {
        auto c = r.read_uint(col_bits);
        if (!c) return std::nullopt;
        cl.expected[p] = *c;
    }
    if (!r.done()) return std::nullopt;
    return cl;
}

bool col_label_valid(const ColLabel& cl) {
    std::set<std::uint64_t> distinct(cl.expected.begin(), cl.expected.end());
    if (distinct.size() != cl.expected.size()) return false;
    return !distinct.count(cl.own);
}

} // namespace

Scheme build_color_addressing() {
    Scheme s;
    s.name = "col";
    s.r = 1;
    s.prover = [](const Configuration& cfg) {
        auto col = distance2_coloring(cfg.graph());
        int cb = color_bits(cfg.max_degree());
        LabelAssignment la;
        la.label.resize(cfg.n());
        for (int v = 0; v < cfg.n(); ++v) {
            BitString l;
            l.append_uint(col.color[v], cb);
            for (auto [u, e] : cfg.graph().adj(v)) l.append_uint(col.color[u], cb);
            la.label[v] = l;
        }
        return la;
    };
    s.partition = [](const LocalView& view, const BitString&) {
        return fallback_partition(view.degree);
    };
    s.message = [](const LocalView& view, const BitString& label, std::span<const int>) {
        int cb = color_bits(view.max_degree);
        auto cl = col_decode(label, view.degree, cb);
        BitString msg;
        if (cl) msg.append_uint(cl->own, cb);
        return msg;
    };
    s.decide = [](const LocalView& view, const BitString& label, std::span<const BitString> inbox) {
        int cb = color_bits(view.max_degree);
        auto cl = col_decode(label, view.degree, cb);
        if (!cl || !col_label_valid(*cl)) return false;
        for (int p = 0; p < view.degree; ++p) {
            BitReader br(inbox[p]);
            auto c = br.read_uint(cb);
            if (!c || !br.done()) return false;
            if (*c != cl->expected[p]) return false;
        }
        return true;
    };
    s.label_parses = [](const LocalView& view, const BitString& label) {
        auto cl = col_decode(label, view.degree, color_bits(view.max_degree));
        return cl && col_label_valid(*cl);
    };
    return s;
}

Scheme build_mv_broadcast() {
    Scheme s;
    s.name = "mv";
    s.r = 1;
    s.prover = [](const Configuration& cfg) {
        for (int v = 0; v < cfg.n(); ++v)
            if (cfg.state(v).marks.size() != static_cast<std::size_t>(cfg.graph().degree(v)))
                throw InvalidParams("mv requires edge marks at every node");
        return build_color_addressing().prover(cfg);
    };
    s.partition = [](const LocalView& view, const BitString&) {
        return fallback_partition(view.degree);
    };
    s.message = [](const LocalView& view, const BitString& label, std::span<const int>) {
        int cb = color_bits(view.max_degree);
        auto cl = col_decode(label, view.degree, cb);
        BitString msg;
        if (!cl) return msg;
        if (view.state->marks.size() != static_cast<std::size_t>(view.degree)) return msg;
        int marked = -1;
        int count = 0;
        for (int p = 0; p < view.degree; ++p)
            if (view.state->marks[p]) {
                marked = p;
                ++count;
            }
        msg.append_uint(cl->own, cb);
        if (count == 1) {
            msg.append_bit(true);
            msg.append_uint(cl->expected[marked], cb);
        } else {
            msg.append_bit(false); // no mark (or locally invalid state: rejected anyway)
        }
        return msg;
    };
    s.decide = [](const LocalView& view, const BitString& label, std::span<const BitString> inbox) {
        int cb = color_bits(view.max_degree);
        auto cl = col_decode(label, view.degree, cb);
        if (!cl || !col_label_valid(*cl)) return false;
        if (view.state->marks.size() != static_cast<std::size_t>(view.degree)) return false;
        int marks = 0;
        for (int p = 0; p < view.degree; ++p)
            if (view.state->marks[p]) ++marks;
        if (marks > 1) return false;
        for (int p = 0; p < view.degree; ++p) {
            BitReader br(inbox[p]);
            auto c = br.read_uint(cb);
            auto flag = br.read_bit();
            if (!c || !flag) return false;
            if (*c != cl->expected[p]) return false;
            bool marked_here = false;
            if (*flag) {
                auto target = br.read_uint(cb);
                if (!target || !br.done()) return false;
                marked_here = (*target == cl->own);
            } else if (!br.done()) {
                return false;
            }
            // The message received from this edge names my color iff the
            // edge is marked on my side.
            if (marked_here != static_cast<bool>(view.state->marks[p])) return false;
        }
        return true;
    };
    s.label_parses = [](const LocalView& view, const BitString& label) {
        auto cl = col_decode(label, view.degree, color_bits(view.max_degree));
        return cl && col_label_valid(*cl);
    };
    return s;
}

// ---------------------------------------------------------------------------
// Edge psi / EA
// ---------------------------------------------------------------------------

namespace {

std::vector<BitString> state_inputs(const LocalView& view) {
    return view.state->edge_bits;
}

bool state_inputs_ok(const LocalView& view, int b) {
    if (view.state->edge_bits.size() != static_cast<std::size_t>(view.degree)) return false;
    for (const auto& s : view.state->edge_bits)
        if (s.size() != static_cast<std::size_t>(b)) return false;
    return true;
}

} // namespace

Scheme build_edge_psi(PsiPredicate psi, int r) {
    if (r < 1) throw InvalidR("r must be >= 1");
    if (psi.b < 1) throw InvalidParams("psi bit-width must be >= 1");
    Scheme s;
    s.name = "psi[" + psi.name + ",b=" + std::to_string(psi.b) + "]";
    s.r = r;
    int b = psi.b;
    s.prover = [r, b](const Configuration& cfg) {
        require_r_fits(r, cfg.graph());
        for (int v = 0; v < cfg.n(); ++v) {
            LocalView view = local_view(cfg, v);
            if (!state_inputs_ok(view, b))
                throw InvalidParams("edge-psi requires a b-bit string per port");
        }
        auto peel = degeneracy_ordering(cfg.graph());
        auto orient = minimizing_orientation(cfg.graph());
        auto col = distance2_coloring(cfg.graph());
        int cb = color_bits(cfg.max_degree());
        LabelAssignment la;
        la.label.resize(cfg.n());
        for (int v = 0; v < cfg.n(); ++v) {
            PsiLabel pl = psi_prover_label(cfg.graph(), v, r, peel, orient, col);
            psi_encode_label(la.label[v], pl, cb);
        }
        return la;
    };
    auto decode = [b](const LocalView& view, const BitString& label) -> std::optional<PsiLabel> {
        BitReader reader(label);
        auto pl = psi_decode_label(reader, view.degree, color_bits(view.max_degree));
        if (!pl || !reader.done()) return std::nullopt;
        if (!state_inputs_ok(view, b)) return std::nullopt;
        return pl;
    };
    s.partition = [decode, r](const LocalView& view, const BitString& label) {
        auto pl = decode(view, label);
        if (!pl) return fallback_partition(view.degree);
        std::vector<bool> active(view.degree, true);
        auto part = psi_partition(*pl, view.degree, r, active);
        return part ? *part : fallback_partition(view.degree);
    };
    s.message = [decode, r](const LocalView& view, const BitString& label, std::span<const int> group) {
        auto pl = decode(view, label);
        if (!pl) return BitString{};
        std::vector<bool> active(view.degree, true);
        if (!psi_partition(*pl, view.degree, r, active)) return BitString{};
        return psi_group_message(*pl, group, state_inputs(view), active, color_bits(view.max_degree));
    };
    s.decide = [decode, r, psi](const LocalView& view, const BitString& label,
                                std::span<const BitString> inbox) {
        auto pl = decode(view, label);
        if (!pl) return false;
        std::vector<bool> active(view.degree, true);
        return psi_decide(*pl, view.degree, r, inbox, state_inputs(view), active, psi,
                          color_bits(view.max_degree));
    };
    s.label_parses = [decode, r](const LocalView& view, const BitString& label) {
        auto pl = decode(view, label);
        if (!pl) return false;
        std::vector<bool> active(view.degree, true);
        return psi_partition(*pl, view.degree, r, active).has_value();
    };
    return s;
}

Scheme build_ea(int b, int r) {
    Scheme s = build_edge_psi(psi_equality(b), r);
    s.name = "ea[b=" + std::to_string(b) + "]";
    return s;
}

// ---------------------------------------------------------------------------
// Maximum flow
// ---------------------------------------------------------------------------

namespace {

struct MfLabel {
    bool in_cut = false; // z(v)
    PsiLabel psi;
};

std::optional<MfLabel> mf_decode(const LocalView& view, const BitString& label) {
    BitReader r(label);
    MfLabel ml;
    auto z = r.read_bit();
    if (!z) return std::nullopt;
    ml.in_cut = *z;
    auto pl = psi_decode_label(r, view.degree, color_bits(view.max_degree));
    if (!pl || !r.done()) return std::nullopt;
    ml.psi = *pl;
    return ml;
}

bool mf_state_ok(const LocalView& view) {
    return view.state->flow.size() == static_cast<std::size_t>(view.degree);
}

std::vector<BitString> mf_inputs(const LocalView& view) {
    std::vector<BitString> in(view.degree);
    for (int p = 0; p < view.degree; ++p) in[p] = twos(view.state->flow[p], view.flow_bits);
    return in;
}

} // namespace

Scheme build_mf(int r) {
    if (r < 1) throw InvalidR("r must be >= 1");
    Scheme s;
    s.name = "mf";
    s.r = r;
    s.prover = [r](const Configuration& cfg) {
        require_r_fits(r, cfg.graph());
        auto src = cfg.source(), snk = cfg.sink();
        if (!src || !snk) throw MissingSourceSink("mf requires designated source and sink");
        for (int v = 0; v < cfg.n(); ++v)
            if (!mf_state_ok(local_view(cfg, v)))
                throw InvalidParams("mf requires a flow value per port");
        // Residual reachability of the instance's own flow gives the cut side.
        const Graph& g = cfg.graph();
        std::vector<std::int64_t> edge_flow(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            int u = g.edge(e).u;
            int p = g.port_of_edge(u, e);
            edge_flow[e] = cfg.state(u).flow[p];
        }
        std::vector<bool> in_cut(cfg.n(), false);
        std::queue<int> q;
        q.push(*src);
        in_cut[*src] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [u, e] : g.adj(v)) {
                std::int64_t f = g.edge(e).u == v ? edge_flow[e] : -edge_flow[e];
                std::int64_t c = static_cast<std::int64_t>(g.edge(e).capacity.value_or(0));
                if (!in_cut[u] && c - f > 0) {
                    in_cut[u] = true;
                    q.push(u);
                }
            }
        }
        auto peel = degeneracy_ordering(g);
        auto orient = minimizing_orientation(g);
        auto col = distance2_coloring(g);
        int cb = color_bits(cfg.max_degree());
        LabelAssignment la;
        la.label.resize(cfg.n());
        for (int v = 0; v < cfg.n(); ++v) {
            la.label[v].append_bit(in_cut[v]);
            psi_encode_label(la.label[v], psi_prover_label(g, v, r, peel, orient, col), cb);
        }
        return la;
    };
    s.partition = [r](const LocalView& view, const BitString& label) {
        auto ml = mf_decode(view, label);
        if (!ml || !mf_state_ok(view)) return fallback_partition(view.degree);
        std::vector<bool> active(view.degree, true);
        auto part = psi_partition(ml->psi, view.degree, r, active);
        return part ? *part : fallback_partition(view.degree);
    };
    s.message = [r](const LocalView& view, const BitString& label, std::span<const int> group) {
        auto ml = mf_decode(view, label);
        BitString msg;
        if (!ml || !mf_state_ok(view)) return msg;
        std::vector<bool> active(view.degree, true);
        if (!psi_partition(ml->psi, view.degree, r, active)) return msg;
        msg.append_bit(ml->in_cut);
        msg.append(psi_group_message(ml->psi, group, mf_inputs(view), active,
                                     color_bits(view.max_degree)));
        return msg;
    };
    s.decide = [r](const LocalView& view, const BitString& label, std::span<const BitString> inbox) {
        auto ml = mf_decode(view, label);
        if (!ml || !mf_state_ok(view)) return false;
        // Split the cut bit off every incoming message.
        std::vector<BitString> psi_inbox(view.degree);
        std::vector<bool> z_in(view.degree);
        for (int p = 0; p < view.degree; ++p) {
            BitReader br(inbox[p]);
            auto z = br.read_bit();
            if (!z) return false;
            z_in[p] = *z;
            auto rest = br.read_bits(br.remaining());
            psi_inbox[p] = *rest;
        }
        std::vector<bool> active(view.degree, true);
        auto psi = psi_antisymmetry(view.flow_bits);
        if (!psi_decide(ml->psi, view.degree, r, psi_inbox, mf_inputs(view), active, psi,
                        color_bits(view.max_degree)))
            return false;
        std::int64_t net = 0;
        for (int p = 0; p < view.degree; ++p) {
            std::int64_t f = view.state->flow[p];
            std::int64_t c = static_cast<std::int64_t>(view.capacity[p].value_or(0));
            if (std::abs(f) > c) return false;                           // capacity compliance
            if (z_in[p] != ml->in_cut && std::abs(f) != c) return false; // cut saturation
            net += f;
        }
        if (view.state->is_source && !ml->in_cut) return false;
        if (view.state->is_sink && ml->in_cut) return false;
        if (!view.state->is_source && !view.state->is_sink && net != 0) return false;
        return true;
    };
    s.label_parses = [r](const LocalView& view, const BitString& label) {
        auto ml = mf_decode(view, label);
        if (!ml || !mf_state_ok(view)) return false;
        std::vector<bool> active(view.degree, true);
        return psi_partition(ml->psi, view.degree, r, active).has_value();
    };
    return s;
}

// ---------------------------------------------------------------------------
// k-maximum flow
// ---------------------------------------------------------------------------

namespace {

struct KmfLabel {
    bool in_cut = false;
    std::vector<std::int64_t> flow; // per port, prover-assigned
    PsiLabel psi;
};

int kmf_flow_bits(std::uint64_t k) { return bit_width(k) + 1; }

BitString kmf_k_encoding(std::uint64_t k) {
    BitString s;
    s.append_uint(k, bit_width(k));
    return s;
}

std::optional<KmfLabel> kmf_decode(const LocalView& view, const BitString& label) {
    if (!view.state->target_k) return std::nullopt;
    int kw = kmf_flow_bits(*view.state->target_k);
    BitReader r(label);
    KmfLabel kl;
    auto z = r.read_bit();
    if (!z) return std::nullopt;
    kl.in_cut = *z;
    kl.flow.resize(view.degree);
    for (int p = 0; p < view.degree; ++p) {
        auto f = r.read_int(kw);
        if (!f) return std::nullopt;
        kl.flow[p] = *f;
    }
    auto pl = psi_decode_label(r, view.degree, color_bits(view.max_degree));
    if (!pl || !r.done()) return std::nullopt;
    kl.psi = *pl;
    return kl;
}

std::vector<bool> kmf_active(const KmfLabel& kl) {
    std::vector<bool> a(kl.flow.size());
    for (std::size_t p = 0; p < kl.flow.size(); ++p) a[p] = kl.flow[p] != 0;
    return a;
}

std::vector<BitString> kmf_inputs(const KmfLabel& kl, int kw) {
    std::vector<BitString> in(kl.flow.size());
    for (std::size_t p = 0; p < kl.flow.size(); ++p) in[p] = twos(kl.flow[p], kw);
    return in;
}

} // namespace

Scheme build_kmf(std::uint64_t k, int r) {
    if (r < 1) throw InvalidR("r must be >= 1");
    Scheme s;
    s.name = "kmf[k=" + std::to_string(k) + "]";
    s.r = r;
    s.prover = [r, k](const Configuration& cfg) {
        require_r_fits(r, cfg.graph());
        auto src = cfg.source(), snk = cfg.sink();
        if (!src || !snk) throw MissingSourceSink("kmf requires designated source and sink");
        FlowResult fr = max_flow(cfg.graph(), *src, *snk);
        cancel_flow_cycles(cfg.graph(), fr.flow, *src, *snk);
        auto peel = degeneracy_ordering(cfg.graph());
        auto orient = minimizing_orientation(cfg.graph());
        auto col = distance2_coloring(cfg.graph());
        int cb = color_bits(cfg.max_degree());
        int kw = kmf_flow_bits(k);
        LabelAssignment la;
        la.label.resize(cfg.n());
        for (int v = 0; v < cfg.n(); ++v) {
            la.label[v].append_bit(fr.source_side[v]);
            for (int p = 0; p < cfg.graph().degree(v); ++p)
                la.label[v].append_int(clamp_to_width(flow_at_port(cfg.graph(), fr.flow, v, p), kw), kw);
            psi_encode_label(la.label[v], psi_prover_label(cfg.graph(), v, r, peel, orient, col), cb);
        }
        return la;
    };
    s.partition = [r](const LocalView& view, const BitString& label) {
        auto kl = kmf_decode(view, label);
        if (!kl) return fallback_partition(view.degree);
        auto part = psi_partition(kl->psi, view.degree, r, kmf_active(*kl));
        return part ? *part : fallback_partition(view.degree);
    };
    s.message = [r](const LocalView& view, const BitString& label, std::span<const int> group) {
        auto kl = kmf_decode(view, label);
        BitString msg;
        if (!kl) return msg;
        auto active = kmf_active(*kl);
        if (!psi_partition(kl->psi, view.degree, r, active)) return msg;
        std::uint64_t k = *view.state->target_k;
        append_field(msg, kmf_k_encoding(k));
        msg.append_bit(kl->in_cut);
        msg.append(psi_group_message(kl->psi, group, kmf_inputs(*kl, kmf_flow_bits(k)), active,
                                     color_bits(view.max_degree)));
        return msg;
    };
    s.decide = [r, k](const LocalView& view, const BitString& label,
                      std::span<const BitString> inbox) {
        auto kl = kmf_decode(view, label);
        if (!kl) return false;
        std::uint64_t own_k = *view.state->target_k;
        if (own_k != k) return false; // state value must match the declared problem
        BitString k_enc = kmf_k_encoding(own_k);
        int kw = kmf_flow_bits(own_k);
        std::vector<BitString> psi_inbox(view.degree);
        std::vector<bool> z_in(view.degree);
        for (int p = 0; p < view.degree; ++p) {
            BitReader br(inbox[p]);
            auto kf = br.read_field();
            auto z = br.read_bit();
            if (!kf || !z) return false;
            if (*kf != k_enc) return false; // neighbors must agree on k
            z_in[p] = *z;
            psi_inbox[p] = *br.read_bits(br.remaining());
        }
        auto active = kmf_active(*kl);
        auto psi = psi_antisymmetry(kw);
        if (!psi_decide(kl->psi, view.degree, r, psi_inbox, kmf_inputs(*kl, kw), active, psi,
                        color_bits(view.max_degree)))
            return false;
        std::int64_t net = 0;
        for (int p = 0; p < view.degree; ++p) {
            std::int64_t f = kl->flow[p];
            std::int64_t c = static_cast<std::int64_t>(view.capacity[p].value_or(0));
            if (std::abs(f) > c) return false;
            if (z_in[p] != kl->in_cut && std::abs(f) != c) return false;
            net += f;
        }
        std::int64_t kv = static_cast<std::int64_t>(own_k);
        if (view.state->is_source) {
            if (!kl->in_cut || net != kv) return false;
        } else if (view.state->is_sink) {
            if (kl->in_cut || net != -kv) return false;
        } else if (net != 0) {
            return false;
        }
        return true;
    };
    s.label_parses = [r, k](const LocalView& view, const BitString& label) {
        auto kl = kmf_decode(view, label);
        if (!kl) return false;
        if (*view.state->target_k != k) return false;
        return psi_partition(kl->psi, view.degree, r, kmf_active(*kl)).has_value();
    };
    return s;
}

// ---------------------------------------------------------------------------
// Spanning-tree baseline
// ---------------------------------------------------------------------------

namespace {

struct StLabel {
    std::uint64_t root = 0, parent = 0, dist = 0;
};

int st_dist_bits(int n) { return bit_width(static_cast<std::uint64_t>(n > 0 ? n - 1 : 0)); }

std::optional<StLabel> st_decode(const LocalView& view, const BitString& label) {
    BitReader r(label);
    StLabel sl;
    auto root = r.read_uint(view.id_bits);
    auto parent = r.read_uint(view.id_bits);
    auto dist = r.read_uint(st_dist_bits(view.n));
    if (!root || !parent || !dist || !r.done()) return std::nullopt;
    sl.root = *root;
    sl.parent = *parent;
    sl.dist = *dist;
    return sl;
}

} // namespace

Scheme build_spanning_tree_baseline() {
    Scheme s;
    s.name = "st";
    s.r = 1;
    s.prover = [](const Configuration& cfg) {
        const Graph& g = cfg.graph();
        for (int v = 0; v < cfg.n(); ++v)
            if (cfg.state(v).marks.size() != static_cast<std::size_t>(g.degree(v)))
                throw InvalidParams("spanning-tree baseline requires tree marks");
        // BFS over marked edges from the smallest-id node.
        int root = 0;
        for (int v = 1; v < cfg.n(); ++v)
            if (g.id_of(v) < g.id_of(root)) root = v;
        std::vector<int> dist(cfg.n(), -1), parent(cfg.n(), -1);
        std::queue<int> q;
        q.push(root);
        dist[root] = 0;
        parent[root] = root;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int p = 0; p < g.degree(v); ++p) {
                if (!cfg.state(v).marks[p]) continue;
                int u = g.adj(v)[p].to;
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                }
            }
        }
        int db = st_dist_bits(cfg.n());
        LabelAssignment la;
        la.label.resize(cfg.n());
        for (int v = 0; v < cfg.n(); ++v) {
            int d = dist[v] == -1 ? 0 : dist[v];
            int pv = dist[v] == -1 ? v : parent[v];
            la.label[v].append_uint(g.id_of(dist[v] == -1 ? v : root), cfg.id_bits());
            la.label[v].append_uint(g.id_of(pv), cfg.id_bits());
            la.label[v].append_uint(static_cast<std::uint64_t>(d), db);
        }
        return la;
    };
    s.partition = [](const LocalView& view, const BitString&) {
        return fallback_partition(view.degree);
    };
    s.message = [](const LocalView& view, const BitString& label, std::span<const int>) {
        auto sl = st_decode(view, label);
        BitString msg;
        if (!sl) return msg;
        msg.append_uint(view.id, view.id_bits);
        msg.append_uint(sl->root, view.id_bits);
        msg.append_uint(sl->parent, view.id_bits);
        msg.append_uint(sl->dist, st_dist_bits(view.n));
        return msg;
    };
    s.decide = [](const LocalView& view, const BitString& label, std::span<const BitString> inbox) {
        auto sl = st_decode(view, label);
        if (!sl) return false;
        if (view.state->marks.size() != static_cast<std::size_t>(view.degree)) return false;
        int db = st_dist_bits(view.n);
        struct Rec {
            std::uint64_t id, root, parent, dist;
        };
        std::vector<Rec> rec(view.degree);
        for (int p = 0; p < view.degree; ++p) {
            BitReader br(inbox[p]);
            auto id = br.read_uint(view.id_bits);
            auto root = br.read_uint(view.id_bits);
            auto parent = br.read_uint(view.id_bits);
            auto dist = br.read_uint(db);
            if (!id || !root || !parent || !dist || !br.done()) return false;
            rec[p] = {*id, *root, *parent, *dist};
        }
        // Roots agree everywhere; distance 0 iff I am the root.
        for (int p = 0; p < view.degree; ++p)
            if (rec[p].root != sl->root) return false;
        if ((sl->dist == 0) != (sl->root == view.id)) return false;
        if (sl->dist == 0 && sl->parent != view.id) return false;
        int parent_port = -1;
        for (int p = 0; p < view.degree; ++p) {
            bool marked = view.state->marks[p];
            if (marked && rec[p].dist + 1 == sl->dist) {
                if (parent_port != -1) return false; // two candidate parents
                if (sl->parent != rec[p].id) return false;
                parent_port = p;
                continue;
            }
            if (marked) {
                // Every other marked edge must lead to one of my children.
                if (rec[p].dist != sl->dist + 1) return false;
                if (rec[p].parent != view.id) return false;
            } else {
                if (rec[p].parent == view.id) return false;
            }
        }
        if (sl->dist > 0 && parent_port == -1) return false;
        if (sl->dist == 0 && parent_port != -1) return false;
        return true;
    };
    s.label_parses = [](const LocalView& view, const BitString& label) {
        return st_decode(view, label).has_value();
    };
    return s;
}

// ---------------------------------------------------------------------------
// EA from MF (the reduction)
// ---------------------------------------------------------------------------

namespace {

struct RedDims {
    int fbits;     // width of flows and subtree excesses
    int dist_bits; // BFS depth field
    std::uint64_t cap;
    NodeId s_id, t_id;
    int inner_id_bits;
    int inner_max_degree;
};

RedDims reduction_dims(int n, int m, int b, int id_bits, int max_degree) {
    RedDims d;
    d.fbits = bit_width(static_cast<std::uint64_t>(m)) + b + 1;
    d.dist_bits = bit_width(static_cast<std::uint64_t>(n > 0 ? n - 1 : 0));
    d.cap = static_cast<std::uint64_t>(m) << b;
    d.s_id = static_cast<NodeId>(std::uint64_t{1} << id_bits);
    d.t_id = d.s_id + 1;
    d.inner_id_bits = id_bits + 1;
    d.inner_max_degree = max_degree + 2;
    return d;
}

struct RedLabel {
    std::uint64_t root_id = 0, dist = 0, parent_id = 0;
    std::vector<bool> h_positive; // per port: h_v(u) == +1
    std::vector<std::int64_t> flow;
    std::int64_t subtree_excess = 0;
    BitString inner;          // inner scheme label
    BitString inner_s, inner_t; // only when dist == 0
};

std::optional<RedLabel> red_decode(const LocalView& view, const BitString& label, int b) {
    RedDims dims = reduction_dims(view.n, view.m, b, view.id_bits, view.max_degree);
    BitReader r(label);
    RedLabel rl;
    auto root = r.read_uint(view.id_bits);
    auto dist = r.read_uint(dims.dist_bits);
    auto parent = r.read_uint(view.id_bits);
    if (!root || !dist || !parent) return std::nullopt;
    rl.root_id = *root;
    rl.dist = *dist;
    rl.parent_id = *parent;
    rl.h_positive.resize(view.degree);
    for (int p = 0; p < view.degree; ++p) {
        auto h = r.read_bit();
        if (!h) return std::nullopt;
        rl.h_positive[p] = *h;
    }
    rl.flow.resize(view.degree);
    for (int p = 0; p < view.degree; ++p) {
        auto f = r.read_int(dims.fbits);
        if (!f) return std::nullopt;
        rl.flow[p] = *f;
    }
    auto xs = r.read_int(dims.fbits);
    if (!xs) return std::nullopt;
    rl.subtree_excess = *xs;
    auto inner = r.read_field();
    if (!inner) return std::nullopt;
    rl.inner = *inner;
    if (rl.dist == 0) {
        auto is = r.read_field();
        auto it = r.read_field();
        if (!is || !it) return std::nullopt;
        rl.inner_s = *is;
        rl.inner_t = *it;
    }
    if (!r.done()) return std::nullopt;
    return rl;
}

// Inner-view construction: every node simulates its own row of the flow
// instance; the root additionally hosts the two zero-capacity ports to the
// simulated source and sink.
LocalView reduction_inner_view(const LocalView& view, int b, bool is_root) {
    RedDims dims = reduction_dims(view.n, view.m, b, view.id_bits, view.max_degree);
    LocalView iv;
    iv.id = view.id;
    iv.degree = view.degree + (is_root ? 2 : 0);
    iv.n = view.n + 2;
    iv.m = view.m + 2;
    iv.max_degree = dims.inner_max_degree;
    iv.id_bits = dims.inner_id_bits;
    iv.b = 0;
    iv.flow_bits = dims.fbits;
    iv.w_max = 0;
    iv.weight.assign(iv.degree, std::nullopt);
    iv.capacity.assign(iv.degree, std::nullopt);
    for (int p = 0; p < view.degree; ++p) iv.capacity[p] = dims.cap;
    if (is_root) {
        iv.capacity[view.degree] = 0;
        iv.capacity[view.degree + 1] = 0;
    }
    return iv;
}

LocalView reduction_st_view(const LocalView& view, int b, bool source) {
    RedDims dims = reduction_dims(view.n, view.m, b, view.id_bits, view.max_degree);
    LocalView iv;
    iv.id = source ? dims.s_id : dims.t_id;
    iv.degree = 1;
    iv.n = view.n + 2;
    iv.m = view.m + 2;
    iv.max_degree = dims.inner_max_degree;
    iv.id_bits = dims.inner_id_bits;
    iv.b = 0;
    iv.flow_bits = dims.fbits;
    iv.w_max = 0;
    iv.weight.assign(1, std::nullopt);
    iv.capacity.assign(1, std::uint64_t{0});
    return iv;
}

} // namespace

ReductionWitness ea_mf_reduction_witness(const Configuration& cfg, int b) {
    const Graph& g = cfg.graph();
    if (!g.connected() || g.node_count() == 0)
        throw InvalidParams("reduction requires a connected, nonempty graph");
    if (b < 1 || b > 32) throw InvalidParams("reduction supports 1 <= b <= 32");
    int n = g.node_count();

    ReductionWitness w;
    // Root: smallest id; BFS tree with smallest-id parent tie-break.
    w.root = 0;
    for (int v = 1; v < n; ++v)
        if (g.id_of(v) < g.id_of(w.root)) w.root = v;
    w.depth.assign(n, -1);
    w.parent.assign(n, -1);
    {
        std::queue<int> q;
        q.push(w.root);
        w.depth[w.root] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [u, e] : g.adj(v))
                if (w.depth[u] == -1) {
                    w.depth[u] = w.depth[v] + 1;
                    q.push(u);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (v == w.root) continue;
            int best = -1;
            for (auto [u, e] : g.adj(v))
                if (w.depth[u] == w.depth[v] - 1 && (best == -1 || g.id_of(u) < g.id_of(best)))
                    best = u;
            w.parent[v] = best;
        }
    }

    // Orientation h and per-node excess X(v) = sum h_v(u) * value(B_v(u)).
    auto h_of = [&](int v, int u) { return g.id_of(v) < g.id_of(u) ? -1 : 1; };
    w.excess.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        const auto& bits = cfg.state(v).edge_bits;
        if (bits.size() != static_cast<std::size_t>(g.degree(v)))
            throw InvalidParams("reduction requires a b-bit string per port");
        for (int p = 0; p < g.degree(v); ++p) {
            int u = g.adj(v)[p].to;
            w.excess[v] += h_of(v, u) * static_cast<std::int64_t>(bits[p].lsb_value());
        }
    }
    // Subtree sums, deepest first.
    w.subtree_excess = w.excess;
    {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int c) { return w.depth[a] > w.depth[c]; });
        for (int v : order)
            if (v != w.root) w.subtree_excess[w.parent[v]] += w.subtree_excess[v];
    }
    // Flows.
    w.flows.assign(n, {});
    for (int v = 0; v < n; ++v) {
        w.flows[v].resize(g.degree(v));
        for (int p = 0; p < g.degree(v); ++p) {
            int u = g.adj(v)[p].to;
            std::int64_t base = h_of(v, u) * static_cast<std::int64_t>(cfg.state(v).edge_bits[p].lsb_value());
            if (w.parent[v] == u) base -= w.subtree_excess[v];
            else if (w.parent[u] == v) base += w.subtree_excess[u];
            w.flows[v][p] = base;
        }
    }

    // The simulated flow instance.
    RedDims dims = reduction_dims(n, g.edge_count(), b, cfg.id_bits(), cfg.max_degree());
    Graph ig;
    for (int v = 0; v < n; ++v) ig.add_node(g.id_of(v));
    ig.add_node(dims.s_id);
    ig.add_node(dims.t_id);
    for (const auto& e : g.edges())
        ig.add_edge(g.id_of(e.u), g.id_of(e.v), std::nullopt, dims.cap);
    ig.add_edge(dims.s_id, g.id_of(w.root), std::nullopt, std::uint64_t{0});
    ig.add_edge(dims.t_id, g.id_of(w.root), std::nullopt, std::uint64_t{0});

    Configuration inner(std::move(ig));
    for (int v = 0; v < n; ++v) {
        auto& st = inner.state(v);
        st.flow.assign(inner.graph().degree(v), 0);
        for (int p = 0; p < g.degree(v); ++p) st.flow[p] = w.flows[v][p];
    }
    inner.state(n).is_source = true;
    inner.state(n).flow = {0};
    inner.state(n + 1).is_sink = true;
    inner.state(n + 1).flow = {0};
    inner.set_flow_bits(dims.fbits);
    inner.set_id_bits(dims.inner_id_bits);
    inner.set_max_degree(dims.inner_max_degree);
    inner.finalize();
    w.inner = std::move(inner);
    return w;
}

Scheme ea_from_mf_reduction(const Scheme& mf_scheme, int b) {
    if (b < 1 || b > 32) throw InvalidParams("reduction supports 1 <= b <= 32");
    Scheme s;
    s.name = "ea_from_mf[b=" + std::to_string(b) + "]";
    s.r = mf_scheme.r;
    Scheme mf = mf_scheme; // captured by value: the reduction owns its inner scheme

    s.prover = [mf, b](const Configuration& cfg) {
        ReductionWitness w = ea_mf_reduction_witness(cfg, b);
        LabelAssignment inner_labels = mf.prover(w.inner);
        const Graph& g = cfg.graph();
        RedDims dims = reduction_dims(cfg.n(), cfg.m(), b, cfg.id_bits(), cfg.max_degree());
        LabelAssignment la;
        la.label.resize(cfg.n());
        for (int v = 0; v < cfg.n(); ++v) {
            BitString& l = la.label[v];
            l.append_uint(g.id_of(w.root), cfg.id_bits());
            l.append_uint(static_cast<std::uint64_t>(w.depth[v]), dims.dist_bits);
            l.append_uint(g.id_of(v == w.root ? v : w.parent[v]), cfg.id_bits());
            for (int p = 0; p < g.degree(v); ++p)
                l.append_bit(g.id_of(v) >= g.id_of(g.adj(v)[p].to)); // h == +1
            for (int p = 0; p < g.degree(v); ++p)
                l.append_int(clamp_to_width(w.flows[v][p], dims.fbits), dims.fbits);
            l.append_int(clamp_to_width(w.subtree_excess[v], dims.fbits), dims.fbits);
            append_field(l, inner_labels.label[v]);
            if (v == w.root) {
                append_field(l, inner_labels.label[cfg.n()]);
                append_field(l, inner_labels.label[cfg.n() + 1]);
            }
        }
        return la;
    };

    s.partition = [mf, b](const LocalView& view, const BitString& label) {
        auto rl = red_decode(view, label, b);
        if (!rl) return fallback_partition(view.degree);
        bool root = rl->dist == 0;
        LocalView iv = reduction_inner_view(view, b, root);
        NodeState inner_state;
        inner_state.flow = rl->flow;
        if (root) {
            inner_state.flow.push_back(0);
            inner_state.flow.push_back(0);
        }
        iv.state = &inner_state;
        NeighborPartition inner = mf.partition(iv, rl->inner);
        // Drop the two virtual ports; keep group order.
        NeighborPartition outer;
        for (auto& grp : inner) {
            std::vector<int> kept;
            for (int p : grp)
                if (p < view.degree) kept.push_back(p);
            outer.push_back(std::move(kept));
        }
        // Validate coverage; bad inner partitions fall back.
        std::vector<bool> seen(view.degree, false);
        int covered = 0;
        for (auto& grp : outer)
            for (int p : grp) {
                if (seen[p]) return fallback_partition(view.degree);
                seen[p] = true;
                ++covered;
            }
        if (covered != view.degree) return fallback_partition(view.degree);
        return outer;
    };

    s.message = [mf, b](const LocalView& view, const BitString& label, std::span<const int> group) {
        auto rl = red_decode(view, label, b);
        BitString msg;
        if (!rl) return msg;
        bool root = rl->dist == 0;
        LocalView iv = reduction_inner_view(view, b, root);
        NodeState inner_state;
        inner_state.flow = rl->flow;
        if (root) {
            inner_state.flow.push_back(0);
            inner_state.flow.push_back(0);
        }
        iv.state = &inner_state;
        // Find the inner group containing this outer group's ports.
        NeighborPartition inner = mf.partition(iv, rl->inner);
        std::span<const int> inner_group;
        if (!group.empty()) {
            for (const auto& grp : inner)
                if (std::find(grp.begin(), grp.end(), group[0]) != grp.end()) {
                    inner_group = grp;
                    break;
                }
        } else {
            return msg;
        }
        RedDims dims = reduction_dims(view.n, view.m, b, view.id_bits, view.max_degree);
        msg.append_uint(view.id, view.id_bits);
        msg.append_uint(rl->root_id, view.id_bits);
        msg.append_uint(rl->dist, dims.dist_bits);
        msg.append_uint(rl->parent_id, view.id_bits);
        msg.append_int(rl->subtree_excess, dims.fbits);
        msg.append(mf.message(iv, rl->inner, inner_group));
        return msg;
    };

    s.decide = [mf, b](const LocalView& view, const BitString& label,
                       std::span<const BitString> inbox) {
        auto rl = red_decode(view, label, b);
        if (!rl) return false;
        if (view.state->edge_bits.size() != static_cast<std::size_t>(view.degree)) return false;
        for (const auto& bs : view.state->edge_bits)
            if (bs.size() != static_cast<std::size_t>(b)) return false;
        RedDims dims = reduction_dims(view.n, view.m, b, view.id_bits, view.max_degree);

        struct Rec {
            std::uint64_t id, root, dist, parent;
            std::int64_t xs;
            BitString inner;
        };
        std::vector<Rec> rec(view.degree);
        for (int p = 0; p < view.degree; ++p) {
            BitReader br(inbox[p]);
            auto id = br.read_uint(view.id_bits);
            auto root = br.read_uint(view.id_bits);
            auto dist = br.read_uint(dims.dist_bits);
            auto parent = br.read_uint(view.id_bits);
            auto xs = br.read_int(dims.fbits);
            if (!id || !root || !dist || !parent || !xs) return false;
            rec[p] = {*id, *root, *dist, *parent, *xs, *br.read_bits(br.remaining())};
        }

        bool root = rl->dist == 0;
        // (1) root names itself; (2) one root id network-wide.
        if (root && rl->root_id != view.id) return false;
        if (!root && rl->root_id == view.id) return false;
        for (int p = 0; p < view.degree; ++p)
            if (rec[p].root != rl->root_id) return false;
        // (3) a parent one step closer to the root.
        if (!root) {
            bool found = false;
            for (int p = 0; p < view.degree; ++p)
                if (rec[p].dist + 1 == rl->dist && rl->parent_id == rec[p].id) found = true;
            if (!found) return false;
        }
        // (4)-(6) flows match the oriented inputs plus convergecast terms.
        for (int p = 0; p < view.degree; ++p) {
            std::int64_t base = (rl->h_positive[p] ? 1 : -1) *
                                static_cast<std::int64_t>(view.state->edge_bits[p].lsb_value());
            bool my_parent = rec[p].id == rl->parent_id;
            bool my_child = rec[p].parent == view.id;
            if (my_parent && rl->flow[p] != base - rl->subtree_excess) return false;
            if (my_child && rl->flow[p] != base + rec[p].xs) return false;
            if (!my_parent && !my_child && rl->flow[p] != base) return false;
        }

        // (7)/(8) inner verification, with the root also simulating s and t.
        LocalView iv = reduction_inner_view(view, b, root);
        NodeState inner_state;
        inner_state.flow = rl->flow;
        if (root) {
            inner_state.flow.push_back(0);
            inner_state.flow.push_back(0);
        }
        iv.state = &inner_state;
        std::vector<BitString> inner_inbox(iv.degree);
        for (int p = 0; p < view.degree; ++p) inner_inbox[p] = rec[p].inner;
        if (root) {
            // Messages the simulated s and t send toward me.
            LocalView sv = reduction_st_view(view, b, true);
            LocalView tv = reduction_st_view(view, b, false);
            NodeState sst, tst;
            sst.is_source = true;
            sst.flow = {0};
            tst.is_sink = true;
            tst.flow = {0};
            sv.state = &sst;
            tv.state = &tst;
            auto one_port_msg = [&](const LocalView& xv, const BitString& xl) {
                NeighborPartition part = mf.partition(xv, xl);
                for (const auto& grp : part)
                    if (std::find(grp.begin(), grp.end(), 0) != grp.end())
                        return mf.message(xv, xl, grp);
                return BitString{};
            };
            inner_inbox[view.degree] = one_port_msg(sv, rl->inner_s);
            inner_inbox[view.degree + 1] = one_port_msg(tv, rl->inner_t);
            if (!mf.decide(iv, rl->inner, inner_inbox)) return false;
            // My own messages toward s and t close the loop.
            NeighborPartition mine = mf.partition(iv, rl->inner);
            auto msg_on_port = [&](int port) {
                for (const auto& grp : mine)
                    if (std::find(grp.begin(), grp.end(), port) != grp.end())
                        return mf.message(iv, rl->inner, grp);
                return BitString{};
            };
            std::vector<BitString> s_inbox{msg_on_port(view.degree)};
            std::vector<BitString> t_inbox{msg_on_port(view.degree + 1)};
            if (!mf.decide(sv, rl->inner_s, s_inbox)) return false;
            if (!mf.decide(tv, rl->inner_t, t_inbox)) return false;
            return true;
        }
        return mf.decide(iv, rl->inner, inner_inbox);
    };

    s.label_parses = [b](const LocalView& view, const BitString& label) {
        return red_decode(view, label, b).has_value();
    };
    return s;
}

// ---------------------------------------------------------------------------
// Bound calculator
// ---------------------------------------------------------------------------

Problem problem_from_name(const std::string& name) {
    if (name == "col" || name == "color") return Problem::ColorAddressing;
    if (name == "mv") return Problem::MatchingVerification;
    if (name == "ea" || name == "psi") return Problem::EdgeAgreement;
    if (name == "mf") return Problem::MaxFlow;
    if (name == "kmf") return Problem::KMaxFlow;
    if (name == "st" || name == "spanning-tree") return Problem::SpanningTree;
    if (name == "mst" || name == "mst-clique") return Problem::MstClique;
    throw UnknownProblem("unknown problem: " + name);
}

BoundReport theoretical_bound(Problem problem, const Graph& g, int r, const BoundParams& params) {
    if (r < 1) throw InvalidR("r must be >= 1");
    int delta = g.max_degree();
    int cb = color_bits(delta);
    int deg = g.node_count() > 0 ? degeneracy_ordering(g).degeneracy : 0;
    int idb = params.id_bits > 0 ? params.id_bits : std::max(1, bit_width(g.max_id()));
    int n = params.n > 0 ? params.n : g.node_count();
    auto pair_bound = [&](int b, std::uint64_t pair_cap) -> std::size_t {
        std::uint64_t pairs = std::min<std::uint64_t>(static_cast<std::uint64_t>(deg), pair_cap);
        std::uint64_t q = (pairs + r - 1) / r;
        return static_cast<std::size_t>(cb + kFieldHeaderBits + q * (cb + b));
    };
    BoundReport rep;
    switch (problem) {
    case Problem::ColorAddressing:
        rep.bits = cb;
        rep.formula = "ceil(log2(D^2+D+1))";
        return rep;
    case Problem::MatchingVerification:
        rep.bits = 2 * static_cast<std::size_t>(cb) + 1;
        rep.formula = "2*ceil(log2(D^2+D+1)) + 1";
        return rep;
    case Problem::EdgeAgreement: {
        if (params.b < 1) throw InvalidParams("bound for ea needs b");
        if (deg > 0 && r >= 2 * deg) {
            rep.bits = static_cast<std::size_t>(params.b);
            rep.formula = "b (orientation scheme, r >= 2*deg)";
        } else {
            rep.bits = pair_bound(params.b, ~std::uint64_t{0});
            rep.formula = "colbits + 16 + ceil(deg/r)*(colbits+b)";
        }
        return rep;
    }
    case Problem::MaxFlow: {
        int fb = bit_width(params.f_max) + 1;
        if (deg > 0 && r >= 2 * deg)
            rep.bits = 1 + static_cast<std::size_t>(fb);
        else
            rep.bits = 1 + pair_bound(fb, ~std::uint64_t{0});
        rep.formula = "1 + ea-bound(b=log2(f_max)+1)";
        return rep;
    }
    case Problem::KMaxFlow: {
        int kw = bit_width(params.k) + 1;
        std::size_t kfield = kFieldHeaderBits + bit_width(params.k);
        if (deg > 0 && r >= 2 * deg)
            rep.bits = kfield + 1 + static_cast<std::size_t>(kw);
        else
            rep.bits = kfield + 1 + pair_bound(kw, 2 * params.k);
        rep.formula = "kfield + 1 + ea-bound(b=log2(k)+1, pairs<=min(deg,2k))";
        return rep;
    }
    case Problem::SpanningTree:
        rep.bits = 3 * static_cast<std::size_t>(idb) +
                   bit_width(static_cast<std::uint64_t>(n > 0 ? n - 1 : 0));
        rep.formula = "3*idbits + ceil(log2(n))";
        return rep;
    case Problem::MstClique:
        rep.bits = 1 + 2 * static_cast<std::size_t>(idb) + bit_width(params.w_max);
        rep.formula = "1 + 2*idbits + ceil(log2(w_max+1))";
        return rep;
    }
    throw UnknownProblem("unhandled problem");
}

} // namespace pls

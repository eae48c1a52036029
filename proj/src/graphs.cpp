#include "anet/graphs.hpp"

#include <algorithm>
#include <deque>

#include "anet/dense.hpp"

namespace anet::graphs {

bool in_family(const Network& f, const InteractionDigraph& d)
{
    return interaction_graph(f).is_subgraph_of(d);
}

namespace {

std::uint32_t reachable_from(const InteractionDigraph& d, int start)
{
    std::vector<std::uint32_t> out(static_cast<std::size_t>(d.n), 0);
    for (int u = 1; u <= d.n; ++u)
        for (int v = 1; v <= d.n; ++v)
            if (d.has_arc(u, v)) out[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
    std::uint32_t seen = 1u << (start - 1);
    std::deque<int> queue{start};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 1; v <= d.n; ++v) {
            if (((out[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u) && !((seen >> (v - 1)) & 1u)) {
                seen |= 1u << (v - 1);
                queue.push_back(v);
            }
        }
    }
    return seen;
}

} // namespace

bool strongly_connected(const InteractionDigraph& d)
{
    const std::uint32_t all = (d.n == 31) ? 0x7fffffffu : ((1u << d.n) - 1u);
    for (int s = 1; s <= d.n; ++s)
        if (reachable_from(d, s) != all) return false;
    return true;
}

std::optional<std::vector<int>> shortest_path(const InteractionDigraph& d, int from, int to)
{
    std::vector<int> parent(static_cast<std::size_t>(d.n) + 1, 0);
    std::deque<int> queue{from};
    parent[static_cast<std::size_t>(from)] = from;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int v = 1; v <= d.n; ++v) { // ascending: lowest-vertex tie-break
            if (d.has_arc(u, v) && parent[static_cast<std::size_t>(v)] == 0 && v != from) {
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    if (to != from && parent[static_cast<std::size_t>(to)] == 0) return std::nullopt;
    std::vector<int> path{to};
    int c = to;
    while (c != from) {
        c = parent[static_cast<std::size_t>(c)];
        path.push_back(c);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

TchuenteCertificate tchuente_condition(const InteractionDigraph& d)
{
    TchuenteCertificate cert;
    cert.strong = true;
    const std::uint32_t all = (d.n == 31) ? 0x7fffffffu : ((1u << d.n) - 1u);
    for (int s = 1; s <= d.n && cert.strong; ++s) {
        const std::uint32_t seen = reachable_from(d, s);
        if (seen != all) {
            cert.strong = false;
            for (int v = 1; v <= d.n; ++v)
                if (!((seen >> (v - 1)) & 1u)) {
                    cert.unreachable = {s, v};
                    break;
                }
        }
    }
    for (int v = 1; v <= d.n; ++v)
        if (d.in_degree(v) == d.n) {
            cert.hub = v;
            break;
        }
    cert.holds = cert.strong && cert.hub.has_value();
    return cert;
}

std::string ProgramStep::describe() const
{
    const std::string t = "y" + std::to_string(target);
    const std::string s = "y" + std::to_string(source);
    switch (op) {
    case Op::Add: return t + " <- " + t + " + " + s;
    case Op::Sub: return t + " <- " + t + " - " + s;
    case Op::RSub: return t + " <- " + s + " - " + t;
    }
    return "?";
}

Network InstructionProgram::replay() const
{
    Network r = Network::identity(params);
    for (const ProgramStep& st : steps) r = compose(st.realized.net, r);
    return r;
}

namespace {

ProgramStep make_step(const Params& p, int target, int source, ProgramStep::Op op)
{
    Network net{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) {
        const int t = p.digit(x, target);
        const int s = p.digit(x, source);
        int val = 0;
        switch (op) {
        case ProgramStep::Op::Add: val = (t + s) % p.q; break;
        case ProgramStep::Op::Sub: val = ((t - s) % p.q + p.q) % p.q; break;
        case ProgramStep::Op::RSub: val = ((s - t) % p.q + p.q) % p.q; break;
        }
        net.table[x] = p.with_digit(x, target, val);
    }
    return ProgramStep{target, source, op, Instruction{target, std::move(net)}};
}

} // namespace

InstructionProgram transposition_program(const InteractionDigraph& d, int q, int u, int v)
{
    const Params p = Params::make(d.n, q);
    InstructionProgram prog{p, {}};
    if (u == v) return prog;
    if (!d.is_reflexive()) fail(errc::invalid_params, "transposition program needs a reflexive digraph");
    if (!d.has_arc(u, v)) fail(errc::not_an_arc, "(u,v) is not an arc of D");
    const auto path = shortest_path(d, v, u);
    if (!path) fail(errc::no_return_path, "no directed path from v back to u (D not strong)");

    // path = v, w_1, ..., w_l, u
    const std::vector<int>& pv = *path;
    const int l = static_cast<int>(pv.size()) - 2;
    const auto w = [&](int j) { return pv[static_cast<std::size_t>(j)]; }; // w(j) = w_j, w(0) = v, w(l+1) = u

    using Op = ProgramStep::Op;
    auto& st = prog.steps;
    st.push_back(make_step(p, v, u, Op::Add));
    if (l == 0) {
        st.push_back(make_step(p, u, v, Op::RSub));
        st.push_back(make_step(p, v, u, Op::Sub));
        return prog;
    }
    for (int j = 2; j <= l; ++j) st.push_back(make_step(p, w(j), w(j - 1), Op::Add));
    st.push_back(make_step(p, u, w(l), Op::Add));
    for (int j = l; j >= 2; --j) st.push_back(make_step(p, w(j), w(j - 1), Op::Sub));
    st.push_back(make_step(p, w(1), v, Op::Add));
    for (int j = 2; j <= l; ++j) st.push_back(make_step(p, w(j), w(j - 1), Op::Add));
    st.push_back(make_step(p, u, w(l), Op::RSub));
    for (int j = l; j >= 2; --j) st.push_back(make_step(p, w(j), w(j - 1), Op::Sub));
    st.push_back(make_step(p, w(1), v, Op::Sub));
    st.push_back(make_step(p, v, u, Op::Sub));
    return prog;
}

Network variable_permutation(const Params& p, std::span<const int> phi)
{
    if (static_cast<int>(phi.size()) != p.n) fail(errc::invalid_params, "phi must list n coordinates");
    std::vector<bool> seen(static_cast<std::size_t>(p.n) + 1, false);
    for (int t : phi) {
        if (t < 1 || t > p.n || seen[static_cast<std::size_t>(t)]) fail(errc::invalid_params, "phi is not a permutation of [1,n]");
        seen[static_cast<std::size_t>(t)] = true;
    }
    Network f{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) {
        Config img = 0;
        for (int i = 1; i <= p.n; ++i) img += static_cast<Config>(p.digit(x, phi[static_cast<std::size_t>(i - 1)])) * p.place(i);
        f.table[x] = img;
    }
    return f;
}

std::uint64_t family_size(const InteractionDigraph& d, int q)
{
    long double approx = 1.0L;
    std::uint64_t exact = 1;
    for (int v = 1; v <= d.n; ++v) {
        const int dv = d.in_degree(v);
        std::uint64_t fibers = 1;
        for (int i = 0; i < dv; ++i) fibers *= static_cast<std::uint64_t>(q);
        for (std::uint64_t i = 0; i < fibers; ++i) {
            approx *= q;
            if (approx > 1.8e19L) fail(errc::limit_exceeded, "|F(D,q)| overflows");
            exact *= static_cast<std::uint64_t>(q);
        }
    }
    return exact;
}

void for_each_family_member(const InteractionDigraph& d, int q, const std::function<bool(const Network&)>& fn)
{
    const Params p = Params::make(d.n, q);
    // Per coordinate: the sorted in-neighbour list and a local rule over its
    // fiber configurations, advanced as one big mixed-radix odometer.
    std::vector<std::vector<int>> sources(static_cast<std::size_t>(d.n));
    std::vector<std::vector<int>> rule(static_cast<std::size_t>(d.n));
    for (int v = 1; v <= d.n; ++v) {
        for (int u = 1; u <= d.n; ++u)
            if (d.has_arc(u, v)) sources[static_cast<std::size_t>(v - 1)].push_back(u);
        std::uint64_t fibers = 1;
        for (std::size_t i = 0; i < sources[static_cast<std::size_t>(v - 1)].size(); ++i) fibers *= static_cast<std::uint64_t>(q);
        rule[static_cast<std::size_t>(v - 1)].assign(fibers, 0);
    }

    // Precompute per-configuration fiber index for each coordinate.
    std::vector<std::vector<std::uint32_t>> fiber_of(static_cast<std::size_t>(d.n), std::vector<std::uint32_t>(p.size));
    for (int v = 1; v <= d.n; ++v)
        for (Config x = 0; x < p.size; ++x) {
            std::uint32_t idx = 0, mult = 1;
            for (int u : sources[static_cast<std::size_t>(v - 1)]) {
                idx += static_cast<std::uint32_t>(p.digit(x, u)) * mult;
                mult *= static_cast<std::uint32_t>(q);
            }
            fiber_of[static_cast<std::size_t>(v - 1)][x] = idx;
        }

    Network f{p, std::vector<Config>(p.size)};
    while (true) {
        for (Config x = 0; x < p.size; ++x) {
            Config img = 0;
            for (int v = 1; v <= d.n; ++v)
                img += static_cast<Config>(rule[static_cast<std::size_t>(v - 1)][fiber_of[static_cast<std::size_t>(v - 1)][x]]) * p.place(v);
            f.table[x] = img;
        }
        if (!fn(f)) return;
        // Advance the odometer: coordinate 1's rule is least significant.
        int v = 0;
        for (; v < d.n; ++v) {
            auto& r = rule[static_cast<std::size_t>(v)];
            std::size_t i = 0;
            for (; i < r.size(); ++i) {
                if (++r[i] < q) break;
                r[i] = 0;
            }
            if (i < r.size()) break;
        }
        if (v == d.n) return;
    }
}

std::vector<Network> enumerate_family(const InteractionDigraph& d, int q, std::uint64_t cap)
{
    const std::uint64_t total = family_size(d, q);
    if (total > cap) fail(errc::limit_exceeded, "|F(D,q)| = " + std::to_string(total) + " exceeds the materialization cap");
    std::vector<Network> out;
    out.reserve(total);
    for_each_family_member(d, q, [&](const Network& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

namespace {

// Total number of networks on [q]^n as uint64, or 0 if it overflows.
std::uint64_t total_networks(const Params& p)
{
    long double approx = 1.0L;
    std::uint64_t exact = 1;
    for (Config i = 0; i < p.size; ++i) {
        approx *= static_cast<long double>(p.size);
        if (approx > 1.8e19L) return 0;
        exact *= static_cast<std::uint64_t>(p.size);
    }
    return exact;
}

} // namespace

UniversalityReport verify_graph_universality(const InteractionDigraph& d, int q, semigroup::UpdateMode mode,
                                             std::uint64_t member_limit, std::uint64_t family_cap)
{
    const Params p = Params::make(d.n, q);
    UniversalityReport rep;
    const std::uint64_t fam = family_size(d, q);
    const std::uint64_t total = total_networks(p);

    if (fam <= family_cap) {
        semigroup::GeneratorSet gens{p, mode, enumerate_family(d, q, family_cap)};
        const auto cl = semigroup::close(gens, member_limit);
        rep.generator_count = cl.generators().size();
        rep.closure_size = cl.size();
        if (total != 0 && rep.closure_size == total) {
            rep.complete = true;
            return rep;
        }
        // First absent network in ascending table order.
        Network probe{p, std::vector<Config>(p.size, 0)};
        while (true) {
            if (!cl.contains(probe)) {
                rep.missing = probe;
                return rep;
            }
            std::size_t i = 0;
            for (; i < probe.table.size(); ++i) {
                if (++probe.table[i] < p.size) break;
                probe.table[i] = 0;
            }
            if (i == probe.table.size()) break;
        }
        rep.complete = true; // every network probed was a member
        return rep;
    }

    // Streamed generators: only the dense engine supports this path. Every
    // streamed generator becomes a member; when the distinct generators fit
    // in memory we then run an ordinary closure over them, otherwise we
    // re-stream the family per BFS wave.
    if (!dense::Space::usable(p)) fail(errc::limit_exceeded, "family too large to stream outside the dense engine");
    rep.streamed = true;
    const dense::Space sp = dense::Space::make(p);
    std::vector<std::int32_t> seen(sp.codes, -1);
    std::vector<dense::Code> members;
    std::uint64_t gen_count = 0;
    const auto insert = [&](dense::Table t) -> bool {
        const dense::Code c = dense::pack(t, sp);
        if (seen[c] < 0) {
            if (members.size() >= member_limit) fail(errc::limit_exceeded, "streamed closure exceeded member limit");
            seen[c] = 1;
            members.push_back(c);
            return true;
        }
        return false;
    };
    const auto stream_gens = [&](const std::function<void(dense::Table)>& sink) {
        for_each_family_member(d, q, [&](const Network& f) {
            switch (mode) {
            case semigroup::UpdateMode::Sequential:
                for (int v = 1; v <= p.n; ++v) sink(dense::masked_table(dense::from_network(f), 1u << (v - 1), p));
                break;
            case semigroup::UpdateMode::Asynchronous:
                for (std::uint32_t m = 1; m < (1u << p.n); ++m) sink(dense::masked_table(dense::from_network(f), m, p));
                break;
            case semigroup::UpdateMode::Synchronous:
                sink(dense::from_network(f));
                break;
            }
            return true;
        });
    };
    std::vector<dense::Table> distinct;
    const std::uint64_t distinct_cap = family_cap;
    bool distinct_ok = true;
    stream_gens([&](dense::Table t) {
        ++gen_count;
        if (insert(t) && distinct_ok) {
            if (distinct.size() < distinct_cap)
                distinct.push_back(t);
            else
                distinct_ok = false;
        }
    });
    rep.generator_count = gen_count;

    if (members.size() < sp.codes) {
        if (distinct_ok) {
            // All generators are members already; plain BFS over them.
            for (std::size_t mi = 0; mi < members.size() && members.size() < sp.codes; ++mi) {
                const dense::Table mt = dense::unpack(members[mi], sp);
                for (const dense::Table g : distinct) insert(dense::compose(g, mt, sp.m));
            }
        } else {
            std::size_t frontier_start = 0;
            while (frontier_start < members.size() && members.size() < sp.codes) {
                const std::size_t frontier_end = members.size();
                stream_gens([&](dense::Table g) {
                    for (std::size_t mi = frontier_start; mi < frontier_end; ++mi)
                        insert(dense::compose(g, dense::unpack(members[mi], sp), sp.m));
                });
                frontier_start = frontier_end;
            }
        }
    }
    rep.closure_size = members.size();
    if (members.size() == sp.codes) {
        rep.complete = true;
        return rep;
    }
    for (dense::Code c = 0; c < sp.codes; ++c)
        if (seen[c] < 0) {
            rep.missing = dense::to_network(dense::unpack(c, sp), p);
            break;
        }
    return rep;
}

ColumnSumReport column_sum_check(const Network& f, const InteractionDigraph& d)
{
    const Params& p = f.params;
    ColumnSumReport rep;
    rep.in_family = in_family(f, d);
    rep.ok = true;
    for (int v = 1; v <= p.n; ++v) {
        const int dv = d.in_degree(v);
        if (dv >= p.n) continue;
        std::uint64_t modulus = 1;
        for (int i = 0; i < p.n - dv; ++i) modulus *= static_cast<std::uint64_t>(p.q);
        const auto hist = coordinate_histogram(f, v);
        for (int y = 0; y < p.q; ++y) {
            if (hist[static_cast<std::size_t>(y)] % modulus != 0) {
                rep.ok = false;
                rep.violations.push_back({v, y, hist[static_cast<std::size_t>(y)], modulus});
            }
        }
    }
    return rep;
}

} // namespace anet::graphs

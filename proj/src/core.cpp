#include "anet/core.hpp"

#include <algorithm>
#include <numeric>

namespace anet {

Params Params::make(int n, int q, std::uint64_t cap)
{
    if (n < 1) fail(errc::invalid_params, "n must be >= 1, got " + std::to_string(n));
    if (q < 2) fail(errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
    std::uint64_t size = 1;
    std::vector<Config> places(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        places[static_cast<std::size_t>(v)] = static_cast<Config>(size);
        size *= static_cast<std::uint64_t>(q);
        if (size > cap)
            fail(errc::invalid_params,
                 "q^n exceeds the size cap (" + std::to_string(q) + "^" + std::to_string(n) + " > " + std::to_string(cap) + ")");
    }
    Params p;
    p.n = n;
    p.q = q;
    p.size = static_cast<Config>(size);
    p.places_ = std::move(places);
    return p;
}

Config encode(std::span<const int> tuple, const Params& p)
{
    if (static_cast<int>(tuple.size()) != p.n)
        fail(errc::invalid_digit, "tuple has " + std::to_string(tuple.size()) + " digits, expected " + std::to_string(p.n));
    Config x = 0;
    for (int v = 1; v <= p.n; ++v) {
        const int d = tuple[static_cast<std::size_t>(v - 1)];
        if (d < 0 || d >= p.q) fail(errc::invalid_digit, "digit " + std::to_string(d) + " outside [0," + std::to_string(p.q - 1) + "]");
        x += static_cast<Config>(d) * p.place(v);
    }
    return x;
}

Config encode(std::initializer_list<int> tuple, const Params& p)
{
    return encode(std::span<const int>(tuple.begin(), tuple.size()), p);
}

std::vector<int> decode(Config x, const Params& p)
{
    std::vector<int> t(static_cast<std::size_t>(p.n));
    for (int v = 1; v <= p.n; ++v) t[static_cast<std::size_t>(v - 1)] = p.digit(x, v);
    return t;
}

Network Network::identity(const Params& p)
{
    Network f{p, std::vector<Config>(p.size)};
    std::iota(f.table.begin(), f.table.end(), Config{0});
    return f;
}

Network Network::constant(const Params& p, Config c)
{
    return Network{p, std::vector<Config>(p.size, c)};
}

Network Network::assignment(const Params& p, Config a, Config b)
{
    Network f = identity(p);
    f.table[a] = b;
    return f;
}

Network Network::transposition(const Params& p, Config a, Config b)
{
    Network f = identity(p);
    f.table[a] = b;
    f.table[b] = a;
    return f;
}

Network compose(const Network& g, const Network& f)
{
    Network r{f.params, std::vector<Config>(f.table.size())};
    for (std::size_t x = 0; x < f.table.size(); ++x) r.table[x] = g.table[f.table[x]];
    return r;
}

UpdateWord UpdateWord::sequential(std::span<const int> coords, const Params& p)
{
    UpdateWord w;
    w.steps.reserve(coords.size());
    for (int v : coords) {
        p.check_coordinate(v);
        w.steps.push_back(1u << (v - 1));
    }
    return w;
}

UpdateWord UpdateWord::sequential(std::initializer_list<int> coords, const Params& p)
{
    return sequential(std::span<const int>(coords.begin(), coords.size()), p);
}

bool UpdateWord::is_sequential() const
{
    for (std::uint32_t m : steps)
        if (m == 0 || (m & (m - 1)) != 0) return false;
    return true;
}

UpdateWord& UpdateWord::append(const UpdateWord& w)
{
    steps.insert(steps.end(), w.steps.begin(), w.steps.end());
    return *this;
}

std::uint32_t coords_to_mask(std::span<const int> coords, const Params& p)
{
    std::uint32_t m = 0;
    for (int v : coords) {
        p.check_coordinate(v);
        m |= 1u << (v - 1);
    }
    return m;
}

std::vector<int> mask_to_coords(std::uint32_t mask, const Params& p)
{
    std::vector<int> out;
    for (int v = 1; v <= p.n; ++v)
        if ((mask >> (v - 1)) & 1u) out.push_back(v);
    return out;
}

Config masked_apply(const Network& f, std::uint32_t mask, Config x)
{
    const Params& p = f.params;
    const Config y = f.table[x];
    Config r = x;
    for (int v = 1; v <= p.n; ++v) {
        if ((mask >> (v - 1)) & 1u) {
            const Config pl = p.place(v);
            r += (static_cast<Config>(p.digit(y, v)) - static_cast<Config>(p.digit(x, v))) * pl;
        }
    }
    return r;
}

Network masked_update(const Network& f, std::uint32_t mask)
{
    const Params& p = f.params;
    if (p.n < 32 && (mask >> p.n) != 0) fail(errc::invalid_coordinate, "mask has coordinates beyond n");
    Network r{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) r.table[x] = masked_apply(f, mask, x);
    return r;
}

Network masked_update(const Network& f, std::span<const int> coords)
{
    return masked_update(f, coords_to_mask(coords, f.params));
}

Config word_apply(const Network& f, const UpdateWord& w, Config x)
{
    for (std::uint32_t m : w.steps) x = masked_apply(f, m, x);
    return x;
}

Network word_apply(const Network& f, const UpdateWord& w)
{
    const Params& p = f.params;
    Network r{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) r.table[x] = word_apply(f, w, x);
    return r;
}

int rank(const Network& f)
{
    std::vector<bool> hit(f.params.size, false);
    int r = 0;
    for (Config y : f.table) {
        if (!hit[y]) {
            hit[y] = true;
            ++r;
        }
    }
    return r;
}

bool is_bijective(const Network& f) { return rank(f) == static_cast<int>(f.params.size); }

std::vector<Config> orphans(const Network& f)
{
    std::vector<bool> hit(f.params.size, false);
    for (Config y : f.table) hit[y] = true;
    std::vector<Config> out;
    for (Config c = 0; c < f.params.size; ++c)
        if (!hit[c]) out.push_back(c);
    return out;
}

std::vector<std::uint32_t> coordinate_histogram(const Network& f, int v)
{
    const Params& p = f.params;
    p.check_coordinate(v);
    std::vector<std::uint32_t> count(static_cast<std::size_t>(p.q), 0);
    for (Config y : f.table) ++count[static_cast<std::size_t>(p.digit(y, v))];
    return count;
}

bool coordinate_balanced(const Network& f, int v)
{
    const std::uint32_t flat = f.params.size / static_cast<Config>(f.params.q);
    for (std::uint32_t c : coordinate_histogram(f, v))
        if (c != flat) return false;
    return true;
}

RankClass classify_rank_deficiency(const Network& f)
{
    std::vector<std::uint32_t> pre(f.params.size, 0);
    for (Config y : f.table) ++pre[y];
    int r = 0, doubles = 0, triples = 0;
    for (std::uint32_t c : pre) {
        if (c > 0) ++r;
        if (c == 2) ++doubles;
        if (c >= 3) ++triples;
    }
    const int m = static_cast<int>(f.params.size);
    if (r == m) return RankClass::Bijective;
    if (r == m - 1) return RankClass::RankDrop1;
    if (r == m - 2) {
        // Counting forces exactly one of: a triple-covered point, or two doubles.
        if (triples == 1 && doubles == 0) return RankClass::TypeI;
        if (triples == 0 && doubles == 2) return RankClass::TypeII;
    }
    return RankClass::Lower;
}

const char* rank_class_name(RankClass c)
{
    switch (c) {
    case RankClass::Bijective: return "Bijective";
    case RankClass::RankDrop1: return "RankDrop1";
    case RankClass::TypeI: return "TypeI";
    case RankClass::TypeII: return "TypeII";
    case RankClass::Lower: return "Lower";
    }
    return "?";
}

InteractionDigraph InteractionDigraph::empty(int n)
{
    if (n < 1 || n > 31) fail(errc::invalid_params, "digraph order must be in [1,31]");
    InteractionDigraph d;
    d.n = n;
    d.in.assign(static_cast<std::size_t>(n), 0u);
    return d;
}

InteractionDigraph InteractionDigraph::reflexive(int n)
{
    InteractionDigraph d = empty(n);
    for (int v = 1; v <= n; ++v) d.add_arc(v, v);
    return d;
}

InteractionDigraph InteractionDigraph::complete_reflexive(int n)
{
    InteractionDigraph d = empty(n);
    const std::uint32_t all = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
    for (auto& m : d.in) m = all;
    return d;
}

void InteractionDigraph::add_arc(int u, int v)
{
    if (u < 1 || u > n || v < 1 || v > n) fail(errc::invalid_coordinate, "arc endpoint outside [1,n]");
    in[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
}

void InteractionDigraph::remove_arc(int u, int v)
{
    if (u < 1 || u > n || v < 1 || v > n) fail(errc::invalid_coordinate, "arc endpoint outside [1,n]");
    in[static_cast<std::size_t>(v - 1)] &= ~(1u << (u - 1));
}

int InteractionDigraph::in_degree(int v) const
{
    return __builtin_popcount(in[static_cast<std::size_t>(v - 1)]);
}

bool InteractionDigraph::is_reflexive() const
{
    for (int v = 1; v <= n; ++v)
        if (!has_arc(v, v)) return false;
    return true;
}

bool InteractionDigraph::is_subgraph_of(const InteractionDigraph& d) const
{
    if (n != d.n) return false;
    for (std::size_t v = 0; v < in.size(); ++v)
        if ((in[v] & ~d.in[v]) != 0) return false;
    return true;
}

std::size_t InteractionDigraph::arc_count() const
{
    std::size_t c = 0;
    for (std::uint32_t m : in) c += static_cast<std::size_t>(__builtin_popcount(m));
    return c;
}

std::vector<std::pair<int, int>> InteractionDigraph::arcs() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

InteractionDigraph interaction_graph(const Network& f)
{
    const Params& p = f.params;
    InteractionDigraph d = InteractionDigraph::empty(p.n);
    for (int u = 1; u <= p.n; ++u) {
        const Config pu = p.place(u);
        for (Config x = 0; x < p.size; ++x) {
            if (p.digit(x, u) != 0) continue;
            // Compare f over the whole u-fiber through x.
            const Config base = f.table[x];
            std::uint32_t diff = 0;
            for (int a = 1; a < p.q; ++a) {
                const Config y = f.table[x + static_cast<Config>(a) * pu];
                if (y == base) continue;
                for (int v = 1; v <= p.n; ++v)
                    if (p.digit(y, v) != p.digit(base, v)) diff |= 1u << (v - 1);
            }
            for (int v = 1; v <= p.n; ++v)
                if ((diff >> (v - 1)) & 1u) d.add_arc(u, v);
        }
    }
    return d;
}

} // namespace anet

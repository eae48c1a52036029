#include "anet/dense.hpp"

#include <algorithm>

namespace anet::dense {

Space Space::make(const Params& p)
{
    if (!usable(p)) fail(errc::limit_exceeded, "dense engine needs q^n <= 8, got " + std::to_string(p.size));
    Space s;
    s.m = static_cast<int>(p.size);
    s.bits = 1;
    while ((1 << s.bits) < s.m) ++s.bits;
    s.codes = Code{1} << (s.bits * s.m);
    return s;
}

Table from_network(const Network& f)
{
    Table t = 0;
    for (std::size_t i = 0; i < f.table.size(); ++i) t |= static_cast<Table>(f.table[i]) << (8 * i);
    return t;
}

Network to_network(Table t, const Params& p)
{
    Network f{p, std::vector<Config>(p.size)};
    for (Config i = 0; i < p.size; ++i) f.table[i] = static_cast<Config>(entry(t, static_cast<int>(i)));
    return f;
}

Table masked_table(Table f, std::uint32_t coord_mask, const Params& p)
{
    Table r = 0;
    for (int x = 0; x < static_cast<int>(p.size); ++x) {
        const int y = entry(f, x);
        int out = x;
        for (int v = 1; v <= p.n; ++v)
            if ((coord_mask >> (v - 1)) & 1u)
                out += (p.digit(static_cast<Config>(y), v) - p.digit(static_cast<Config>(x), v)) * static_cast<int>(p.place(v));
        r |= static_cast<Table>(out) << (8 * x);
    }
    return r;
}

int rank_of(Table t, int m)
{
    unsigned hit = 0;
    for (int i = 0; i < m; ++i) hit |= 1u << entry(t, i);
    return __builtin_popcount(hit);
}

bool is_bijective(Table t, int m) { return rank_of(t, m) == m; }

std::vector<int> Closure::witness_word(Code c) const
{
    std::vector<int> word;
    std::int32_t id = id_of[c];
    if (id < 0 || !track_witness) return word;
    while (id >= 0) {
        word.push_back(witness[static_cast<std::size_t>(id)].second);
        id = witness[static_cast<std::size_t>(id)].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Closure close(const Params& p, const std::vector<Table>& gens, std::uint64_t member_limit, bool track_witness)
{
    Closure cl;
    cl.params = p;
    cl.space = Space::make(p);
    cl.track_witness = track_witness;
    cl.id_of.assign(cl.space.codes, -1);

    const auto insert = [&](Table t, std::int32_t parent, std::int32_t gen_origin, std::uint32_t d) -> std::int32_t {
        const Code c = pack(t, cl.space);
        if (cl.id_of[c] >= 0) return -1;
        if (cl.members.size() >= member_limit) fail(errc::limit_exceeded, "closure exceeds member limit " + std::to_string(member_limit));
        const auto id = static_cast<std::int32_t>(cl.members.size());
        cl.id_of[c] = id;
        cl.members.push_back(c);
        cl.depth.push_back(d);
        if (track_witness) cl.witness.emplace_back(parent, gen_origin);
        return id;
    };

    // Incremental closure: keep the invariant "g o m is a member for every
    // member m and active generator g". A generator that is already a member
    // adds nothing to the semigroup and is not activated.
    std::size_t expand_from = 0; // members before this index are expanded against all active gens
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Table g = gens[gi];
        const Code gc = pack(g, cl.space);
        if (cl.id_of[gc] >= 0) continue;

        insert(g, -1, static_cast<std::int32_t>(gi), 1);
        const std::size_t pre_existing = cl.members.size() - 1;
        cl.active_gens.push_back(g);
        cl.active_origin.push_back(static_cast<std::int32_t>(gi));
        // Restore the invariant for the new generator against everything known.
        for (std::size_t mi = 0; mi < pre_existing; ++mi) {
            const Table mt = unpack(cl.members[mi], cl.space);
            insert(compose(g, mt, cl.space.m), static_cast<std::int32_t>(mi), static_cast<std::int32_t>(gi), cl.depth[mi] + 1);
        }
        expand_from = std::min(expand_from, pre_existing);
        // Grow until the frontier is exhausted.
        while (expand_from < cl.members.size()) {
            const std::size_t mi = expand_from++;
            const Table mt = unpack(cl.members[mi], cl.space);
            for (std::size_t ai = 0; ai < cl.active_gens.size(); ++ai)
                insert(compose(cl.active_gens[ai], mt, cl.space.m), static_cast<std::int32_t>(mi), cl.active_origin[ai], cl.depth[mi] + 1);
        }
    }
    return cl;
}

} // namespace anet::dense

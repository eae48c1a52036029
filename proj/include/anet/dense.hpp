#pragma once

#include <cstdint>
#include <vector>

#include "anet/core.hpp"

namespace anet::dense {

// Fast transformation arithmetic for point spaces of size m <= 8: a map
// [m] -> [m] lives in one uint64 (byte i = image of point i), and its packed
// code is m entries of bit_width(m-1) bits (<= 24 bits total), which indexes
// dense membership arrays over the whole transformation monoid.

using Table = std::uint64_t;
using Code = std::uint32_t;

struct Space {
    int m = 0;      // number of points (q^n)
    int bits = 0;   // bits per packed entry
    Code codes = 0; // 1 << (m * bits)

    static bool usable(const Params& p) { return p.size <= 8; }
    static Space make(const Params& p); // requires usable()
};

inline Table identity_table(int m)
{
    Table t = 0;
    for (int i = 0; i < m; ++i) t |= static_cast<Table>(i) << (8 * i);
    return t;
}

inline int entry(Table t, int i) { return static_cast<int>((t >> (8 * i)) & 0xff); }

inline Table with_entry(Table t, int i, int v)
{
    return (t & ~(Table{0xff} << (8 * i))) | (static_cast<Table>(v) << (8 * i));
}

/// g after f.
inline Table compose(Table g, Table f, int m)
{
    Table r = 0;
    for (int i = 0; i < m; ++i) r |= ((g >> (8 * ((f >> (8 * i)) & 0xff))) & 0xff) << (8 * i);
    return r;
}

inline Code pack(Table t, const Space& s)
{
    Code c = 0;
    for (int i = 0; i < s.m; ++i) c |= static_cast<Code>((t >> (8 * i)) & 0xff) << (s.bits * i);
    return c;
}

inline Table unpack(Code c, const Space& s)
{
    Table t = 0;
    const Code mask = (Code{1} << s.bits) - 1;
    for (int i = 0; i < s.m; ++i) t |= static_cast<Table>((c >> (s.bits * i)) & mask) << (8 * i);
    return t;
}

Table from_network(const Network& f);
Network to_network(Table t, const Params& p);

/// Masked update f^(V) in table form; coord_mask bit v-1 = coordinate v.
Table masked_table(Table f, std::uint32_t coord_mask, const Params& p);

int rank_of(Table t, int m);
bool is_bijective(Table t, int m);

/// Closure of a generator list under left composition (new = gen o old),
/// with optional witness back-pointers. Generators already generated by the
/// earlier ones are skipped (the member set is unchanged by this).
struct Closure {
    Space space;
    Params params;
    std::vector<Table> active_gens;
    std::vector<std::int32_t> active_origin; // index into the input generator list
    std::vector<Code> members;               // discovery order
    std::vector<std::int32_t> id_of;         // code -> member id, -1 absent
    std::vector<std::pair<std::int32_t, std::int32_t>> witness; // (parent id, input gen index); parent -1 for roots
    std::vector<std::uint32_t> depth;
    bool track_witness = false;

    bool contains(Code c) const { return id_of[c] >= 0; }
    /// Input-generator indices, applied first to last.
    std::vector<int> witness_word(Code c) const;
};

Closure close(const Params& p, const std::vector<Table>& gens, std::uint64_t member_limit,
              bool track_witness);

} // namespace anet::dense

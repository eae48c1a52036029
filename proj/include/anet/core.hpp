#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anet/error.hpp"

namespace anet {

/// Index of a configuration of [q]^n, encoded little-endian in base q
/// (coordinate 1 is the least significant digit).
using Config = std::uint32_t;

/// Problem dimensions: n nodes over the alphabet {0,...,q-1}.
/// q^n is bounded by a configurable cap (default 2^24 table entries).
struct Params {
    int n = 0;
    int q = 0;
    Config size = 0; // q^n

    static constexpr std::uint64_t default_cap = std::uint64_t{1} << 24;
    static Params make(int n, int q, std::uint64_t cap = default_cap);

    /// Place value of coordinate v (1-based): q^(v-1).
    Config place(int v) const { return places_[static_cast<std::size_t>(v - 1)]; }
    int digit(Config x, int v) const { return static_cast<int>((x / place(v)) % static_cast<Config>(q)); }
    Config with_digit(Config x, int v, int d) const
    {
        const Config p = place(v);
        return x + static_cast<Config>(d - digit(x, v)) * p;
    }
    void check_coordinate(int v) const
    {
        if (v < 1 || v > n) fail(errc::invalid_coordinate, "coordinate " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }

    bool operator==(const Params& o) const { return n == o.n && q == o.q; }

    std::vector<Config> places_; // filled by make()
};

Config encode(std::span<const int> tuple, const Params& p);
Config encode(std::initializer_list<int> tuple, const Params& p);
std::vector<int> decode(Config x, const Params& p);

/// An automata network f : [q]^n -> [q]^n stored as a dense lookup table.
/// Immutable by convention once built; all operations below are pure.
struct Network {
    Params params;
    std::vector<Config> table;

    static Network identity(const Params& p);
    static Network constant(const Params& p, Config c);
    /// The map (a -> b): a maps to b, everything else is fixed.
    static Network assignment(const Params& p, Config a, Config b);
    /// The map (a <-> b): swaps a and b, everything else is fixed.
    static Network transposition(const Params& p, Config a, Config b);

    Config operator()(Config x) const { return table[x]; }
    bool operator==(const Network& o) const { return params == o.params && table == o.table; }
};

/// g after f.
Network compose(const Network& g, const Network& f);

/// A word of coordinate subsets. Each step is a bitmask over coordinates
/// (bit v-1 set = coordinate v in the subset); steps are applied first to last.
struct UpdateWord {
    std::vector<std::uint32_t> steps;

    static UpdateWord sequential(std::span<const int> coords, const Params& p);
    static UpdateWord sequential(std::initializer_list<int> coords, const Params& p);
    bool is_sequential() const;
    bool empty() const { return steps.empty(); }
    UpdateWord& append(const UpdateWord& w);
    std::size_t length() const { return steps.size(); }
};

std::uint32_t coords_to_mask(std::span<const int> coords, const Params& p);
std::vector<int> mask_to_coords(std::uint32_t mask, const Params& p);

/// f^(V): apply f on the coordinates of `mask`, keep the rest.
Network masked_update(const Network& f, std::uint32_t mask);
Network masked_update(const Network& f, std::span<const int> coords);
Config masked_apply(const Network& f, std::uint32_t mask, Config x);

/// f^(w) = f^(w_k) o ... o f^(w_1).
Network word_apply(const Network& f, const UpdateWord& w);
Config word_apply(const Network& f, const UpdateWord& w, Config x);

/// Size of the image of f.
int rank(const Network& f);
bool is_bijective(const Network& f);
/// Configurations with empty preimage, ascending.
std::vector<Config> orphans(const Network& f);
/// Preimage sizes |f_v^{-1}(y)| for y in [q].
std::vector<std::uint32_t> coordinate_histogram(const Network& f, int v);
/// All coordinate histograms flat at q^(n-1)?
bool coordinate_balanced(const Network& f, int v);

enum class RankClass { Bijective, RankDrop1, TypeI, TypeII, Lower };
RankClass classify_rank_deficiency(const Network& f);
const char* rank_class_name(RankClass c);

/// Directed graph on [1,n]; arcs (u,v) mean "f_v may depend on u".
struct InteractionDigraph {
    int n = 0;
    std::vector<std::uint32_t> in; // in[v-1] = bitmask of sources u with arc (u,v)

    static InteractionDigraph empty(int n);
    static InteractionDigraph complete_reflexive(int n);
    static InteractionDigraph reflexive(int n); // loops only

    bool has_arc(int u, int v) const { return (in[static_cast<std::size_t>(v - 1)] >> (u - 1)) & 1u; }
    void add_arc(int u, int v);
    void remove_arc(int u, int v);
    int in_degree(int v) const; // counts a self-loop
    bool is_reflexive() const;
    bool is_subgraph_of(const InteractionDigraph& d) const;
    std::size_t arc_count() const;
    std::vector<std::pair<int, int>> arcs() const; // 1-based, sorted
    bool operator==(const InteractionDigraph& o) const { return n == o.n && in == o.in; }
};

/// Arc (u,v) present iff f_v depends essentially on u. Exhaustive test.
InteractionDigraph interaction_graph(const Network& f);

} // namespace anet

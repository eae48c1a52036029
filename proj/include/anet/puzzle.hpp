#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "anet/core.hpp"

namespace anet::puzzle {

/// Undirected simple graph, vertices 0-based.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted, no self-loops, no duplicates

    static SimpleGraph empty(int n);
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    std::size_t edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

    bool connected() const;
    bool two_connected() const;
    bool bipartite() const;
    bool is_cycle() const;
};

/// Vertices = configurations of [q]^n, edges = Hamming distance 1.
SimpleGraph hamming_graph(int n, int q, std::uint64_t vertex_cap = 4096);
SimpleGraph cycle_graph(int k);

/// A puzzle position: tile_at[v] = tile occupying vertex v (tiles are labeled
/// by their home vertex), -1 at the hole.
using PuzzleState = std::vector<int>;

struct PuzzleGroup {
    int n = 0;
    int hole = 0;
    std::uint64_t order = 0;
    std::uint64_t states_explored = 0;
    std::unordered_set<std::uint64_t> elements; // encoded hole-at-home placements

    /// Membership oracle over placements with the hole back at `hole`.
    bool contains(const PuzzleState& s) const;
};

std::uint64_t encode_state(const PuzzleState& s);

/// BFS over all slide-reachable placements from the solved position.
/// state_cap bounds the visited placements (default fits 9 vertices = 9!).
PuzzleGroup puzzle_group(const SimpleGraph& d, int hole, std::uint64_t state_cap = 400000);

enum class WilsonClass { Trivial, Sym, Alt, OutOfScope };
const char* wilson_class_name(WilsonClass c);

/// Simplified Wilson classification: cycles give the trivial group, bipartite
/// graphs the alternating group, non-bipartite graphs on >= 8 vertices the
/// symmetric group; anything else (including the classical 7-vertex
/// exception's range) is out of scope here.
WilsonClass wilson_predict(const SimpleGraph& d);

/// Expected order of the predicted group on (vertices - 1) tiles.
std::optional<std::uint64_t> wilson_predicted_order(const SimpleGraph& d);

} // namespace anet::puzzle

#pragma once

#include <array>
#include <optional>
#include <string>

#include "anet/core.hpp"

namespace anet::universal {

// --- control automaton of the factor construction ------------------------

/// Control states are 3-bit words, indexed y1 + 2*y2 + 4*y3.
int control_index(int y1, int y2, int y3);
int control_index(const std::string& bits); // "101" means y1=1, y2=0, y3=1
std::string control_bits(int state);

/// The 8-state control map rho: applying coordinate v of the simulator moves
/// the control along the arc labelled v (or its loop).
struct ControlAutomaton {
    std::array<int, 8> next{};

    int step(int state, int v) const // masked update of control bit v
    {
        const int bit = (next[static_cast<std::size_t>(state)] >> (v - 1)) & 1;
        return (state & ~(1 << (v - 1))) | (bit << (v - 1));
    }
};

ControlAutomaton rho();

// --- universal by factor over alphabet 2q --------------------------------

/// Symbol pairing: s <-> (digit s mod q, bit s div q).
Network factor_network(int n, int q);

/// ((3)^q, 2, 3, 1, 1, 2, 1, 3): drives every control state to 101 and fixes
/// the digit component.
UpdateWord sync_word(int n, int q);

struct GadgetWords {
    UpdateWord c; // (1,2,2,1,3,4,...,n): the q-ary counter, ends at control 011
    UpdateWord k; // (2,1,1): the transposition 0^n <-> 1 0^(n-1), ends at 011
    UpdateWord d; // (2,1,2,1): the assignment 0^n -> 1 0^(n-1), ends at 001
};
GadgetWords gadget_words(int n, int q);

/// The three generator targets over [q]^n.
Network counter_network(const Params& p);   // c: x -> x+1 as a little-endian q-ary counter
Network swap01_network(const Params& p);    // k
Network assign01_network(const Params& p);  // d

/// Digit-component projection of a configuration over [2q]^n onto [q]^n.
Config project_factor(Config s, const Params& big, const Params& small);
/// Embedding of [q]^n into [q']^n (same digits, larger base).
Config embed(Config x, const Params& small, const Params& big);

struct CompiledWord {
    UpdateWord word;
    std::vector<int> gadgets; // 0 = c, 1 = k, 2 = d, in application order
};

/// Word w with pi o f^(w) = h o pi on all of [2q]^n, assembled as
/// sync-gadget-sync-gadget...; h must decompose over {c,k,d}.
CompiledWord compile_factor(const Network& h, std::uint64_t member_limit = std::uint64_t{1} << 25);
bool verify_factor(const Network& f, const UpdateWord& w, const Network& h);

// --- universal by initialization over alphabet q+1 -----------------------

// Block-level coding: a block is q symbols over {0,...,q}; the extra symbol
// is q. Z+ = blocks with exactly one extra symbol, Z = [q]^q union Z+.
bool in_Zplus(std::span<const int> block, int q);
bool in_Z(std::span<const int> block, int q);
int lambda_of(std::span<const int> block, int q);
std::vector<int> mu_of(std::span<const int> block, int q);
int boxplus_coord(std::span<const int> block, int j, int q);  // 1-based j within the block
int boxminus_coord(std::span<const int> block, int j, int q);
std::vector<int> boxplus_full(std::span<const int> block, int q);  // boxplus^(1..q)
std::vector<int> boxminus_full(std::span<const int> block, int q); // boxminus^(1..q)

/// n >= 3q. Blocks Phi^i = {(i-1)q+1,...,iq} encode the three control bits;
/// the rest of the configuration is carried directly.
Network init_network(int n, int q);

struct InitGadgets {
    UpdateWord c; // realizes the counter, control 000 -> 000
    UpdateWord k; // realizes 0^n <-> 1 0^(n-1)
    UpdateWord d; // realizes 0^n -> 0^q 1 0^(n-q-1)
};
InitGadgets init_gadgets(int n, int q);

/// d' of the initialization construction: (0^n -> 0^q 1 0^(n-q-1)).
Network assign_block2_network(const Params& p, int q);

/// Word w with f^(w)(x) = h(x) for every x in [q]^n (embedded); control
/// starts and returns to 000, so gadget sequences concatenate directly.
CompiledWord compile_init(const Network& h, std::uint64_t member_limit = std::uint64_t{1} << 25);
bool verify_init(const Network& f, const UpdateWord& w, const Network& h);

/// BFS witness for h over arbitrary generators; empty word for the identity.
/// std::nullopt when the closure is exhausted without h; throws
/// limit_exceeded past member_limit.
std::optional<std::vector<int>> decompose_over(const Network& h, const std::vector<Network>& gens,
                                               std::uint64_t member_limit);

/// Witness for h over {c,k,d} of the factor construction (ids 0,1,2).
std::vector<int> decompose_ckd(const Network& h, std::uint64_t member_limit = std::uint64_t{1} << 25);

} // namespace anet::universal

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "anet/core.hpp"
#include "anet/instructions.hpp"
#include "anet/semigroup.hpp"

namespace anet::graphs {

/// interaction_graph(f) is a subgraph of d.
bool in_family(const Network& f, const InteractionDigraph& d);

bool strongly_connected(const InteractionDigraph& d);
/// BFS shortest path (vertex sequence from -> to), lowest-vertex tie-break.
std::optional<std::vector<int>> shortest_path(const InteractionDigraph& d, int from, int to);

struct TchuenteCertificate {
    bool holds = false;
    bool strong = false;
    std::optional<std::pair<int, int>> unreachable; // no directed path u -> v
    std::optional<int> hub;                         // vertex of in-degree n
};

/// Strongly connected and some vertex sees every vertex (self-loop counted).
TchuenteCertificate tchuente_condition(const InteractionDigraph& d);

struct ProgramStep {
    enum class Op { Add, Sub, RSub }; // t+s, t-s, s-t (mod q)
    int target = 0;
    int source = 0;
    Op op = Op::Add;
    Instruction realized;
    std::string describe() const;
};

struct InstructionProgram {
    Params params;
    std::vector<ProgramStep> steps; // applied first to last
    Network replay() const;
};

/// The mod-q add/subtract program realizing the variable transposition
/// (u <-> v) inside F(D,q); needs (u,v) in E(D), D reflexive, and a directed
/// return path from v to u. u = v yields the empty program.
InstructionProgram transposition_program(const InteractionDigraph& d, int q, int u, int v);

/// f_i(x) = x_phi(i) for a permutation phi of [1,n].
Network variable_permutation(const Params& p, std::span<const int> phi);

/// |F(D,q)| (throws limit_exceeded if it overflows uint64).
std::uint64_t family_size(const InteractionDigraph& d, int q);
std::vector<Network> enumerate_family(const InteractionDigraph& d, int q, std::uint64_t cap);
/// Streams F(D,q) in deterministic order; stop early by returning false.
void for_each_family_member(const InteractionDigraph& d, int q,
                            const std::function<bool(const Network&)>& fn);

struct UniversalityReport {
    bool complete = false;
    std::optional<Network> missing; // witness when incomplete
    std::uint64_t closure_size = 0;
    std::uint64_t generator_count = 0;
    bool streamed = false;
};

/// Does the mode-expanded F(D,q) generate all of F(n,q)?
UniversalityReport verify_graph_universality(const InteractionDigraph& d, int q, semigroup::UpdateMode mode,
                                             std::uint64_t member_limit = semigroup::default_member_limit,
                                             std::uint64_t family_cap = std::uint64_t{1} << 20);

struct ColumnSumViolation {
    int v = 0;
    int y = 0;
    std::uint64_t count = 0;
    std::uint64_t modulus = 0;
};

struct ColumnSumReport {
    bool in_family = false;
    bool ok = false;
    std::vector<ColumnSumViolation> violations;
};

/// Every |f_v^{-1}(y)| must be a multiple of q^(n - d_v) when f is in F(D,q).
ColumnSumReport column_sum_check(const Network& f, const InteractionDigraph& d);

} // namespace anet::graphs

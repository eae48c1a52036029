#pragma once

#include <optional>
#include <vector>

#include "anet/core.hpp"

namespace anet {

/// A network that changes at most coordinate v.
struct Instruction {
    int v = 1;
    Network net;

    static Instruction from_network(const Network& f); // validates, picks the updated coordinate
    /// Build from the local rule t: configuration index -> new digit of v.
    static Instruction from_local_rule(const Params& p, int v, std::span<const int> new_digit);
    bool is_singular() const { return !is_bijective(net); }
};

/// Returns the coordinates on which f differs from the identity.
std::uint32_t changed_coordinates(const Network& f);
bool is_instruction(const Network& f, int v);

/// The assignment (a -> b) with d_H(a,b) = 1: a maps to b, all else fixed.
struct AssignmentInstruction {
    Config a = 0;
    Config b = 0;

    static AssignmentInstruction make(const Params& p, Config a, Config b); // validates distance 1
    int coordinate(const Params& p) const;
    Network network(const Params& p) const { return Network::assignment(p, a, b); }
};

int hamming_distance(Config x, Config y, const Params& p);

struct CollisionWitness {
    Config a = 0;
    Config b = 0;
    int v = 1; // the coordinate where a and b differ
};

/// Membership in S(n,q): true iff some two configurations at Hamming distance 1
/// share an image; returns the first such pair in scan order.
std::optional<CollisionWitness> in_S(const Network& f);

/// Factor f into singular instructions (composition applied first-to-last).
/// Requires in_S(f); throws decomposition_unavailable otherwise.
std::vector<Instruction> decompose_singular(const Network& f);

/// Factor a singular instruction into assignment instructions (q >= 3 only;
/// parity blocks q = 2 in general). Applied first-to-last.
std::vector<AssignmentInstruction> decompose_into_assignments(const Instruction& ins);

Network replay(const std::vector<Instruction>& prog, const Params& p);
Network replay(const std::vector<AssignmentInstruction>& prog, const Params& p);

enum class ParityVerdict { Generable, ParityBlocked, NotApplicable };

struct ParityReport {
    ParityVerdict verdict = ParityVerdict::NotApplicable;
    std::optional<CollisionWitness> collision; // the kernel pair, when rank = 2^n - 1
    std::optional<Config> orphan;
    bool permutation_odd = false;   // sign of the hole-extended permutation
    int hole_displacement = 0;      // d_H(kernel source, orphan)
    std::string note;
};

/// q = 2 only: for rank-(2^n - 1) maps with an adjacent kernel pair, decides
/// whether the hypercube parity invariant permits generation by assignment
/// instructions. Bijective maps, lower ranks and non-adjacent kernels report
/// NotApplicable.
ParityReport assignment_parity_obstruction(const Network& f);

/// All singular instructions of F(n,q) in deterministic order (desk scale).
std::vector<Network> all_singular_instructions(const Params& p);
/// All assignment instructions (a -> b), d_H(a,b) = 1.
std::vector<Network> all_assignment_instructions(const Params& p);
std::vector<Network> all_instructions(const Params& p);

} // namespace anet

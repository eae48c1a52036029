#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "anet/core.hpp"
#include "anet/dense.hpp"

namespace anet::semigroup {

inline constexpr std::uint64_t default_member_limit = std::uint64_t{1} << 25;

enum class UpdateMode { Sequential, Asynchronous, Synchronous };
const char* mode_name(UpdateMode m);

/// A set of base networks together with the update mode that turns them into
/// closure generators: sequential = {f^(v)}, asynchronous = {f^(V), V != {}},
/// synchronous = the base networks themselves.
struct GeneratorSet {
    Params params;
    UpdateMode mode = UpdateMode::Sequential;
    std::vector<Network> base;

    /// Deduplicated, sorted by table (deterministic generator order).
    std::vector<Network> expand() const;
};

/// The semigroup generated by composing an expanded generator list, with a
/// membership index and per-member witness back-pointers. Members are stored
/// as packed codes over a dense index when q^n <= 8, hashed otherwise.
class Closure {
public:
    const Params& params() const { return params_; }
    const std::vector<Network>& generators() const { return gens_; }
    std::size_t size() const;
    bool contains(const Network& g) const;
    std::optional<std::size_t> member_id(const Network& g) const;
    Network member(std::size_t id) const;
    /// Generator indices (into generators()) whose first-to-last composition
    /// replays the member; std::nullopt when g is absent.
    std::optional<std::vector<int>> witness_word(const Network& g) const;
    /// Count of members per discovery depth (depth 1 = generators).
    std::vector<std::uint64_t> depth_histogram() const;

private:
    friend Closure close(const GeneratorSet&, std::uint64_t);
    Params params_;
    std::vector<Network> gens_;
    bool dense_mode_ = false;
    dense::Closure dense_;
    // hashed mode
    std::vector<std::vector<Config>> tables_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_; // hash -> member ids
    std::vector<std::pair<std::int32_t, std::int32_t>> witness_;
    std::vector<std::uint32_t> depth_;
    std::optional<std::size_t> find_hashed(const std::vector<Config>& t) const;
};

Closure close(const GeneratorSet& gens, std::uint64_t member_limit = default_member_limit);

/// Composition of gens[word[0]], gens[word[1]], ... applied in that order.
Network replay_word(std::span<const int> word, const std::vector<Network>& gens, const Params& p);

enum class SimVerdict { Yes, No, Unknown };
enum class SimStrategy { Exhaustive, GreedyCover };

struct SimLimits {
    std::uint64_t member_limit = default_member_limit;
    std::uint64_t candidate_limit = ~std::uint64_t{0};
};

struct SimResult {
    SimVerdict verdict = SimVerdict::Unknown;
    std::optional<Network> simulator;
    std::optional<UpdateWord> word; // sequential word with f^(word) = g
    std::uint64_t candidates_tried = 0;
    std::string note;
};

/// Is g in the sequential closure of some single network f in F(n,q)?
SimResult sequentially_simulatable(const Network& g, SimStrategy strategy, const SimLimits& limits = {});

struct ObstructionEntry {
    std::uint32_t candidate = 0; // packed code of f
    std::uint32_t missing = 0;   // packed code of a target map absent from <f>_async
    std::string reason;
};

struct ObstructionReport {
    Params params;
    std::uint64_t candidates = 0;
    bool all_obstructed = true;
    std::vector<ObstructionEntry> entries; // one per candidate
};

/// For every f in F(n,q): Sing(n,q) is not contained in the asynchronous
/// closure of f; each entry names a missing singular map.
ObstructionReport verify_no_async_singular(const Params& p, std::uint64_t member_limit = default_member_limit);

/// Same sweep for T(n,q) = maps of rank != q^n - 1.
ObstructionReport verify_T_obstruction(const Params& p, std::uint64_t member_limit = default_member_limit);

struct CoverOptions {
    std::string checkpoint_path;       // empty = no checkpointing
    bool use_symmetry = true;          // orbit-expand the covered set under cube symmetries
    std::uint64_t checkpoint_stride = 1u << 16; // candidates between checkpoint writes
    std::uint64_t candidate_budget = ~std::uint64_t{0};
    int threads = 1;
    std::function<void(std::uint64_t candidate, std::uint64_t covered, std::uint64_t total)> progress;
};

struct CoverAllReport {
    Params params;
    bool complete = false;             // every network covered by some candidate's closure
    std::uint64_t total = 0;
    std::uint64_t covered = 0;
    std::uint64_t candidates_used = 0; // candidates processed (ascending codes)
    bool resumed = false;
};

/// GreedyCover sweep over all of F(n,q): union the sequential closures of the
/// candidate simulators in ascending code order until every network is
/// covered. Checkpointable; requires the dense engine (q^n <= 8).
CoverAllReport cover_all_sequential(const Params& p, const CoverOptions& opt = {});

} // namespace anet::semigroup

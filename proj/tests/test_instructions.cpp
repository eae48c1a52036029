#include <doctest.h>

#include "anet/instructions.hpp"
#include "anet/rng.hpp"
#include "anet/semigroup.hpp"

using namespace anet;

namespace {

Instruction random_singular_instruction(const Params& p, SplitMix64& rng)
{
    std::vector<int> rule(p.size);
    while (true) {
        const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n)));
        for (Config x = 0; x < p.size; ++x) rule[x] = rng.digit(p.q);
        Instruction ins = Instruction::from_local_rule(p, v, rule);
        if (ins.is_singular()) return ins;
    }
}

} // namespace

TEST_CASE("in_S finds Hamming-1 collisions")
{
    const Params p = Params::make(2, 3);
    const Config a = encode({0, 0}, p), b = encode({1, 0}, p);
    const auto w = in_S(Network::assignment(p, a, b));
    REQUIRE(w.has_value());
    CHECK(w->a == a);
    CHECK(w->b == b);
    CHECK(w->v == 1);

    CHECK_FALSE(in_S(Network::identity(p)).has_value());

    // f(x) = (x1 + x2, 0): proper coloring of the Hamming graph, not in S
    Network sum{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) sum.table[x] = encode({(p.digit(x, 1) + p.digit(x, 2)) % 3, 0}, p);
    CHECK_FALSE(in_S(sum).has_value());

    SUBCASE("any network of rank at most q-1 is in S")
    {
        SplitMix64 rng(3);
        for (int i = 0; i < 200; ++i) {
            Network f{p, std::vector<Config>(p.size)};
            // image drawn from a set of q-1 = 2 values
            const Config v1 = static_cast<Config>(rng.below(9)), v2 = static_cast<Config>(rng.below(9));
            for (Config x = 0; x < p.size; ++x) f.table[x] = rng.below(2) ? v1 : v2;
            CHECK(in_S(f).has_value());
        }
    }
}

TEST_CASE("decompose_singular replays and stays singular")
{
    const Params p = Params::make(2, 3);
    SplitMix64 rng(7);

    SUBCASE("a single assignment decomposes to itself")
    {
        const Network f = Network::assignment(p, encode({0, 0}, p), encode({1, 0}, p));
        const auto prog = decompose_singular(f);
        REQUIRE(prog.size() == 1);
        CHECK(prog.front().net == f);
    }

    SUBCASE("random members of S(2,3)")
    {
        int tested = 0;
        while (tested < 200) {
            const Network f = random_network(p, rng);
            if (!in_S(f)) continue;
            ++tested;
            const auto prog = decompose_singular(f);
            CHECK(replay(prog, p) == f);
            for (const auto& ins : prog) {
                CHECK(ins.is_singular());
                CHECK(is_instruction(ins.net, ins.v));
                CHECK(in_S(ins.net).has_value());
            }
        }
    }

    SUBCASE("permutation-after-assignment per the conversion claim")
    {
        // p o (a -> b) with p a permutation instruction must decompose into
        // singular instructions only.
        const Config a = encode({0, 0}, p), b = encode({0, 1}, p);
        Network perm = Network::identity(p); // cycle the digit of coordinate 1 on rows with x2 = 0
        for (int d = 0; d < 3; ++d) {
            const Config x = encode({d, 0}, p);
            perm.table[x] = encode({(d + 1) % 3, 0}, p);
        }
        REQUIRE(is_bijective(perm));
        const Network f = compose(perm, Network::assignment(p, a, b));
        const auto prog = decompose_singular(f);
        CHECK(replay(prog, p) == f);
        for (const auto& ins : prog) CHECK(ins.is_singular());
    }

    CHECK_THROWS_AS(decompose_singular(Network::identity(p)), Error);
}

TEST_CASE("S(2,2) closure equals the collision set")
{
    const Params p = Params::make(2, 2);
    semigroup::GeneratorSet g{p, semigroup::UpdateMode::Synchronous, all_singular_instructions(p)};
    const auto cl = semigroup::close(g);
    Network probe{p, std::vector<Config>(4)};
    for (std::uint32_t code = 0; code < 256; ++code) {
        for (Config x = 0; x < 4; ++x) probe.table[x] = (code >> (2 * x)) & 3u;
        CHECK(cl.contains(probe) == in_S(probe).has_value());
    }
}

TEST_CASE("idempotent corank-1 members of S are assignment instructions")
{
    // stated as a remark without proof; checked exhaustively at (2,2) and (2,3)
    for (const auto& [n, q] : {std::pair{2, 2}, std::pair{2, 3}}) {
        const Params p = Params::make(n, q);
        std::vector<Config> table(p.size, 0);
        const auto advance = [&] {
            for (auto& t : table) {
                if (++t < p.size) return true;
                t = 0;
            }
            return false;
        };
        std::uint64_t idempotents = 0;
        do {
            // idempotence first (f fixes its image), with early exit
            bool idem = true;
            for (Config x = 0; x < p.size && idem; ++x) {
                const Config y = table[x];
                if (table[y] != y) idem = false;
            }
            if (!idem) continue;
            ++idempotents;
            const Network f{p, table};
            if (rank(f) != static_cast<int>(p.size) - 1) continue;
            if (!in_S(f).has_value()) continue;
            // must be (a -> b): identity except one adjacent point
            int moved = 0;
            Config src = 0;
            for (Config x = 0; x < p.size; ++x)
                if (f.table[x] != x) {
                    ++moved;
                    src = x;
                }
            CHECK(moved == 1);
            CHECK(hamming_distance(src, f.table[src], p) == 1);
        } while (advance());
        CHECK(idempotents > 0);
    }
}

TEST_CASE("assignment decomposition at q >= 3")
{
    const Params p = Params::make(2, 3);

    SUBCASE("an assignment instruction maps to itself")
    {
        const Config a = encode({0, 0}, p), b = encode({1, 0}, p);
        const Instruction ins = Instruction::from_network(Network::assignment(p, a, b));
        const auto prog = decompose_into_assignments(ins);
        REQUIRE(prog.size() == 1);
        CHECK(prog.front().a == a);
        CHECK(prog.front().b == b);
    }

    SUBCASE("bracket case: assignment times fiber transposition")
    {
        const Config a = encode({0, 0}, p), b = encode({1, 0}, p);
        const Config w = encode({0, 1}, p), x = encode({2, 1}, p);
        const Network net = compose(Network::assignment(p, a, b), Network::transposition(p, w, x));
        const Instruction ins = Instruction::from_network(net);
        const auto prog = decompose_into_assignments(ins);
        CHECK(replay(prog, p) == net);
        for (const auto& f : prog) CHECK(hamming_distance(f.a, f.b, p) == 1);
    }

    SUBCASE("seeded random singular instructions at (2,3) and (3,3)")
    {
        for (const auto& [n, q] : {std::pair{2, 3}, std::pair{3, 3}}) {
            const Params pp = Params::make(n, q);
            SplitMix64 rng(1000 + static_cast<std::uint64_t>(n));
            for (int i = 0; i < 100; ++i) {
                const Instruction ins = random_singular_instruction(pp, rng);
                const auto prog = decompose_into_assignments(ins);
                CHECK(replay(prog, pp) == ins.net);
            }
        }
    }

    SUBCASE("q = 2 is rejected")
    {
        const Params p2 = Params::make(2, 2);
        const Instruction ins = Instruction::from_network(Network::assignment(p2, 0, 1));
        CHECK_THROWS_AS(decompose_into_assignments(ins), Error);
    }
}

TEST_CASE("parity obstruction on the hypercube")
{
    const Params p = Params::make(3, 2);
    const Network blocked = compose(Network::transposition(p, encode({0, 1, 0}, p), encode({1, 1, 0}, p)),
                                    Network::assignment(p, encode({0, 0, 0}, p), encode({1, 0, 0}, p)));
    CHECK(assignment_parity_obstruction(blocked).verdict == ParityVerdict::ParityBlocked);

    CHECK(assignment_parity_obstruction(Network::assignment(p, 0, 1)).verdict == ParityVerdict::Generable);
    CHECK(assignment_parity_obstruction(Network::identity(p)).verdict == ParityVerdict::NotApplicable);
    CHECK(assignment_parity_obstruction(Network::constant(p, 0)).verdict == ParityVerdict::NotApplicable);

    SUBCASE("products of assignment slides are always Generable")
    {
        SplitMix64 rng(9);
        for (int trial = 0; trial < 200; ++trial) {
            // random hole walk from a random start; composite has corank 1
            const Config start = static_cast<Config>(rng.below(p.size));
            Config hole = start;
            Network acc = Network::identity(p);
            const int steps = 1 + static_cast<int>(rng.below(6));
            for (int i = 0; i < steps; ++i) {
                const int v = 1 + static_cast<int>(rng.below(3));
                const Config neighbor = p.with_digit(hole, v, 1 - p.digit(hole, v));
                acc = compose(Network::assignment(p, neighbor, hole), acc);
                hole = neighbor;
            }
            const auto rep = assignment_parity_obstruction(acc);
            CHECK(rep.verdict == ParityVerdict::Generable);
        }
    }
}

TEST_CASE("instruction enumeration counts")
{
    CHECK(all_singular_instructions(Params::make(2, 2)).size() == 24);
    CHECK(all_assignment_instructions(Params::make(3, 2)).size() == 24);
    CHECK(all_instructions(Params::make(2, 2)).size() == 32);
}

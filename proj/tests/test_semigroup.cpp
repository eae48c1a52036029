#include <doctest.h>

#include <algorithm>
#include <set>

#include "anet/rng.hpp"
#include "anet/semigroup.hpp"
#include "anet/universal.hpp"

using namespace anet;
using semigroup::UpdateMode;

namespace {

Network circular_permutation_22()
{
    const Params p = Params::make(2, 2);
    Network f{p, std::vector<Config>(4)};
    f.table[encode({0, 0}, p)] = encode({0, 1}, p);
    f.table[encode({0, 1}, p)] = encode({1, 1}, p);
    f.table[encode({1, 1}, p)] = encode({1, 0}, p);
    f.table[encode({1, 0}, p)] = encode({0, 0}, p);
    return f;
}

std::set<std::vector<Config>> member_tables(const semigroup::Closure& cl)
{
    std::set<std::vector<Config>> out;
    for (std::size_t i = 0; i < cl.size(); ++i) out.insert(cl.member(i).table);
    return out;
}

} // namespace

TEST_CASE("closure of the identity alone")
{
    const Params p = Params::make(2, 2);
    semigroup::GeneratorSet g{p, UpdateMode::Synchronous, {Network::identity(p)}};
    const auto cl = semigroup::close(g);
    CHECK(cl.size() == 1);
    CHECK(cl.contains(Network::identity(p)));
}

TEST_CASE("the circular permutation is not in its own sequential closure")
{
    const Network sigma = circular_permutation_22();
    semigroup::GeneratorSet g{sigma.params, UpdateMode::Sequential, {sigma}};
    const auto cl = semigroup::close(g);
    CHECK_FALSE(cl.contains(sigma));
}

TEST_CASE("{c,k,d} generates all 256 networks at (2,2)")
{
    const Params p = Params::make(2, 2);
    semigroup::GeneratorSet g{p, UpdateMode::Synchronous,
                              {universal::counter_network(p), universal::swap01_network(p), universal::assign01_network(p)}};
    const auto cl = semigroup::close(g);
    CHECK(cl.size() == 256);
}

TEST_CASE("closure member set is independent of generator order")
{
    const Params p = Params::make(2, 2);
    SplitMix64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Network> base{random_network(p, rng), random_network(p, rng), random_network(p, rng)};
        semigroup::GeneratorSet g1{p, UpdateMode::Sequential, base};
        std::reverse(base.begin(), base.end());
        semigroup::GeneratorSet g2{p, UpdateMode::Sequential, base};
        CHECK(member_tables(semigroup::close(g1)) == member_tables(semigroup::close(g2)));
    }
}

TEST_CASE("sequential closure is contained in the asynchronous closure")
{
    const Params p = Params::make(2, 2);
    SplitMix64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const Network f = random_network(p, rng);
        const auto seq = semigroup::close({p, UpdateMode::Sequential, {f}});
        const auto async = semigroup::close({p, UpdateMode::Asynchronous, {f}});
        for (std::size_t i = 0; i < seq.size(); ++i) CHECK(async.contains(seq.member(i)));
    }
}

TEST_CASE("witness words replay to their members")
{
    const Params p = Params::make(2, 2);
    SplitMix64 rng(41);
    const Network f = random_network(p, rng);
    const auto cl = semigroup::close({p, UpdateMode::Asynchronous, {f}});
    for (std::size_t i = 0; i < cl.size(); ++i) {
        const Network m = cl.member(i);
        const auto word = cl.witness_word(m);
        REQUIRE(word.has_value());
        CHECK(semigroup::replay_word(*word, cl.generators(), p) == m);
    }
    CHECK_FALSE(cl.witness_word(circular_permutation_22()).has_value());
}

TEST_CASE("hashed closure mode works beyond the dense space")
{
    const Params p = Params::make(2, 3); // q^n = 9 > 8
    semigroup::GeneratorSet g{p, UpdateMode::Synchronous, {universal::counter_network(p)}};
    const auto cl = semigroup::close(g);
    CHECK(cl.size() == 9); // cyclic group of order q^n
    CHECK(cl.contains(Network::identity(p)));
    const auto word = cl.witness_word(Network::identity(p));
    REQUIRE(word.has_value());
    CHECK(word->size() == 9);
}

TEST_CASE("member limit raises limit_exceeded")
{
    const Params p = Params::make(2, 2);
    semigroup::GeneratorSet g{p, UpdateMode::Synchronous,
                              {universal::counter_network(p), universal::swap01_network(p), universal::assign01_network(p)}};
    CHECK_THROWS_AS(semigroup::close(g, 10), Error);
}

TEST_CASE("sequential simulatability verdicts at (2,2)")
{
    const Network sigma = circular_permutation_22();
    const auto no = semigroup::sequentially_simulatable(sigma, semigroup::SimStrategy::Exhaustive);
    CHECK(no.verdict == semigroup::SimVerdict::No);
    CHECK(no.candidates_tried == 256);

    const auto yes = semigroup::sequentially_simulatable(Network::identity(sigma.params), semigroup::SimStrategy::Exhaustive);
    REQUIRE(yes.verdict == semigroup::SimVerdict::Yes);
    REQUIRE(yes.simulator.has_value());
    REQUIRE(yes.word.has_value());
    CHECK(word_apply(*yes.simulator, *yes.word) == Network::identity(sigma.params));

    const auto greedy = semigroup::sequentially_simulatable(Network::identity(sigma.params), semigroup::SimStrategy::GreedyCover);
    CHECK(greedy.verdict == semigroup::SimVerdict::Yes);

    semigroup::SimLimits tight;
    tight.candidate_limit = 1;
    const auto unknown = semigroup::sequentially_simulatable(sigma, semigroup::SimStrategy::Exhaustive, tight);
    CHECK(unknown.verdict == semigroup::SimVerdict::Unknown);
}

TEST_CASE("asynchronous closures of reflexive families equal the synchronous ones")
{
    // For a reflexive digraph D the generator sets coincide: F(D,q) is closed
    // under masking. Exhaustive over the four reflexive digraphs on 2 nodes.
    const Params p = Params::make(2, 2);
    for (std::uint32_t arcs = 0; arcs < 4; ++arcs) {
        InteractionDigraph d = InteractionDigraph::reflexive(2);
        if (arcs & 1) d.add_arc(1, 2);
        if (arcs & 2) d.add_arc(2, 1);
        std::vector<Network> family;
        // tiny exhaustive family enumeration through interaction-graph filtering
        Network f{p, std::vector<Config>(4)};
        for (std::uint32_t code = 0; code < 256; ++code) {
            for (Config x = 0; x < 4; ++x) f.table[x] = (code >> (2 * x)) & 3u;
            if (interaction_graph(f).is_subgraph_of(d)) family.push_back(f);
        }
        const auto async = semigroup::close({p, UpdateMode::Asynchronous, family});
        const auto sync = semigroup::close({p, UpdateMode::Synchronous, family});
        CHECK(member_tables(async) == member_tables(sync));
    }
}

TEST_CASE("greedy cover machinery covers the tiny space")
{
    const Params p = Params::make(2, 2);
    semigroup::CoverOptions opt;
    const auto rep = semigroup::cover_all_sequential(p, opt);
    // not every map on [2]^2 is sequentially simulatable (the circular
    // permutation is the counterexample), so the sweep must NOT complete
    CHECK_FALSE(rep.complete);
    CHECK(rep.covered < rep.total);
    CHECK(rep.candidates_used == 256);
}

TEST_CASE("cover sweep checkpointing resumes")
{
    const Params p = Params::make(2, 2);
    const std::string path = "cover22.ckpt";
    std::remove(path.c_str());
    semigroup::CoverOptions first;
    first.checkpoint_path = path;
    first.candidate_budget = 100;
    first.checkpoint_stride = 16;
    const auto r1 = semigroup::cover_all_sequential(p, first);
    CHECK(r1.candidates_used == 100);

    semigroup::CoverOptions second;
    second.checkpoint_path = path;
    const auto r2 = semigroup::cover_all_sequential(p, second);
    CHECK(r2.resumed);
    CHECK(r2.candidates_used == 156);

    semigroup::CoverOptions fresh;
    const auto r3 = semigroup::cover_all_sequential(p, fresh);
    CHECK(r2.covered == r3.covered);
    CHECK(r2.complete == r3.complete);
    std::remove(path.c_str());
}

TEST_CASE("cover sweep verdict is thread-count independent")
{
    const Params p = Params::make(2, 2);
    semigroup::CoverOptions one, two;
    two.threads = 2;
    const auto r1 = semigroup::cover_all_sequential(p, one);
    const auto r2 = semigroup::cover_all_sequential(p, two);
    CHECK(r1.covered == r2.covered);
    CHECK(r1.complete == r2.complete);
}

TEST_CASE("async singular obstruction sweep at (2,2)")
{
    const auto rep = semigroup::verify_no_async_singular(Params::make(2, 2));
    CHECK(rep.all_obstructed);
    CHECK(rep.candidates == 256);
    CHECK(rep.entries.size() == 256);
}

TEST_CASE("T obstruction sweep at (2,2)")
{
    const auto rep = semigroup::verify_T_obstruction(Params::make(2, 2));
    CHECK(rep.all_obstructed);
    for (const auto& e : rep.entries) CHECK_FALSE(e.reason.empty());
}

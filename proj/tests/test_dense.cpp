#include <doctest.h>

#include <set>
#include "anet/dense.hpp"
#include "anet/rng.hpp"

using namespace anet;

TEST_CASE("dense tables mirror networks")
{
    const Params p = Params::make(3, 2);
    SplitMix64 rng(2);
    const dense::Space sp = dense::Space::make(p);
    CHECK(sp.m == 8);
    CHECK(sp.bits == 3);
    CHECK(sp.codes == (1u << 24));
    for (int i = 0; i < 100; ++i) {
        const Network f = random_network(p, rng);
        const dense::Table t = dense::from_network(f);
        CHECK(dense::to_network(t, p) == f);
        CHECK(dense::unpack(dense::pack(t, sp), sp) == t);
        CHECK(dense::rank_of(t, sp.m) == rank(f));

        const Network g = random_network(p, rng);
        CHECK(dense::to_network(dense::compose(dense::from_network(g), t, sp.m), p) == compose(g, f));
        for (std::uint32_t mask = 0; mask < 8; ++mask)
            CHECK(dense::to_network(dense::masked_table(t, mask, p), p) == masked_update(f, mask));
    }
}

TEST_CASE("dense closure agrees with brute force on a tiny monoid")
{
    const Params p = Params::make(2, 2);
    SplitMix64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<dense::Table> gens;
        std::vector<Network> nets;
        for (int i = 0; i < 3; ++i) {
            nets.push_back(random_network(p, rng));
            gens.push_back(dense::from_network(nets.back()));
        }
        const auto cl = dense::close(p, gens, 1u << 20, true);

        // reference closure by repeated multiplication
        std::set<std::vector<Config>> ref;
        for (const auto& g : nets) ref.insert(g.table);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Config>> snapshot(ref.begin(), ref.end());
            for (const auto& m : snapshot)
                for (const auto& g : nets) {
                    std::vector<Config> t(4);
                    for (Config x = 0; x < 4; ++x) t[x] = g.table[m[x]];
                    if (ref.insert(t).second) grew = true;
                }
        }
        CHECK(cl.members.size() == ref.size());

        // witness replay for every member
        const dense::Space sp = dense::Space::make(p);
        for (const dense::Code c : cl.members) {
            const auto word = cl.witness_word(c);
            REQUIRE(!word.empty());
            dense::Table acc = gens[static_cast<std::size_t>(word.front())];
            for (std::size_t i = 1; i < word.size(); ++i) acc = dense::compose(gens[static_cast<std::size_t>(word[i])], acc, sp.m);
            CHECK(dense::pack(acc, sp) == c);
        }
    }
}

TEST_CASE("member limit aborts the closure")
{
    const Params p = Params::make(2, 2);
    std::vector<dense::Table> gens{dense::from_network(Network::constant(p, 0)),
                                   dense::from_network(Network::constant(p, 1)),
                                   dense::from_network(Network::constant(p, 2))};
    CHECK_THROWS_AS(dense::close(p, gens, 2, false), Error);
}

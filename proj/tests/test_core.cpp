#include <doctest.h>

#include "anet/core.hpp"
#include "anet/rng.hpp"

using namespace anet;

TEST_CASE("encoding is little-endian base q")
{
    const Params p32 = Params::make(3, 2);
    CHECK(encode({1, 0, 0}, p32) == 1);
    CHECK(encode({0, 0, 0}, p32) == 0);
    const Params p23 = Params::make(2, 3);
    CHECK(encode({2, 1}, p23) == 5);
    CHECK_THROWS_AS(encode({3, 0}, p23), Error);

    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Config x = static_cast<Config>(rng.below(p23.size));
        CHECK(encode(decode(x, p23), p23) == x);
    }
}

TEST_CASE("params validation")
{
    CHECK_THROWS_AS(Params::make(0, 2), Error);
    CHECK_THROWS_AS(Params::make(2, 1), Error);
    CHECK_THROWS_AS(Params::make(30, 3), Error); // exceeds the table cap
    CHECK(Params::make(24, 2).size == (1u << 24));
}

TEST_CASE("masked update basics")
{
    const Params p = Params::make(2, 2);
    const Network f = Network::constant(p, 0);

    CHECK(masked_update(f, 0u) == Network::identity(p));
    CHECK(masked_update(f, 0b11u) == f);
    // constant-00 network updated on coordinate 2 maps 11 to 10
    const Network g = masked_update(f, std::vector<int>{2});
    CHECK(g.table[encode({1, 1}, p)] == encode({1, 0}, p));

    SUBCASE("exhaustive mask identities at (2,2)")
    {
        Network h{p, std::vector<Config>(4)};
        for (std::uint32_t code = 0; code < 256; ++code) {
            for (Config x = 0; x < 4; ++x) h.table[x] = (code >> (2 * x)) & 3u;
            CHECK(masked_update(h, 0u) == Network::identity(p));
            CHECK(masked_update(h, 0b11u) == h);
        }
    }

    SUBCASE("coordinates outside V never move")
    {
        SplitMix64 rng(3);
        const Params p23 = Params::make(3, 3);
        for (int i = 0; i < 50; ++i) {
            const Network h = random_network(p23, rng);
            for (std::uint32_t mask = 0; mask < 8; ++mask) {
                const Network m = masked_update(h, mask);
                for (Config x = 0; x < p23.size; ++x)
                    for (int v = 1; v <= 3; ++v)
                        if (!((mask >> (v - 1)) & 1u)) CHECK(p23.digit(m.table[x], v) == p23.digit(x, v));
            }
        }
    }
    CHECK_THROWS_AS(masked_update(f, std::vector<int>{3}), Error);
}

TEST_CASE("word apply composes left to right")
{
    const Params p = Params::make(3, 2);
    SplitMix64 rng(11);
    const Network f = random_network(p, rng);

    CHECK(word_apply(f, UpdateWord{}) == Network::identity(p));
    UpdateWord full;
    full.steps.push_back(0b111u);
    CHECK(word_apply(f, full) == f);

    // concatenation = composition in the f^(w) order
    for (int i = 0; i < 20; ++i) {
        UpdateWord w1, w2;
        for (int j = 0; j < 4; ++j) {
            w1.steps.push_back(1u + static_cast<std::uint32_t>(rng.below(7)));
            w2.steps.push_back(1u + static_cast<std::uint32_t>(rng.below(7)));
        }
        UpdateWord cat = w1;
        cat.append(w2);
        CHECK(word_apply(f, cat) == compose(word_apply(f, w2), word_apply(f, w1)));
    }
}

TEST_CASE("rank and orphans")
{
    const Params p = Params::make(2, 3);
    CHECK(rank(Network::identity(p)) == 9);
    CHECK(rank(Network::constant(p, 4)) == 1);
    CHECK(orphans(Network::identity(p)).empty());

    // the rank-(q^n - 1) construction: h(b)=a, h(c)=b, h(d)=c, else identity,
    // with a=(0,0), b=(0,1), c=(1,0), d=(1,2)
    Network h = Network::identity(p);
    const Config a = encode({0, 0}, p), b = encode({0, 1}, p), c = encode({1, 0}, p), d = encode({1, 2}, p);
    h.table[b] = a;
    h.table[c] = b;
    h.table[d] = c;
    CHECK(rank(h) == 8);
    const auto orp = orphans(h);
    REQUIRE(orp.size() == 1);
    CHECK(orp.front() == d);

    SUBCASE("assignment network orphans exactly its source")
    {
        const auto orp2 = orphans(Network::assignment(p, a, b));
        REQUIRE(orp2.size() == 1);
        CHECK(orp2.front() == a);
    }

    SUBCASE("orphan count identity on random networks")
    {
        SplitMix64 rng(5);
        for (int i = 0; i < 500; ++i) {
            const Network f = random_network(p, rng);
            CHECK(orphans(f).size() + static_cast<std::size_t>(rank(f)) == p.size);
        }
    }
}

TEST_CASE("coordinate histograms")
{
    const Params p = Params::make(2, 3);
    for (int v = 1; v <= 2; ++v) {
        const auto h = coordinate_histogram(Network::identity(p), v);
        for (auto c : h) CHECK(c == 3);
    }
    const auto h = coordinate_histogram(Network::constant(p, 0), 1);
    CHECK(h[0] == 9);
    CHECK(h[1] == 0);
    CHECK(h[2] == 0);
    CHECK_THROWS_AS(coordinate_histogram(Network::identity(p), 3), Error);
}

TEST_CASE("rank deficiency classes")
{
    const Params p = Params::make(2, 2);
    CHECK(classify_rank_deficiency(Network::identity(p)) == RankClass::Bijective);
    CHECK(classify_rank_deficiency(Network::assignment(p, 0, 1)) == RankClass::RankDrop1);

    Network type1 = Network::identity(p);
    type1.table[1] = 0;
    type1.table[2] = 0; // three configurations map to 00
    CHECK(classify_rank_deficiency(type1) == RankClass::TypeI);

    Network type2 = Network::identity(p);
    type2.table[1] = 0;
    type2.table[3] = 2; // two doubly-covered images
    CHECK(classify_rank_deficiency(type2) == RankClass::TypeII);

    CHECK(classify_rank_deficiency(Network::constant(p, 0)) == RankClass::Lower);
}

TEST_CASE("interaction graphs")
{
    const Params p = Params::make(3, 2);
    const auto d_id = interaction_graph(Network::identity(p));
    CHECK(d_id.arc_count() == 3);
    CHECK(d_id.is_reflexive());

    // f(x) = (x1 + x2 + x3, 0, 0): arcs (u,1) only
    Network sum{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) {
        const int s = (p.digit(x, 1) + p.digit(x, 2) + p.digit(x, 3)) % 2;
        sum.table[x] = encode({s, 0, 0}, p);
    }
    const auto d_sum = interaction_graph(sum);
    CHECK(d_sum.has_arc(1, 1));
    CHECK(d_sum.has_arc(2, 1));
    CHECK(d_sum.has_arc(3, 1));
    CHECK(d_sum.arc_count() == 3);

    CHECK(interaction_graph(Network::constant(p, 0)).arc_count() == 0);
}

TEST_CASE("rank of a composite never exceeds the factors")
{
    const Params p = Params::make(2, 3);
    SplitMix64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const Network f = random_network(p, rng), g = random_network(p, rng);
        CHECK(rank(compose(g, f)) <= std::min(rank(g), rank(f)));
    }
}

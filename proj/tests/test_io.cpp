#include <doctest.h>

#include <sstream>
#include "anet/instructions.hpp"
#include "anet/io.hpp"
#include "anet/rng.hpp"

using namespace anet;

TEST_CASE("network round-trip and canonical emission")
{
    const Params p = Params::make(2, 3);
    SplitMix64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const Network f = random_network(p, rng);
        const std::string text = io::emit_network(f);
        const Network g = io::parse_network_string(text);
        CHECK(f == g);
        CHECK(io::emit_network(g) == text);
    }
}

TEST_CASE("network parser accepts comments and reports line numbers")
{
    const std::string ok = "# a comment\n2 1\n0\n1\n";
    const Network f = io::parse_network_string(ok);
    CHECK(f.params.q == 2);
    CHECK(f.params.n == 1);
    CHECK(f.table[0] == 0);
    CHECK(f.table[1] == 1);

    const auto expect_parse_error = [](const std::string& text, const std::string& fragment) {
        try {
            io::parse_network_string(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse_error);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_parse_error("2\n0\n1\n", "header");
    expect_parse_error("2 1\n0\n", "end of file");
    expect_parse_error("2 1\n0\n1\n0\n", "line 4");
    expect_parse_error("2 1\n0 1\n1\n", "line 2");
    expect_parse_error("2 1\n2\n1\n", "digit");
}

TEST_CASE("update word text format")
{
    const Params p = Params::make(3, 2);
    const UpdateWord w = io::parse_update_word("3;3;2;3;1;1;2;1;3", p);
    CHECK(w.steps.size() == 9);
    CHECK(w.is_sequential());
    CHECK(io::emit_update_word(w, p) == "3;3;2;3;1;1;2;1;3");

    const UpdateWord mixed = io::parse_update_word("1,2;3", p);
    CHECK(mixed.steps.size() == 2);
    CHECK(mixed.steps[0] == 0b011u);
    CHECK(mixed.steps[1] == 0b100u);
    CHECK_FALSE(mixed.is_sequential());
    CHECK(io::emit_update_word(mixed, p) == "1,2;3");

    CHECK_THROWS_AS(io::parse_update_word("0;1", p), Error);
    CHECK_THROWS_AS(io::parse_update_word("4", p), Error);
    CHECK_THROWS_AS(io::parse_update_word("1;;2", p), Error);
    CHECK(io::parse_update_word("", p).empty());
}

TEST_CASE("digraph files")
{
    const std::string text = "# D\n3\n1 1\n2 2\n3 3\n1 2\n";
    const InteractionDigraph d = io::parse_digraph_string(text);
    CHECK(d.n == 3);
    CHECK(d.has_arc(1, 2));
    CHECK(d.is_reflexive());
    const InteractionDigraph d2 = io::parse_digraph_string(io::emit_digraph(d));
    CHECK(d == d2);
    CHECK_THROWS_AS(io::parse_digraph_string("3\n4 1\n"), Error);
}

TEST_CASE("program files round-trip through the parser")
{
    const Params p = Params::make(2, 3);
    std::vector<AssignmentInstruction> assigns{AssignmentInstruction::make(p, encode({0, 0}, p), encode({1, 0}, p)),
                                               AssignmentInstruction::make(p, encode({1, 1}, p), encode({1, 2}, p))};
    const std::string text = io::emit_program(assigns, p);
    std::istringstream ss(text);
    const auto prog = io::parse_program(ss);
    REQUIRE(prog.size() == 2);
    CHECK(replay(prog, p) == replay(assigns, p));
}

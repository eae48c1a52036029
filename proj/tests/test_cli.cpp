#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "anet/cli.hpp"
#include "anet/instructions.hpp"
#include "anet/io.hpp"
#include "anet/universal.hpp"

using namespace anet;

namespace {

int run_cli(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"anet"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string name, const std::string& content) : path(std::move(name))
    {
        io::write_file(path, content);
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"bogus"}) == 2);
    CHECK(run_cli({"verify"}) == 2);
    CHECK(run_cli({"verify", "no-such-suite"}) == 2);
}

TEST_CASE("verify suites run from the CLI")
{
    CHECK(run_cli({"verify", "seqsim22"}) == 0);
    CHECK(run_cli({"verify", "thm2", "--json"}) == 0);
    CHECK(run_cli({"verify", "lemma1"}) == 0);
}

TEST_CASE("universal factor compiles and verifies a file target")
{
    const Params p = Params::make(3, 2);
    const TempFile target("cli_target.net", io::emit_network(universal::swap01_network(p)));
    const TempFile out("cli_word.txt", "");
    CHECK(run_cli({"universal", "factor", "--n", "3", "--q", "2", "--target", target.path.c_str(), "--out",
                   out.path.c_str()}) == 0);
    const std::string word_text = io::read_file(out.path);
    CHECK(!word_text.empty());
    // the emitted word replays on the simulator
    const Params big = Params::make(3, 4);
    const UpdateWord w = io::parse_update_word(word_text.substr(0, word_text.find('\n')), big);
    CHECK(universal::verify_factor(universal::factor_network(3, 2), w, universal::swap01_network(p)));
}

TEST_CASE("universal init compiles for a (q=2,n=6) target")
{
    const Params p = Params::make(6, 2);
    const TempFile target("cli_target6.net", io::emit_network(universal::swap01_network(p)));
    CHECK(run_cli({"universal", "init", "--n", "6", "--q", "2", "--target", target.path.c_str()}) == 0);
}

TEST_CASE("instr decompose emits verified programs")
{
    const Params p = Params::make(2, 3);
    const TempFile target("cli_instr.net", io::emit_network(Network::assignment(p, 0, 1)));
    const TempFile out("cli_prog.txt", "");
    CHECK(run_cli({"instr", "decompose", "--mode", "assignment", "--in", target.path.c_str(), "--out",
                   out.path.c_str()}) == 0);
    std::ifstream in(out.path);
    const auto prog = io::parse_program(in);
    CHECK(replay(prog, p) == Network::assignment(p, 0, 1));

    CHECK(run_cli({"instr", "decompose", "--mode", "singular", "--in", target.path.c_str()}) == 0);

    // a bijective target cannot be decomposed into singular instructions
    const TempFile bij("cli_bij.net", io::emit_network(Network::identity(p)));
    CHECK(run_cli({"instr", "decompose", "--mode", "singular", "--in", bij.path.c_str()}) == 1);
}

TEST_CASE("puzzle and graph queries")
{
    CHECK(run_cli({"puzzle", "--graph", "hamming:3,2", "--report"}) == 0);
    const TempFile d("cli_d.graph", "2\n1 1\n2 2\n1 2\n2 1\n");
    CHECK(run_cli({"graph", "check", "--in", d.path.c_str(), "--q", "2", "--mode", "sync"}) == 0);
}

TEST_CASE("closure command reports stats and witnesses")
{
    const Params p = Params::make(2, 2);
    const TempFile g1("cli_g1.net", io::emit_network(universal::counter_network(p)));
    const TempFile g2("cli_g2.net", io::emit_network(universal::swap01_network(p)));
    const TempFile g3("cli_g3.net", io::emit_network(universal::assign01_network(p)));
    const TempFile query("cli_q.net", io::emit_network(Network::constant(p, 0)));
    CHECK(run_cli({"closure", "--gen", g1.path.c_str(), "--gen", g2.path.c_str(), "--gen", g3.path.c_str(),
                   "--mode", "sync", "--query", query.path.c_str(), "--json"}) == 0);
}

TEST_CASE("missing files exit with the usage code")
{
    CHECK(run_cli({"universal", "factor", "--n", "3", "--q", "2", "--target", "/does/not/exist.net"}) == 2);
}

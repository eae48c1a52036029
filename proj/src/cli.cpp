#include "anet/cli.hpp"

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "anet/core.hpp"
#include "anet/graphs.hpp"
#include "anet/instructions.hpp"
#include "anet/io.hpp"
#include "anet/puzzle.hpp"
#include "anet/semigroup.hpp"
#include "anet/suites.hpp"
#include "anet/universal.hpp"

namespace anet::cli {

namespace {

using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case errc::limit_exceeded:
    case errc::state_cap_exceeded: return exit_cap;
    case errc::decomposition_unavailable: return exit_fail;
    default: return exit_usage;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

// The stable report: schema, command echo, parameters, verdicts, counters.
// Timing never enters this object, so its serialization is byte-stable for
// fixed parameters (keys are emitted sorted).
json make_report(const std::string& command, json parameters)
{
    json rep;
    rep["schema"] = 1;
    rep["command"] = command;
    rep["parameters"] = std::move(parameters);
    return rep;
}

void emit_report(const json& rep, bool as_json, const Timer& timer)
{
    if (as_json) std::cout << rep.dump(2) << '\n';
    std::cerr << "elapsed: " << timer.ms() << " ms\n";
}

json suite_to_json(const suites::SuiteReport& rep)
{
    json j;
    j["suite"] = rep.suite;
    j["skipped"] = rep.skipped;
    if (rep.skipped) j["skip_reason"] = rep.skip_reason;
    j["pass"] = rep.pass();
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json cj;
        cj["check"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["verdicts"] = std::move(checks);
    j["counters"] = rep.counters;
    return j;
}

void print_suite_text(const suites::SuiteReport& rep)
{
    if (rep.skipped) {
        std::cout << "suite " << rep.suite << ": SKIP (" << rep.skip_reason << ")\n";
        return;
    }
    for (const auto& c : rep.checks) {
        std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << '\n';
    }
    for (const auto& [k, v] : rep.counters) std::cout << "  # " << k << " = " << v << '\n';
    std::cout << "suite " << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const std::string& suite, const suites::SuiteOptions& opt, bool as_json)
{
    Timer timer;
    const auto rep = suites::run_suite(suite, opt);
    json j = make_report("verify " + suite,
                         json{{"suite", suite},
                              {"tier", opt.long_tier ? "long" : "default"},
                              {"seed", opt.seed},
                              {"threads", opt.threads}});
    j["report"] = suite_to_json(rep);
    if (as_json)
        emit_report(j, true, timer);
    else {
        print_suite_text(rep);
        emit_report(j, false, timer);
    }
    return rep.pass() ? exit_pass : exit_fail;
}

int cmd_universal(bool factor, int n, int q, const std::string& target_path, const std::string& out_path,
                  std::uint64_t limit, bool as_json)
{
    Timer timer;
    const Params small = Params::make(n, q);
    const Network h = io::load_network(target_path);
    if (!(h.params == small)) fail(errc::invalid_params, "target network is not over [" + std::to_string(q) + "]^" + std::to_string(n));

    const auto compiled = factor ? universal::compile_factor(h, limit) : universal::compile_init(h, limit);
    const Params big = Params::make(n, factor ? 2 * q : q + 1);
    const std::string word_text = io::emit_update_word(compiled.word, big);
    const bool verified = factor ? universal::verify_factor(universal::factor_network(n, q), compiled.word, h)
                                 : universal::verify_init(universal::init_network(n, q), compiled.word, h);
    if (!out_path.empty()) io::write_file(out_path, word_text + "\n");

    json j = make_report(std::string("universal ") + (factor ? "factor" : "init"),
                         json{{"n", n}, {"q", q}, {"target", target_path}});
    j["report"] = {{"word", word_text},
                   {"word_length", compiled.word.length()},
                   {"gadgets", compiled.gadgets},
                   {"verified", verified},
                   {"simulator_alphabet", factor ? 2 * q : q + 1}};
    if (as_json)
        emit_report(j, true, timer);
    else {
        std::cout << "word: " << word_text << '\n';
        std::cout << "gadgets: " << compiled.gadgets.size() << ", steps: " << compiled.word.length() << '\n';
        std::cout << "verification: " << (verified ? "PASS (replayed on every configuration)" : "FAIL") << '\n';
        emit_report(j, false, timer);
    }
    return verified ? exit_pass : exit_fail;
}

int cmd_instr(const std::string& mode, const std::string& in_path, const std::string& out_path, bool as_json)
{
    Timer timer;
    const Network f = io::load_network(in_path);
    const Params& p = f.params;
    std::string program_text;
    std::size_t steps = 0;
    bool verified = false;
    if (mode == "singular") {
        const auto prog = decompose_singular(f);
        steps = prog.size();
        verified = replay(prog, p) == f;
        program_text = io::emit_program(prog, p);
    } else if (mode == "assignment") {
        const auto prog = decompose_into_assignments(Instruction::from_network(f));
        steps = prog.size();
        verified = replay(prog, p) == f;
        program_text = io::emit_program(prog, p);
    } else {
        fail(errc::invalid_params, "mode must be singular or assignment");
    }
    if (!out_path.empty()) io::write_file(out_path, program_text);

    json j = make_report("instr decompose", json{{"mode", mode}, {"in", in_path}});
    j["report"] = {{"instructions", steps}, {"verified", verified}, {"program", program_text}};
    if (as_json)
        emit_report(j, true, timer);
    else {
        std::cout << program_text;
        std::cout << "instructions: " << steps << '\n';
        std::cout << "verification: " << (verified ? "PASS (replay equals input)" : "FAIL") << '\n';
        emit_report(j, false, timer);
    }
    return verified ? exit_pass : exit_fail;
}

puzzle::SimpleGraph parse_graph_spec(const std::string& spec)
{
    if (spec.rfind("hamming:", 0) == 0) {
        const auto rest = spec.substr(8);
        const auto comma = rest.find(',');
        if (comma == std::string::npos) fail(errc::invalid_params, "expected hamming:N,Q");
        const int n = std::stoi(rest.substr(0, comma));
        const int q = std::stoi(rest.substr(comma + 1));
        return puzzle::hamming_graph(n, q);
    }
    if (spec.rfind("cycle:", 0) == 0) return puzzle::cycle_graph(std::stoi(spec.substr(6)));
    fail(errc::invalid_params, "unknown graph spec '" + spec + "' (use hamming:N,Q or cycle:K)");
}

int cmd_puzzle(const std::string& graph_spec, int hole, std::uint64_t state_cap, bool as_json)
{
    Timer timer;
    const auto g = parse_graph_spec(graph_spec);
    const auto pg = puzzle::puzzle_group(g, hole, state_cap);
    const auto predicted = puzzle::wilson_predicted_order(g);
    const auto cls = puzzle::wilson_predict(g);

    json j = make_report("puzzle", json{{"graph", graph_spec}, {"hole", hole}});
    j["report"] = {{"vertices", g.n},
                   {"edges", g.edge_count()},
                   {"order", pg.order},
                   {"states", pg.states_explored},
                   {"wilson_class", puzzle::wilson_class_name(cls)},
                   {"predicted_order", predicted ? json(*predicted) : json(nullptr)},
                   {"prediction_matches", predicted ? json(*predicted == pg.order) : json(nullptr)}};
    if (as_json)
        emit_report(j, true, timer);
    else {
        std::cout << "vertices: " << g.n << ", edges: " << g.edge_count() << '\n';
        std::cout << "puzzle group order (hole " << hole << "): " << pg.order << '\n';
        std::cout << "wilson class: " << puzzle::wilson_class_name(cls);
        if (predicted) std::cout << " (order " << *predicted << (*predicted == pg.order ? ", matches" : ", MISMATCH") << ")";
        std::cout << '\n';
        emit_report(j, false, timer);
    }
    return exit_pass;
}

semigroup::UpdateMode parse_mode(const std::string& mode)
{
    if (mode == "seq" || mode == "sequential") return semigroup::UpdateMode::Sequential;
    if (mode == "async" || mode == "asynchronous") return semigroup::UpdateMode::Asynchronous;
    if (mode == "sync" || mode == "synchronous") return semigroup::UpdateMode::Synchronous;
    fail(errc::invalid_params, "mode must be seq, async or sync");
}

int cmd_graph_check(const std::string& in_path, int q, const std::string& mode_name, std::uint64_t limit,
                    std::uint64_t family_cap, bool as_json)
{
    Timer timer;
    const InteractionDigraph d = io::load_digraph(in_path);
    const auto mode = parse_mode(mode_name);
    const auto cert = graphs::tchuente_condition(d);
    const auto res = graphs::verify_graph_universality(d, q, mode, limit, family_cap);

    json j = make_report("graph check", json{{"in", in_path}, {"q", q}, {"mode", mode_name}});
    json cj = {{"holds", cert.holds}, {"strong", cert.strong}};
    if (cert.hub) cj["hub"] = *cert.hub;
    if (cert.unreachable) cj["unreachable"] = {cert.unreachable->first, cert.unreachable->second};
    j["report"] = {{"complete", res.complete},
                   {"closure_size", res.closure_size},
                   {"generators", res.generator_count},
                   {"streamed", res.streamed},
                   {"tchuente", cj},
                   {"matches_tchuente", res.complete == cert.holds}};
    if (res.missing) j["report"]["missing_witness"] = io::emit_network(*res.missing);
    if (as_json)
        emit_report(j, true, timer);
    else {
        std::cout << "F(D," << q << ") " << mode_name << " closure: " << (res.complete ? "COMPLETE" : "incomplete")
                  << " (" << res.closure_size << " members from " << res.generator_count << " generators)\n";
        std::cout << "tchuente condition: " << (cert.holds ? "holds" : "fails");
        if (cert.hub) std::cout << " (hub " << *cert.hub << ")";
        if (cert.unreachable) std::cout << " (no path " << cert.unreachable->first << " -> " << cert.unreachable->second << ")";
        std::cout << '\n';
        if (res.missing) std::cout << "missing witness network:\n" << io::emit_network(*res.missing);
        emit_report(j, false, timer);
    }
    return exit_pass;
}

int cmd_closure(const std::vector<std::string>& gen_paths, const std::string& mode_name, std::uint64_t limit,
                const std::string& query_path, const std::string& dump_path, bool as_json)
{
    Timer timer;
    semigroup::GeneratorSet gens;
    gens.mode = parse_mode(mode_name);
    for (const auto& path : gen_paths) gens.base.push_back(io::load_network(path));
    if (gens.base.empty()) fail(errc::invalid_params, "at least one --gen network is required");
    gens.params = gens.base.front().params;
    const auto cl = semigroup::close(gens, limit);

    json j = make_report("closure", json{{"mode", mode_name}, {"generators", gen_paths}});
    j["report"] = {{"members", cl.size()},
                   {"generators", cl.generators().size()},
                   {"depth_histogram", cl.depth_histogram()}};

    if (!query_path.empty()) {
        const Network g = io::load_network(query_path);
        const auto word = cl.witness_word(g);
        json qj;
        qj["present"] = word.has_value();
        if (word) {
            qj["witness_generators"] = *word;
            qj["witness_verified"] = semigroup::replay_word(*word, cl.generators(), cl.params()) == g;
        }
        j["report"]["query"] = std::move(qj);
    }
    if (!dump_path.empty()) {
        std::string all;
        for (std::size_t id = 0; id < cl.size(); ++id) all += io::emit_network(cl.member(id));
        io::write_file(dump_path, all);
    }
    if (as_json)
        emit_report(j, true, timer);
    else {
        std::cout << "members: " << cl.size() << ", generators: " << cl.generators().size() << '\n';
        std::cout << "depth histogram:";
        for (const auto d : cl.depth_histogram()) std::cout << ' ' << d;
        std::cout << '\n';
        if (j["report"].contains("query")) {
            const auto& qj = j["report"]["query"];
            std::cout << "query: " << (qj["present"].get<bool>() ? "present" : "absent") << '\n';
            if (qj["present"].get<bool>()) {
                std::cout << "witness generator indices:";
                for (const auto& gi : qj["witness_generators"]) std::cout << ' ' << gi.get<int>();
                std::cout << (qj["witness_verified"].get<bool>() ? "  (replay verified)" : "  (REPLAY FAILED)") << '\n';
            }
        }
        emit_report(j, false, timer);
    }
    return exit_pass;
}

} // namespace

int run(int argc, const char* const* argv)
{
    CLI::App app{"automata network update-mode simulation toolkit"};
    app.require_subcommand(1);

    // verify
    std::string suite;
    std::string tier = "default";
    suites::SuiteOptions sopt;
    bool as_json = false;
    std::string out_path, checkpoint;
    std::uint64_t budget = ~std::uint64_t{0};
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "one of: " + [] {
                            std::string all;
                            for (const auto& s : suites::suite_names()) all += s + " ";
                            return all;
                        }())
        ->required();
    verify->add_option("--tier", tier, "default or long")->check(CLI::IsMember({"default", "long"}));
    verify->add_option("--seed", sopt.seed, "seed for randomized checks (default 0)");
    verify->add_option("--threads", sopt.threads, "worker threads for sweeps");
    verify->add_option("--checkpoint", checkpoint, "checkpoint file (seqsim32)");
    verify->add_option("--budget", budget, "candidate budget (seqsim32 partial runs)");
    verify->add_flag("--json", as_json, "print the JSON report on stdout");

    // universal factor|init
    auto* universal_cmd = app.add_subcommand("universal", "larger-alphabet simulator compilers");
    int un = 3, uq = 2;
    std::string target_path, uout;
    std::uint64_t ulimit = std::uint64_t{1} << 25;
    bool emit_word = false;
    auto* factor = universal_cmd->add_subcommand("factor", "compile a word for the alphabet-2q simulator");
    auto* init = universal_cmd->add_subcommand("init", "compile a word for the alphabet-(q+1) simulator");
    for (auto* sub : {factor, init}) {
        sub->add_option("--n", un, "node count")->required();
        sub->add_option("--q", uq, "target alphabet size")->required();
        sub->add_option("--target", target_path, "target network file over [q]^n")->required();
        sub->add_option("--out", uout, "write the word to this file");
        sub->add_option("--limit", ulimit, "decomposition search member limit");
        sub->add_flag("--emit-word", emit_word, "print the word (always on)");
        sub->add_flag("--json", as_json, "print the JSON report on stdout");
    }

    // instr decompose
    auto* instr = app.add_subcommand("instr", "instruction decompositions");
    auto* decomp = instr->add_subcommand("decompose", "factor a network into instructions");
    std::string imode, iin, iout;
    decomp->add_option("--mode", imode, "singular or assignment")->required()->check(CLI::IsMember({"singular", "assignment"}));
    decomp->add_option("--in", iin, "input network file")->required();
    decomp->add_option("--out", iout, "write the program to this file");
    decomp->add_flag("--json", as_json, "print the JSON report on stdout");

    // puzzle
    auto* puz = app.add_subcommand("puzzle", "fifteen-puzzle groups");
    std::string graph_spec;
    int hole = 0;
    std::uint64_t state_cap = 400000;
    bool report_flag = false;
    puz->add_option("--graph", graph_spec, "hamming:N,Q or cycle:K")->required();
    puz->add_option("--hole", hole, "hole vertex (default 0)");
    puz->add_option("--state-cap", state_cap, "visited-state cap");
    puz->add_flag("--report", report_flag, "print the report (always on)");
    puz->add_flag("--json", as_json, "print the JSON report on stdout");

    // graph check
    auto* graph = app.add_subcommand("graph", "interaction-graph families");
    auto* gcheck = graph->add_subcommand("check", "closure completeness for F(D,q)");
    std::string gin, gmode = "sync";
    int gq = 2;
    std::uint64_t glimit = semigroup::default_member_limit;
    std::uint64_t gfam_cap = std::uint64_t{1} << 20;
    gcheck->add_option("--in", gin, "digraph file")->required();
    gcheck->add_option("--q", gq, "alphabet size")->required();
    gcheck->add_option("--mode", gmode, "seq, async or sync");
    gcheck->add_option("--limit", glimit, "closure member limit");
    gcheck->add_option("--family-cap", gfam_cap, "materialization cap for F(D,q)");
    gcheck->add_flag("--json", as_json, "print the JSON report on stdout");

    // closure
    auto* clo = app.add_subcommand("closure", "closure statistics and membership");
    std::vector<std::string> gen_paths;
    std::string cmode = "seq", query_path, dump_path;
    std::uint64_t climit = semigroup::default_member_limit;
    clo->add_option("--gen", gen_paths, "generator network files")->required();
    clo->add_option("--mode", cmode, "seq, async or sync");
    clo->add_option("--limit", climit, "member limit");
    clo->add_option("--query", query_path, "membership query network");
    clo->add_option("--dump", dump_path, "dump all members to this file");
    clo->add_flag("--json", as_json, "print the JSON report on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            sopt.long_tier = tier == "long";
            sopt.checkpoint = checkpoint;
            sopt.budget = budget;
            return cmd_verify(suite, sopt, as_json);
        }
        if (factor->parsed()) return cmd_universal(true, un, uq, target_path, uout, ulimit, as_json);
        if (init->parsed()) return cmd_universal(false, un, uq, target_path, uout, ulimit, as_json);
        if (decomp->parsed()) return cmd_instr(imode, iin, iout, as_json);
        if (puz->parsed()) return cmd_puzzle(graph_spec, hole, state_cap, as_json);
        if (gcheck->parsed()) return cmd_graph_check(gin, gq, gmode, glimit, gfam_cap, as_json);
        if (clo->parsed()) return cmd_closure(gen_paths, cmode, climit, query_path, dump_path, as_json);
        std::cerr << "no subcommand given\n";
        return exit_usage;
    } catch (const Error& e) {
        json err;
        err["schema"] = 1;
        err["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
        if (as_json) std::cout << err.dump(2) << '\n';
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        if (as_json) {
            json err;
            err["schema"] = 1;
            err["error"] = {{"code", "Unexpected"}, {"message", e.what()}};
            std::cout << err.dump(2) << '\n';
        }
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace anet::cli

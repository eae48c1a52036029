#include "anet/io.hpp"

#include <fstream>
#include <sstream>

#include "anet/instructions.hpp"

namespace anet::io {

namespace {

// Yields non-comment lines with their 1-based line numbers. Blank lines and
// lines starting with '#' are skipped.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line, std::size_t& number)
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::size_t i = raw.find_first_not_of(" \t");
            if (i == std::string::npos) continue;
            if (raw[i] == '#') continue;
            line = raw;
            number = line_no_;
            return true;
        }
        return false;
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& what)
{
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<long> parse_ints(const std::string& line, std::size_t line_no)
{
    std::istringstream ss(line);
    std::vector<long> out;
    long v;
    while (ss >> v) out.push_back(v);
    std::string trailing;
    if (!ss.eof() && ss.fail()) {
        ss.clear();
        ss >> trailing;
        parse_fail(line_no, "expected integers, got '" + trailing + "'");
    }
    return out;
}

} // namespace

Network parse_network(std::istream& in, std::uint64_t cap)
{
    LineReader reader(in);
    std::string line;
    std::size_t line_no = 0;
    if (!reader.next(line, line_no)) fail(errc::parse_error, "empty network file (missing 'q n' header)");

    const auto header = parse_ints(line, line_no);
    if (header.size() != 2) parse_fail(line_no, "header must be 'q n'");
    const long q = header[0], n = header[1];
    if (q < 2 || n < 1) parse_fail(line_no, "invalid header values q=" + std::to_string(q) + " n=" + std::to_string(n));
    Params p = Params::make(static_cast<int>(n), static_cast<int>(q), cap);

    Network f{p, std::vector<Config>(p.size)};
    for (Config i = 0; i < p.size; ++i) {
        if (!reader.next(line, line_no))
            fail(errc::parse_error, "unexpected end of file: expected " + std::to_string(p.size) + " image lines, got " + std::to_string(i));
        const auto digits = parse_ints(line, line_no);
        if (digits.size() != static_cast<std::size_t>(p.n))
            parse_fail(line_no, "expected " + std::to_string(p.n) + " digits, got " + std::to_string(digits.size()));
        std::vector<int> tuple(digits.size());
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (digits[j] < 0 || digits[j] >= q) parse_fail(line_no, "digit " + std::to_string(digits[j]) + " outside [0," + std::to_string(q - 1) + "]");
            tuple[j] = static_cast<int>(digits[j]);
        }
        f.table[i] = encode(tuple, p);
    }
    if (reader.next(line, line_no)) parse_fail(line_no, "trailing content after " + std::to_string(p.size) + " image lines");
    return f;
}

Network parse_network_string(const std::string& text, std::uint64_t cap)
{
    std::istringstream ss(text);
    return parse_network(ss, cap);
}

Network load_network(const std::string& path, std::uint64_t cap)
{
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open network file: " + path);
    return parse_network(in, cap);
}

std::string emit_network(const Network& f)
{
    std::ostringstream out;
    out << f.params.q << ' ' << f.params.n << '\n';
    for (Config x = 0; x < f.params.size; ++x) {
        const auto t = decode(f.table[x], f.params);
        for (int v = 0; v < f.params.n; ++v) {
            if (v) out << ' ';
            out << t[static_cast<std::size_t>(v)];
        }
        out << '\n';
    }
    return out.str();
}

void save_network(const Network& f, const std::string& path) { write_file(path, emit_network(f)); }

UpdateWord parse_update_word(const std::string& text, const Params& p)
{
    UpdateWord w;
    std::size_t pos = 0;
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
    std::string trimmed;
    for (char c : text)
        if (!is_space(c)) trimmed += c;
    if (trimmed.empty()) return w;
    while (pos <= trimmed.size()) {
        const std::size_t sep = trimmed.find(';', pos);
        const std::string step = trimmed.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
        if (step.empty()) fail(errc::parse_error, "empty step in update word '" + text + "'");
        std::uint32_t mask = 0;
        std::size_t cpos = 0;
        while (cpos <= step.size()) {
            const std::size_t comma = step.find(',', cpos);
            const std::string tok = step.substr(cpos, comma == std::string::npos ? std::string::npos : comma - cpos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                fail(errc::parse_error, "bad coordinate '" + tok + "' in update word");
            const long v = std::stol(tok);
            if (v < 1 || v > p.n) fail(errc::invalid_coordinate, "coordinate " + tok + " outside [1," + std::to_string(p.n) + "]");
            mask |= 1u << (v - 1);
            if (comma == std::string::npos) break;
            cpos = comma + 1;
        }
        w.steps.push_back(mask);
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return w;
}

std::string emit_update_word(const UpdateWord& w, const Params& p)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        if (i) out << ';';
        const auto coords = mask_to_coords(w.steps[i], p);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (j) out << ',';
            out << coords[j];
        }
    }
    return out.str();
}

InteractionDigraph parse_digraph(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    std::size_t line_no = 0;
    if (!reader.next(line, line_no)) fail(errc::parse_error, "empty digraph file (missing 'n' header)");
    const auto header = parse_ints(line, line_no);
    if (header.size() != 1 || header[0] < 1 || header[0] > 31) parse_fail(line_no, "header must be a vertex count in [1,31]");
    InteractionDigraph d = InteractionDigraph::empty(static_cast<int>(header[0]));
    while (reader.next(line, line_no)) {
        const auto arc = parse_ints(line, line_no);
        if (arc.size() != 2) parse_fail(line_no, "expected 'u v'");
        if (arc[0] < 1 || arc[0] > d.n || arc[1] < 1 || arc[1] > d.n) parse_fail(line_no, "arc endpoint outside [1,n]");
        d.add_arc(static_cast<int>(arc[0]), static_cast<int>(arc[1]));
    }
    return d;
}

InteractionDigraph parse_digraph_string(const std::string& text)
{
    std::istringstream ss(text);
    return parse_digraph(ss);
}

InteractionDigraph load_digraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open digraph file: " + path);
    return parse_digraph(in);
}

std::string emit_digraph(const InteractionDigraph& d)
{
    std::ostringstream out;
    out << d.n << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

void emit_tuple(std::ostringstream& out, Config x, const Params& p)
{
    const auto t = decode(x, p);
    for (int v = 0; v < p.n; ++v) {
        if (v) out << ' ';
        out << t[static_cast<std::size_t>(v)];
    }
}

} // namespace

std::string emit_program(const std::vector<Instruction>& prog, const Params& p)
{
    std::ostringstream out;
    out << p.q << ' ' << p.n << '\n';
    for (const Instruction& ins : prog) {
        out << "INSTR " << ins.v;
        for (Config x = 0; x < p.size; ++x) out << ' ' << p.digit(ins.net.table[x], ins.v);
        out << '\n';
    }
    return out.str();
}

std::string emit_program(const std::vector<AssignmentInstruction>& prog, const Params& p)
{
    std::ostringstream out;
    out << p.q << ' ' << p.n << '\n';
    for (const AssignmentInstruction& a : prog) {
        out << "ASSIGN ";
        emit_tuple(out, a.a, p);
        out << " -> ";
        emit_tuple(out, a.b, p);
        out << '\n';
    }
    return out.str();
}

std::vector<Instruction> parse_program(std::istream& in, std::uint64_t cap)
{
    LineReader reader(in);
    std::string line;
    std::size_t line_no = 0;
    if (!reader.next(line, line_no)) fail(errc::parse_error, "empty program file (missing 'q n' header)");
    const auto header = parse_ints(line, line_no);
    if (header.size() != 2) parse_fail(line_no, "header must be 'q n'");
    Params p = Params::make(static_cast<int>(header[1]), static_cast<int>(header[0]), cap);

    std::vector<Instruction> prog;
    while (reader.next(line, line_no)) {
        std::istringstream ss(line);
        std::string kind;
        ss >> kind;
        if (kind == "ASSIGN") {
            std::vector<int> left(static_cast<std::size_t>(p.n)), right(static_cast<std::size_t>(p.n));
            for (auto& d : left)
                if (!(ss >> d)) parse_fail(line_no, "ASSIGN: missing source digits");
            std::string arrow;
            if (!(ss >> arrow) || arrow != "->") parse_fail(line_no, "ASSIGN: expected '->'");
            for (auto& d : right)
                if (!(ss >> d)) parse_fail(line_no, "ASSIGN: missing target digits");
            Config a, b;
            try {
                a = encode(left, p);
                b = encode(right, p);
            } catch (const Error& e) {
                parse_fail(line_no, e.what());
            }
            if (hamming_distance(a, b, p) != 1) parse_fail(line_no, "ASSIGN endpoints not at Hamming distance 1");
            prog.push_back(Instruction::from_network(Network::assignment(p, a, b)));
        } else if (kind == "INSTR") {
            int v;
            if (!(ss >> v) || v < 1 || v > p.n) parse_fail(line_no, "INSTR: bad coordinate");
            std::vector<int> rule(p.size);
            for (auto& d : rule) {
                if (!(ss >> d)) parse_fail(line_no, "INSTR: expected " + std::to_string(p.size) + " digits");
                if (d < 0 || d >= p.q) parse_fail(line_no, "INSTR: digit outside [0,q)");
            }
            prog.push_back(Instruction::from_local_rule(p, v, rule));
        } else {
            parse_fail(line_no, "unknown directive '" + kind + "'");
        }
    }
    return prog;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write file: " + path);
    out << content;
    if (!out) fail(errc::io_error, "write failed: " + path);
}

} // namespace anet::io

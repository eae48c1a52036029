#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anet/core.hpp"

namespace anet {
struct Instruction;
struct AssignmentInstruction;
} // namespace anet

namespace anet::io {

// Network text format:
//   line 1: "q n"
//   then q^n lines; line for configuration index i holds the n digits of its
//   image tuple, "x_1 x_2 ... x_n". Lines starting with '#' are ignored.
Network parse_network(std::istream& in, std::uint64_t cap = Params::default_cap);
Network parse_network_string(const std::string& text, std::uint64_t cap = Params::default_cap);
Network load_network(const std::string& path, std::uint64_t cap = Params::default_cap);
std::string emit_network(const Network& f);
void save_network(const Network& f, const std::string& path);

// Update word text format: steps separated by ';', each step a comma-separated
// list of 1-based coordinates, e.g. "3;3;2;3;1;1;2;1;3" or "1,2;3".
UpdateWord parse_update_word(const std::string& text, const Params& p);
std::string emit_update_word(const UpdateWord& w, const Params& p);

// Digraph file format: line 1 = "n"; then one "u v" arc per line (1-based);
// '#' comments.
InteractionDigraph parse_digraph(std::istream& in);
InteractionDigraph parse_digraph_string(const std::string& text);
InteractionDigraph load_digraph(const std::string& path);
std::string emit_digraph(const InteractionDigraph& d);

// Instruction program format:
//   line 1: "q n"
//   then one instruction per line, applied top to bottom:
//     "ASSIGN d_1 ... d_n -> e_1 ... e_n"   (configurations as digit tuples)
//     "INSTR v t_0 t_1 ... t_{q^n-1}"       (new digit of coordinate v per
//                                            configuration index)
std::string emit_program(const std::vector<Instruction>& prog, const Params& p);
std::string emit_program(const std::vector<AssignmentInstruction>& prog, const Params& p);
std::vector<Instruction> parse_program(std::istream& in, std::uint64_t cap = Params::default_cap);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace anet::io

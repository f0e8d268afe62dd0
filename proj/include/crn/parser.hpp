#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/egraph.hpp"

namespace crn {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct NetworkDocument {
  std::vector<std::string> species;  // axis names, in declaration order
  EGraph graph;
  std::optional<double> epsilon;
};

// Line-oriented reaction-network format:
//   species <name>+
//   rxn <complex> -> <complex>      complex: "0" or "c S + c S + ...",
//   rxn <complex> <-> <complex>     coefficients are nonnegative rationals
//   edge (v) -> (v)                 raw coordinate vectors
//   epsilon <number>
// '#' starts a comment; numbers are decimal or p/q literals, parsed exactly.
NetworkDocument parse_document(const std::string& text);

EGraph parse_network(const std::string& text);

// Canonical form: species header, then edges in vector notation sorted by
// (source, target); numbers in canonical form, single spaces, LF endings.
// parse_network(serialize_network(g)) reproduces g coordinate-exactly.
std::string serialize_network(const EGraph& g);

NetworkDocument load_network_file(const std::string& path);

}  // namespace crn

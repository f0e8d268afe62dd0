#include "crn/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace crn {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

struct ComplexTerm {
  Rat coeff;
  std::string species;
};

// One side of a reaction: "0", or '+'-separated terms "c S" / "cS" / "S".
RatVec parse_complex(const std::string& text, const std::map<std::string, int>& species, int dim, int line) {
  RatVec coords(dim, Rat(0));
  std::string t = trim(text);
  if (t.empty()) throw ParseError(line, 1, "empty complex");
  if (t == "0") return coords;

  size_t pos = 0;
  while (pos <= t.size()) {
    size_t plus = t.find('+', pos);
    std::string part = trim(t.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    if (part.empty()) throw ParseError(line, 1, "empty term in complex");

    Rat coeff = 1;
    std::string name;
    size_t split = 0;
    while (split < part.size() &&
           (std::isdigit(static_cast<unsigned char>(part[split])) || part[split] == '.' || part[split] == '/'))
      ++split;
    if (split > 0) {
      std::string num = trim(part.substr(0, split));
      name = trim(part.substr(split));
      if (name.empty()) throw ParseError(line, 1, "coefficient without species: '" + part + "'");
      try {
        coeff = rat_from_string(num);
      } catch (const std::invalid_argument&) {
        throw ParseError(line, 1, "malformed coefficient: '" + num + "'");
      }
      if (coeff < 0) throw ParseError(line, 1, "negative coefficient in complex");
    } else {
      name = part;
    }
    if (!valid_name(name)) throw ParseError(line, 1, "bad species name: '" + name + "'");
    auto it = species.find(name);
    if (it == species.end()) throw ParseError(line, 1, "unknown species: '" + name + "'");
    coords[it->second] += coeff;

    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return coords;
}

std::string complex_label(const RatVec& coords, const std::vector<std::string>& species) {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coords[i] != 1) out += rat_to_string(coords[i]) + " ";
    out += species[i];
  }
  return out.empty() ? "0" : out;
}

// "(a,b,c)" with exact numeric entries.
RatVec parse_vector(const std::string& text, int dim, int line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError(line, 1, "expected parenthesized vector, got '" + text + "'");
  std::string inner = t.substr(1, t.size() - 2);
  RatVec coords;
  size_t pos = 0;
  while (true) {
    size_t comma = inner.find(',', pos);
    std::string part = trim(inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (part.empty()) throw ParseError(line, 1, "empty coordinate");
    try {
      coords.push_back(rat_from_string(part));
    } catch (const std::invalid_argument&) {
      throw ParseError(line, 1, "malformed number: '" + part + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (dim >= 0 && static_cast<int>(coords.size()) != dim)
    throw ParseError(line, 1, "vector has " + std::to_string(coords.size()) + " coordinates, expected " +
                                  std::to_string(dim));
  return coords;
}

}  // namespace

NetworkDocument parse_document(const std::string& text) {
  std::vector<std::string> species_names;
  std::map<std::string, int> species_index;
  std::optional<EGraph> graph;
  std::optional<double> epsilon;

  struct PendingEdge {
    RatVec src, tgt;
    int line;
  };
  std::vector<PendingEdge> pending;

  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto tokens = split_ws(line);
    const std::string& head = tokens[0];

    if (head == "species") {
      if (!species_names.empty()) throw ParseError(line_no, 1, "duplicate species line");
      if (tokens.size() < 2) throw ParseError(line_no, 1, "species line needs at least one name");
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_name(tokens[i])) throw ParseError(line_no, 1, "bad species name: '" + tokens[i] + "'");
        if (species_index.count(tokens[i])) throw ParseError(line_no, 1, "duplicate species: '" + tokens[i] + "'");
        species_index[tokens[i]] = static_cast<int>(species_names.size());
        species_names.push_back(tokens[i]);
      }
      graph.emplace(static_cast<int>(species_names.size()));
    } else if (head == "rxn") {
      if (!graph) throw ParseError(line_no, 1, "rxn before species line");
      std::string rest = trim(line.substr(3));
      bool reversible = false;
      size_t arrow = rest.find("<->");
      size_t arrow_len = 3;
      if (arrow != std::string::npos) {
        reversible = true;
      } else {
        arrow = rest.find("->");
        arrow_len = 2;
        if (arrow == std::string::npos) throw ParseError(line_no, 1, "rxn needs '->' or '<->'");
      }
      RatVec lhs = parse_complex(rest.substr(0, arrow), species_index, graph->dimension(), line_no);
      RatVec rhs = parse_complex(rest.substr(arrow + arrow_len), species_index, graph->dimension(), line_no);
      pending.push_back({lhs, rhs, line_no});
      if (reversible) pending.push_back({rhs, lhs, line_no});
    } else if (head == "edge") {
      if (!graph) throw ParseError(line_no, 1, "edge before species line");
      std::string rest = trim(line.substr(4));
      size_t arrow = rest.find("->");
      if (arrow == std::string::npos) throw ParseError(line_no, 1, "edge needs '->'");
      RatVec src = parse_vector(rest.substr(0, arrow), graph->dimension(), line_no);
      RatVec tgt = parse_vector(rest.substr(arrow + 2), graph->dimension(), line_no);
      pending.push_back({std::move(src), std::move(tgt), line_no});
    } else if (head == "epsilon") {
      if (tokens.size() != 2) throw ParseError(line_no, 1, "epsilon line needs one value");
      if (epsilon) throw ParseError(line_no, 1, "duplicate epsilon line");
      Rat v;
      try {
        v = rat_from_string(tokens[1]);
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, 1, "malformed number: '" + tokens[1] + "'");
      }
      if (v <= 0 || v > 1) throw ParseError(line_no, 1, "epsilon must be in (0, 1]");
      epsilon = rat_to_double(v);
    } else {
      throw ParseError(line_no, 1, "unknown statement: '" + head + "'");
    }
  }
  if (!graph) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing species line");

  for (const auto& pe : pending) {
    if (pe.src == pe.tgt) throw ParseError(pe.line, 1, "zero edge vector");
    int s = graph->add_vertex(pe.src, complex_label(pe.src, species_names));
    int t = graph->add_vertex(pe.tgt, complex_label(pe.tgt, species_names));
    try {
      graph->add_edge(s, t);
    } catch (const std::invalid_argument&) {
      throw ParseError(pe.line, 1, "duplicate edge");
    }
  }

  return {std::move(species_names), std::move(*graph), epsilon};
}

EGraph parse_network(const std::string& text) { return parse_document(text).graph; }

std::string serialize_network(const EGraph& g) {
  std::ostringstream out;
  out << "species";
  for (int i = 0; i < g.dimension(); ++i) out << " x" << (i + 1);
  out << "\n";

  std::vector<std::pair<RatVec, RatVec>> edges;
  for (int e = 0; e < g.edge_count(); ++e)
    edges.push_back({g.vertex(g.edges()[e].src), g.vertex(g.edges()[e].tgt)});
  std::sort(edges.begin(), edges.end());

  for (const auto& [src, tgt] : edges) {
    auto put = [&](const RatVec& v) {
      out << "(";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << rat_to_string(v[i]);
      }
      out << ")";
    };
    out << "edge ";
    put(src);
    out << " -> ";
    put(tgt);
    out << "\n";
  }
  return out.str();
}

NetworkDocument load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

}  // namespace crn

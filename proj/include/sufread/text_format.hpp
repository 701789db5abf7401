#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "sufread/automata.hpp"
#include "sufread/hardness.hpp"

namespace sufread {

struct Document {
  enum class Kind { kDfa, kDsa, kGraph };
  Kind kind = Kind::kDfa;
  std::variant<Dfa, Dsa, Graph> payload;
  std::string source_name;

  const Dfa& dfa() const;
  const Dsa& dsa() const;
  const Graph& graph() const;
};

/// Line-oriented format:
///
///   # comment
///   type: dfa|dsa|graph
///   alphabet: a b          (automata)
///   states: q0 q1
///   initial: q0
///   accepting: q1          (may be empty)
///   edge: q0 a b -> q1     (exactly one label token for a dfa)
///   vertices: u v w        (graphs)
///   edge: u -- v
///
/// Throws ParseError with a 1-based line and column.
Document parse(std::string_view text, std::string source_name = "<input>");

/// Reads a file and parses it; IO failures raise Error.
Document parse_file(const std::string& path);

Dfa parse_dfa(std::string_view text);
Dsa parse_dsa(std::string_view text);
Graph parse_graph(std::string_view text);

/// Canonical text: states in id order, DSA edges by (source, label length,
/// label), DFA edges by (source, symbol).
std::string serialize(const Dfa& m);
std::string serialize(const Dsa& a);
std::string serialize(const Graph& g);
std::string serialize(const Document& doc);

std::string to_dot(const Dfa& m);
std::string to_dot(const Dsa& a);
std::string to_dot(const Graph& g);
std::string to_dot(const Document& doc);

}  // namespace sufread

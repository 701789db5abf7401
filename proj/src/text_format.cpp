#include "sufread/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "sufread/errors.hpp"

namespace sufread {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string key;
  std::size_t key_column;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text, std::size_t& line_count) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    std::size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i == raw.size()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t colon = raw.find(':', i);
    if (colon == std::string_view::npos) {
      throw ParseError(number, i + 1, "expected 'key: value'");
    }
    Line line{number, std::string(raw.substr(i, colon - i)), i + 1, {}};
    while (!line.key.empty() && std::isspace(static_cast<unsigned char>(line.key.back()))) {
      line.key.pop_back();
    }
    std::size_t j = colon + 1;
    while (j < raw.size()) {
      while (j < raw.size() && std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      std::size_t k = j;
      while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      if (k > j) line.tokens.push_back({std::string(raw.substr(j, k - j)), j + 1});
      j = k;
    }
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  line_count = number;
  return out;
}

void require_token(const Line& line, const Token& t) {
  if (!is_valid_token(t.text)) {
    throw ParseError(line.number, t.column, "invalid token '" + t.text + "'");
  }
}

/// Declared names with their positions; rejects duplicates.
std::vector<std::string> read_names(const Line& line, const char* what) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& t : line.tokens) {
    require_token(line, t);
    if (!seen.insert(t.text).second) {
      throw ParseError(line.number, t.column, std::string("duplicate ") + what + " '" + t.text + "'");
    }
    names.push_back(t.text);
  }
  return names;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : source_(std::move(source)) {
    lines_ = split_lines(text, line_count_);
  }

  Document run() {
    static const std::set<std::string> keys{"type",      "alphabet", "states", "initial",
                                            "accepting", "edge",     "vertices"};
    for (const Line& line : lines_) {
      if (!keys.count(line.key)) {
        throw ParseError(line.number, line.key_column, "unknown key '" + line.key + "'");
      }
      if (line.key == "edge") {
        edges_.push_back(&line);
        continue;
      }
      if (decl_.count(line.key)) {
        throw ParseError(line.number, line.key_column, "duplicate '" + line.key + ":' declaration");
      }
      decl_[line.key] = &line;
    }
    const Line* type = decl_.count("type") ? decl_["type"] : nullptr;
    if (type == nullptr) throw ParseError(1, 1, "missing 'type:' declaration");
    if (type->tokens.size() != 1) {
      throw ParseError(type->number, type->key_column, "expected exactly one type");
    }
    const std::string& kind = type->tokens[0].text;
    Document doc;
    doc.source_name = source_;
    if (kind == "dfa" || kind == "dsa") {
      forbid("vertices");
      if (kind == "dfa") {
        doc.kind = Document::Kind::kDfa;
        doc.payload = parse_dfa_body();
      } else {
        doc.kind = Document::Kind::kDsa;
        doc.payload = parse_dsa_body();
      }
    } else if (kind == "graph") {
      for (const char* k : {"alphabet", "states", "initial", "accepting"}) forbid(k);
      doc.kind = Document::Kind::kGraph;
      doc.payload = parse_graph_body();
    } else {
      throw ParseError(type->number, type->tokens[0].column, "unknown type '" + kind + "'");
    }
    return doc;
  }

 private:
  void forbid(const std::string& key) {
    if (decl_.count(key)) {
      const Line* l = decl_[key];
      throw ParseError(l->number, l->key_column, "'" + key + ":' is not allowed here");
    }
  }

  const Line& need(const std::string& key) {
    if (!decl_.count(key)) {
      throw ParseError(line_count_, 1, "missing '" + key + ":' declaration");
    }
    return *decl_[key];
  }

  struct Header {
    Alphabet alphabet;
    std::vector<std::string> states;
    std::map<std::string, StateId> ids;
    StateId initial = 0;
    std::vector<StateId> accepting;
  };

  StateId lookup(const Header& h, const Line& line, const Token& t) {
    auto it = h.ids.find(t.text);
    if (it == h.ids.end()) throw ParseError(line.number, t.column, "unknown state '" + t.text + "'");
    return it->second;
  }

  Header parse_header() {
    Header h;
    const Line& alpha = need("alphabet");
    auto tokens = read_names(alpha, "symbol");
    if (tokens.empty()) throw ParseError(alpha.number, alpha.key_column, "alphabet is empty");
    h.alphabet = Alphabet(tokens);
    const Line& states = need("states");
    h.states = read_names(states, "state");
    if (h.states.empty()) throw ParseError(states.number, states.key_column, "no states declared");
    for (std::size_t i = 0; i < h.states.size(); ++i) h.ids[h.states[i]] = static_cast<StateId>(i);
    const Line& init = need("initial");
    if (init.tokens.size() != 1) {
      throw ParseError(init.number, init.key_column, "expected exactly one initial state");
    }
    h.initial = lookup(h, init, init.tokens[0]);
    if (decl_.count("accepting")) {
      const Line& acc = *decl_["accepting"];
      read_names(acc, "accepting state");
      for (const auto& t : acc.tokens) h.accepting.push_back(lookup(h, acc, t));
      canonicalize_accepting(h.accepting);
    }
    return h;
  }

  struct EdgeParts {
    StateId source;
    Word label;
    std::vector<const Token*> label_tokens;
    StateId target;
  };

  EdgeParts parse_edge(const Header& h, const Line& line) {
    const auto& t = line.tokens;
    if (t.size() < 3 || t[t.size() - 2].text != "->") {
      throw ParseError(line.number, line.key_column, "expected 'edge: SRC LABEL... -> DST'");
    }
    EdgeParts e{lookup(h, line, t.front()), {}, {}, lookup(h, line, t.back())};
    for (std::size_t i = 1; i + 2 < t.size(); ++i) {
      auto sym = h.alphabet.find(t[i].text);
      if (!sym) throw ParseError(line.number, t[i].column, "unknown symbol '" + t[i].text + "'");
      e.label.push_back(*sym);
      e.label_tokens.push_back(&t[i]);
    }
    if (e.label.empty()) {
      throw ParseError(line.number, t[t.size() - 2].column, "edge label must not be empty");
    }
    return e;
  }

  Dfa parse_dfa_body() {
    Header h = parse_header();
    Dfa m = Dfa::with_states(h.alphabet, h.states);
    m.initial = h.initial;
    m.accepting = h.accepting;
    for (const Line* line : edges_) {
      EdgeParts e = parse_edge(h, *line);
      if (e.label.size() != 1) {
        throw ParseError(line->number, e.label_tokens[1]->column,
                         "a dfa edge carries exactly one symbol");
      }
      StateId& slot = m.next(e.source, e.label[0]);
      if (slot != kNoState) {
        throw ParseError(line->number, line->key_column,
                         "duplicate edge from '" + h.states[e.source] + "' on '" +
                             e.label_tokens[0]->text + "'");
      }
      slot = e.target;
    }
    return m;
  }

  Dsa parse_dsa_body() {
    Header h = parse_header();
    Dsa a;
    a.alphabet = h.alphabet;
    a.names = h.states;
    a.initial = h.initial;
    a.accepting = h.accepting;
    // Repeated (source, label) pairs are kept so that validate() can report them.
    for (const Line* line : edges_) {
      EdgeParts e = parse_edge(h, *line);
      a.transitions.push_back({e.source, std::move(e.label), e.target});
    }
    canonicalize(a);
    return a;
  }

  Graph parse_graph_body() {
    Graph g;
    const Line& v = need("vertices");
    g.vertices = read_names(v, "vertex");
    for (const Line* line : edges_) {
      const auto& t = line->tokens;
      if (t.size() != 3 || t[1].text != "--") {
        throw ParseError(line->number, line->key_column, "expected 'edge: U -- V'");
      }
      auto u = g.find_vertex(t[0].text);
      if (!u) throw ParseError(line->number, t[0].column, "unknown vertex '" + t[0].text + "'");
      auto w = g.find_vertex(t[2].text);
      if (!w) throw ParseError(line->number, t[2].column, "unknown vertex '" + t[2].text + "'");
      g.edges.emplace_back(std::min(*u, *w), std::max(*u, *w));
    }
    return g;
  }

  std::string source_;
  std::size_t line_count_ = 0;
  std::vector<Line> lines_;
  std::map<std::string, const Line*> decl_;
  std::vector<const Line*> edges_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += " " + x;
  return out;
}

std::string space_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (Symbol s : w) out += " " + alphabet.token(s);
  return out;
}

std::string header(const char* type, const Alphabet& alphabet, const std::vector<std::string>& names,
                   StateId initial, const std::vector<StateId>& accepting) {
  std::string out = std::string("type: ") + type + "\n";
  out += "alphabet:" + join(alphabet.tokens()) + "\n";
  out += "states:" + join(names) + "\n";
  out += "initial: " + names.at(initial) + "\n";
  out += "accepting:";
  for (StateId f : accepting) out += " " + names.at(f);
  out += "\n";
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_label(const Alphabet& alphabet, const Word& w) {
  if (alphabet.is_character_alphabet()) return format_word(alphabet, w);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += "·";
    out += alphabet.token(w[i]);
  }
  return out;
}

std::string dot_nodes(const std::vector<std::string>& names, StateId initial,
                      const std::vector<StateId>& accepting) {
  std::string out = "  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < names.size(); ++s) {
    const bool acc = std::binary_search(accepting.begin(), accepting.end(), static_cast<StateId>(s));
    out += "  " + quote(names[s]) + " [shape=" + (acc ? "doublecircle" : "circle") + "];\n";
  }
  out += "  __start -> " + quote(names.at(initial)) + ";\n";
  return out;
}

}  // namespace

const Dfa& Document::dfa() const { return std::get<Dfa>(payload); }
const Dsa& Document::dsa() const { return std::get<Dsa>(payload); }
const Graph& Document::graph() const { return std::get<Graph>(payload); }

Document parse(std::string_view text, std::string source_name) {
  return Parser(text, std::move(source_name)).run();
}

Document parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Dfa parse_dfa(std::string_view text) {
  Document d = parse(text);
  if (d.kind != Document::Kind::kDfa) throw ParseError(1, 1, "expected a dfa document");
  return d.dfa();
}

Dsa parse_dsa(std::string_view text) {
  Document d = parse(text);
  if (d.kind != Document::Kind::kDsa) throw ParseError(1, 1, "expected a dsa document");
  return d.dsa();
}

Graph parse_graph(std::string_view text) {
  Document d = parse(text);
  if (d.kind != Document::Kind::kGraph) throw ParseError(1, 1, "expected a graph document");
  return d.graph();
}

std::string serialize(const Dfa& m) {
  std::string out = header("dfa", m.alphabet, m.names, m.initial, m.accepting);
  for (StateId s = 0; s < static_cast<StateId>(m.num_states()); ++s) {
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      StateId t = m.next(s, a);
      if (t != kNoState) out += "edge: " + m.names[s] + " " + m.alphabet.token(a) + " -> " + m.names[t] + "\n";
    }
  }
  return out;
}

std::string serialize(const Dsa& a) {
  Dsa c = a;
  canonicalize(c);
  std::string out = header("dsa", c.alphabet, c.names, c.initial, c.accepting);
  for (const auto& t : c.transitions) {
    out += "edge: " + c.names[t.source] + space_word(c.alphabet, t.label) + " -> " +
           c.names[t.target] + "\n";
  }
  return out;
}

std::string serialize(const Graph& g) {
  std::string out = "type: graph\nvertices:" + join(g.vertices) + "\n";
  for (auto [u, v] : g.edges) out += "edge: " + g.vertices[u] + " -- " + g.vertices[v] + "\n";
  return out;
}

std::string serialize(const Document& doc) {
  return std::visit([](const auto& x) { return serialize(x); }, doc.payload);
}

std::string to_dot(const Dfa& m) {
  std::string out = "digraph dfa {\n" + dot_nodes(m.names, m.initial, m.accepting);
  for (StateId s = 0; s < static_cast<StateId>(m.num_states()); ++s) {
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      StateId t = m.next(s, a);
      if (t == kNoState) continue;
      out += "  " + quote(m.names[s]) + " -> " + quote(m.names[t]) +
             " [label=" + quote(m.alphabet.token(a)) + "];\n";
    }
  }
  return out + "}\n";
}

std::string to_dot(const Dsa& a) {
  Dsa c = a;
  canonicalize(c);
  std::string out = "digraph dsa {\n" + dot_nodes(c.names, c.initial, c.accepting);
  for (const auto& t : c.transitions) {
    out += "  " + quote(c.names[t.source]) + " -> " + quote(c.names[t.target]) +
           " [label=" + quote(dot_label(c.alphabet, t.label)) + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const Graph& g) {
  std::string out = "graph g {\n";
  for (const auto& v : g.vertices) out += "  " + quote(v) + ";\n";
  for (auto [u, v] : g.edges) out += "  " + quote(g.vertices[u]) + " -- " + quote(g.vertices[v]) + ";\n";
  return out + "}\n";
}

std::string to_dot(const Document& doc) {
  return std::visit([](const auto& x) { return to_dot(x); }, doc.payload);
}

}  // namespace sufread

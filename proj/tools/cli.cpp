#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "sufread/derivation.hpp"
#include "sufread/dfa_ops.hpp"
#include "sufread/errors.hpp"
#include "sufread/hardness.hpp"
#include "sufread/random.hpp"
#include "sufread/semantics.hpp"
#include "sufread/strong_min.hpp"
#include "sufread/text_format.hpp"
#include "sufread/tracking.hpp"

namespace sufread::cli {

namespace {

struct Globals {
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 1;
  std::string format = "text";
};

Dfa as_dfa(const Document& doc) {
  switch (doc.kind) {
    case Document::Kind::kDfa: return doc.dfa();
    case Document::Kind::kDsa: return tracking_dfa(doc.dsa()).dfa;
    case Document::Kind::kGraph: break;
  }
  throw Error(doc.source_name + ": expected an automaton, got a graph");
}

const Dfa& need_dfa(const Document& doc) {
  if (doc.kind != Document::Kind::kDfa) throw Error(doc.source_name + ": expected a dfa");
  return doc.dfa();
}

const Graph& need_graph(const Document& doc) {
  if (doc.kind != Document::Kind::kGraph) throw Error(doc.source_name + ": expected a graph");
  return doc.graph();
}

template <typename T>
void emit(std::ostream& out, const Globals& g, const T& x) {
  out << (g.format == "dot" ? to_dot(x) : serialize(x));
}

std::string set_names(const std::vector<std::string>& names, const StateSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + names[s[i]];
  return out + "}";
}

void describe(std::ostream& err, const Dfa& m, const DerivationReport& r) {
  for (StateId q : r.missing_required) err << "  missing required state " << m.names[q] << "\n";
  for (const auto& x : r.incompatible) {
    err << "  not suffix-compatible: " << m.names[x.from] << " --" << m.alphabet.token(x.symbol)
        << "--> " << m.names[x.to] << " (from " << m.names[x.p] << ", simple word "
        << format_word(m.alphabet, x.sigma) << ", longest suffix "
        << (x.found ? format_word(m.alphabet, *x.found) + " to " + m.names[x.found_target] : "none")
        << ")\n";
  }
  for (const auto& v : r.wf_violations) {
    err << "  not well-formed: from " << m.names[v.p] << ", " << format_word(m.alphabet, v.alpha)
        << " (to " << m.names[v.q] << ") is a suffix of " << format_word(m.alphabet, v.beta)
        << " (to " << m.names[v.q_out] << ")\n";
  }
}

StateSet parse_states(const Dfa& m, const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return make_state_set(m, names);
}

void print_run(std::ostream& out, const Dsa& a, const Word& w) {
  Run r = dsa_run(a, w);
  for (const auto& mv : r.moves) {
    out << a.names[mv.transition.source] << " --" << format_word(a.alphabet, mv.transition.label)
        << "--> " << a.names[mv.transition.target] << "  (read "
        << format_word(a.alphabet, mv.consumed) << ")\n";
  }
  if (r.accepted) {
    out << "accept\n";
  } else if (!r.residue.empty()) {
    out << "reject (residue: " << format_word(a.alphabet, r.residue) << ")\n";
  } else {
    out << "reject (" << a.names[r.final_state] << " is not accepting)\n";
  }
}

bool print_dfa_run(std::ostream& out, const Dfa& m, const Word& w) {
  StateId s = m.initial;
  for (Symbol x : w) {
    StateId t = m.next(s, x);
    if (t == kNoState) {
      out << "reject (no edge from " << m.names[s] << " on " << m.alphabet.token(x) << ")\n";
      return false;
    }
    out << m.names[s] << " --" << m.alphabet.token(x) << "--> " << m.names[t] << "\n";
    s = t;
  }
  const bool ok = m.is_accepting(s);
  out << (ok ? "accept\n" : "reject (" + m.names[s] + " is not accepting)\n");
  return ok;
}

std::size_t default_cap() {
  const char* env = std::getenv("SUFREAD_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw CLI::ValidationError("SUFREAD_CAP", "must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Deterministic suffix-reading automata toolkit", "sufread"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap", g.cap, "Maximum number of simple words per state")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for the random generator");
  app.add_option("--format", g.format, "Output format for automata")
      ->check(CLI::IsMember({"text", "dot"}));

  std::string file, file2, word, states, kind = "dsa";
  bool chars = false, force = false, all = false, strong = false;
  std::size_t max_card = 0, max_total = 10, theta = 0, k_prime = 0, size = 3, sigma = 2;
  int status = 0;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input file")->required();
    return sub;
  };

  auto* validate_cmd = with_file("validate", "Check structural invariants");
  auto* run_cmd = with_file("run", "Trace a run on a word");
  run_cmd->add_option("word", word, "Whitespace-separated symbols")->required();
  run_cmd->add_flag("--chars", chars, "Split WORD into single characters");
  auto* size_cmd = with_file("size", "Print size metrics");
  auto* to_dfa = with_file("to-dfa", "Tracking DFA of a DSA");
  auto* complete_cmd = with_file("complete", "Complete a DFA with a sink");
  auto* minimize_cmd = with_file("minimize", "Canonical minimal DFA");
  auto* equiv = with_file("equiv", "Language equivalence");
  equiv->add_option("file2", file2, "Second input file")->required();
  auto* sts = with_file("sts", "List suffix-tracking state sets");
  sts->add_option("--max-card", max_card, "Largest set size to try");
  auto* derive_cmd = with_file("derive", "Derive a DSA from a DFA and a state set");
  derive_cmd->add_option("--states", states, "Comma-separated state names")->required();
  derive_cmd->add_flag("--force", force, "Print the induced DSA even if the set is not suffix-tracking");
  auto* smallest = with_file("derive-smallest", "Smallest DSA derivable from a DFA");
  auto* mstrong = with_file("minimize-strong", "Minimal strong DSA from the canonical DFA");
  mstrong->add_flag("--all", all, "Print every minimum");
  auto* brute = with_file("brute-min", "Exhaustive search for a minimal DSA");
  brute->add_option("--max-total", max_total, "Largest total size to try")->required();
  brute->add_flag("--all", all, "Print every minimum");
  brute->add_flag("--strong", strong, "Only consider strong DSAs");
  auto* gen_vc = with_file("gen-vc", "Vertex-cover reduction DFA for a graph");
  gen_vc->add_option("--theta", theta, "Number of digit symbols (default (|V|+|E|)^4)");
  gen_vc->add_option("--k-prime", k_prime, "Cover size; prints the matching size bound");
  auto* dot = with_file("dot", "Graphviz rendering");
  auto* random_cmd = app.add_subcommand("random", "Random automaton");
  random_cmd->add_option("--kind", kind, "dsa or dfa")->check(CLI::IsMember({"dsa", "dfa"}));
  random_cmd->add_option("--states", size, "Maximum state count")->check(CLI::PositiveNumber);
  random_cmd->add_option("--sigma", sigma, "Alphabet size")->check(CLI::Range(1, 26));

  try {
    g.cap = default_cap();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto load = [&](const std::string& path) { return parse_file(path); };

    if (*validate_cmd) {
      Document doc = load(file);
      std::vector<std::string> problems;
      if (doc.kind == Document::Kind::kGraph) {
        problems = graph_violations(doc.graph());
      } else {
        auto v = doc.kind == Document::Kind::kDfa ? sufread::validate(doc.dfa()) : sufread::validate(doc.dsa());
        for (const auto& x : v) problems.push_back(std::string(to_string(x.kind)) + ": " + x.message);
      }
      for (const auto& p : problems) out << p << "\n";
      if (problems.empty()) out << "ok\n";
      status = problems.empty() ? 0 : 1;
    } else if (*run_cmd) {
      Document doc = load(file);
      if (doc.kind == Document::Kind::kDsa) {
        const Dsa& a = doc.dsa();
        require_valid(a);
        Word w = parse_word(a.alphabet, word, chars);
        print_run(out, a, w);
        status = dsa_accepts(a, w) ? 0 : 1;
      } else {
        const Dfa& m = need_dfa(doc);
        require_valid(m);
        status = print_dfa_run(out, m, parse_word(m.alphabet, word, chars)) ? 0 : 1;
      }
    } else if (*size_cmd) {
      Document doc = load(file);
      SizeMetrics s = doc.kind == Document::Kind::kDsa ? size_metrics(doc.dsa()) : size_metrics(need_dfa(doc));
      out << "states: " << s.n_states << "\nedges: " << s.n_edges << "\nlabel_length: " << s.label_len
          << "\ntotal: " << s.total << "\n";
    } else if (*to_dfa) {
      emit(out, g, as_dfa(load(file)));
    } else if (*complete_cmd) {
      emit(out, g, complete(need_dfa(load(file))));
    } else if (*minimize_cmd) {
      emit(out, g, minimize(complete(as_dfa(load(file)))).dfa);
    } else if (*equiv) {
      EquivResult r = dfa_equiv(as_dfa(load(file)), as_dfa(load(file2)));
      if (r.equivalent) {
        out << "equivalent\n";
      } else {
        Dfa m = as_dfa(load(file));
        out << "not equivalent; counterexample: " << format_word(m.alphabet, *r.counterexample) << "\n";
        status = 1;
      }
    } else if (*sts) {
      Document doc = load(file);
      const Dfa& m = need_dfa(doc);
      EnumerateOptions opts;
      opts.max_cardinality = max_card;
      opts.cap = g.cap;
      for_each_suffix_tracking_set(m, opts, [&](const StateSet& s) {
        out << set_names(m.names, s) << "\n";
        return true;
      });
    } else if (*derive_cmd) {
      Document doc = load(file);
      const Dfa& m = need_dfa(doc);
      StateSet s = parse_states(m, states);
      DerivationReport r = is_suffix_tracking(m, s, g.cap);
      if (r.is_suffix_tracking) {
        emit(out, g, derive(m, s, g.cap));
      } else if (force) {
        err << "warning: " << set_names(m.names, s) << " is not suffix-tracking\n";
        describe(err, m, r);
        emit(out, g, induced_dsa(m, s, true, g.cap));
      } else {
        err << "error: " << set_names(m.names, s) << " is not suffix-tracking\n";
        describe(err, m, r);
        status = 1;
      }
    } else if (*smallest) {
      Document doc = load(file);
      const Dfa& m = need_dfa(doc);
      EnumerateOptions opts;
      opts.cap = g.cap;
      DerivedResult r = derive_smallest(m, opts);
      out << "# states kept: " << set_names(m.names, r.states) << "\n";
      emit(out, g, r.dsa);
    } else if (*mstrong) {
      EnumerateOptions opts;
      opts.cap = g.cap;
      StrongMinResult r = minimize_strong(as_dfa(load(file)), all, opts);
      if (all) {
        for (const auto& d : r.all_minima) emit(out, g, d);
      } else {
        emit(out, g, r.dsa);
      }
    } else if (*brute) {
      BruteForceOptions opts{max_total, strong, all};
      MinimalityCertificate c = brute_force_min_dsa(as_dfa(load(file)), opts);
      if (!c.automaton) {
        out << "none with total <= " << c.search_bound << " (" << c.candidates << " candidates)\n";
        status = 1;
      } else {
        out << "# minimal total: " << c.total << " (" << c.candidates << " candidates)\n";
        if (all) {
          for (const auto& d : c.all_minima) emit(out, g, d);
        } else {
          emit(out, g, *c.automaton);
        }
      }
    } else if (*gen_vc) {
      Document doc = load(file);
      const Graph& graph = need_graph(doc);
      const std::size_t t = theta == 0 ? default_theta(graph) : theta;
      Dfa m = build_vc_dfa(graph, t);
      out << "# theta " << t;
      if (k_prime > 0) out << ", k_prime " << k_prime << ", k " << reduction_bound(k_prime, t);
      out << "\n";
      emit(out, g, m);
    } else if (*dot) {
      out << to_dot(load(file));
    } else if (*random_cmd) {
      Rng rng(g.seed);
      if (kind == "dfa") {
        emit(out, g, random_dfa(rng, size, sigma));
      } else {
        RandomDsaOptions opts;
        opts.max_states = size;
        opts.alphabet_size = sigma;
        emit(out, g, random_dsa(rng, opts));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace sufread::cli

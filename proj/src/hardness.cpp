#include "sufread/hardness.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "sufread/errors.hpp"

namespace sufread {

namespace {

constexpr std::size_t kMaxVertices = 8;

void require_usable(const Graph& g) {
  auto v = graph_violations(g);
  if (!v.empty()) throw ValidationError("invalid graph: " + v.front());
}

}  // namespace

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::string> graph_violations(const Graph& g) {
  std::vector<std::string> out;
  const std::size_t n = g.vertices.size();
  if (n < 3) out.push_back("graph needs at least 3 vertices");
  std::set<std::string> names(g.vertices.begin(), g.vertices.end());
  if (names.size() != n) out.push_back("duplicate vertex name");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : g.edges) {
    if (u >= n || v >= n) {
      out.push_back("edge references an undeclared vertex");
      continue;
    }
    if (u == v) {
      out.push_back("self-loop at " + g.vertices[u]);
      continue;
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      out.push_back("parallel edge " + g.vertices[key.first] + " -- " + g.vertices[key.second]);
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (n > 0) {
    std::vector<bool> reached(n, false);
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (!reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
      out.push_back("graph is not connected");
    }
  }
  return out;
}

bool is_vertex_cover(const Graph& g, std::uint64_t mask) {
  return std::all_of(g.edges.begin(), g.edges.end(), [mask](const auto& e) {
    return ((mask >> e.first) & 1U) != 0 || ((mask >> e.second) & 1U) != 0;
  });
}

std::string edge_symbol(const Graph& g, std::size_t edge) {
  auto [u, v] = g.edges.at(edge);
  const auto& a = g.vertices.at(u);
  const auto& b = g.vertices.at(v);
  return "e." + std::min(a, b) + "." + std::max(a, b);
}

Dfa build_vc_dfa(const Graph& g, std::size_t theta) {
  require_usable(g);
  if (theta == 0) throw ValidationError("theta must be at least 1");
  const std::size_t n = g.vertices.size();

  std::vector<std::string> tokens = g.vertices;
  for (std::size_t e = 0; e < g.edges.size(); ++e) tokens.push_back(edge_symbol(g, e));
  tokens.push_back("$");
  for (std::size_t d = 1; d <= theta; ++d) tokens.push_back(std::to_string(d));
  std::set<std::string> distinct(tokens.begin(), tokens.end());
  if (distinct.size() != tokens.size()) {
    throw ValidationError("vertex names collide with edge, digit or '$' symbols");
  }

  std::vector<std::string> names{"q_init"};
  names.insert(names.end(), g.vertices.begin(), g.vertices.end());
  names.push_back("q_acc");
  names.push_back("q_sink");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    throw ValidationError("vertex names collide with q_init, q_acc or q_sink");
  }

  Dfa m = Dfa::with_states(Alphabet(std::move(tokens)), std::move(names));
  const StateId init = 0;
  const auto acc = static_cast<StateId>(n + 1);
  const auto sink = static_cast<StateId>(n + 2);
  auto vertex_state = [](std::size_t v) { return static_cast<StateId>(v + 1); };
  const Symbol dollar = m.alphabet.at("$");

  m.initial = init;
  m.accepting = {acc};
  for (std::size_t v = 0; v < n; ++v) {
    m.next(init, m.alphabet.at(g.vertices[v])) = vertex_state(v);
    m.next(vertex_state(v), dollar) = acc;
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Symbol sym = m.alphabet.at(edge_symbol(g, e));
    auto [u, v] = g.edges[e];
    m.next(vertex_state(u), sym) = vertex_state(v);
    m.next(vertex_state(v), sym) = vertex_state(u);
  }
  for (auto& t : m.delta) {
    if (t == kNoState) t = sink;
  }
  return m;
}

std::size_t default_theta(const Graph& g) {
  const std::size_t b = g.vertices.size() + g.edges.size();
  return b * b * b * b;
}

std::size_t reduction_bound(std::size_t k_prime, std::size_t theta) {
  return (k_prime + 2) * 2 * theta + (2 * theta - 1);
}

StateSet vc_state_set(const Graph& g, std::uint64_t mask) {
  const std::size_t n = g.vertices.size();
  StateSet s{0, static_cast<StateId>(n + 1), static_cast<StateId>(n + 2)};
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.push_back(static_cast<StateId>(v + 1));
  }
  std::sort(s.begin(), s.end());
  return s;
}

CorrespondenceReport vc_sts_correspondence(const Graph& g, std::size_t theta, std::size_t cap) {
  require_usable(g);
  if (g.vertices.size() > kMaxVertices) throw GuardExceeded("correspondence check is limited to 8 vertices");
  const Dfa m = build_vc_dfa(g, theta);
  CorrespondenceReport report;
  const std::uint64_t subsets = std::uint64_t{1} << g.vertices.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    CorrespondenceRow row;
    row.mask = mask;
    row.vertex_cover = is_vertex_cover(g, mask);
    row.suffix_tracking = is_suffix_tracking(m, vc_state_set(g, mask), cap, true).is_suffix_tracking;
    if (row.vertex_cover != row.suffix_tracking) report.agreement = false;
    report.rows.push_back(row);
  }
  return report;
}

ReductionReport reduction_size_check(const Graph& g, std::size_t k_prime, std::size_t theta,
                                     std::size_t cap) {
  require_usable(g);
  if (g.vertices.size() > kMaxVertices) throw GuardExceeded("reduction check is limited to 8 vertices");
  const Dfa m = build_vc_dfa(g, theta);
  ReductionReport report;
  report.theta = theta;
  report.k_prime = k_prime;
  report.k = reduction_bound(k_prime, theta);

  const std::uint64_t subsets = std::uint64_t{1} << g.vertices.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto p = static_cast<std::size_t>(std::popcount(mask));
    if (p > k_prime || !is_vertex_cover(g, mask)) continue;
    if (!report.cover || p < static_cast<std::size_t>(std::popcount(*report.cover))) report.cover = mask;
  }
  if (report.cover) {
    const auto p = static_cast<std::size_t>(std::popcount(*report.cover));
    Dsa d = derive(m, vc_state_set(g, *report.cover), cap);
    report.forward_size = size_metrics(d).total;
    report.forward_holds = report.forward_size <= report.k;
    const std::size_t digits = (p + 2) * 2 * theta;
    report.extra_mass = report.forward_size > digits ? report.forward_size - digits : 0;
    report.extra_mass_ok = report.forward_size >= digits && report.extra_mass <= 2 * theta - 1;
  }

  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    StateSet s = vc_state_set(g, mask);
    if (!is_suffix_tracking(m, s, cap, true).is_suffix_tracking) continue;
    Dsa d = derive(m, s, cap);
    if (size_metrics(d).total > report.k) continue;
    const auto p = static_cast<std::size_t>(std::popcount(mask));
    if (!is_vertex_cover(g, mask) || p > k_prime) report.converse_holds = false;
  }
  return report;
}

}  // namespace sufread

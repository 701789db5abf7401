#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sufread/automata.hpp"
#include "sufread/derivation.hpp"

namespace sufread {

/// Undirected simple graph; edge endpoints are vertex indices with first < second.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> find_vertex(const std::string& name) const;
};

/// Problems that make a graph unusable for the reduction: fewer than three
/// vertices, self-loops, parallel edges, disconnection, duplicate names.
std::vector<std::string> graph_violations(const Graph& g);

/// Bit i of `mask` selects vertex i.
bool is_vertex_cover(const Graph& g, std::uint64_t mask);

/// Alphabet symbol used for an edge: "e.<u>.<v>" with the endpoint names in order.
std::string edge_symbol(const Graph& g, std::size_t edge);

/// The reduction DFA. States are q_init, the vertices in the given order,
/// q_acc and q_sink. Throws ValidationError if the graph is unusable or
/// names collide.
Dfa build_vc_dfa(const Graph& g, std::size_t theta);

/// (|V| + |E|)^4.
std::size_t default_theta(const Graph& g);

/// (k' + 2) * 2θ + (2θ - 1).
std::size_t reduction_bound(std::size_t k_prime, std::size_t theta);

/// States of build_vc_dfa for the selected vertices plus q_init, q_acc and q_sink.
StateSet vc_state_set(const Graph& g, std::uint64_t mask);

struct CorrespondenceRow {
  std::uint64_t mask = 0;
  bool suffix_tracking = false;
  bool vertex_cover = false;
};

struct CorrespondenceReport {
  std::vector<CorrespondenceRow> rows;
  bool agreement = true;
};

/// Compares "vertices plus the three fixed states is suffix-tracking" with
/// "is a vertex cover" over every vertex subset. Limited to 8 vertices.
CorrespondenceReport vc_sts_correspondence(const Graph& g, std::size_t theta,
                                           std::size_t cap = kDefaultCap);

struct ReductionReport {
  std::size_t theta = 0;
  std::size_t k_prime = 0;
  std::size_t k = 0;
  /// Smallest cover of size <= k', if any (first in vertex-mask order).
  std::optional<std::uint64_t> cover;
  std::size_t forward_size = 0;
  /// Total minus the (p + 2) * 2θ contributed by the digit transitions.
  std::size_t extra_mass = 0;
  bool extra_mass_ok = true;
  /// Holds vacuously when no cover of size <= k' exists.
  bool forward_holds = true;
  /// Every suffix-tracking vertex set whose derived DSA has total <= k is a
  /// cover of size <= k'.
  bool converse_holds = true;
};

/// Limited to 8 vertices. `cap` bounds each simple-word computation; sets
/// without a cover can have tens of thousands of simple words at large θ.
ReductionReport reduction_size_check(const Graph& g, std::size_t k_prime, std::size_t theta,
                                     std::size_t cap = kDefaultCap);

}  // namespace sufread

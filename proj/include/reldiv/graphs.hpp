#pragma once

// Digraphs on the terms of a division: the Ufnarovsky-like graph, the
// redundant X(s,t) = t graph and its path-preserving sparsification.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reldiv/division.hpp"

namespace reldiv {

/// Nodes are terms in deg-lex order; edges refer to node positions and are
/// kept sorted by (tail, head, label).
class LabeledDigraph {
 public:
  struct Edge {
    std::size_t tail;
    std::size_t head;
    std::optional<Var> label;
    auto operator<=>(const Edge&) const = default;
  };

  LabeledDigraph() = default;
  LabeledDigraph(int n, std::vector<Term> nodes);

  int nvars() const { return n_; }
  const std::vector<Term>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_index(const Term& t) const;

  /// Adds tail -> head. Throws StructuralError on self-loops.
  void add_edge(std::size_t tail, std::size_t head, std::optional<Var> label = std::nullopt);
  bool has_edge(std::size_t tail, std::size_t head) const;
  bool has_edge(const Term& tail, const Term& head) const;
  /// True iff head is reachable from tail along edges (tail reaches itself).
  bool has_path(std::size_t tail, std::size_t head) const;

  std::vector<std::vector<std::size_t>> successors() const;
  std::vector<std::vector<std::size_t>> predecessors() const;

 private:
  int n_ = 0;
  std::vector<Term> nodes_;
  std::vector<Edge> edges_;
};

/// Edge t -x-> s for every s and non-multiplicative x of s with s*x in the
/// cone of t. Requires a valid slice division.
LabeledDigraph ufnarovsky_graph(const RelDivision& div);

/// Unlabeled edge t -> s for every pair t != s with X(s,t) = t.
LabeledDigraph redundant_graph(const RelDivision& div);

/// The redundant graph's pairs taken in deg-lex order of (t, s), keeping an
/// edge only when no path t ~> s exists yet. Same reachability as
/// `redundant_graph`; the edge set depends on the processing order.
LabeledDigraph generalized_graph(const RelDivision& div);

/// Seed plus every node reachable along (forward) or against (backward) the
/// edges. Throws LookupError for seeds that are not nodes.
std::set<Term> reachable_forward(const LabeledDigraph& g, const std::set<Term>& seed);
std::set<Term> reachable_backward(const LabeledDigraph& g, const std::set<Term>& seed);

/// True iff both graphs have the same transitive closure. Throws
/// StructuralError if the node sets differ.
bool reachability_equivalent(const LabeledDigraph& a, const LabeledDigraph& b);

/// Graphviz DOT, nodes in deg-lex order, LF line endings.
std::string to_dot(const LabeledDigraph& g);

}  // namespace reldiv

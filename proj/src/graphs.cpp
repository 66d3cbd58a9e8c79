#include "reldiv/graphs.hpp"

#include <algorithm>
#include <deque>

namespace reldiv {

namespace {

std::set<Term> reach(const LabeledDigraph& g, const std::set<Term>& seed,
                     const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(g.nodes().size(), false);
  std::deque<std::size_t> queue;
  for (const auto& t : seed) {
    const std::size_t i = g.node_index(t);
    if (!seen[i]) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : adj[i]) {
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  std::set<Term> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.insert(g.nodes()[i]);
  }
  return out;
}

std::vector<std::vector<bool>> closure(const LabeledDigraph& g) {
  const auto succ = g.successors();
  std::vector<std::vector<bool>> out;
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    const auto r = reach(g, {g.nodes()[i]}, succ);
    std::vector<bool> row(g.nodes().size(), false);
    for (const auto& t : r) row[g.node_index(t)] = true;
    out.push_back(std::move(row));
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

LabeledDigraph::LabeledDigraph(int n, std::vector<Term> nodes) : n_(n), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw StructuralError("duplicate graph node");
  }
}

std::size_t LabeledDigraph::node_index(const Term& t) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
  if (it == nodes_.end() || *it != t) {
    throw LookupError("term " + to_string(t) + " is not a node of the graph");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

void LabeledDigraph::add_edge(std::size_t tail, std::size_t head, std::optional<Var> label) {
  if (tail >= nodes_.size() || head >= nodes_.size()) throw LookupError("edge endpoint out of range");
  if (tail == head) throw StructuralError("self-loop at " + to_string(nodes_[tail]));
  const Edge e{tail, head, label};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool LabeledDigraph::has_edge(std::size_t tail, std::size_t head) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return e.tail == tail && e.head == head; });
}

bool LabeledDigraph::has_edge(const Term& tail, const Term& head) const {
  return has_edge(node_index(tail), node_index(head));
}

bool LabeledDigraph::has_path(std::size_t tail, std::size_t head) const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{tail};
  seen[tail] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (i == head) return true;
    for (const auto& e : edges_) {
      if (e.tail == i && !seen[e.head]) {
        seen[e.head] = true;
        stack.push_back(e.head);
      }
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> LabeledDigraph::successors() const {
  std::vector<std::vector<std::size_t>> out(nodes_.size());
  for (const auto& e : edges_) out[e.tail].push_back(e.head);
  return out;
}

std::vector<std::vector<std::size_t>> LabeledDigraph::predecessors() const {
  std::vector<std::vector<std::size_t>> out(nodes_.size());
  for (const auto& e : edges_) out[e.head].push_back(e.tail);
  return out;
}

LabeledDigraph ufnarovsky_graph(const RelDivision& div) {
  require_valid_slice(div, "ufnarovsky_graph");
  const int n = div.nvars();
  std::vector<Term> nodes;
  for (const auto& e : div.entries()) nodes.push_back(e.term);
  LabeledDigraph g(n, std::move(nodes));
  for (std::size_t s = 0; s < div.size(); ++s) {
    for (Var x : div.mult(s).complement(n).members()) {
      const auto t = involutive_divisor_index(div, div.term(s).times_var(x));
      if (!t) {
        throw InvalidDivisionError("no cone contains " + to_string(div.term(s).times_var(x)));
      }
      if (*t != s) g.add_edge(*t, s, x);
    }
  }
  return g;
}

LabeledDigraph redundant_graph(const RelDivision& div) {
  require_valid_slice(div, "redundant_graph");
  std::vector<Term> nodes;
  for (const auto& e : div.entries()) nodes.push_back(e.term);
  LabeledDigraph g(div.nvars(), std::move(nodes));
  for (std::size_t t = 0; t < div.size(); ++t) {
    for (std::size_t s = 0; s < div.size(); ++s) {
      if (s != t && x_of(div, div.term(s), div.term(t)) == div.term(t)) g.add_edge(t, s);
    }
  }
  return g;
}

LabeledDigraph generalized_graph(const RelDivision& div) {
  require_valid_slice(div, "generalized_graph");
  std::vector<Term> nodes;
  for (const auto& e : div.entries()) nodes.push_back(e.term);
  LabeledDigraph g(div.nvars(), std::move(nodes));
  for (std::size_t t = 0; t < div.size(); ++t) {
    for (std::size_t s = 0; s < div.size(); ++s) {
      if (s == t || x_of(div, div.term(s), div.term(t)) != div.term(t)) continue;
      if (!g.has_path(t, s)) g.add_edge(t, s);
    }
  }
  return g;
}

std::set<Term> reachable_forward(const LabeledDigraph& g, const std::set<Term>& seed) {
  return reach(g, seed, g.successors());
}

std::set<Term> reachable_backward(const LabeledDigraph& g, const std::set<Term>& seed) {
  return reach(g, seed, g.predecessors());
}

bool reachability_equivalent(const LabeledDigraph& a, const LabeledDigraph& b) {
  if (a.nodes() != b.nodes()) throw StructuralError("graphs have different node sets");
  return closure(a) == closure(b);
}

std::string to_dot(const LabeledDigraph& g) {
  std::string out = "digraph G {\n";
  for (const auto& t : g.nodes()) out += "  \"" + dot_escape(to_string(t)) + "\";\n";
  for (const auto& e : g.edges()) {
    out += "  \"" + dot_escape(to_string(g.nodes()[e.tail])) + "\" -> \"" +
           dot_escape(to_string(g.nodes()[e.head])) + "\"";
    if (e.label) out += " [label=\"" + var_name(g.nvars(), *e.label) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace reldiv

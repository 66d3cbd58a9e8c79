#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reldiv/enumerate.hpp"
#include "reldiv/errors.hpp"
#include "reldiv/graphs.hpp"

using namespace reldiv;

namespace {

using EdgeList = std::vector<std::tuple<std::string, std::string, std::string>>;

EdgeList edges_of(const LabeledDigraph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) {
    out.emplace_back(to_string(g.nodes()[e.tail]), to_string(g.nodes()[e.head]),
                     e.label ? var_name(g.nvars(), *e.label) : "");
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList normalized(int n, EdgeList in) {
  for (auto& [a, b, l] : in) {
    a = to_string(parse_term(n, a));
    b = to_string(parse_term(n, b));
  }
  std::sort(in.begin(), in.end());
  return in;
}

LabeledDigraph from_edges(const RelDivision& div,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Term> nodes;
  for (const auto& e : div.entries()) nodes.push_back(e.term);
  LabeledDigraph g(div.nvars(), nodes);
  for (const auto& [a, b] : edges) {
    g.add_edge(g.node_index(parse_term(div.nvars(), a)), g.node_index(parse_term(div.nvars(), b)),
               std::nullopt);
  }
  return g;
}

}  // namespace

TEST(Graphs, UfnarovskyPommaret) {
  const EdgeList want = normalized(3, {{"xy", "x^2", "y"}, {"xz", "x^2", "z"}, {"y^2", "xy", "y"},
                                       {"yz", "xy", "z"}, {"yz", "xz", "y"}, {"z^2", "xz", "z"},
                                       {"z^2", "yz", "z"}, {"yz", "y^2", "z"}});
  EXPECT_EQ(edges_of(ufnarovsky_graph(fixtures::pommaret32())), want);
}

TEST(Graphs, UfnarovskyGrafoStrano) {
  const EdgeList want = normalized(3, {{"xy", "xz", "y"}, {"xy", "x^2", "y"}, {"xy", "y^2", "x"},
                                       {"xy", "yz", "x"}, {"z^2", "yz", "z"}, {"xz", "x^2", "z"},
                                       {"xz", "z^2", "x"}, {"yz", "y^2", "z"}});
  EXPECT_EQ(edges_of(ufnarovsky_graph(fixtures::grafostrano())), want);
}

TEST(Graphs, UfnarovskyByDefinition) {
  for (const auto& div : enumerate_divisions(3, 2, false)) {
    const auto g = ufnarovsky_graph(div);
    std::size_t count = 0;
    for (const auto& s : div.entries()) {
      for (Var x = 0; x < 3; ++x) {
        if (s.mult.contains(x)) continue;
        const Term sx = s.term.times_var(x);
        for (const auto& t : div.entries()) {
          if (fixtures::raw_in_cone(t.term, t.mult, sx)) {
            EXPECT_TRUE(g.has_edge(t.term, s.term));
            ++count;
          }
        }
      }
    }
    EXPECT_LE(g.edges().size(), count);
  }
}

TEST(Graphs, RedundantByDefinition) {
  const auto div = fixtures::tr();
  const auto g = redundant_graph(div);
  for (const auto& s : div.entries()) {
    for (const auto& t : div.entries()) {
      if (s.term == t.term) continue;
      const Term l = term_lcm(s.term, t.term);
      EXPECT_EQ(g.has_edge(t.term, s.term), fixtures::raw_in_cone(t.term, t.mult, l));
    }
  }
}

TEST(Graphs, UfnarovskyInsideRedundant) {
  for (const auto& div : enumerate_divisions(3, 2, false)) {
    const auto ul = ufnarovsky_graph(div);
    const auto red = redundant_graph(div);
    for (const auto& e : ul.edges()) EXPECT_TRUE(red.has_edge(e.tail, e.head));
  }
}

TEST(Graphs, GeneralizedKeepsReachability) {
  for (const auto& div : enumerate_divisions(3, 2, false)) {
    const auto gen = generalized_graph(div);
    const auto red = redundant_graph(div);
    EXPECT_TRUE(reachability_equivalent(gen, red));
    EXPECT_LE(gen.edges().size(), red.edges().size());
  }
  EXPECT_TRUE(reachability_equivalent(generalized_graph(fixtures::tr()), redundant_graph(fixtures::tr())));
}

TEST(Graphs, GeneralizedTrMatchesFigure) {
  const auto figure = from_edges(
      fixtures::tr(),
      {{"x^2t", "x^3"},  {"x^2z", "x^2y"}, {"x^2y", "x^2t"}, {"x^2y", "y^2t"}, {"xy^2", "y^3"},
       {"x^2z", "xy^2"}, {"xyt", "xy^2"},  {"xy^2", "xyz"},  {"y^3", "y^2z"},  {"y^2t", "y^3"},
       {"x^2t", "x^2z"}, {"xz^2", "z^3"},  {"xyz", "xz^2"},  {"yz^2", "z^3"},  {"z^2t", "z^3"},
       {"x^2t", "xzt"},  {"xt^2", "xyt"},  {"xzt", "xt^2"},  {"yt^2", "t^3"},  {"zt^2", "t^3"},
       {"xyt", "y^2t"},  {"xzt", "z^2t"},  {"xyz", "yz^2"},  {"y^2z", "yz^2"}, {"y^2t", "yt^2"},
       {"z^2t", "zt^2"}, {"yzt", "x^2y"}});
  EXPECT_TRUE(reachability_equivalent(generalized_graph(fixtures::tr()), figure));
}

TEST(Graphs, Reachability) {
  const auto g = ufnarovsky_graph(fixtures::tr());
  EXPECT_EQ(reachable_backward(g, fixtures::terms(4, {"x^2y"})),
            fixtures::terms(4, {"x^2y", "x^2z", "x^2t"}));
  const auto p = ufnarovsky_graph(fixtures::pommaret32());
  EXPECT_EQ(reachable_forward(p, fixtures::terms(3, {"z^2"})).size(), 6u);
  EXPECT_EQ(reachable_forward(p, fixtures::terms(3, {"x^2"})), fixtures::terms(3, {"x^2"}));
}

TEST(Graphs, Errors) {
  EXPECT_THROW(ufnarovsky_graph(fixtures::noncont()), InvalidDivisionError);
  LabeledDigraph g(2, enumerate_terms(2, 1));
  EXPECT_THROW(g.add_edge(0, 0, std::nullopt), StructuralError);
  EXPECT_THROW(g.node_index(parse_term(2, "xy")), LookupError);
  EXPECT_THROW(reachability_equivalent(g, LabeledDigraph(2, enumerate_terms(2, 2))), StructuralError);
}

TEST(Graphs, DotOutput) {
  const auto single = fixtures::slice(1, 3, {{"x^3", "x"}});
  EXPECT_EQ(to_dot(ufnarovsky_graph(single)), "digraph G {\n  \"x^3\";\n}\n");
  const auto dot = to_dot(ufnarovsky_graph(fixtures::pommaret32()));
  EXPECT_NE(dot.find("  \"x*y\" -> \"x^2\" [label=\"y\"];\n"), std::string::npos);
  EXPECT_EQ(dot, to_dot(ufnarovsky_graph(fixtures::pommaret32())));
}

#include "reldiv/oracle.hpp"

#include <algorithm>
#include <vector>

namespace reldiv {

namespace {

// w = vertex * q with every variable of q multiplicative for vertex.
bool cone_member(const Term& vertex, VarSet mult, const Term& w) {
  for (Var i = 0; i < w.nvars(); ++i) {
    const int extra = w[i] - vertex[i];
    if (extra < 0 || (extra > 0 && !mult.contains(i))) return false;
  }
  return true;
}

std::vector<Term> terms_between(int n, int lo, int hi) {
  std::vector<Term> out;
  for (int d = std::max(lo, 0); d <= hi; ++d) {
    auto slice = enumerate_terms(n, d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

int slice_degree(const RelDivision& div, const char* what) {
  if (!div.is_full_slice()) {
    throw InvalidDivisionError(std::string(what) + " needs a full degree slice T_D");
  }
  return *div.degree();
}

bool in_union(const RelDivision& div, const std::vector<std::size_t>& members, const Term& w) {
  return std::any_of(members.begin(), members.end(), [&](std::size_t i) {
    return cone_member(div.term(i), div.mult(i), w);
  });
}

std::vector<std::size_t> positions(const RelDivision& div, const std::set<Term>& terms) {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(div.index_of(t));
  return out;
}

// The unique cone vertex holding w, found by scanning all of U.
std::optional<std::size_t> scan_vertex(const RelDivision& div, const Term& w) {
  for (std::size_t i = 0; i < div.size(); ++i) {
    if (cone_member(div.term(i), div.mult(i), w)) return i;
  }
  return std::nullopt;
}

}  // namespace

ValidationReport verify_division_covering(const RelDivision& div, int margin) {
  if (margin < 0) throw DomainError("margin must be non-negative");
  const int n = div.nvars();
  int lo = 0;
  int hi = 0;
  if (div.is_full_slice()) {
    lo = hi = *div.degree();
  } else {
    lo = div.term(0).degree();
    for (const auto& e : div.entries()) hi = std::max(hi, e.term.degree());
  }

  ValidationReport report;
  for (const auto& w : terms_between(n, lo, hi + margin)) {
    bool multiple = div.is_full_slice();
    std::vector<std::size_t> holders;
    for (std::size_t i = 0; i < div.size(); ++i) {
      const Term& u = div.term(i);
      if (!multiple && term_divides(u, w)) multiple = true;
      if (cone_member(u, div.mult(i), w)) holders.push_back(i);
    }
    if (!multiple) continue;
    if (holders.empty()) {
      report.violations.emplace_back(Uncovered{w});
    } else if (holders.size() > 1) {
      report.violations.emplace_back(DoubleCovered{w, div.term(holders[0]), div.term(holders[1])});
    }
  }
  return report;
}

IdealCheck verify_ideal_equality(const RelDivision& div, const std::set<Term>& generators,
                                 int margin) {
  const int degree = slice_degree(div, "verify_ideal_equality");
  const auto members = positions(div, generators);
  if (members.empty()) return {};
  for (const auto& w : terms_between(div.nvars(), degree, degree + margin)) {
    const bool in_ideal = std::any_of(members.begin(), members.end(),
                                      [&](std::size_t i) { return term_divides(div.term(i), w); });
    if (in_ideal != in_union(div, members, w)) return {false, w};
  }
  return {};
}

OrderIdealCheck verify_order_ideal(const RelDivision& div, const std::set<Term>& slice,
                                   int margin) {
  const int degree = slice_degree(div, "verify_order_ideal");
  const auto members = positions(div, slice);
  for (const auto& w : terms_between(div.nvars(), degree, degree + margin)) {
    if (!in_union(div, members, w)) continue;
    // Divisor-closure follows from closure under removing one variable.
    if (w.degree() == degree) continue;
    for (Var i = 0; i < w.nvars(); ++i) {
      if (w[i] == 0) continue;
      const Term d = w.over_var(i);
      if (!in_union(div, members, d)) return {false, std::make_pair(w, d)};
    }
  }
  return {};
}

std::set<Term> brute_compliant(const RelDivision& div, const std::set<Term>& seed) {
  slice_degree(div, "brute_compliant");
  std::set<Term> m = seed;
  for (const auto& t : seed) div.index_of(t);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& t : std::vector<Term>(m.begin(), m.end())) {
      for (const auto& e : div.entries()) {
        const auto x = scan_vertex(div, term_lcm(e.term, t));
        if (!x) throw InvalidDivisionError("lcm of " + to_string(e.term) + " and " +
                                           to_string(t) + " lies in no cone");
        grew |= m.insert(div.term(*x)).second;
      }
    }
  }
  return m;
}

}  // namespace reldiv

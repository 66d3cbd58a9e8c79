#include "reldiv/classical.hpp"

#include <algorithm>
#include <numeric>

namespace reldiv {

namespace {

VarSet pommaret_mult(const Term& t, const VarOrder& order) {
  const int n = t.nvars();
  if (t.degree() == 0) return VarSet::all(n);
  // Rank of the smallest variable of t under the relabelled order.
  int min_rank = n;
  for (int r = 0; r < n; ++r) {
    if (t[order[static_cast<std::size_t>(r)]] > 0) {
      min_rank = r;
      break;
    }
  }
  VarSet m;
  for (int r = 0; r <= min_rank; ++r) m = m.with(order[static_cast<std::size_t>(r)]);
  return m;
}

}  // namespace

VarOrder identity_order(int n) {
  VarOrder order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void check_order(const VarOrder& order, int n) {
  if (order.size() != static_cast<std::size_t>(n)) {
    throw StructuralError("variable order must list " + std::to_string(n) + " variables");
  }
  VarSet seen;
  for (Var v : order) {
    if (v < 0 || v >= n || seen.contains(v)) {
      throw StructuralError("variable order is not a permutation");
    }
    seen = seen.with(v);
  }
}

RelDivision pommaret_on_slice(int n, int degree, const VarOrder& order) {
  check_order(order, n);
  std::vector<RelDivision::Entry> entries;
  for (auto& t : enumerate_terms(n, degree)) {
    const VarSet m = pommaret_mult(t, order);
    entries.push_back({std::move(t), m});
  }
  return RelDivision::on_slice(n, degree, std::move(entries));
}

RelDivision pommaret_on_slice(int n, int degree) {
  return pommaret_on_slice(n, degree, identity_order(n));
}

RelDivision pommaret_general(const std::vector<Term>& terms, int n) {
  const auto order = identity_order(n);
  std::vector<RelDivision::Entry> entries;
  for (const auto& t : terms) entries.push_back({t, pommaret_mult(t, order)});
  return RelDivision::on_set(n, std::move(entries));
}

RelDivision janet_general(const std::vector<Term>& terms, int n) {
  std::vector<RelDivision::Entry> entries;
  for (const auto& tau : terms) {
    if (tau.nvars() != n) throw StructuralError("term length differs from variable count");
    VarSet m;
    for (Var j = 0; j < n; ++j) {
      const bool blocked = std::any_of(terms.begin(), terms.end(), [&](const Term& other) {
        if (other[j] <= tau[j]) return false;
        for (Var k = j + 1; k < n; ++k) {
          if (other[k] != tau[k]) return false;
        }
        return true;
      });
      if (!blocked) m = m.with(j);
    }
    entries.push_back({tau, m});
  }
  return RelDivision::on_set(n, std::move(entries));
}

std::optional<VarOrder> detect_pommaret(const RelDivision& div) {
  require_valid_slice(div, "detect_pommaret");
  const int n = div.nvars();

  std::vector<VarSet> sets;
  for (const auto& e : div.entries()) sets.push_back(e.mult);
  std::sort(sets.begin(), sets.end(),
            [](VarSet a, VarSet b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (!sets[i - 1].subset_of(sets[i])) return std::nullopt;
  }

  // Rank the variables by the size of their pure power's multiplicative set;
  // on a chain the pure-power sets are nested, so size orders them.
  const int degree = *div.degree();
  VarOrder order = identity_order(n);
  std::stable_sort(order.begin(), order.end(), [&](Var a, Var b) {
    const auto ma = multiplicative_set(div, Term::pure_power(n, a, degree)).size();
    const auto mb = multiplicative_set(div, Term::pure_power(n, b, degree)).size();
    return ma < mb;
  });

  if (pommaret_on_slice(n, degree, order) == div) return order;
  return std::nullopt;
}

}  // namespace reldiv

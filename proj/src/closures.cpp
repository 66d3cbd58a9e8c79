#include "reldiv/closures.hpp"

#include <deque>

#include "reldiv/oracle.hpp"

namespace reldiv {

namespace {

enum class Direction { kCompliant, kRevenant };

// X(u, v) for every pair of support positions.
std::vector<std::vector<std::size_t>> x_table(const RelDivision& div) {
  std::vector<std::vector<std::size_t>> table(div.size(), std::vector<std::size_t>(div.size()));
  for (std::size_t i = 0; i < div.size(); ++i) {
    for (std::size_t j = i; j < div.size(); ++j) {
      const auto v = involutive_divisor_index(div, term_lcm(div.term(i), div.term(j)));
      if (!v) throw InvalidDivisionError("uncovered lcm");
      table[i][j] = table[j][i] = *v;
    }
  }
  return table;
}

void check_seed(const RelDivision& div, const std::set<Term>& seed) {
  for (const auto& t : seed) div.index_of(t);
}

ClosureReport close(const RelDivision& div, const std::set<Term>& seed, Direction dir) {
  require_valid_slice(div, dir == Direction::kCompliant ? "compliant_closure" : "revenant_closure");
  check_seed(div, seed);
  const auto x = x_table(div);

  ClosureReport report{seed, seed, {}};
  std::vector<bool> member(div.size(), false);
  std::deque<std::size_t> work;
  for (const auto& t : seed) {
    const std::size_t i = div.index_of(t);
    member[i] = true;
    work.push_back(i);
  }
  while (!work.empty()) {
    const std::size_t m = work.front();
    work.pop_front();
    for (std::size_t c = 0; c < div.size(); ++c) {
      if (member[c]) continue;
      // Compliant: member s, X(s,c) = c pulls c in.
      // Revenant: member t, X(t,c) = t pushes c in.
      const std::size_t vertex = x[m][c];
      if (vertex != (dir == Direction::kCompliant ? c : m)) continue;
      member[c] = true;
      work.push_back(c);
      report.closure.insert(div.term(c));
      const Term& mt = div.term(m);
      const Term& ct = div.term(c);
      report.witnesses.push_back(Witness{ct, dir == Direction::kCompliant ? mt : ct,
                                         dir == Direction::kCompliant ? ct : mt,
                                         term_lcm(mt, ct), div.term(vertex)});
    }
  }
  return report;
}

}  // namespace

ClosureReport compliant_closure(const RelDivision& div, const std::set<Term>& seed) {
  return close(div, seed, Direction::kCompliant);
}

ClosureReport revenant_closure(const RelDivision& div, const std::set<Term>& seed) {
  return close(div, seed, Direction::kRevenant);
}

std::set<Term> replay(const RelDivision& div, const ClosureReport& report) {
  std::set<Term> out = report.seed;
  for (const auto& w : report.witnesses) {
    if (!out.contains(w.s) && !out.contains(w.t)) {
      throw StructuralError("witness for " + to_string(w.added) + " cites no member");
    }
    if (w.lcm != term_lcm(w.s, w.t) || x_of(div, w.s, w.t) != w.vertex) {
      throw StructuralError("witness for " + to_string(w.added) + " does not hold");
    }
    out.insert(w.added);
  }
  return out;
}

IdealResult ideal_from_seed(const RelDivision& div, const std::set<Term>& seed, int margin) {
  IdealResult r;
  r.generators = compliant_closure(div, seed).closure;
  r.certified = verify_ideal_equality(div, r.generators, margin).holds;
  return r;
}

EscalierResult escalier_from_seed(const RelDivision& div, const std::set<Term>& seed, int margin) {
  EscalierResult r;
  r.slice = revenant_closure(div, seed).closure;
  r.certified = verify_order_ideal(div, r.slice, margin).holds;
  return r;
}

bool is_borel_fixed_slice(const std::set<Term>& terms, int n) {
  if (terms.empty()) return true;
  const int degree = terms.begin()->degree();
  for (const auto& t : terms) {
    if (t.nvars() != n) throw StructuralError("term length differs from variable count");
    if (t.degree() != degree) throw DomainError("terms of mixed degrees");
  }
  for (const auto& t : terms) {
    for (Var i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      for (Var j = i + 1; j < n; ++j) {
        if (!terms.contains(t.over_var(i).times_var(j))) return false;
      }
    }
  }
  return true;
}

}  // namespace reldiv

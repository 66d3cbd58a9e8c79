#include "reldiv/enumerate.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

namespace reldiv {

PartialAssignment::PartialAssignment(int n, int degree)
    : n_(n),
      degree_(degree),
      terms_(std::make_shared<const std::vector<Term>>(enumerate_terms(n, degree))),
      rows_(terms_->size()),
      budget_(sigma_expected(n, degree)) {}

std::size_t PartialAssignment::index_of(const Term& t) const {
  auto it = std::lower_bound(terms_->begin(), terms_->end(), t);
  if (it == terms_->end() || *it != t) {
    throw LookupError("term " + to_string(t) + " is not in T_" + std::to_string(degree_));
  }
  return static_cast<std::size_t>(it - terms_->begin());
}

Cell PartialAssignment::cell(std::size_t i, Var v) const {
  const Row& r = rows_[i];
  if (r.assigned) return r.assigned->contains(v) ? Cell::kAssignedIn : Cell::kAssignedOut;
  if (r.forced_in.contains(v)) return Cell::kForcedIn;
  if (r.forced_out.contains(v)) return Cell::kForcedOut;
  for (VarSet s : r.forbidden) {
    if (s.contains(v)) return Cell::kGroupConstrained;
  }
  return Cell::kFree;
}

std::vector<VarSet> PartialAssignment::candidates(std::size_t i) const {
  const Row& r = rows_[i];
  std::vector<VarSet> out;
  if (r.assigned) return out;
  const std::uint32_t limit = VarSet::all(n_).bits();
  for (std::uint32_t bits = 1; bits <= limit; ++bits) {
    const VarSet m(bits);
    if (!r.forced_in.subset_of(m) || !(m & r.forced_out).empty()) continue;
    if (budget_[static_cast<std::size_t>(m.size() - 1)] == 0) continue;
    if (std::any_of(r.forbidden.begin(), r.forbidden.end(),
                    [&](VarSet s) { return s.subset_of(m); })) {
      continue;
    }
    out.push_back(m);
  }
  return out;
}

bool PartialAssignment::complete() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.assigned.has_value(); });
}

RelDivision PartialAssignment::to_division() const {
  std::vector<RelDivision::Entry> entries;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].assigned) {
      throw StructuralError("term " + to_string((*terms_)[i]) + " has no multiplicative set yet");
    }
    entries.push_back({(*terms_)[i], *rows_[i].assigned});
  }
  return RelDivision::on_slice(n_, degree_, std::move(entries));
}

struct Propagator {
  static void seed(PartialAssignment& pa) {
    for (Var i = 0; i < pa.n_; ++i) {
      const std::size_t row = pa.index_of(Term::pure_power(pa.n_, i, pa.degree_));
      pa.rows_[row].forced_in = pa.rows_[row].forced_in.with(i);
    }
  }

  // Drops "not all of S" records already implied by a forced-out variable and
  // turns records with one undecided member into a forced-out variable.
  static std::optional<Conflict> normalize(PartialAssignment::Row& r, const Term& t, int n) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<VarSet> kept;
      for (VarSet s : r.forbidden) {
        if (!(s & r.forced_out).empty()) continue;
        const VarSet open(s.bits() & ~r.forced_in.bits());
        if (open.empty()) {
          return Conflict{"every variable of {" + to_string(s, n) + "} is forced into M(" +
                          to_string(t) + ") but they may not all be multiplicative"};
        }
        if (open.size() == 1) {
          r.forced_out = r.forced_out | open;
          changed = true;
          continue;
        }
        if (std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
      }
      r.forbidden = std::move(kept);
    }
    return std::nullopt;
  }

  static PropagationResult run(const PartialAssignment& pa, const Term& t, VarSet m) {
    const int n = pa.n_;
    const std::size_t ti = pa.index_of(t);
    const auto& row = pa.rows_[ti];
    const std::string name = "M(" + to_string(t) + ")";
    if (row.assigned) return Conflict{name + " is already assigned"};
    if (m.empty()) return Conflict{name + " must contain at least one variable"};
    if (!m.subset_of(VarSet::all(n))) return Conflict{name + " names an unknown variable"};
    if (!row.forced_in.subset_of(m)) {
      return Conflict{name + " must contain " + to_string(row.forced_in, n)};
    }
    if (!(m & row.forced_out).empty()) {
      return Conflict{name + " may not contain " + to_string(m & row.forced_out, n)};
    }
    for (VarSet s : row.forbidden) {
      if (s.subset_of(m)) {
        return Conflict{name + " may not contain all of " + to_string(s, n)};
      }
    }
    const auto k = static_cast<std::size_t>(m.size() - 1);
    if (pa.budget_[k] == 0) {
      return Conflict{"no term may receive " + std::to_string(k + 1) +
                      " multiplicative variables anymore"};
    }

    PartialAssignment next = pa;
    next.rows_[ti].assigned = m;
    next.rows_[ti].forbidden.clear();
    --next.budget_[k];

    for (std::size_t ui = 0; ui < next.rows_.size(); ++ui) {
      if (ui == ti) continue;
      const Term& u = (*next.terms_)[ui];
      const Term g = term_gcd(t, u);
      // Cones of t and u meet iff supp(u/g) is in M(t) and supp(t/g) in M(u).
      if (!support(term_quotient(u, g)).subset_of(m)) continue;
      const VarSet blocked = support(term_quotient(t, g));
      auto& r = next.rows_[ui];
      if (r.assigned) {
        if (blocked.subset_of(*r.assigned)) {
          return Conflict{"cones of " + to_string(t) + " and " + to_string(u) + " would meet"};
        }
        continue;
      }
      if (blocked.size() == 1) {
        r.forced_out = r.forced_out | blocked;
      } else {
        r.forbidden.push_back(blocked);
      }
      if (!(r.forced_in & r.forced_out).empty()) {
        return Conflict{"M(" + to_string(u) + ") would have to both contain and avoid " +
                        to_string(r.forced_in & r.forced_out, n)};
      }
      if (auto c = normalize(r, u, n)) return *c;
      if (!(r.forced_in & r.forced_out).empty()) {
        return Conflict{"M(" + to_string(u) + ") would have to both contain and avoid " +
                        to_string(r.forced_in & r.forced_out, n)};
      }
    }

    for (std::size_t ui = 0; ui < next.rows_.size(); ++ui) {
      if (!next.rows_[ui].assigned && next.candidates(ui).empty()) {
        return Conflict{"no admissible multiplicative set remains for " +
                        to_string((*next.terms_)[ui])};
      }
    }
    return next;
  }
};

PartialAssignment seed_constraints(int n, int degree) {
  if (degree < 1) throw DomainError("seed_constraints needs degree >= 1");
  PartialAssignment pa(n, degree);
  Propagator::seed(pa);
  return pa;
}

PropagationResult propagate(const PartialAssignment& pa, const Term& t, VarSet m) {
  return Propagator::run(pa, t, m);
}

namespace {

using Sink = std::function<void(const RelDivision&)>;

// Leaves are re-checked by the exact validator; the orbit filter keeps only
// canonical representatives.
bool keep(const RelDivision& div, bool up_to_symmetry) {
  if (!validate(div).valid()) {
    throw std::logic_error("search produced an invalid division: " + serialize(div));
  }
  return !up_to_symmetry || canonical_form(div) == serialize(div);
}

void search(const PartialAssignment& pa, const Sink& sink) {
  if (pa.complete()) {
    sink(pa.to_division());
    return;
  }
  // Branch on the row with the most admissible sets, ties to deg-lex first.
  std::size_t best = pa.size();
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa.row(i).assigned) continue;
    const std::size_t c = pa.candidates(i).size();
    if (best == pa.size() || c > best_count) {
      best = i;
      best_count = c;
    }
  }
  for (VarSet m : pa.candidates(best)) {
    auto next = propagate(pa, pa.terms()[best], m);
    if (auto* p = std::get_if<PartialAssignment>(&next)) search(*p, sink);
  }
}

// Subtrees rooted at each admissible peak, in deg-lex order of the peak.
std::vector<PartialAssignment> peak_branches(int n, int degree) {
  const PartialAssignment root = seed_constraints(n, degree);
  std::vector<PartialAssignment> out;
  const VarSet all = VarSet::all(n);
  for (std::size_t i = 0; i < root.size(); ++i) {
    auto next = propagate(root, root.terms()[i], all);
    if (auto* p = std::get_if<PartialAssignment>(&next)) out.push_back(std::move(*p));
  }
  return out;
}

}  // namespace

std::vector<VarOrder> all_permutations(int n) {
  std::vector<VarOrder> out;
  VarOrder p = identity_order(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string serialize(const RelDivision& div) {
  std::string out;
  for (const auto& e : div.entries()) {
    for (Var i = 0; i < e.term.nvars(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.term[i]);
    }
    out += ':';
    bool first = true;
    for (Var v : e.mult.members()) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += ';';
  }
  return out;
}

std::string canonical_form(const RelDivision& div) {
  std::string best;
  bool have = false;
  for (const auto& p : all_permutations(div.nvars())) {
    std::string s = serialize(permute(div, p));
    if (!have || s < best) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

std::size_t orbit_size(const RelDivision& div) {
  std::set<std::string> images;
  for (const auto& p : all_permutations(div.nvars())) images.insert(serialize(permute(div, p)));
  return images.size();
}

void enumerate_divisions(int n, int degree, const EnumerationOptions& options,
                         const Sink& sink) {
  if (n < 1 || degree < 1) throw DomainError("enumeration needs n >= 1 and D >= 1");
  const Sink emit = [&](const RelDivision& div) {
    if (keep(div, options.up_to_symmetry)) sink(div);
  };

  const auto branches = peak_branches(n, degree);
  if (options.jobs <= 1) {
    for (const auto& b : branches) search(b, emit);
    return;
  }
  // Each peak subtree is independent; results are emitted in branch order.
  std::vector<std::future<std::vector<RelDivision>>> pending;
  std::size_t next = 0;
  auto launch = [&] {
    const PartialAssignment* b = &branches[next++];
    pending.push_back(std::async(std::launch::async, [b, &options] {
      std::vector<RelDivision> found;
      search(*b, [&](const RelDivision& d) {
        if (keep(d, options.up_to_symmetry)) found.push_back(d);
      });
      return found;
    }));
  };
  std::size_t emitted = 0;
  while (emitted < branches.size()) {
    while (next < branches.size() && pending.size() - emitted < options.jobs) launch();
    for (const auto& d : pending[emitted].get()) sink(d);
    ++emitted;
  }
}

std::vector<RelDivision> enumerate_divisions(int n, int degree, bool up_to_symmetry) {
  std::vector<RelDivision> out;
  enumerate_divisions(n, degree, EnumerationOptions{up_to_symmetry, 1},
                      [&](const RelDivision& d) { out.push_back(d); });
  return out;
}

}  // namespace reldiv

#include "reldiv/division.hpp"

#include <algorithm>
#include <sstream>

namespace reldiv {

namespace {

std::string join_counts(const std::vector<std::uint64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

RelDivision::RelDivision(int n, std::optional<int> degree, std::vector<Entry> entries)
    : n_(n), degree_(degree), entries_(std::move(entries)) {
  if (n_ < 1 || n_ > 32) throw StructuralError("variable count must be in 1..32");
  if (entries_.empty()) throw StructuralError("a division needs a nonempty term set");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.term < b.term; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.term.nvars() != n_) {
      throw StructuralError("term " + to_string(e.term) + " is not in " + std::to_string(n_) +
                            " variables");
    }
    if (!e.mult.subset_of(VarSet::all(n_))) {
      throw StructuralError("multiplicative set of " + to_string(e.term) +
                            " names a variable beyond x" + std::to_string(n_));
    }
    if (!index_.emplace(e.term, i).second) {
      throw StructuralError("duplicate term " + to_string(e.term));
    }
  }
}

RelDivision RelDivision::on_slice(int n, int degree, std::vector<Entry> entries) {
  RelDivision div(n, degree, std::move(entries));
  const auto slice = enumerate_terms(n, degree);
  if (slice.size() != div.size()) {
    throw StructuralError("a degree-" + std::to_string(degree) + " slice in " +
                          std::to_string(n) + " variables has " +
                          std::to_string(slice.size()) + " terms, got " +
                          std::to_string(div.size()));
  }
  for (std::size_t i = 0; i < slice.size(); ++i) {
    if (div.term(i) != slice[i]) {
      throw StructuralError("term " + to_string(div.term(i)) + " is not of degree " +
                            std::to_string(degree));
    }
  }
  return div;
}

RelDivision RelDivision::on_set(int n, std::vector<Entry> entries) {
  return RelDivision(n, std::nullopt, std::move(entries));
}

std::optional<std::size_t> RelDivision::find(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RelDivision::index_of(const Term& t) const {
  if (auto i = find(t)) return *i;
  throw LookupError("term " + to_string(t) + " is not in the division's term set");
}

bool RelDivision::operator==(const RelDivision& o) const {
  if (n_ != o.n_ || degree_ != o.degree_ || entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].term != o.entries_[i].term || entries_[i].mult != o.entries_[i].mult) {
      return false;
    }
  }
  return true;
}

VarSet multiplicative_set(const RelDivision& div, const Term& t) {
  return div.mult(div.index_of(t));
}

bool in_cone(const Term& vertex, VarSet mult, const Term& w) {
  if (vertex.nvars() != w.nvars()) throw StructuralError("terms of different lengths");
  for (Var i = 0; i < w.nvars(); ++i) {
    if (w[i] < vertex[i]) return false;
    if (w[i] > vertex[i] && !mult.contains(i)) return false;
  }
  return true;
}

bool cone_contains(const RelDivision& div, const Term& vertex, const Term& w) {
  return in_cone(vertex, multiplicative_set(div, vertex), w);
}

std::optional<std::size_t> involutive_divisor_index(const RelDivision& div, const Term& w) {
  for (std::size_t i = 0; i < div.size(); ++i) {
    if (in_cone(div.term(i), div.mult(i), w)) return i;
  }
  return std::nullopt;
}

std::optional<Term> involutive_divisor(const RelDivision& div, const Term& w) {
  if (auto i = involutive_divisor_index(div, w)) return div.term(*i);
  return std::nullopt;
}

Term x_of(const RelDivision& div, const Term& s, const Term& t) {
  div.index_of(s);
  div.index_of(t);
  const Term w = term_lcm(s, t);
  if (auto v = involutive_divisor(div, w)) return *v;
  throw InvalidDivisionError("no involutive divisor for lcm(" + to_string(s) + ", " +
                             to_string(t) + ") = " + to_string(w));
}

std::string describe(const Violation& v, int n) {
  struct Visitor {
    int n;
    std::string operator()(const Overlap& o) const {
      return "overlap: cones of " + to_string(o.u) + " and " + to_string(o.v) + " share " +
             to_string(o.witness);
    }
    std::string operator()(const ProfileMismatch& p) const {
      return "profile-mismatch: observed " + join_counts(p.observed) + ", expected " +
             join_counts(p.expected);
    }
    std::string operator()(const PurePowerNotMultiplicative& p) const {
      const auto x = var_name(n, p.var);
      return "pure-power: " + x + " is not multiplicative for its pure power";
    }
    std::string operator()(const MultiplePeaks& p) const {
      std::string out = "multiple-peaks:";
      for (const auto& t : p.peaks) out += " " + to_string(t);
      return out;
    }
    std::string operator()(const NoPeak&) const {
      return "no-peak: no term has every variable multiplicative";
    }
    std::string operator()(const Uncovered& u) const {
      return "uncovered: " + to_string(u.term) + " lies in no cone";
    }
    std::string operator()(const DoubleCovered& d) const {
      return "double-covered: " + to_string(d.term) + " lies in the cones of " +
             to_string(d.u) + " and " + to_string(d.v);
    }
  };
  return std::visit(Visitor{n}, v);
}

ValidationReport validate(const RelDivision& div) {
  ValidationReport report;
  const int n = div.nvars();

  for (std::size_t i = 0; i < div.size(); ++i) {
    for (std::size_t j = i + 1; j < div.size(); ++j) {
      const Term& u = div.term(i);
      const Term& v = div.term(j);
      const Term g = term_gcd(u, v);
      // Cones meet iff both cofactors of the lcm are multiplicative.
      if (support(term_quotient(u, g)).subset_of(div.mult(j)) &&
          support(term_quotient(v, g)).subset_of(div.mult(i))) {
        report.violations.emplace_back(Overlap{u, v, term_lcm(u, v)});
      }
    }
  }

  if (!div.is_full_slice()) {
    report.coverage_checked = false;
    return report;
  }

  const int degree = *div.degree();
  const auto observed = sigma_profile(div);
  const auto expected = sigma_expected(n, degree);
  bool zero_mult = false;
  for (const auto& e : div.entries()) zero_mult |= e.mult.empty();
  if (observed != expected || zero_mult) {
    report.violations.emplace_back(ProfileMismatch{observed, expected});
  }

  if (degree > 0) {
    for (Var i = 0; i < n; ++i) {
      if (!multiplicative_set(div, Term::pure_power(n, i, degree)).contains(i)) {
        report.violations.emplace_back(PurePowerNotMultiplicative{i});
      }
    }
  }

  std::vector<Term> peaks;
  for (const auto& e : div.entries()) {
    if (e.mult == VarSet::all(n)) peaks.push_back(e.term);
  }
  if (peaks.empty()) {
    report.violations.emplace_back(NoPeak{});
  } else if (peaks.size() > 1) {
    report.violations.emplace_back(MultiplePeaks{peaks});
  }
  return report;
}

void require_valid_slice(const RelDivision& div, const char* what) {
  if (!div.is_full_slice()) {
    throw InvalidDivisionError(std::string(what) + " needs a full degree slice T_D");
  }
  const auto report = validate(div);
  if (report.valid()) return;
  std::string msg = std::string(what) + " needs a valid relative involutive division:";
  for (const auto& v : report.violations) msg += "\n  " + describe(v, div.nvars());
  throw InvalidDivisionError(msg);
}

std::vector<std::uint64_t> sigma_profile(const RelDivision& div) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(div.nvars()), 0);
  for (const auto& e : div.entries()) {
    const int k = e.mult.size();
    if (k >= 1) ++a[static_cast<std::size_t>(k - 1)];
  }
  return a;
}

Term peak(const RelDivision& div) {
  std::vector<Term> peaks;
  for (const auto& e : div.entries()) {
    if (e.mult == VarSet::all(div.nvars())) peaks.push_back(e.term);
  }
  if (peaks.size() == 1) return peaks.front();
  if (peaks.empty()) throw InvalidDivisionError(describe(NoPeak{}, div.nvars()));
  throw InvalidDivisionError(describe(MultiplePeaks{peaks}, div.nvars()));
}

Term permute(const Term& t, std::span<const Var> perm) {
  std::vector<int> e(static_cast<std::size_t>(t.nvars()), 0);
  for (Var i = 0; i < t.nvars(); ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = t[i];
  return Term(std::move(e));
}

VarSet permute(VarSet m, std::span<const Var> perm) {
  VarSet out;
  for (Var v : m.members()) out = out.with(perm[static_cast<std::size_t>(v)]);
  return out;
}

RelDivision permute(const RelDivision& div, std::span<const Var> perm) {
  if (perm.size() != static_cast<std::size_t>(div.nvars())) {
    throw StructuralError("permutation length differs from the variable count");
  }
  std::vector<RelDivision::Entry> entries;
  entries.reserve(div.size());
  for (const auto& e : div.entries()) {
    entries.push_back({permute(e.term, perm), permute(e.mult, perm)});
  }
  if (div.is_full_slice()) {
    return RelDivision::on_slice(div.nvars(), *div.degree(), std::move(entries));
  }
  return RelDivision::on_set(div.nvars(), std::move(entries));
}

}  // namespace reldiv

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reldiv/term.hpp"

namespace reldiv {

/// A finite term set U with a multiplicative variable set M(u,U) for every
/// u in U. The cone of u is u times the monoid generated by M(u,U).
///
/// Entries are kept in deg-lex order. A division is a "full degree slice" when
/// U = T_D for its degree D; otherwise it is a general finite set and
/// `degree()` is empty.
class RelDivision {
 public:
  struct Entry {
    Term term;
    VarSet mult;
  };

  RelDivision() = default;

  /// Full-degree-slice division. `entries` must cover T_D exactly once.
  static RelDivision on_slice(int n, int degree, std::vector<Entry> entries);
  /// General finite-set division over any nonempty set of distinct terms.
  static RelDivision on_set(int n, std::vector<Entry> entries);

  int nvars() const { return n_; }
  std::optional<int> degree() const { return degree_; }
  bool is_full_slice() const { return degree_.has_value(); }

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Term& term(std::size_t i) const { return entries_[i].term; }
  VarSet mult(std::size_t i) const { return entries_[i].mult; }

  /// Position of t in the support; nullopt when absent.
  std::optional<std::size_t> find(const Term& t) const;
  /// Position of t; throws LookupError when absent.
  std::size_t index_of(const Term& t) const;
  bool contains(const Term& t) const { return find(t).has_value(); }

  bool operator==(const RelDivision& o) const;

 private:
  RelDivision(int n, std::optional<int> degree, std::vector<Entry> entries);

  int n_ = 0;
  std::optional<int> degree_;
  std::vector<Entry> entries_;
  std::map<Term, std::size_t> index_;
};

/// M(t,U). Throws LookupError when t is not in U.
VarSet multiplicative_set(const RelDivision& div, const Term& t);

/// True iff w lies in the cone of `vertex`.
bool cone_contains(const RelDivision& div, const Term& vertex, const Term& w);
/// Same test with the multiplicative set supplied directly.
bool in_cone(const Term& vertex, VarSet mult, const Term& w);

/// The deg-lex first element of U whose cone contains w (the unique one on a
/// valid division when deg(w) >= D).
std::optional<Term> involutive_divisor(const RelDivision& div, const Term& w);
std::optional<std::size_t> involutive_divisor_index(const RelDivision& div, const Term& w);

/// X(s,t): the cone vertex containing lcm(s,t). Throws InvalidDivisionError
/// when no cone contains it.
Term x_of(const RelDivision& div, const Term& s, const Term& t);

// ---- validation ----

struct Overlap {
  Term u, v, witness;
  bool operator==(const Overlap&) const = default;
};
struct ProfileMismatch {
  std::vector<std::uint64_t> observed, expected;
  bool operator==(const ProfileMismatch&) const = default;
};
struct PurePowerNotMultiplicative {
  Var var;
  bool operator==(const PurePowerNotMultiplicative&) const = default;
};
struct MultiplePeaks {
  std::vector<Term> peaks;
  bool operator==(const MultiplePeaks&) const = default;
};
struct NoPeak {
  bool operator==(const NoPeak&) const = default;
};
struct Uncovered {
  Term term;
  bool operator==(const Uncovered&) const = default;
};
struct DoubleCovered {
  Term term, u, v;
  bool operator==(const DoubleCovered&) const = default;
};

using Violation = std::variant<Overlap, ProfileMismatch, PurePowerNotMultiplicative,
                               MultiplePeaks, NoPeak, Uncovered, DoubleCovered>;

struct ValidationReport {
  std::vector<Violation> violations;
  /// False when the check could not certify that the cones cover T(U):
  /// general finite sets validated without the bounded oracle.
  bool coverage_checked = true;

  bool valid() const { return violations.empty(); }

  template <class V>
  std::vector<V> all_of() const {
    std::vector<V> out;
    for (const auto& v : violations) {
      if (const auto* p = std::get_if<V>(&v)) out.push_back(*p);
    }
    return out;
  }
  template <class V>
  bool has() const { return !all_of<V>().empty(); }
};

/// One-line human readable form of a violation.
std::string describe(const Violation& v, int n);

/// Exact validation: pairwise cone disjointness via the gcd criterion, and
/// for full slices the sigma-profile, pure-power and unique-peak conditions.
ValidationReport validate(const RelDivision& div);

/// Throws InvalidDivisionError listing the violations unless `div` is a valid
/// full-degree-slice division.
void require_valid_slice(const RelDivision& div, const char* what);

/// a_k = #{u : |M(u,U)| = k}, k = 1..n.
std::vector<std::uint64_t> sigma_profile(const RelDivision& div);

/// The unique term whose multiplicative set is every variable.
Term peak(const RelDivision& div);

/// Relabel variables: x_i becomes x_{perm[i]}.
Term permute(const Term& t, std::span<const Var> perm);
VarSet permute(VarSet m, std::span<const Var> perm);
RelDivision permute(const RelDivision& div, std::span<const Var> perm);

}  // namespace reldiv

#pragma once

// Graph-free closure operators on a slice division: compliant sets generate
// semigroup ideals that are unions of cones, revenant sets give escalier
// slices whose cones form an order ideal.

#include <set>
#include <vector>

#include "reldiv/division.hpp"

namespace reldiv {

struct Witness {
  Term added;
  /// The pair (s, t) whose X value justified the addition.
  Term s, t;
  Term lcm;
  /// Cone vertex containing lcm(s, t).
  Term vertex;
  bool operator==(const Witness&) const = default;
};

struct ClosureReport {
  std::set<Term> seed;
  std::set<Term> closure;
  /// In the order terms were added.
  std::vector<Witness> witnesses;
};

/// Least superset M of seed with: s in M and X(s,t) = t imply t in M.
ClosureReport compliant_closure(const RelDivision& div, const std::set<Term>& seed);
/// Least superset N of seed with: t in N and X(t,s) = t imply s in N.
ClosureReport revenant_closure(const RelDivision& div, const std::set<Term>& seed);

/// Rebuilds the closure from seed and witnesses; throws StructuralError if a
/// witness does not hold in `div`.
std::set<Term> replay(const RelDivision& div, const ClosureReport& report);

struct IdealResult {
  std::set<Term> generators;
  bool certified = false;
};
struct EscalierResult {
  std::set<Term> slice;
  bool certified = false;
};

inline constexpr int kDefaultMargin = 3;

/// Compliant closure of seed, certified by the bounded ideal-equality oracle.
IdealResult ideal_from_seed(const RelDivision& div, const std::set<Term>& seed,
                            int margin = kDefaultMargin);
/// Revenant closure of seed, certified by the bounded order-ideal oracle.
EscalierResult escalier_from_seed(const RelDivision& div, const std::set<Term>& seed,
                                  int margin = kDefaultMargin);

/// True iff t in M, x_i | t and j > i imply t*x_j/x_i in M. All terms must
/// share one degree (DomainError otherwise).
bool is_borel_fixed_slice(const std::set<Term>& terms, int n);

}  // namespace reldiv

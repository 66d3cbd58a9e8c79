#pragma once

// Constraint-propagating construction and exhaustive enumeration of the
// relative involutive divisions of a degree slice T_D.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reldiv/classical.hpp"
#include "reldiv/division.hpp"

namespace reldiv {

/// State of one (term, variable) cell of a partial assignment.
enum class Cell {
  kFree,              // ?  not yet constrained
  kForcedIn,          //    must be multiplicative
  kForcedOut,         // x  must not be multiplicative
  kGroupConstrained,  // /  member of a set that must not be wholly multiplicative
  kAssignedIn,
  kAssignedOut,
};

/// A division of T_D under construction. Values are copied on every branch.
class PartialAssignment {
 public:
  struct Row {
    std::optional<VarSet> assigned;
    VarSet forced_in;
    VarSet forced_out;
    /// Sets that may not all be multiplicative together.
    std::vector<VarSet> forbidden;
  };

  PartialAssignment(int n, int degree);

  int nvars() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return terms_->size(); }
  const std::vector<Term>& terms() const { return *terms_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::size_t index_of(const Term& t) const;

  /// Remaining count of terms that may still get k multiplicative
  /// variables, k = 1..n (index k-1).
  const std::vector<std::uint64_t>& budget() const { return budget_; }

  Cell cell(std::size_t row, Var v) const;
  /// Multiplicative sets still admissible for an unassigned row, ascending by
  /// bit pattern. Empty for assigned rows.
  std::vector<VarSet> candidates(std::size_t row) const;

  bool complete() const;
  bool peak_assigned() const { return budget_.back() == 0; }
  /// The finished division. Throws StructuralError if incomplete.
  RelDivision to_division() const;

 private:
  friend struct Propagator;

  int n_;
  int degree_;
  std::shared_ptr<const std::vector<Term>> terms_;
  std::vector<Row> rows_;
  std::vector<std::uint64_t> budget_;
};

struct Conflict {
  std::string reason;
};

using PropagationResult = std::variant<PartialAssignment, Conflict>;

/// Forces x_i into M(x_i^D) for every i and sets the budget to the expected
/// sigma-profile.
PartialAssignment seed_constraints(int n, int degree);

/// Assigns M(t) = m and propagates the disjointness constraints it implies on
/// every other term. Returns a Conflict if the choice contradicts the forced
/// states, overruns the profile budget or leaves some term without options.
PropagationResult propagate(const PartialAssignment& pa, const Term& t, VarSet m);

struct EnumerationOptions {
  bool up_to_symmetry = false;
  /// Worker threads for the peak-level branches; output order never changes.
  unsigned jobs = 1;
};

/// Streams every valid division of T_D exactly once, in a deterministic
/// order. With `up_to_symmetry`, only the representative of each orbit under
/// variable permutations whose serialization is the canonical form.
void enumerate_divisions(int n, int degree, const EnumerationOptions& options,
                         const std::function<void(const RelDivision&)>& sink);
std::vector<RelDivision> enumerate_divisions(int n, int degree, bool up_to_symmetry);

/// Deterministic byte serialization of a division (entries in deg-lex order).
std::string serialize(const RelDivision& div);
/// Minimum of `serialize` over all relabellings of the variables.
std::string canonical_form(const RelDivision& div);
/// Number of distinct divisions obtained by relabelling the variables.
std::size_t orbit_size(const RelDivision& div);

/// All n! permutations of 0..n-1 in lexicographic order.
std::vector<VarOrder> all_permutations(int n);

}  // namespace reldiv

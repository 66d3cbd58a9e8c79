#pragma once

// Janet and Pommaret assignments, and recognition of Pommaret divisions on
// degree slices.

#include <optional>
#include <vector>

#include "reldiv/division.hpp"

namespace reldiv {

/// A relabelled ascending variable order: order[r] is the variable of rank r,
/// so order[0] is the smallest variable.
using VarOrder = std::vector<Var>;

VarOrder identity_order(int n);
/// Throws StructuralError unless `order` is a permutation of 0..n-1.
void check_order(const VarOrder& order, int n);

/// Pommaret division on T_D under `order`: M(t) = variables not larger than
/// the smallest variable of t.
RelDivision pommaret_on_slice(int n, int degree, const VarOrder& order);
RelDivision pommaret_on_slice(int n, int degree);

/// Pommaret rule on an arbitrary finite set (x_1 < ... < x_n). No validity
/// guarantee; the term 1 gets every variable.
RelDivision pommaret_general(const std::vector<Term>& terms, int n);

/// Janet rule on an arbitrary finite set: x_j is multiplicative for t unless
/// some other element agrees with t above x_j and has a larger x_j exponent.
RelDivision janet_general(const std::vector<Term>& terms, int n);

/// If the multiplicative sets of a valid slice division form a chain under
/// inclusion, the variable order under which it is the Pommaret division;
/// otherwise nullopt. Throws InvalidDivisionError on invalid input.
std::optional<VarOrder> detect_pommaret(const RelDivision& div);

}  // namespace reldiv

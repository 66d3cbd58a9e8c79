#pragma once

// Bounded brute-force checks. Everything here scans explicit degree slices
// with its own cone test and does not go through the exact validator or the
// closure operators, so it can be used to cross-check them.

#include <optional>
#include <set>
#include <utility>

#include "reldiv/division.hpp"

namespace reldiv {

/// Scans every term of degree D..D+margin (slices) or every multiple of U up
/// to max degree + margin (general sets) and reports terms lying in no cone
/// or in two cones.
ValidationReport verify_division_covering(const RelDivision& div, int margin);

struct IdealCheck {
  bool holds = true;
  /// First term (deg-lex) that is a multiple of M but in no cone of M.
  std::optional<Term> counterexample;
};

/// Does (M) agree with the union of the cones of M on degrees D..D+margin?
IdealCheck verify_ideal_equality(const RelDivision& div, const std::set<Term>& generators,
                                 int margin);

struct OrderIdealCheck {
  bool holds = true;
  /// (w, d): w in the cone union, d | w of degree >= D outside it.
  std::optional<std::pair<Term, Term>> counterexample;
};

/// Is the cone union of N, with every term of degree < D, divisor-closed on
/// degrees D..D+margin?
OrderIdealCheck verify_order_ideal(const RelDivision& div, const std::set<Term>& slice,
                                   int margin);

/// Fixpoint of the first compliance form: t in M implies X(s,t) in M for
/// every s in U.
std::set<Term> brute_compliant(const RelDivision& div, const std::set<Term>& seed);

}  // namespace reldiv

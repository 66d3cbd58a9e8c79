#pragma once

// Terms (exponent vectors), variable sets and the binomial bookkeeping of
// degree slices T_D.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reldiv/errors.hpp"

namespace reldiv {

/// Zero-based variable index; x_1 is index 0.
using Var = int;

/// A term x_1^g_1 ... x_n^g_n stored as its exponent vector.
class Term {
 public:
  Term() = default;
  explicit Term(std::vector<int> exponents);
  Term(std::initializer_list<int> exponents);

  /// The term 1 in n variables.
  static Term one(int n);
  /// x_i^power in n variables.
  static Term pure_power(int n, Var i, int power);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int operator[](Var i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> exponents() const { return exps_; }

  /// The term multiplied by x_i^power.
  Term times_var(Var i, int power = 1) const;
  /// The term divided by x_i. Requires x_i | *this.
  Term over_var(Var i) const;

  bool operator==(const Term&) const = default;

  /// Deg-lex with x_1 < ... < x_n: lower degree first, then compare exponents
  /// from x_n down to x_1.
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  std::vector<int> exps_;
};

/// A subset of {x_1..x_n}, n <= 32.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}
  VarSet(std::initializer_list<Var> members);

  static constexpr VarSet all(int n) {
    return VarSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr bool contains(Var v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  constexpr bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  VarSet with(Var v) const { return VarSet(bits_ | (1u << v)); }
  VarSet without(Var v) const { return VarSet(bits_ & ~(1u << v)); }
  VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  /// Complement relative to {x_1..x_n}.
  VarSet complement(int n) const { return VarSet(~bits_ & all(n).bits_); }

  /// Members in ascending order.
  std::vector<Var> members() const;

  constexpr bool operator==(const VarSet&) const = default;
  constexpr auto operator<=>(const VarSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Variables appearing in t with positive exponent.
VarSet support(const Term& t);

/// All terms of degree exactly D in n variables, deg-lex ascending.
std::vector<Term> enumerate_terms(int n, int degree);

Term term_lcm(const Term& t, const Term& s);
Term term_gcd(const Term& t, const Term& s);
/// t | s.
bool term_divides(const Term& t, const Term& s);
/// s / t. Requires t | s.
Term term_quotient(const Term& s, const Term& t);
Term term_product(const Term& t, const Term& s);

/// Smallest variable dividing t. Throws DomainError on the term 1.
Var min_var(const Term& t);

/// Expected sigma-profile a_k = C(D+n-1-k, n-k), k = 1..n (index k-1).
std::vector<std::uint64_t> sigma_expected(int n, int degree);

/// Checks C(D+d+n-1, n-1) = sum_k C(D+n-1-k, n-k) C(d+k-1, k-1) for every
/// 0 <= d <= d_max with exact integers.
bool vandermonde_identity_check(int n, int degree, int d_max);

/// C(n+D-1, n-1) as an exact decimal string.
std::string slice_size_string(int n, int degree);

// ---- names and text form ----

/// x,y,z,t for n <= 4, else x1..xn.
std::string var_name(int n, Var v);
std::vector<std::string> var_names(int n);
/// Inverse of var_name; throws ParseError on unknown names.
Var parse_var(int n, std::string_view name);

/// Named-product form, e.g. "x^2*y"; the term 1 prints as "1".
std::string to_string(const Term& t);
/// Names in ascending order joined by commas, e.g. "x,y".
std::string to_string(VarSet m, int n);

/// Accepts "x^2*y", "x2^3*x5", "xy" (single-letter names), "1" or "[2,1,0]".
Term parse_term(int n, std::string_view text);

}  // namespace reldiv

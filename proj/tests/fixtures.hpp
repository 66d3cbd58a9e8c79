#pragma once

// Divisions worked out in the paper, plus small brute-force helpers that do
// not call into the library's validator or closure code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reldiv/division.hpp"

namespace fixtures {

using reldiv::RelDivision;
using reldiv::Term;
using reldiv::VarSet;

using Table = std::vector<std::pair<std::string, std::string>>;

inline VarSet vars(int n, const std::string& names) {
  VarSet m;
  std::string cur;
  for (char c : names + ",") {
    if (c == ',') {
      if (!cur.empty()) m = m.with(reldiv::parse_var(n, cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return m;
}

inline RelDivision slice(int n, int degree, const Table& table) {
  std::vector<RelDivision::Entry> entries;
  for (const auto& [t, m] : table) entries.push_back({reldiv::parse_term(n, t), vars(n, m)});
  return RelDivision::on_slice(n, degree, std::move(entries));
}

inline RelDivision general(int n, const Table& table) {
  std::vector<RelDivision::Entry> entries;
  for (const auto& [t, m] : table) entries.push_back({reldiv::parse_term(n, t), vars(n, m)});
  return RelDivision::on_set(n, std::move(entries));
}

inline std::set<Term> terms(int n, const std::vector<std::string>& names) {
  std::set<Term> out;
  for (const auto& s : names) out.insert(reldiv::parse_term(n, s));
  return out;
}

inline RelDivision pommaret32() {
  return slice(3, 2, {{"x^2", "x"}, {"xy", "x"}, {"y^2", "x,y"}, {"xz", "x"}, {"yz", "x,y"},
                      {"z^2", "x,y,z"}});
}
inline RelDivision noncont() { return slice(3, 1, {{"x", "x,y"}, {"y", "y,z"}, {"z", "x,z"}}); }
inline RelDivision grafostrano() {
  return slice(3, 2, {{"x^2", "x"}, {"xy", "x,y,z"}, {"y^2", "y"}, {"xz", "x,z"}, {"yz", "y"},
                      {"z^2", "y,z"}});
}
inline RelDivision idealpom() {
  return slice(3, 2, {{"x^2", "x,y,z"}, {"xy", "y,z"}, {"y^2", "y"}, {"xz", "z"}, {"yz", "y,z"},
                      {"z^2", "z"}});
}
inline RelDivision facile() {
  return slice(3, 2, {{"x^2", "x"}, {"xy", "x,y,z"}, {"y^2", "y,z"}, {"xz", "x,z"}, {"yz", "z"},
                      {"z^2", "z"}});
}
inline RelDivision idealdeg3() {
  return slice(3, 3, {{"x^3", "x,z"}, {"x^2y", "x"}, {"xy^2", "x"}, {"y^3", "x,y"},
                      {"x^2z", "z"}, {"xyz", "x,y,z"}, {"y^2z", "y"}, {"xz^2", "z"},
                      {"yz^2", "y"}, {"z^3", "y,z"}});
}
inline RelDivision tr() {
  return slice(4, 3, {{"x^3", "x"},       {"x^2y", "x,y,t"}, {"xy^2", "y,z"},  {"y^3", "y,z"},
                      {"x^2z", "x,y,z"},  {"xz^2", "z"},     {"z^3", "z"},     {"x^2t", "x,z,t"},
                      {"xt^2", "y,t"},    {"t^3", "t"},      {"xyt", "y"},     {"xzt", "z,t"},
                      {"xyz", "z"},       {"yz^2", "z"},     {"yt^2", "t"},    {"y^2z", "z"},
                      {"y^2t", "y,t"},    {"z^2t", "z,t"},   {"yzt", "x,y,z,t"}, {"zt^2", "t"}});
}

/// The eight tables of the appendix, rows x^2, xy, y^2, xz, yz, z^2.
inline std::vector<RelDivision> appendix_a() {
  const std::vector<std::vector<std::string>> rows = {
      {"x,y,z", "y,z", "y,z", "z", "z", "z"},   {"x,y,z", "y,z", "y", "z", "y", "y,z"},
      {"x,y,z", "y,z", "y", "z", "y,z", "z"},   {"x,z", "x,y,z", "y,z", "z", "z", "z"},
      {"x", "x,y,z", "y", "x,z", "y,z", "z"},   {"x,z", "x,y,z", "y", "z", "y,z", "z"},
      {"x,z", "x,y,z", "y", "z", "y", "y,z"},   {"x", "x,y,z", "y", "x,z", "y", "y,z"},
  };
  const std::vector<std::string> names = {"x^2", "xy", "y^2", "xz", "yz", "z^2"};
  std::vector<RelDivision> out;
  for (const auto& r : rows) {
    Table t;
    for (std::size_t i = 0; i < names.size(); ++i) t.emplace_back(names[i], r[i]);
    out.push_back(slice(3, 2, t));
  }
  return out;
}

// ---- brute force -----------------------------------------------------------

/// All exponent vectors of total degree d in n variables, unordered.
inline std::vector<Term> raw_terms(int n, int d) {
  std::vector<Term> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

inline bool raw_in_cone(const Term& u, VarSet m, const Term& w) {
  for (int i = 0; i < w.nvars(); ++i) {
    const int d = w[i] - u[i];
    if (d < 0 || (d > 0 && !m.contains(i))) return false;
  }
  return true;
}

/// Every term of degree D..D+margin lies in exactly one cone.
inline bool raw_exact_cover(const RelDivision& div, int margin) {
  const int degree = *div.degree();
  for (int d = degree; d <= degree + margin; ++d) {
    for (const auto& w : raw_terms(div.nvars(), d)) {
      int hits = 0;
      for (const auto& e : div.entries()) hits += raw_in_cone(e.term, e.mult, w);
      if (hits != 1) return false;
    }
  }
  return true;
}

/// Every assignment of nonempty multiplicative sets on T_D that covers
/// degrees D..D+margin exactly once.
inline std::set<std::string> raw_divisions(int n, int degree, int margin,
                                           const std::function<std::string(const RelDivision&)>& key) {
  auto ts = raw_terms(n, degree);
  const std::uint32_t options = (1u << n) - 1;
  std::vector<std::uint32_t> pick(ts.size(), 1);
  std::set<std::string> out;
  while (true) {
    std::vector<RelDivision::Entry> entries;
    for (std::size_t i = 0; i < ts.size(); ++i) entries.push_back({ts[i], VarSet(pick[i])});
    const auto div = RelDivision::on_slice(n, degree, std::move(entries));
    if (raw_exact_cover(div, margin)) out.insert(key(div));
    std::size_t i = 0;
    while (i < pick.size() && pick[i] == options) pick[i++] = 1;
    if (i == pick.size()) break;
    ++pick[i];
  }
  return out;
}

inline std::uint64_t raw_binomial(int a, int b) {
  if (b < 0 || a < b) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace fixtures

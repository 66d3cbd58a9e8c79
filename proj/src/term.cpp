#include "reldiv/term.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace reldiv {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_same_length(const Term& t, const Term& s) {
  if (t.nvars() != s.nvars()) {
    throw StructuralError("terms in " + std::to_string(t.nvars()) + " and " +
                          std::to_string(s.nvars()) + " variables");
  }
}

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  BigInt result = 1;
  for (long i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;
  }
  return result;
}

void compositions(int n, int remaining, int pos, std::vector<int>& cur,
                  std::vector<Term>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    compositions(n, remaining - e, pos + 1, cur, out);
  }
}

}  // namespace

Term::Term(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw StructuralError("negative exponent");
  }
}

Term::Term(std::initializer_list<int> exponents)
    : Term(std::vector<int>(exponents)) {}

Term Term::one(int n) { return Term(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Term Term::pure_power(int n, Var i, int power) {
  return one(n).times_var(i, power);
}

int Term::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Term Term::times_var(Var i, int power) const {
  Term r = *this;
  r.exps_.at(static_cast<std::size_t>(i)) += power;
  return r;
}

Term Term::over_var(Var i) const {
  if (exps_.at(static_cast<std::size_t>(i)) == 0) {
    throw DomainError(var_name(nvars(), i) + " does not divide " + to_string(*this));
  }
  Term r = *this;
  --r.exps_[static_cast<std::size_t>(i)];
  return r;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  if (auto c = nvars() <=> other.nvars(); c != 0) return c;
  for (std::size_t i = exps_.size(); i-- > 0;) {
    if (auto c = exps_[i] <=> other.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

VarSet::VarSet(std::initializer_list<Var> members) {
  for (Var v : members) bits_ |= 1u << v;
}

int VarSet::size() const { return std::popcount(bits_); }

std::vector<Var> VarSet::members() const {
  std::vector<Var> out;
  for (Var v = 0; v < 32; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

VarSet support(const Term& t) {
  VarSet s;
  for (Var i = 0; i < t.nvars(); ++i) {
    if (t[i] > 0) s = s.with(i);
  }
  return s;
}

std::vector<Term> enumerate_terms(int n, int degree) {
  if (n < 1) throw DomainError("need at least one variable");
  if (degree < 0) throw DomainError("negative degree");
  std::vector<Term> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  compositions(n, degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Term term_lcm(const Term& t, const Term& s) {
  require_same_length(t, s);
  std::vector<int> e(static_cast<std::size_t>(t.nvars()));
  for (Var i = 0; i < t.nvars(); ++i) e[static_cast<std::size_t>(i)] = std::max(t[i], s[i]);
  return Term(std::move(e));
}

Term term_gcd(const Term& t, const Term& s) {
  require_same_length(t, s);
  std::vector<int> e(static_cast<std::size_t>(t.nvars()));
  for (Var i = 0; i < t.nvars(); ++i) e[static_cast<std::size_t>(i)] = std::min(t[i], s[i]);
  return Term(std::move(e));
}

bool term_divides(const Term& t, const Term& s) {
  require_same_length(t, s);
  for (Var i = 0; i < t.nvars(); ++i) {
    if (t[i] > s[i]) return false;
  }
  return true;
}

Term term_quotient(const Term& s, const Term& t) {
  if (!term_divides(t, s)) {
    throw DomainError(to_string(t) + " does not divide " + to_string(s));
  }
  std::vector<int> e(static_cast<std::size_t>(s.nvars()));
  for (Var i = 0; i < s.nvars(); ++i) e[static_cast<std::size_t>(i)] = s[i] - t[i];
  return Term(std::move(e));
}

Term term_product(const Term& t, const Term& s) {
  require_same_length(t, s);
  std::vector<int> e(static_cast<std::size_t>(t.nvars()));
  for (Var i = 0; i < t.nvars(); ++i) e[static_cast<std::size_t>(i)] = t[i] + s[i];
  return Term(std::move(e));
}

Var min_var(const Term& t) {
  for (Var i = 0; i < t.nvars(); ++i) {
    if (t[i] > 0) return i;
  }
  throw DomainError("no variables: the term 1 has no smallest variable");
}

// a_k = C(D+n-1-k, n-k); for D = 0 the top entry is C(-1, 0), read as 1
// since T_0 = {1} carries every variable.
static BigInt profile_coefficient(int n, int degree, int k) {
  if (degree == 0) return k == n ? 1 : 0;
  return binomial(degree + n - 1 - k, n - k);
}

std::vector<std::uint64_t> sigma_expected(int n, int degree) {
  if (n < 1) throw DomainError("need at least one variable");
  if (degree < 0) throw DomainError("negative degree");
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    a[static_cast<std::size_t>(k - 1)] = profile_coefficient(n, degree, k).convert_to<std::uint64_t>();
  }
  return a;
}

bool vandermonde_identity_check(int n, int degree, int d_max) {
  for (int d = 0; d <= d_max; ++d) {
    const BigInt lhs = binomial(degree + d + n - 1, n - 1);
    BigInt rhs = 0;
    for (int k = 1; k <= n; ++k) {
      rhs += profile_coefficient(n, degree, k) * binomial(d + k - 1, k - 1);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::string slice_size_string(int n, int degree) {
  return binomial(n + degree - 1, n - 1).str();
}

std::string var_name(int n, Var v) {
  static constexpr const char* kShort[] = {"x", "y", "z", "t"};
  if (v < 0 || v >= n) throw LookupError("variable index out of range");
  if (n <= 4) return kShort[v];
  return "x" + std::to_string(v + 1);
}

std::vector<std::string> var_names(int n) {
  std::vector<std::string> out;
  for (Var v = 0; v < n; ++v) out.push_back(var_name(n, v));
  return out;
}

Var parse_var(int n, std::string_view name) {
  for (Var v = 0; v < n; ++v) {
    if (var_name(n, v) == name) return v;
  }
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

std::string to_string(const Term& t) {
  std::string out;
  for (Var i = 0; i < t.nvars(); ++i) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(t.nvars(), i);
    if (t[i] > 1) out += "^" + std::to_string(t[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(VarSet m, int n) {
  std::string out;
  for (Var v : m.members()) {
    if (v >= n) break;
    if (!out.empty()) out += ',';
    out += var_name(n, v);
  }
  return out;
}

Term parse_term(int n, std::string_view text) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad term '" + std::string(text) + "': " + why);
  };
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw fail("empty");

  auto read_int = [&](std::size_t& pos) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) throw fail("expected a non-negative integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  if (text.front() == '[') {
    if (text.back() != ']') throw fail("unterminated exponent array");
    std::size_t pos = 1;
    std::size_t idx = 0;
    while (true) {
      while (pos < text.size() && is_space(text[pos])) ++pos;
      if (text[pos] == ']' && idx == 0) break;
      if (idx >= exps.size()) throw fail("too many exponents");
      exps[idx++] = read_int(pos);
      while (pos < text.size() && is_space(text[pos])) ++pos;
      if (text[pos] == ',') { ++pos; continue; }
      if (text[pos] == ']') break;
      throw fail("expected ',' or ']'");
    }
    if (idx != exps.size()) throw fail("expected " + std::to_string(n) + " exponents");
    return Term(std::move(exps));
  }
  if (text == "1") return Term(std::move(exps));

  std::size_t pos = 0;
  bool expect_factor = true;
  while (pos < text.size()) {
    if (text[pos] == '*') {
      if (expect_factor) throw fail("misplaced '*'");
      expect_factor = true;
      ++pos;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[pos]))) throw fail("expected a variable");
    std::size_t end = pos + 1;
    if (n > 4) {
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    }
    const Var v = parse_var(n, text.substr(pos, end - pos));
    pos = end;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = read_int(pos);
    }
    exps[static_cast<std::size_t>(v)] += power;
    expect_factor = false;
  }
  if (expect_factor) throw fail("dangling '*'");
  return Term(std::move(exps));
}

}  // namespace reldiv

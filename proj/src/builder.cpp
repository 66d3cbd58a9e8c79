#include "reldiv/builder.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reldiv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr const char* kReset = "\x1b[0m";

std::string paint(const std::string& text, const char* code, bool color) {
  return color ? code + text + kReset : text;
}

}  // namespace

std::optional<Choice> parse_choice(int n, std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() == '#') return std::nullopt;
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected '<term>: <variables>', got '" + std::string(line) + "'");
  }
  Choice c{parse_term(n, trim(line.substr(0, colon))), VarSet{}};
  std::string rest(line.substr(colon + 1));
  std::replace(rest.begin(), rest.end(), ',', ' ');
  std::istringstream names(rest);
  for (std::string name; names >> name;) c.mult = c.mult.with(parse_var(n, name));
  return c;
}

BuildSession::BuildSession(int n, int degree) : state_(seed_constraints(n, degree)) {}

std::optional<std::string> BuildSession::choose(const Choice& choice) {
  if (choice.term.nvars() != state_.nvars() || choice.term.degree() != state_.degree()) {
    return to_string(choice.term) + " is not a term of the slice";
  }
  auto result = propagate(state_, choice.term, choice.mult);
  if (auto* conflict = std::get_if<Conflict>(&result)) return conflict->reason;
  state_ = std::move(std::get<PartialAssignment>(result));
  return std::nullopt;
}

std::string BuildSession::render(bool color) const {
  const int n = state_.nvars();
  std::vector<std::string> labels;
  std::size_t width = 5;
  for (const auto& t : state_.terms()) {
    labels.push_back(to_string(t));
    width = std::max(width, labels.back().size());
  }
  std::ostringstream out;
  out << "Terms" << std::string(width - 5, ' ') << " | Multiplicative Variables\n";
  for (std::size_t i = 0; i < state_.size(); ++i) {
    out << labels[i] << std::string(width - labels[i].size(), ' ') << " | ";
    const auto& row = state_.row(i);
    if (row.assigned) {
      out << paint(to_string(*row.assigned, n), "\x1b[1m", color) << '\n';
      continue;
    }
    for (Var v = 0; v < n; ++v) {
      if (v > 0) out << ',';
      switch (state_.cell(i, v)) {
        case Cell::kForcedIn: out << paint(var_name(n, v), "\x1b[32m", color); break;
        case Cell::kForcedOut: out << paint("×", "\x1b[31m", color); break;
        case Cell::kGroupConstrained: out << paint("/", "\x1b[33m", color); break;
        default: out << paint("?", "\x1b[2m", color); break;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace reldiv

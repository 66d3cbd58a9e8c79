#pragma once

// Term-by-term division builder. The interactive terminal loop and scripted
// replays both drive this state machine.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reldiv/enumerate.hpp"

namespace reldiv {

struct Choice {
  Term term;
  VarSet mult;
};

/// Parses "xy: x,y,z" (variables separated by commas or spaces). Blank lines
/// and lines starting with '#' yield nullopt. Throws ParseError.
std::optional<Choice> parse_choice(int n, std::string_view line);

class BuildSession {
 public:
  BuildSession(int n, int degree);

  const PartialAssignment& state() const { return state_; }
  bool complete() const { return state_.complete(); }

  /// Applies a choice; on conflict the state is left unchanged and the
  /// reason is returned.
  std::optional<std::string> choose(const Choice& choice);

  /// One row per term: "x^2 | x,×,?". Assigned rows list M; open rows show
  /// one cell per variable (name = forced in, × = excluded, / = part of a
  /// not-all-together group, ? = free).
  std::string render(bool color) const;

 private:
  PartialAssignment state_;
};

}  // namespace reldiv

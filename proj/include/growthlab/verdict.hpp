#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/matrix.hpp"
#include "growthlab/numeric.hpp"

namespace growthlab {

/// One compared inequality lhs >= rhs (or lhs <= rhs, per `relation`).
struct Clause {
  std::string name;
  Rational lhs;
  Rational rhs;
  /// ">=", "<=", "<", ">" or "==".
  std::string relation;
  bool holds = false;
};

Clause make_clause(std::string name, Rational lhs, std::string relation, Rational rhs);

/// Outcome of checking a stated inequality. holds is the conjunction of the
/// clauses; when the hypothesis is not met there is no claim and holds is true.
struct Verdict {
  std::string check;
  bool hypothesis_met = true;
  bool holds = true;
  std::vector<Clause> clauses;
  std::optional<Matrix> witness;
  std::string note;

  void add(Clause c) {
    holds = holds && c.holds;
    clauses.push_back(std::move(c));
  }
};

}  // namespace growthlab

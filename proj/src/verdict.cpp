#include "growthlab/verdict.hpp"

#include "growthlab/error.hpp"

namespace growthlab {

Clause make_clause(std::string name, Rational lhs, std::string relation, Rational rhs) {
  bool holds;
  if (relation == ">=") {
    holds = lhs >= rhs;
  } else if (relation == "<=") {
    holds = lhs <= rhs;
  } else if (relation == ">") {
    holds = lhs > rhs;
  } else if (relation == "<") {
    holds = lhs < rhs;
  } else if (relation == "==") {
    holds = lhs == rhs;
  } else {
    throw Error(Errc::InvalidArgument, "unknown relation " + relation);
  }
  return Clause{std::move(name), std::move(lhs), std::move(rhs), std::move(relation), holds};
}

}  // namespace growthlab

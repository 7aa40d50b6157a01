#pragma once

#include <string>
#include <vector>

#include "opwork/operad/operad.hpp"

namespace opwork {

struct ValidationFailure {
  std::string kind;   // "coxeter", "unit", "equivariance", "associativity"
  std::string where;  // offending indices
  Rational residual;  // max |entry| of the difference
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive check of unit laws, equivariance of composition for stabilizer
/// generators, and associativity squares on basis triples within the cap.
ValidationReport validate(const OperadData& op, int cap);
inline ValidationReport validate(const OperadData& op) { return validate(op, op.cap()); }

std::string describe(const OperadData& op, const OpVector& v);

}  // namespace opwork

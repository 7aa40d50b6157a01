#pragma once

#include <string>
#include <vector>

#include "opwork/cofree/cofree.hpp"
#include "opwork/functors/lax.hpp"

// Property drivers shared by the unit tests and the acceptance binary.
namespace opwork::checks {

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return checked > 0 && failures.empty(); }
};

/// α_{1,1} : P^∧P^∧(C) → P^∧_2(C) has full column rank on every graded piece up to `budget`.
Tally alpha_injective(const OperadData& op, const std::vector<Index>& c_dims, int budget);
/// α_{2,1} ∘ α_{1,1}P^∧ = α_{1,2} ∘ P^∧(α_{1,1}) as maps (P^∧)^3(C) → P^∧_3(C).
Tally alpha_square(const OperadData& op, const std::vector<Index>& c_dims, int budget);

/// Every composite γ(μ; ν_1..ν_m) of basis operations within `cap`: the tensor product of the
/// parts of comult(e, μ) evaluated at the ν_i equals expand(e) at the composite.
Tally comult_slotwise(const RepresentedElement& e, int cap);
/// Basis vectors of every arity-m component on orbit representatives, m <= cap.
std::vector<OpVector> basis_operations(const OperadData& op, int y, int cap);

/// lift(a·u + b·v) expands to a·lift(u) + b·lift(v), and counit(lift(u)) = p(u).
Tally lift_properties(const RepresentedElement& e, int cap);
/// Translates of e along every context of weight <= 1 reuse e's automaton and expand to the
/// translated jet.
Tally translate_closure(const RepresentedElement& e, int cap);

}  // namespace opwork::checks

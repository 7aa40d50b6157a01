#pragma once

#include <vector>

#include "opwork/functors/lax.hpp"
#include "opwork/operad/validate.hpp"

namespace opwork {

/// Planted defects, applied to the maps computed over C itself.
struct TowerOptions {
  bool corrupt_alpha = false;  // α_{1,1} loses rank on one graded piece
  bool corrupt_delta = false;  // one entry of Δ is perturbed
};

/// P^∧(C) for a nilpotent operad, with no weight truncation, and its two structure maps.
struct PwedgeMaterialization {
  int degree = 0;
  int budget = 0;      // largest weight any of the spaces below can reach
  ColoredSpace pwedge;   // P^∧(C)
  ColoredSpace square;   // (P^∧)^2(C)
  ColoredSpace pwedge2;  // P^∧_2(C)
  GradedMap delta;       // Δ : P^∧ → P^∧_2
  GradedMap alpha;       // α_{1,1} : (P^∧)^2 → P^∧_2
  bool alpha_injective = true;
};

/// Refuses operads without a nilpotence degree.
PwedgeMaterialization materialize_pwedge(const OperadData& op, const std::vector<Index>& c_dims, const TowerOptions& opts = {});

struct TowerStage {
  int k = 0;
  ColoredSpace space;  // Q_k(C), basis ordered by weight
  GradedMap chi;       // χ_k : Q_k → Q_{k-1} (empty for k = 0)
  GradedMap delta;     // δ_k : Q_k → (Q_{k-1})^2 (empty for k = 0)
  GradedMap embedding;  // Q_k → P^∧(C)
  Index dim = 0;
  Index image_dim = 0;  // rank of the embedding
  bool chi_injective = true;
};

/// Q_0 = P^∧ ⊇ Q_1 ⊇ ... as exact limits; stages counts Q_0 and is at most 3.
std::vector<TowerStage> tower(const OperadData& op, const std::vector<Index>& c_dims, int stages, const TowerOptions& opts = {});

struct ComonadReport {
  bool stabilized = false;  // χ_2 invertible
  Index dim = 0;
  ValidationReport checks;  // counit, coassociativity, lax-diagonal, injectivity
  bool ok() const { return stabilized && checks.ok(); }
};

/// Checks the comonad axioms of the stabilized stage Q_1 = Q_2, computing the comultiplication
/// Q_1 → Q_1 Q_1 as the lift of δ_1 through χ_1^2.
ComonadReport verify_comonad(const OperadData& op, const std::vector<Index>& c_dims, const TowerOptions& opts = {});

}  // namespace opwork

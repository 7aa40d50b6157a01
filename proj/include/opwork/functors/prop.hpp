#pragma once

#include <map>
#include <vector>

#include "opwork/operad/operad.hpp"

namespace opwork {

/// ℙ(z; x) = ⊕ over block decompositions (w_1..w_m) of z of the induced representations
/// of P(w_1;x_1) ⊗ ... ⊗ P(w_m;x_m). Elements [ν_1..ν_m, σ] with σ : z → concat(w).
class PropComponent {
 public:
  struct Summand {
    std::vector<Seq> blocks;
    std::vector<Perm> cosets;
    std::vector<Index> inner_dims;
    Index inner = 0;
    Index offset = 0;
    Index dim() const { return cosets.size() * inner; }
  };

  PropComponent(const OperadData& op, Seq z, Seq x);

  const Seq& in_orbit() const { return z_; }
  const Seq& out_seq() const { return x_; }
  Index dim() const { return dim_; }
  const std::vector<Summand>& summands() const { return summands_; }
  /// Right action of Stab(z).
  const PermAction& right_action() const { return right_; }
  /// Action of Stab(x) permuting the outputs (and the blocks with them).
  const PermAction& left_action() const { return left_; }

  /// Coordinates of [ν_1 ⊗ ... ⊗ ν_m, σ] for ν_i on any sequences and
  /// σ : z → concat(ν_i.seq).
  SparseVec inclusion(const std::vector<OpVector>& nus, const Perm& sigma) const;
  /// Inclusion of the summand `s` as a matrix (columns: coset-major basis of the summand).
  Matrix summand_inclusion(std::size_t s) const;

 private:
  const OperadData* op_;
  Seq z_;
  Seq x_;
  Index dim_ = 0;
  std::vector<Summand> summands_;
  std::map<std::vector<Seq>, std::size_t> by_blocks_;
  PermAction right_;
  PermAction left_;
};

}  // namespace opwork

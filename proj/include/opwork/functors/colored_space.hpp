#pragma once

#include <unordered_map>
#include <vector>

#include "opwork/combinat/colored_seq.hpp"

namespace opwork {

/// A colored vector space whose basis vectors carry a weight >= 1. Plain spaces have
/// every weight 1; spaces built from functor values carry their arity grading.
struct ColoredSpace {
  std::vector<std::vector<int>> weights;  // per color, per basis vector

  static ColoredSpace uniform(const std::vector<Index>& dims);
  int ncolors() const { return static_cast<int>(weights.size()); }
  Index dim(int c) const { return weights.at(c).size(); }
  std::vector<Index> dims() const;
  Index total_dim() const;
  int max_weight() const;
};

/// Basis tensors of D^{⊗x} of a fixed total weight, as a subset of the full tensor basis.
class TensorBasis {
 public:
  TensorBasis(const ColoredSpace& d, const Seq& x, int weight);

  const std::vector<Index>& dims() const { return dims_; }
  Index size() const { return members_.size(); }
  const std::vector<Index>& members() const { return members_; }
  bool contains(Index full) const { return position_.count(full) != 0; }
  Index position(Index full) const { return position_.at(full); }
  /// Full tensor -> local coordinates; throws if an entry has the wrong weight.
  SparseVec restrict(const SparseVec& full) const;
  SparseVec expand(const SparseVec& local) const;

 private:
  std::vector<Index> dims_;
  std::vector<Index> members_;
  std::unordered_map<Index, Index> position_;
};

/// Per-color linear maps D -> D' (column j of maps[c] is the image of basis vector j).
struct ColoredMap {
  std::vector<Matrix> maps;
};

/// φ^{⊗x} applied to a full tensor over D^{⊗x}.
SparseVec tensor_apply(const ColoredMap& phi, const Seq& x, const std::vector<Index>& src_dims, const SparseVec& t);

}  // namespace opwork

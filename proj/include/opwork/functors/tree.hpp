#pragma once

#include <functional>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "opwork/functors/colored_space.hpp"
#include "opwork/operad/operad.hpp"

namespace opwork {

/// A leveled forest: level 0 holds one operation per root slot, level ℓ+1 one
/// operation per slot of the concatenated input sequences of level ℓ.
using Forest = std::vector<std::vector<OpVector>>;

/// Element of M_k^{x}: coordinates in the piece (k, x, weight).
struct TreeElement {
  Seq seq;
  SparseVec coords;
};

/// The presheaves M_k = (ℙ^∧)^k εD on S(X), gradedwise:
///   M_0^{x} = D^{⊗x},
///   M_k^{x} = ∫_{z_1..z_m} Hom(P(z_1;x_1) ⊗ ... ⊗ P(z_m;x_m), M_{k-1}^{z_1...z_m}),
/// so that P^∧_n(D)_y = M_n^{(y)}. Pieces are indexed by any (not necessarily sorted)
/// sequence x and the total D-weight of the leaves; the end is computed over orbit
/// representatives z_i with stabilizer naturality.
class TreeFunctor {
 public:
  struct Block {
    std::vector<Seq> zs;
    std::vector<Index> in_dims;
    Index in_dim = 0;
    Index out_dim = 0;
    Subspace natural;  // inside Hom(⊗P, M_{k-1}), index in·out_dim + o
    Index offset = 0;
  };
  struct Piece {
    Index dim = 0;
    std::vector<Block> blocks;
    std::map<std::vector<Seq>, std::size_t> by_zs;
    std::shared_ptr<TensorBasis> tensors;  // level 0 only
  };

  TreeFunctor(const OperadData& op, ColoredSpace d, int budget);

  const OperadData& operad() const { return *op_; }
  const ColoredSpace& base() const { return d_; }
  int budget() const { return budget_; }

  const Piece& piece(int k, const Seq& x, int weight);
  Index dim(int k, const Seq& x, int weight) { return piece(k, x, weight).dim; }

  /// Φ·σ for σ : x' → x (x'_i = x_{σ(i)}).
  SparseVec act(int k, const Seq& x, int weight, const SparseVec& phi, const Perm& sigma, const Seq& xp);
  /// Φ(ν_1, ..., ν_m) ∈ M_{k-1}^{concat ν_i.seq}, ν_i on any sequences.
  TreeElement eval(int k, const Seq& x, int weight, const SparseVec& phi, const std::vector<OpVector>& nus);
  /// Evaluates through all k levels of the forest; returns a full tensor over D^{⊗leaves}.
  SparseVec full_eval(int k, const Seq& x, int weight, const SparseVec& phi, const Forest& f, std::size_t level = 0);
  /// Coordinates of the element whose value on every k-level forest of basis operations
  /// is fn(forest) (a full tensor over D^{⊗leaves}). Throws if the values are not natural.
  SparseVec coords_of(int k, const Seq& x, int weight, const std::function<SparseVec(const Forest&)>& fn);

  /// The graded colored space y ↦ ⊕_w M_k^{(y), w}, weights up to the budget.
  ColoredSpace as_space(int k);
  /// Basis vector j of as_space(k) at color y: its weight and coordinates in its piece.
  std::pair<int, Index> locate(int k, int y, Index j);
  Index global_index(int k, int y, int weight, Index local);

 private:
  Piece build(int k, const Seq& x, int weight);
  const Matrix& act_matrix(int k, const Seq& x, int weight, const Perm& sigma, const Seq& xp);

  const OperadData* op_;
  ColoredSpace d_;
  int budget_;
  std::map<std::tuple<int, Seq, int>, Piece> pieces_;
  std::map<std::tuple<int, Seq, int, Perm>, Matrix> act_cache_;
};

/// Splits the levels of a forest rooted at `roots` slots into one forest per root.
std::vector<Forest> split_forest(const Forest& f, std::size_t from_level, std::size_t roots);

}  // namespace opwork

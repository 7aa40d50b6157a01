#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opwork/linalg/space.hpp"

namespace opwork {

/// Permutation of {0..n-1}: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// (a∘b)(i) = a(b(i))
Perm compose_perm(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);
/// Adjacent transposition s_j swapping j and j+1 in S_n.
Perm adjacent(int n, int j);
bool is_identity(const Perm& p);
/// All permutations of n points, lexicographic.
std::vector<Perm> all_perms(int n);

/// Strips descents from the left: returns [i_1..i_k] with p = s_{i_k} ∘ ... ∘ s_{i_1}.
std::vector<int> descent_word(Perm p);

/// Tensor permutation: for t over factors with dims `dims_src` (indexed by the target
/// of sigma), returns t·σ with slot i of the result = slot σ(i) of t.
SparseVec permute_tensor(const SparseVec& t, const std::vector<Index>& dims_src, const Perm& sigma);
/// Dims of the result of permute_tensor.
std::vector<Index> permuted_dims(const std::vector<Index>& dims_src, const Perm& sigma);

/// Right action of a Young subgroup of S_n given by adjacent-transposition generators.
/// The matrix R(s_j) is the action of s_j; R(a∘b) = R(b) R(a).
class PermAction {
 public:
  PermAction() = default;
  PermAction(Index dim, int degree) : dim_(dim), degree_(degree) {}

  Index dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<int, Matrix>& generators() const { return gens_; }
  void set_generator(int j, Matrix m);
  bool has_generator(int j) const { return gens_.count(j) != 0; }
  const Matrix& generator(int j) const { return gens_.at(j); }

  /// Checks s^2 = 1, braid and commutation relations among present generators.
  std::optional<std::string> coxeter_violation() const;
  /// R(p) v, for p in the generated subgroup.
  SparseVec act(const Perm& p, const SparseVec& v) const;
  Matrix matrix(const Perm& p) const;
  /// Elements of the generated Young subgroup.
  std::vector<Perm> group_elements() const;

 private:
  Index dim_ = 0;
  int degree_ = 0;
  std::map<int, Matrix> gens_;
};

/// Invariant subspace: common kernel of (R(s) - 1) over generators.
Subspace invariants(const PermAction& a);
/// Coinvariant quotient by span{v - R(s)v}.
Quotient coinvariants(const PermAction& a);
/// (1/|G|) Σ_g R(g), by enumerating the group.
Matrix averaging_projector(const PermAction& a);

}  // namespace opwork

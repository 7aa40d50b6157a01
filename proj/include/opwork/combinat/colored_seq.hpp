#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opwork/linalg/perm_action.hpp"

namespace opwork {

/// Sequence of color indices; colors are numbered in sorted order of their ids.
using Seq = std::vector<int>;

class ColorSet {
 public:
  ColorSet() = default;
  /// Sorts and deduplicates; throws on duplicates.
  explicit ColorSet(std::vector<std::string> ids);
  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int c) const { return ids_.at(c); }
  int index(const std::string& id) const;
  const std::vector<std::string>& ids() const { return ids_; }
  bool operator==(const ColorSet& o) const { return ids_ == o.ids_; }

 private:
  std::vector<std::string> ids_;
};

std::string seq_key(const ColorSet& colors, const Seq& s);

/// The sorted member of the orbit.
Seq orbit_rep(const Seq& x);
inline bool is_sorted_seq(const Seq& x) { return orbit_rep(x) == x; }
/// Stable-sort transport τ with x_i = rep_{τ(i)}.
Perm transport(const Seq& x);
/// All σ with x_i = y_{σ(i)}.
std::vector<Perm> hom_set(const Seq& x, const Seq& y);
/// Sorted sequences of the given length over `ncolors` colors.
std::vector<Seq> orbits_of_length(int ncolors, int length);
/// j with rep[j] == rep[j+1].
std::vector<int> stabilizer_generators(const Seq& rep);
/// Order of the stabilizer of any member of the orbit.
std::size_t stabilizer_order(const Seq& x);
/// Action of Stab(rep) on C^{⊗rep} by slot permutation.
PermAction tensor_action(const Seq& rep, const std::vector<Index>& color_dims);
std::vector<Index> tensor_dims(const Seq& x, const std::vector<Index>& color_dims);
Seq concat(const std::vector<Seq>& blocks);

/// Ordered m-tuples of nonempty sorted blocks whose concatenation lies in the orbit of z,
/// with the number of ways (cosets) each is realized.
struct BlockDecomposition {
  std::vector<Seq> blocks;
  std::size_t multiplicity = 0;
};
std::vector<BlockDecomposition> block_decompositions(const Seq& z, int m);

/// Canonical coset representatives σ : z → concat(blocks) (z_i = w_{σ(i)}), one per
/// coset of the block stabilizer acting on the left: σ⁻¹ is increasing on every
/// (block, color) group.
std::vector<Perm> coset_reps(const Seq& z, const std::vector<Seq>& blocks);
/// Splits π : z → concat(blocks) as π = ρ ∘ σ with σ canonical and ρ block-preserving.
std::pair<Perm, Perm> canonical_split(const Perm& pi, const Seq& z, const std::vector<Seq>& blocks);
/// Restriction of a block-preserving permutation of concat(blocks) to block b.
Perm block_part(const Perm& rho, const std::vector<Seq>& blocks, int b);
/// Block permutation: block i offset t goes to block sigma(i) offset t, where
/// `sizes` are the block sizes in the source order.
Perm block_permutation(const std::vector<int>& sizes, const Perm& sigma);
/// ρ_1 ⊕ ... ⊕ ρ_m
Perm direct_sum_perm(const std::vector<Perm>& parts);

/// Induced representation: Stab(z) acting on ⊕_{σ coset rep} ⊗_i V_i, where V_i carries
/// an action of Stab(blocks[i]). Index layout: coset-major, then tensor index.
PermAction induce(const Seq& z, const std::vector<Seq>& blocks, const std::vector<const PermAction*>& block_actions);

}  // namespace opwork

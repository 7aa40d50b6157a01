#include "opwork/functors/prop.hpp"

#include <functional>

namespace opwork {

PropComponent::PropComponent(const OperadData& op, Seq z, Seq x) : op_(&op), z_(std::move(z)), x_(std::move(x)) {
  if (!is_sorted_seq(z_)) throw std::invalid_argument("prop_component: input must be an orbit representative");
  const int m = static_cast<int>(x_.size());
  const int n = static_cast<int>(z_.size());
  if (n > op.cap()) throw CapExceeded("prop_component: arity above cap");
  for (const auto& dec : block_decompositions(z_, m)) {
    Summand s;
    s.blocks = dec.blocks;
    s.inner = 1;
    for (int i = 0; i < m; ++i) {
      s.inner_dims.push_back(op.dim(dec.blocks[i], x_[i]));
      s.inner *= s.inner_dims.back();
    }
    if (s.inner == 0) continue;
    s.cosets = coset_reps(z_, s.blocks);
    s.offset = dim_;
    dim_ += s.dim();
    by_blocks_[s.blocks] = summands_.size();
    summands_.push_back(std::move(s));
  }

  right_ = PermAction(dim_, n);
  for (int j : stabilizer_generators(z_)) {
    std::vector<SparseVec> cols;
    for (std::size_t si = 0; si < summands_.size(); ++si) {
      const Summand& s = summands_[si];
      std::vector<Index> digits(m);
      for (const Perm& c : s.cosets) {
        for (Index t = 0; t < s.inner; ++t) {
          tensor_digits(s.inner_dims, t, digits);
          std::vector<OpVector> nus;
          for (int i = 0; i < m; ++i) nus.push_back(basis_op(s.blocks[i], x_[i], digits[i]));
          cols.push_back(inclusion(nus, compose_perm(c, adjacent(n, j))));
        }
      }
    }
    right_.set_generator(j, Matrix::from_columns(dim_, std::move(cols)));
  }

  left_ = PermAction(dim_, m);
  for (int j : stabilizer_generators(x_)) {
    std::vector<SparseVec> cols;
    for (const Summand& s : summands_) {
      std::vector<int> sizes;
      for (const auto& b : s.blocks) sizes.push_back(static_cast<int>(b.size()));
      const Perm sw = block_permutation(sizes, adjacent(m, j));
      std::vector<Index> digits(m);
      for (const Perm& c : s.cosets) {
        for (Index t = 0; t < s.inner; ++t) {
          tensor_digits(s.inner_dims, t, digits);
          std::vector<OpVector> nus;
          for (int i = 0; i < m; ++i) nus.push_back(basis_op(s.blocks[i], x_[i], digits[i]));
          std::swap(nus[j], nus[j + 1]);
          cols.push_back(inclusion(nus, compose_perm(sw, c)));
        }
      }
    }
    left_.set_generator(j, Matrix::from_columns(dim_, std::move(cols)));
  }
}

SparseVec PropComponent::inclusion(const std::vector<OpVector>& nus, const Perm& sigma) const {
  const std::size_t m = nus.size();
  if (m != x_.size()) throw std::invalid_argument("prop inclusion: wrong number of operations");
  std::vector<Seq> reps;
  std::vector<Perm> taus;
  for (std::size_t i = 0; i < m; ++i) {
    if (nus[i].out != x_[i]) throw std::invalid_argument("prop inclusion: output color mismatch");
    if (nus[i].coords.empty()) return SparseVec();
    reps.push_back(orbit_rep(nus[i].seq));
    taus.push_back(transport(nus[i].seq));
  }
  auto it = by_blocks_.find(reps);
  if (it == by_blocks_.end()) return SparseVec();
  const Summand& s = summands_[it->second];
  // [ν0·τ, σ] = [ν0, (⊕τ)∘σ] = [ν0·ρ, σ'] with σ' canonical
  auto [rho, canon] = canonical_split(compose_perm(direct_sum_perm(taus), sigma), z_, reps);
  Index coset = 0;
  while (s.cosets[coset] != canon) ++coset;
  SparseVec v = SparseVec::unit(0);
  for (std::size_t i = 0; i < m; ++i) {
    const SparseVec part = act_rep(*op_, reps[i], x_[i], block_part(rho, reps, static_cast<int>(i)), nus[i].coords);
    v = kron(v, s.inner_dims[i], part);
  }
  SparseVec out;
  for (const auto& [i, c] : v.entries()) out.push_back(s.offset + coset * s.inner + i, c);
  return out;
}

Matrix PropComponent::summand_inclusion(std::size_t si) const {
  const Summand& s = summands_.at(si);
  Matrix m(dim_, s.dim());
  for (Index k = 0; k < s.dim(); ++k) m.column(k) = SparseVec::unit(s.offset + k);
  return m;
}

}  // namespace opwork

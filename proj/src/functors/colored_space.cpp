#include "opwork/functors/colored_space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace opwork {

ColoredSpace ColoredSpace::uniform(const std::vector<Index>& dims) {
  ColoredSpace s;
  for (Index d : dims) s.weights.emplace_back(d, 1);
  return s;
}

std::vector<Index> ColoredSpace::dims() const {
  std::vector<Index> d;
  for (const auto& w : weights) d.push_back(w.size());
  return d;
}

Index ColoredSpace::total_dim() const {
  Index t = 0;
  for (const auto& w : weights) t += w.size();
  return t;
}

int ColoredSpace::max_weight() const {
  int m = 0;
  for (const auto& ws : weights) {
    for (int w : ws) m = std::max(m, w);
  }
  return m;
}

TensorBasis::TensorBasis(const ColoredSpace& d, const Seq& x, int weight) {
  for (int c : x) dims_.push_back(d.dim(c));
  const int n = static_cast<int>(x.size());
  // suffix minima prune branches that cannot reach the weight
  std::vector<int> min_rest(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    const auto& ws = d.weights.at(x[i]);
    if (ws.empty()) return;
    min_rest[i] = min_rest[i + 1] + *std::min_element(ws.begin(), ws.end());
  }
  std::function<void(int, int, Index)> rec = [&](int i, int left, Index idx) {
    if (i == n) {
      if (left == 0) members_.push_back(idx);
      return;
    }
    const auto& ws = d.weights[x[i]];
    for (Index b = 0; b < ws.size(); ++b) {
      if (ws[b] + min_rest[i + 1] <= left) rec(i + 1, left - ws[b], idx * dims_[i] + b);
    }
  };
  rec(0, weight, 0);
  for (Index k = 0; k < members_.size(); ++k) position_[members_[k]] = k;
}

SparseVec TensorBasis::restrict(const SparseVec& full) const {
  SparseVec out;
  for (const auto& [i, c] : full.entries()) {
    auto it = position_.find(i);
    if (it == position_.end()) throw std::logic_error("TensorBasis: tensor entry of the wrong weight");
    out.push_back(it->second, c);
  }
  return out;
}

SparseVec TensorBasis::expand(const SparseVec& local) const {
  SparseVec out;
  for (const auto& [k, c] : local.entries()) out.push_back(members_.at(k), c);
  return out;
}

SparseVec tensor_apply(const ColoredMap& phi, const Seq& x, const std::vector<Index>& src_dims, const SparseVec& t) {
  std::vector<Index> out_dims;
  for (int c : x) out_dims.push_back(phi.maps.at(c).rows());
  std::vector<Index> digits(x.size());
  std::vector<SparseVec> factors(x.size());
  SparseVec out;
  for (const auto& [i, c] : t.entries()) {
    tensor_digits(src_dims, i, digits);
    for (std::size_t s = 0; s < x.size(); ++s) factors[s] = phi.maps[x[s]].column(digits[s]);
    out.axpy(c, kron_all(factors, out_dims));
  }
  return out;
}

}  // namespace opwork

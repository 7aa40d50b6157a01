#include "opwork/linalg/perm_action.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opwork {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose_perm: size mismatch");
  Perm r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm adjacent(int n, int j) {
  Perm p = identity_perm(n);
  std::swap(p[j], p[j + 1]);
  return p;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> descent_word(Perm p) {
  std::vector<int> w;
  const int n = static_cast<int>(p.size());
  for (;;) {
    int i = 0;
    while (i + 1 < n && p[i] < p[i + 1]) ++i;
    if (i + 1 >= n) break;
    w.push_back(i);
    std::swap(p[i], p[i + 1]);  // p ∘ s_i
  }
  return w;
}

std::vector<Index> permuted_dims(const std::vector<Index>& dims_src, const Perm& sigma) {
  std::vector<Index> d(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) d[i] = dims_src.at(sigma[i]);
  return d;
}

SparseVec permute_tensor(const SparseVec& t, const std::vector<Index>& dims_src, const Perm& sigma) {
  if (sigma.size() != dims_src.size()) throw std::invalid_argument("permute_tensor: arity mismatch");
  if (is_identity(sigma)) return t;
  const std::vector<Index> dims_dst = permuted_dims(dims_src, sigma);
  std::vector<Index> src(dims_src.size());
  std::vector<Index> dst(dims_src.size());
  std::vector<SparseVec::Entry> e;
  e.reserve(t.nnz());
  for (const auto& [idx, c] : t.entries()) {
    tensor_digits(dims_src, idx, src);
    for (std::size_t i = 0; i < sigma.size(); ++i) dst[i] = src[sigma[i]];
    e.emplace_back(tensor_index(dims_dst, dst), c);
  }
  return SparseVec::from_entries(std::move(e));
}

void PermAction::set_generator(int j, Matrix m) {
  if (j < 0 || j + 1 >= degree_) throw std::out_of_range("PermAction: generator index out of range");
  if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("PermAction: generator shape mismatch");
  gens_[j] = std::move(m);
}

std::optional<std::string> PermAction::coxeter_violation() const {
  const Matrix id = Matrix::identity(dim_);
  for (const auto& [j, s] : gens_) {
    if (!(s * s == id)) return "s" + std::to_string(j) + "^2 != 1";
    for (const auto& [k, t] : gens_) {
      if (k <= j) continue;
      if (k == j + 1) {
        if (!(s * t * s == t * s * t)) return "braid relation fails for s" + std::to_string(j) + ", s" + std::to_string(k);
      } else if (!(s * t == t * s)) {
        return "s" + std::to_string(j) + " and s" + std::to_string(k) + " do not commute";
      }
    }
  }
  return std::nullopt;
}

SparseVec PermAction::act(const Perm& p, const SparseVec& v) const {
  const std::vector<int> w = descent_word(p);
  SparseVec r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto g = gens_.find(*it);
    if (g == gens_.end()) throw std::invalid_argument("PermAction::act: permutation outside the acting subgroup");
    r = g->second.apply(r);
  }
  return r;
}

Matrix PermAction::matrix(const Perm& p) const {
  Matrix m(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) m.column(j) = act(p, SparseVec::unit(j));
  return m;
}

std::vector<Perm> PermAction::group_elements() const {
  std::vector<Perm> out;
  for (const Perm& p : all_perms(degree_)) {
    bool ok = true;
    for (int i : descent_word(p)) ok = ok && gens_.count(i) != 0;
    if (ok) out.push_back(p);
  }
  return out;
}

Subspace invariants(const PermAction& a) {
  if (auto v = a.coxeter_violation()) throw std::invalid_argument("invariants: " + *v);
  const Matrix id = Matrix::identity(a.dim());
  Matrix stacked(0, a.dim());
  for (const auto& [j, s] : a.generators()) stacked = stacked.vconcat(s - id);
  return kernel(stacked);
}

Quotient coinvariants(const PermAction& a) {
  if (auto v = a.coxeter_violation()) throw std::invalid_argument("coinvariants: " + *v);
  std::vector<SparseVec> rel;
  for (const auto& [j, s] : a.generators()) {
    for (Index k = 0; k < a.dim(); ++k) {
      SparseVec r = SparseVec::unit(k) - s.column(k);
      if (!r.empty()) rel.push_back(std::move(r));
    }
  }
  return quotient(a.dim(), rel);
}

Matrix averaging_projector(const PermAction& a) {
  const auto elems = a.group_elements();
  Matrix sum(a.dim(), a.dim());
  for (const Perm& g : elems) sum = sum + a.matrix(g);
  return sum.scaled(Rational(1, static_cast<long>(elems.size())));
}

}  // namespace opwork

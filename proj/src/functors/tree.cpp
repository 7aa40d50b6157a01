#include "opwork/functors/tree.hpp"

#include <stdexcept>

#include "opwork/linalg/space.hpp"

namespace opwork {

TreeFunctor::TreeFunctor(const OperadData& op, ColoredSpace d, int budget) : op_(&op), d_(std::move(d)), budget_(budget) {
  if (d_.ncolors() != op.ncolors()) throw std::invalid_argument("tree functor: one space per color required");
}

const TreeFunctor::Piece& TreeFunctor::piece(int k, const Seq& x, int weight) {
  const auto key = std::make_tuple(k, x, weight);
  auto it = pieces_.find(key);
  if (it != pieces_.end()) return it->second;
  Piece p = build(k, x, weight);
  return pieces_.emplace(key, std::move(p)).first->second;
}

TreeFunctor::Piece TreeFunctor::build(int k, const Seq& x, int weight) {
  Piece p;
  if (weight > budget_) throw CapExceeded("tree functor: weight above budget");
  if (k == 0) {
    p.tensors = std::make_shared<TensorBasis>(d_, x, weight);
    p.dim = p.tensors->size();
    return p;
  }
  if (weight < static_cast<int>(x.size())) return p;
  const int m = static_cast<int>(x.size());
  for (auto& zs : input_tuples(*op_, x, weight)) {
    const Seq w = concat(zs);
    Block b;
    b.out_dim = dim(k - 1, w, weight);
    if (b.out_dim == 0) continue;
    b.in_dim = 1;
    for (int i = 0; i < m; ++i) {
      b.in_dims.push_back(op_->dim(zs[i], x[i]));
      b.in_dim *= b.in_dims.back();
    }
    const Index n_unknown = b.in_dim * b.out_dim;

    // L(F) = F A - B F for every stabilizer generator inside a block
    std::vector<std::vector<SparseVec::Entry>> cols(n_unknown);
    Index row_base = 0;
    std::vector<Index> digits(m);
    std::vector<int> sizes;
    for (const auto& z : zs) sizes.push_back(static_cast<int>(z.size()));
    for (int i = 0; i < m; ++i) {
      for (int j : stabilizer_generators(zs[i])) {
        std::vector<Perm> parts;
        for (int q = 0; q < m; ++q) parts.push_back(q == i ? adjacent(sizes[q], j) : identity_perm(sizes[q]));
        const Perm rho = direct_sum_perm(parts);
        const Matrix& gen = op_->component(zs[i], x[i])->action.generator(j);
        Matrix a(b.in_dim, b.in_dim);
        for (Index t = 0; t < b.in_dim; ++t) {
          tensor_digits(b.in_dims, t, digits);
          SparseVec v = SparseVec::unit(0);
          for (int q = 0; q < m; ++q) v = kron(v, b.in_dims[q], q == i ? gen.column(digits[q]) : SparseVec::unit(digits[q]));
          a.column(t) = std::move(v);
        }
        const Matrix at = a.transpose();
        const Matrix& bm = act_matrix(k - 1, w, weight, rho, w);
        for (Index jin = 0; jin < b.in_dim; ++jin) {
          for (Index t = 0; t < b.out_dim; ++t) {
            auto& col = cols[jin * b.out_dim + t];
            for (const auto& [kk, c] : at.column(jin).entries()) col.emplace_back(row_base + kk * b.out_dim + t, c);
            for (const auto& [r, c] : bm.column(t).entries()) col.emplace_back(row_base + jin * b.out_dim + r, -c);
          }
        }
        row_base += n_unknown;
      }
    }
    if (row_base == 0) {
      b.natural = Subspace::full(n_unknown);
    } else {
      std::vector<SparseVec> vs;
      for (auto& c : cols) vs.push_back(SparseVec::from_entries(std::move(c)));
      b.natural = kernel(Matrix::from_columns(row_base, std::move(vs)));
    }
    if (b.natural.dim() == 0) continue;
    b.zs = std::move(zs);
    b.offset = p.dim;
    p.dim += b.natural.dim();
    p.by_zs[b.zs] = p.blocks.size();
    p.blocks.push_back(std::move(b));
  }
  return p;
}

const Matrix& TreeFunctor::act_matrix(int k, const Seq& x, int weight, const Perm& sigma, const Seq& xp) {
  const auto key = std::make_tuple(k, xp, weight, sigma);
  auto it = act_cache_.find(key);
  if (it != act_cache_.end()) return it->second;
  const Index n = dim(k, x, weight);
  const Index np = dim(k, xp, weight);
  std::vector<SparseVec> cols;
  for (Index c = 0; c < n; ++c) cols.push_back(act(k, x, weight, SparseVec::unit(c), sigma, xp));
  return act_cache_.emplace(key, Matrix::from_columns(np, std::move(cols))).first->second;
}

SparseVec TreeFunctor::act(int k, const Seq& x, int weight, const SparseVec& phi, const Perm& sigma, const Seq& xp) {
  if (phi.empty()) return SparseVec();
  if (k == 0) {
    const Piece& src = piece(0, x, weight);
    const Piece& dst = piece(0, xp, weight);
    const SparseVec full = permute_tensor(src.tensors->expand(phi), src.tensors->dims(), sigma);
    return dst.tensors->restrict(full);
  }
  if (is_identity(sigma) && x == xp) return phi;
  const auto ck = std::make_tuple(k, xp, weight, sigma);
  if (phi.nnz() > 1 || act_cache_.count(ck)) return act_matrix(k, x, weight, sigma, xp).apply(phi);

  // (Φ·σ)(ν') = Φ(ν'_{σ⁻¹(0)}, ...)·Σ
  const Piece& dst = piece(k, xp, weight);
  const int m = static_cast<int>(x.size());
  const Perm sinv = inverse_perm(sigma);
  SparseVec out;
  for (const Block& bp : dst.blocks) {
    std::vector<Index> digits(m);
    std::vector<int> sizes;
    for (const auto& z : bp.zs) sizes.push_back(static_cast<int>(z.size()));
    const Perm big = block_permutation(sizes, sigma);
    std::vector<SparseVec::Entry> amb;
    for (Index t = 0; t < bp.in_dim; ++t) {
      tensor_digits(bp.in_dims, t, digits);
      std::vector<OpVector> nus(m);
      for (int q = 0; q < m; ++q) {
        const int src_slot = sinv[q];
        nus[q] = basis_op(bp.zs[src_slot], xp[src_slot], digits[src_slot]);
      }
      const TreeElement v = eval(k, x, weight, phi, nus);
      const SparseVec moved = act(k - 1, v.seq, weight, v.coords, big, concat(bp.zs));
      for (const auto& [o, c] : moved.entries()) amb.emplace_back(t * bp.out_dim + o, c);
    }
    const SparseVec a = SparseVec::from_entries(std::move(amb));
    if (a.empty()) continue;
    if (!bp.natural.contains(a)) throw std::logic_error("tree functor: action left the natural subspace");
    const SparseVec co = bp.natural.coords(a);
    for (const auto& [i, c] : co.entries()) out.push_back(bp.offset + i, c);
  }
  return out;
}

TreeElement TreeFunctor::eval(int k, const Seq& x, int weight, const SparseVec& phi, const std::vector<OpVector>& nus) {
  if (k < 1) throw std::invalid_argument("tree functor: cannot evaluate a level-0 element");
  const int m = static_cast<int>(x.size());
  if (static_cast<int>(nus.size()) != m) throw std::invalid_argument("tree functor: wrong number of operations");
  std::vector<Seq> seqs, reps;
  std::vector<Perm> taus;
  for (int i = 0; i < m; ++i) {
    if (nus[i].out != x[i]) throw std::invalid_argument("tree functor: color mismatch");
    seqs.push_back(nus[i].seq);
    reps.push_back(orbit_rep(nus[i].seq));
    taus.push_back(transport(nus[i].seq));
  }
  TreeElement out{concat(seqs), SparseVec()};
  const Piece& p = piece(k, x, weight);
  auto it = p.by_zs.find(reps);
  if (it == p.by_zs.end()) return out;
  const Block& b = p.blocks[it->second];
  SparseVec local;
  for (const auto& [i, c] : phi.entries()) {
    if (i >= b.offset && i < b.offset + b.natural.dim()) local.push_back(i - b.offset, c);
  }
  if (local.empty()) return out;
  std::vector<SparseVec> factors;
  for (const auto& nu : nus) factors.push_back(nu.coords);
  const SparseVec input = kron_all(factors, b.in_dims);
  if (input.empty()) return out;
  const SparseVec amb = b.natural.vector(local);
  std::vector<SparseVec::Entry> acc;
  for (const auto& [i, c] : amb.entries()) {
    const Rational ic = input.at(i / b.out_dim);
    if (!is_zero(ic)) acc.emplace_back(i % b.out_dim, c * ic);
  }
  const SparseVec val = SparseVec::from_entries(std::move(acc));
  // Φ(ν0·τ) = Φ(ν0)·(⊕τ)
  out.coords = act(k - 1, concat(reps), weight, val, direct_sum_perm(taus), out.seq);
  return out;
}

SparseVec TreeFunctor::full_eval(int k, const Seq& x, int weight, const SparseVec& phi, const Forest& f, std::size_t level) {
  if (k == 0) return piece(0, x, weight).tensors->expand(phi);
  if (phi.empty()) return SparseVec();
  const TreeElement e = eval(k, x, weight, phi, f.at(level));
  return full_eval(k - 1, e.seq, weight, e.coords, f, level + 1);
}

SparseVec TreeFunctor::coords_of(int k, const Seq& x, int weight, const std::function<SparseVec(const Forest&)>& fn) {
  const Piece& p = piece(k, x, weight);
  if (k == 0) return p.tensors->restrict(fn(Forest{}));
  SparseVec out;
  const int m = static_cast<int>(x.size());
  for (const Block& b : p.blocks) {
    const Seq w = concat(b.zs);
    std::vector<Index> digits(m);
    std::vector<SparseVec::Entry> amb;
    for (Index t = 0; t < b.in_dim; ++t) {
      tensor_digits(b.in_dims, t, digits);
      std::vector<OpVector> nus;
      for (int q = 0; q < m; ++q) nus.push_back(basis_op(b.zs[q], x[q], digits[q]));
      const SparseVec sub = coords_of(k - 1, w, weight, [&](const Forest& rest) {
        Forest full{nus};
        full.insert(full.end(), rest.begin(), rest.end());
        return fn(full);
      });
      for (const auto& [o, c] : sub.entries()) amb.emplace_back(t * b.out_dim + o, c);
    }
    const SparseVec a = SparseVec::from_entries(std::move(amb));
    if (a.empty()) continue;
    if (!b.natural.contains(a)) throw std::logic_error("tree functor: values are not natural");
    const SparseVec co = b.natural.coords(a);
    for (const auto& [i, c] : co.entries()) out.push_back(b.offset + i, c);
  }
  return out;
}

ColoredSpace TreeFunctor::as_space(int k) {
  ColoredSpace s;
  for (int y = 0; y < op_->ncolors(); ++y) {
    std::vector<int> ws;
    for (int w = 1; w <= budget_; ++w) {
      const Index d = dim(k, Seq{y}, w);
      ws.insert(ws.end(), d, w);
    }
    s.weights.push_back(std::move(ws));
  }
  return s;
}

std::pair<int, Index> TreeFunctor::locate(int k, int y, Index j) {
  for (int w = 1; w <= budget_; ++w) {
    const Index d = dim(k, Seq{y}, w);
    if (j < d) return {w, j};
    j -= d;
  }
  throw std::out_of_range("tree functor: basis index out of range");
}

Index TreeFunctor::global_index(int k, int y, int weight, Index local) {
  Index base = 0;
  for (int w = 1; w < weight; ++w) base += dim(k, Seq{y}, w);
  return base + local;
}

std::vector<Forest> split_forest(const Forest& f, std::size_t from_level, std::size_t roots) {
  std::vector<Forest> out(roots);
  // owner[s]: which root the slot s of the current level descends from
  std::vector<std::size_t> owner(roots);
  for (std::size_t r = 0; r < roots; ++r) owner[r] = r;
  for (std::size_t lv = from_level; lv < f.size(); ++lv) {
    const auto& ops = f[lv];
    if (ops.size() != owner.size()) throw std::invalid_argument("split_forest: level does not match the slots");
    for (auto& tree : out) tree.emplace_back();
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < ops.size(); ++s) {
      out[owner[s]].back().push_back(ops[s]);
      next.insert(next.end(), ops[s].seq.size(), owner[s]);
    }
    owner = std::move(next);
  }
  return out;
}

}  // namespace opwork

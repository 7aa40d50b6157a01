#include "opwork/functors/analytic.hpp"

#include <functional>

namespace opwork {

Index GradedSpace::dim(int weight, int y) const {
  auto it = dims.find({weight, y});
  return it == dims.end() ? 0 : it->second;
}

std::vector<Index> GradedSpace::weight_totals() const {
  std::vector<Index> t(cap, 0);
  for (const auto& [key, d] : dims) {
    if (key.first >= 1 && key.first <= cap) t[key.first - 1] += d;
  }
  return t;
}

Index GradedSpace::total() const {
  Index t = 0;
  for (Index d : weight_totals()) t += d;
  return t;
}

namespace {

void check_cap(const OperadData& op, int cap) {
  if (cap > op.cap()) throw CapExceeded("requested cap " + std::to_string(cap) + " exceeds operad cap " + std::to_string(op.cap()));
}

const std::vector<OrbitPiece> kNoPieces;

}  // namespace

FreeAlgebra::FreeAlgebra(const OperadData& op, std::vector<Index> a_dims, int cap)
    : op_(&op), a_dims_(std::move(a_dims)), cap_(cap) {
  check_cap(op, cap);
  if (static_cast<int>(a_dims_.size()) != op.ncolors()) throw std::invalid_argument("free_algebra: one dimension per color required");
  graded_.cap = cap;
  graded_.ncolors = op.ncolors();
  for (int n = 1; n <= cap; ++n) {
    for (int y = 0; y < op.ncolors(); ++y) {
      Index offset = 0;
      for (const Seq& x : orbits_of_length(op.ncolors(), n)) {
        const Component* c = op.component(x, y);
        if (!c) continue;
        const PermAction t = tensor_action(x, a_dims_);
        if (t.dim() == 0) continue;
        PermAction diag(c->dim() * t.dim(), n);
        for (int j : stabilizer_generators(x)) diag.set_generator(j, c->action.generator(j).kron(t.generator(j)));
        Quotient q = coinvariants(diag);
        pieces_[{n, y}].push_back(OrbitPiece{x, c->dim(), t.dim(), offset});
        offset += q.dim;
        quotients_[{n, y}].push_back(std::move(q));
      }
      graded_.dims[{n, y}] = offset;
    }
  }
}

const std::vector<OrbitPiece>& FreeAlgebra::pieces(int weight, int y) const {
  auto it = pieces_.find({weight, y});
  return it == pieces_.end() ? kNoPieces : it->second;
}

const Quotient& FreeAlgebra::quotient(int weight, int y, std::size_t piece) const {
  return quotients_.at({weight, y}).at(piece);
}

FreeAlgebra::Element FreeAlgebra::class_of(const OpVector& mu, const SparseVec& t) const {
  const int n = static_cast<int>(mu.seq.size());
  if (n > cap_) throw CapExceeded("free algebra: weight " + std::to_string(n) + " exceeds cap");
  Element e{n, mu.out, SparseVec()};
  const Seq rep = orbit_rep(mu.seq);
  const auto& ps = pieces(n, mu.out);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    if (ps[p].x != rep) continue;
    // (μ0·τ) ⊗ t ~ μ0 ⊗ τ_* t
    const SparseVec moved = permute_tensor(t, tensor_dims(mu.seq, a_dims_), inverse_perm(transport(mu.seq)));
    const SparseVec amb = kron(mu.coords, ps[p].dim_t, moved);
    const SparseVec local = quotient(n, mu.out, p).project(amb);
    for (const auto& [i, c] : local.entries()) e.coords.push_back(ps[p].offset + i, c);
  }
  return e;
}

std::vector<std::pair<OpVector, SparseVec>> FreeAlgebra::lift(const Element& e) const {
  std::vector<std::pair<OpVector, SparseVec>> terms;
  const auto& ps = pieces(e.weight, e.color);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    const Quotient& q = quotient(e.weight, e.color, p);
    SparseVec local;
    for (const auto& [i, c] : e.coords.entries()) {
      if (i >= ps[p].offset && i < ps[p].offset + q.dim) local.push_back(i - ps[p].offset, c);
    }
    const SparseVec amb = q.lift(local);
    for (const auto& [i, c] : amb.entries()) {
      terms.emplace_back(basis_op(ps[p].x, e.color, i / ps[p].dim_t), SparseVec::unit(i % ps[p].dim_t) * c);
    }
  }
  return terms;
}

FreeAlgebra::Element FreeAlgebra::multiply(const OpVector& mu, const std::vector<Element>& args) const {
  if (args.size() != mu.seq.size()) throw std::invalid_argument("multiply: wrong number of arguments");
  std::vector<std::vector<std::pair<OpVector, SparseVec>>> lifts;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].color != mu.seq[i]) throw std::invalid_argument("multiply: color mismatch");
    lifts.push_back(lift(args[i]));
    if (lifts.back().empty()) lifts.back().emplace_back(OpVector{Seq(args[i].weight, 0), mu.seq[i], SparseVec()}, SparseVec());
  }
  return multiply_terms(mu, lifts);
}

FreeAlgebra::Element FreeAlgebra::multiply_terms(const OpVector& mu,
                                                 const std::vector<std::vector<std::pair<OpVector, SparseVec>>>& args) const {
  const std::size_t m = mu.seq.size();
  if (args.size() != m) throw std::invalid_argument("multiply: wrong number of arguments");
  int total = 0;
  for (const auto& a : args) total += a.empty() ? 0 : static_cast<int>(a.front().first.seq.size());
  if (total > cap_) throw CapExceeded("multiply: weight " + std::to_string(total) + " exceeds cap");
  Element out{total, mu.out, SparseVec()};
  std::vector<OpVector> nus(m);
  std::vector<SparseVec> ts(m);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      const OpVector g = compose(*op_, mu, nus);
      if (g.coords.empty()) return;
      SparseVec t = SparseVec::unit(0);
      for (std::size_t s = 0; s < m; ++s) t = kron(t, tensor_size(tensor_dims(nus[s].seq, a_dims_)), ts[s]);
      out.coords = out.coords + class_of(g, t).coords;
      return;
    }
    for (const auto& [nu, t] : args[i]) {
      if (nu.coords.empty() || t.empty()) continue;
      nus[i] = nu;
      ts[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

FreeAlgebra::Element FreeAlgebra::generator(int c, Index i) const {
  return class_of(op_->unit(c), SparseVec::unit(i));
}

Cowedge::Cowedge(const OperadData& op, std::vector<Index> c_dims, int cap) : op_(&op), c_dims_(std::move(c_dims)), cap_(cap) {
  check_cap(op, cap);
  if (static_cast<int>(c_dims_.size()) != op.ncolors()) throw std::invalid_argument("cowedge: one dimension per color required");
  graded_.cap = cap;
  graded_.ncolors = op.ncolors();
  for (int n = 1; n <= cap; ++n) {
    for (int y = 0; y < op.ncolors(); ++y) {
      Index offset = 0;
      for (const Seq& x : orbits_of_length(op.ncolors(), n)) {
        const Component* c = op.component(x, y);
        if (!c) continue;
        const PermAction t = tensor_action(x, c_dims_);
        if (t.dim() == 0) continue;
        // F ↦ T_s F R_s on vec(F) is R_sᵀ ⊗ T_s
        PermAction hom(c->dim() * t.dim(), n);
        for (int j : stabilizer_generators(x)) hom.set_generator(j, c->action.generator(j).transpose().kron(t.generator(j)));
        Subspace inv = invariants(hom);
        pieces_[{n, y}].push_back(OrbitPiece{x, c->dim(), t.dim(), offset});
        offset += inv.dim();
        invariants_[{n, y}].push_back(std::move(inv));
      }
      graded_.dims[{n, y}] = offset;
    }
  }
}

const std::vector<OrbitPiece>& Cowedge::pieces(int weight, int y) const {
  auto it = pieces_.find({weight, y});
  return it == pieces_.end() ? kNoPieces : it->second;
}

const Subspace& Cowedge::invariant(int weight, int y, std::size_t piece) const {
  return invariants_.at({weight, y}).at(piece);
}

SparseVec Cowedge::evaluate(int weight, int y, const SparseVec& f, const OpVector& mu) const {
  const Seq rep = orbit_rep(mu.seq);
  const auto& ps = pieces(weight, y);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    if (ps[p].x != rep) continue;
    const Subspace& inv = invariant(weight, y, p);
    SparseVec local;
    for (const auto& [i, c] : f.entries()) {
      if (i >= ps[p].offset && i < ps[p].offset + inv.dim()) local.push_back(i - ps[p].offset, c);
    }
    const SparseVec amb = inv.vector(local);
    std::vector<SparseVec::Entry> acc;
    for (const auto& [i, c] : amb.entries()) {
      const Rational mc = mu.coords.at(i / ps[p].dim_t);
      if (!is_zero(mc)) acc.emplace_back(i % ps[p].dim_t, c * mc);
    }
    // f(μ0·τ) = f(μ0)·τ
    return permute_tensor(SparseVec::from_entries(std::move(acc)), tensor_dims(rep, c_dims_), transport(mu.seq));
  }
  return SparseVec();
}

}  // namespace opwork

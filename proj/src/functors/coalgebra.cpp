#include "opwork/functors/coalgebra.hpp"

#include <deque>
#include <functional>
#include <sstream>

namespace opwork {

StructureMaps::StructureMaps(const OperadData& op, std::vector<Index> dims, int cap, Kind kind)
    : op_(&op), dims_(std::move(dims)), cap_(cap), kind_(kind) {
  if (static_cast<int>(dims_.size()) != op.ncolors()) throw std::invalid_argument("structure maps: one dimension per color required");
  if (cap > op.cap()) throw CapExceeded("structure maps: cap above the operad cap");
}

void StructureMaps::set(const Seq& x, int y, Index k, Matrix m) {
  if (!is_sorted_seq(x)) throw std::invalid_argument("structure maps: sequence must be an orbit representative");
  if (static_cast<int>(x.size()) > cap_) throw CapExceeded("structure maps: arity above cap");
  if (k >= op_->dim(x, y)) throw std::invalid_argument("structure maps: basis index out of range");
  const Index t = tensor_size(tensor_dims(x, dims_));
  const Index rows = kind_ == Kind::coalgebra ? t : dims_.at(y);
  const Index cols = kind_ == Kind::coalgebra ? dims_.at(y) : t;
  if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument("structure maps: matrix shape mismatch");
  maps_[ComponentKey{x, y}][k] = std::move(m);
}

bool StructureMaps::has(const Seq& x, int y, Index k) const {
  auto it = maps_.find(ComponentKey{x, y});
  return it != maps_.end() && it->second.count(k) != 0;
}

const Matrix& StructureMaps::get(const Seq& x, int y, Index k) const {
  auto it = maps_.find(ComponentKey{x, y});
  if (it == maps_.end() || !it->second.count(k)) {
    throw std::invalid_argument("missing structure map at " + seq_key(op_->colors(), x) + "->" + op_->colors().id(y) + " basis " +
                                std::to_string(k));
  }
  return it->second.at(k);
}

std::vector<ComponentKey> StructureMaps::incomplete() const {
  std::vector<ComponentKey> out;
  for (const auto& [key, comp] : op_->components()) {
    if (static_cast<int>(key.x.size()) > cap_ || comp.dim() == 0) continue;
    auto it = maps_.find(key);
    if (it == maps_.end() || it->second.size() != comp.dim()) out.push_back(key);
  }
  return out;
}

void StructureMaps::complete_by_equivariance() {
  for (const ComponentKey& key : incomplete()) {
    const Component* comp = op_->component(key.x, key.y);
    const PermAction tens = tensor_action(key.x, dims_);
    SpanBuilder span(comp->dim(), true);
    std::vector<Matrix> values;
    std::deque<std::pair<SparseVec, Matrix>> queue;
    auto it = maps_.find(key);
    if (it != maps_.end()) {
      for (const auto& [k, m] : it->second) queue.emplace_back(SparseVec::unit(k), m);
    }
    while (!queue.empty() && span.rank() < comp->dim()) {
      auto [v, m] = std::move(queue.front());
      queue.pop_front();
      if (!span.add(v)) continue;
      values.push_back(m);
      for (const auto& [j, g] : comp->action.generators()) {
        const Matrix& t = tens.generator(j);
        queue.emplace_back(g.apply(v), kind_ == Kind::coalgebra ? t * m : m * t);
      }
    }
    if (span.rank() < comp->dim()) {
      throw std::invalid_argument("structure maps: given maps do not generate " + seq_key(op_->colors(), key.x) + "->" +
                                  op_->colors().id(key.y));
    }
    for (Index k = 0; k < comp->dim(); ++k) {
      if (has(key.x, key.y, k)) continue;
      const SparseVec c = *span.express(SparseVec::unit(k));
      Matrix acc(values[0].rows(), values[0].cols());
      for (const auto& [j, coef] : c.entries()) acc = acc + values[j].scaled(coef);
      maps_[key][k] = std::move(acc);
    }
  }
}

SparseVec StructureMaps::apply(const OpVector& mu, const SparseVec& v) const {
  const Seq rep = orbit_rep(mu.seq);
  const Perm tau = transport(mu.seq);
  if (kind_ == Kind::coalgebra) {
    SparseVec acc;
    for (const auto& [k, c] : mu.coords.entries()) acc.axpy(c, get(rep, mu.out, k).apply(v));
    // d_{μ0·τ} = (·τ) ∘ d_{μ0}
    return permute_tensor(acc, tensor_dims(rep, dims_), tau);
  }
  const SparseVec moved = permute_tensor(v, tensor_dims(mu.seq, dims_), inverse_perm(tau));
  SparseVec acc;
  for (const auto& [k, c] : mu.coords.entries()) acc.axpy(c, get(rep, mu.out, k).apply(moved));
  return acc;
}

namespace {

Rational residual(const SparseVec& a, const SparseVec& b) {
  Rational m(0);
  const SparseVec d = a - b;
  for (const auto& [i, c] : d.entries()) {
    Rational x = abs(c);
    if (x > m) m = x;
  }
  return m;
}

void expect(ValidationReport& rep, const char* kind, const SparseVec& lhs, const SparseVec& rhs, const std::function<std::string()>& where) {
  ++rep.checks;
  if (lhs == rhs) return;
  rep.failures.push_back({kind, where(), residual(lhs, rhs)});
}

std::string op_text(const OperadData& op, const Seq& x, int y, Index k) {
  return seq_key(op.colors(), x) + "->" + op.colors().id(y) + "#" + std::to_string(k);
}

void require_complete(const StructureMaps& s) {
  const auto missing = s.incomplete();
  if (!missing.empty()) {
    throw std::invalid_argument("missing structure map at " + seq_key(s.operad().colors(), missing[0].x) + "->" +
                                s.operad().colors().id(missing[0].y));
  }
}

std::vector<Index> all_basis(const Component& c) {
  std::vector<Index> out(c.dim());
  for (Index k = 0; k < c.dim(); ++k) out[k] = k;
  return out;
}

/// Calls f(μ, ν⃗) on every composable basis pair within the cap. With `generators_only`, μ and
/// the ν_i run over stabilizer-module generators; enough once equivariance holds.
void for_each_composable(const StructureMaps& s, bool generators_only,
                         const std::function<void(const OpVector&, const std::vector<OpVector>&)>& f) {
  const OperadData& op = s.operad();
  const auto basis = [&](const Component& c) { return generators_only ? module_generators(c) : all_basis(c); };
  for (const auto& [key, comp] : op.components()) {
    if (static_cast<int>(key.x.size()) > s.cap() || comp.dim() == 0) continue;
    const std::vector<Index> outer = basis(comp);
    for (const auto& zs : input_tuples(op, key.x, s.cap())) {
      std::vector<std::vector<Index>> inner;
      std::vector<Index> dims;
      for (std::size_t i = 0; i < zs.size(); ++i) {
        inner.push_back(basis(*op.component(zs[i], key.x[i])));
        dims.push_back(inner.back().size());
      }
      std::vector<Index> digits(zs.size());
      for (Index k : outer) {
        const OpVector mu = basis_op(key.x, key.y, k);
        for (Index t = 0; t < tensor_size(dims); ++t) {
          tensor_digits(dims, t, digits);
          std::vector<OpVector> nus;
          for (std::size_t i = 0; i < zs.size(); ++i) nus.push_back(basis_op(zs[i], key.x[i], inner[i][digits[i]]));
          f(mu, nus);
        }
      }
    }
  }
}

/// Unit and equivariance checks shared by both kinds.
void check_unit_and_equivariance(const StructureMaps& s, ValidationReport& rep) {
  const OperadData& op = s.operad();
  for (int y = 0; y < op.ncolors(); ++y) {
    if (s.dims()[y] == 0) continue;
    const Matrix& u = s.get(Seq{y}, y, op.unit_index(y));
    for (Index b = 0; b < s.dims()[y]; ++b) {
      expect(rep, s.kind() == StructureMaps::Kind::coalgebra ? "counit" : "unit", u.column(b), SparseVec::unit(b),
             [&] { return "identity of " + op.colors().id(y) + " on basis " + std::to_string(b); });
    }
  }
  for (const auto& [key, comp] : op.components()) {
    if (static_cast<int>(key.x.size()) > s.cap() || comp.dim() == 0) continue;
    const PermAction tens = tensor_action(key.x, s.dims());
    if (tens.dim() == 0) continue;
    for (const auto& [j, g] : comp.action.generators()) {
      for (Index k = 0; k < comp.dim(); ++k) {
        const SparseVec moved = g.column(k);
        Matrix lhs(s.get(key.x, key.y, k).rows(), s.get(key.x, key.y, k).cols());
        for (const auto& [i, c] : moved.entries()) lhs = lhs + s.get(key.x, key.y, i).scaled(c);
        const Matrix& m = s.get(key.x, key.y, k);
        const Matrix rhs = s.kind() == StructureMaps::Kind::coalgebra ? tens.generator(j) * m : m * tens.generator(j);
        for (Index c = 0; c < lhs.cols(); ++c) {
          expect(rep, "equivariance", lhs.column(c), rhs.column(c),
                 [&] { return op_text(op, key.x, key.y, k) + " s" + std::to_string(j) + " column " + std::to_string(c); });
        }
      }
    }
  }
}

}  // namespace

ValidationReport check_coalgebra(const StructureMaps& d) {
  if (d.kind() != StructureMaps::Kind::coalgebra) throw std::invalid_argument("check_coalgebra: algebra structure given");
  require_complete(d);
  ValidationReport rep;
  check_unit_and_equivariance(d, rep);
  const OperadData& op = d.operad();
  for_each_composable(d, rep.ok(), [&](const OpVector& mu, const std::vector<OpVector>& nus) {
    const OpVector g = compose(op, mu, nus);
    std::vector<Index> outer_dims = tensor_dims(mu.seq, d.dims());
    std::vector<Index> inner_sizes;
    for (const auto& nu : nus) inner_sizes.push_back(tensor_size(tensor_dims(nu.seq, d.dims())));
    std::vector<std::vector<SparseVec>> inner(nus.size());
    for (std::size_t i = 0; i < nus.size(); ++i) {
      for (Index j = 0; j < d.dims()[nus[i].out]; ++j) inner[i].push_back(d.apply(nus[i], SparseVec::unit(j)));
    }
    std::vector<Index> digits(nus.size());
    for (Index s = 0; s < d.dims()[mu.out]; ++s) {
      const SparseVec lhs = d.apply(g, SparseVec::unit(s));
      SparseVec rhs;
      const SparseVec first = d.apply(mu, SparseVec::unit(s));
      for (const auto& [idx, c] : first.entries()) {
        tensor_digits(outer_dims, idx, digits);
        SparseVec t = SparseVec::unit(0);
        for (std::size_t i = 0; i < nus.size() && !t.empty(); ++i) t = kron(t, inner_sizes[i], inner[i][digits[i]]);
        rhs.axpy(c, t);
      }
      expect(rep, "coassociativity", lhs, rhs, [&] {
        std::string w = describe(op, mu) + " ; (";
        for (std::size_t i = 0; i < nus.size(); ++i) w += (i ? ", " : "") + describe(op, nus[i]);
        return w + ") on state " + std::to_string(s);
      });
    }
  });
  return rep;
}

ValidationReport check_algebra(const StructureMaps& a) {
  if (a.kind() != StructureMaps::Kind::algebra) throw std::invalid_argument("check_algebra: coalgebra structure given");
  require_complete(a);
  ValidationReport rep;
  check_unit_and_equivariance(a, rep);
  const OperadData& op = a.operad();
  for_each_composable(a, rep.ok(), [&](const OpVector& mu, const std::vector<OpVector>& nus) {
    const OpVector g = compose(op, mu, nus);
    std::vector<Index> dims;
    for (const auto& nu : nus) dims.push_back(tensor_size(tensor_dims(nu.seq, a.dims())));
    std::vector<Index> digits(nus.size());
    const std::vector<Index> mid_dims = tensor_dims(mu.seq, a.dims());
    for (Index t = 0; t < tensor_size(dims); ++t) {
      tensor_digits(dims, t, digits);
      const SparseVec lhs = a.apply(g, SparseVec::unit(t));
      std::vector<SparseVec> parts;
      for (std::size_t i = 0; i < nus.size(); ++i) parts.push_back(a.apply(nus[i], SparseVec::unit(digits[i])));
      const SparseVec rhs = a.apply(mu, kron_all(parts, mid_dims));
      expect(rep, "associativity", lhs, rhs, [&] {
        std::string w = describe(op, mu) + " ; (";
        for (std::size_t i = 0; i < nus.size(); ++i) w += (i ? ", " : "") + describe(op, nus[i]);
        return w + ") on tensor " + std::to_string(t);
      });
    }
  });
  return rep;
}

}  // namespace opwork

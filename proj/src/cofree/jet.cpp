#include <deque>

#include "opwork/cofree/cofree.hpp"

namespace opwork {

namespace {

/// Operads loaded separately are compatible when colors and component dimensions agree.
bool same_shape(const OperadData& a, const OperadData& b) {
  if (&a == &b) return true;
  if (!(a.colors() == b.colors())) return false;
  for (const auto& [key, comp] : a.components()) {
    if (b.dim(key.x, key.y) != comp.dim()) return false;
  }
  for (const auto& [key, comp] : b.components()) {
    if (a.dim(key.x, key.y) != comp.dim()) return false;
  }
  return true;
}

void check_same(const Jet& f, const Jet& g) {
  if (!same_shape(*f.op, *g.op) || f.c_dims != g.c_dims || f.color != g.color || f.cap != g.cap) {
    throw std::invalid_argument("jets: operad, target, color or cap differ");
  }
}

}  // namespace

Jet Jet::zero(const OperadData& op, std::vector<Index> c_dims, int color, int cap) {
  if (cap > op.cap()) throw CapExceeded("jet: cap above the operad cap");
  Jet f;
  f.op = &op;
  f.c_dims = std::move(c_dims);
  f.color = color;
  f.cap = cap;
  for (const auto& [key, comp] : op.components()) {
    if (key.y != color || comp.dim() == 0 || static_cast<int>(key.x.size()) > cap) continue;
    f.components[key.x] = Matrix(tensor_size(tensor_dims(key.x, f.c_dims)), comp.dim());
  }
  return f;
}

Jet Jet::from_values(const OperadData& op, std::vector<Index> c_dims, int color, int cap,
                     const std::map<Seq, std::map<Index, SparseVec>>& values) {
  Jet f = zero(op, std::move(c_dims), color, cap);
  for (auto& [x, m] : f.components) {
    auto it = values.find(x);
    if (it == values.end() || it->second.empty()) continue;
    const Component* comp = op.component(x, color);
    const PermAction tens = tensor_action(x, f.c_dims);
    SpanBuilder span(comp->dim(), true);
    std::vector<SparseVec> vals;
    std::deque<std::pair<SparseVec, SparseVec>> queue;
    for (const auto& [k, v] : it->second) queue.emplace_back(SparseVec::unit(k), v);
    while (!queue.empty() && span.rank() < comp->dim()) {
      auto [v, val] = std::move(queue.front());
      queue.pop_front();
      if (!span.add(v)) continue;
      vals.push_back(val);
      // f(μ·s) = f(μ)·s
      for (const auto& [j, g] : comp->action.generators()) queue.emplace_back(g.apply(v), tens.generator(j).apply(val));
    }
    if (span.rank() < comp->dim()) {
      throw std::invalid_argument("jet: values do not generate the component at " + seq_key(op.colors(), x));
    }
    for (Index k = 0; k < comp->dim(); ++k) {
      SparseVec col;
      for (const auto& [j, c] : span.express(SparseVec::unit(k)).value().entries()) col.axpy(c, vals[j]);
      m.column(k) = std::move(col);
    }
  }
  return f;
}

SparseVec Jet::at(const OpVector& mu) const {
  if (mu.out != color) throw std::invalid_argument("jet: operation has the wrong output color");
  if (static_cast<int>(mu.seq.size()) > cap) throw CapExceeded("jet: arity above the jet cap");
  const Seq rep = orbit_rep(mu.seq);
  auto it = components.find(rep);
  if (it == components.end()) return SparseVec();
  SparseVec acc;
  for (const auto& [k, c] : mu.coords.entries()) acc.axpy(c, it->second.column(k));
  return permute_tensor(acc, tensor_dims(rep, c_dims), transport(mu.seq));
}

bool Jet::equivariant() const {
  for (const auto& [x, m] : components) {
    const Component* comp = op->component(x, color);
    const PermAction tens = tensor_action(x, c_dims);
    for (const auto& [j, g] : comp->action.generators()) {
      if (!(m * g == tens.generator(j) * m)) return false;
    }
  }
  return true;
}

bool jets_equal(const Jet& f, const Jet& g) {
  check_same(f, g);
  return f.components == g.components;
}

Jet jet_add(const Jet& f, const Jet& g) {
  check_same(f, g);
  Jet h = f;
  for (auto& [x, m] : h.components) m = m + g.components.at(x);
  return h;
}

Jet jet_scale(const Jet& f, const Rational& c) {
  Jet h = f;
  for (auto& [x, m] : h.components) m = m.scaled(c);
  return h;
}

}  // namespace opwork

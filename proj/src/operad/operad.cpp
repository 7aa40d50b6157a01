#include "opwork/operad/operad.hpp"

#include <deque>
#include <functional>

namespace opwork {

void OperadData::set_component(const Seq& x, int y, Component c) {
  if (!is_sorted_seq(x)) throw std::invalid_argument("set_component: input sequence must be sorted");
  if (x.empty()) throw std::invalid_argument("set_component: nullary operations are not supported");
  if (static_cast<int>(x.size()) > cap_) throw CapExceeded("set_component: arity above cap");
  if (c.action.degree() != static_cast<int>(x.size())) throw std::invalid_argument("set_component: action degree mismatch");
  if (!c.labels.empty() && c.labels.size() != c.dim()) throw std::invalid_argument("set_component: label count mismatch");
  for (int j : stabilizer_generators(x)) {
    if (c.dim() > 0 && !c.action.has_generator(j)) {
      throw std::invalid_argument("set_component: missing action of s" + std::to_string(j) + " on " + seq_key(colors_, x));
    }
  }
  for (const auto& [j, m] : c.action.generators()) {
    if (x[j] != x[j + 1]) throw std::invalid_argument("set_component: generator outside the stabilizer");
  }
  components_[ComponentKey{x, y}] = std::move(c);
}

const Component* OperadData::component(const Seq& x, int y) const {
  auto it = components_.find(ComponentKey{orbit_rep(x), y});
  if (it == components_.end() || it->second.dim() == 0) return nullptr;
  return &it->second;
}

Index OperadData::dim(const Seq& x, int y) const {
  const Component* c = component(x, y);
  return c ? c->dim() : 0;
}

void OperadData::set_gamma_table(const GammaKey& key, Matrix m) {
  Index cols = tensor_size(gamma_input_dims(key));
  if (m.rows() != gamma_output_dim(key) || m.cols() != cols) {
    throw std::invalid_argument("set_gamma_table: table shape does not match components");
  }
  tables_[key] = std::move(m);
}

std::vector<Index> OperadData::gamma_input_dims(const GammaKey& key) const {
  std::vector<Index> d{dim(key.x, key.y)};
  for (std::size_t i = 0; i < key.zs.size(); ++i) d.push_back(dim(key.zs[i], key.x.at(i)));
  return d;
}

Index OperadData::gamma_output_dim(const GammaKey& key) const { return dim(concat(key.zs), key.y); }

SparseVec OperadData::gamma_basis(const GammaKey& key, Index mu, const std::vector<Index>& nus) const {
  auto it = tables_.find(key);
  if (it != tables_.end()) {
    std::vector<Index> digits{mu};
    digits.insert(digits.end(), nus.begin(), nus.end());
    return it->second.column(tensor_index(gamma_input_dims(key), digits));
  }
  if (rule_ && gamma_output_dim(key) > 0) return rule_(key, mu, nus);
  return SparseVec();
}

Matrix OperadData::gamma_table(const GammaKey& key) const {
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  const auto dims = gamma_input_dims(key);
  const Index cols = tensor_size(dims);
  Matrix m(gamma_output_dim(key), cols);
  std::vector<Index> digits(dims.size());
  for (Index c = 0; c < cols; ++c) {
    tensor_digits(dims, c, digits);
    std::vector<Index> nus(digits.begin() + 1, digits.end());
    m.column(c) = gamma_basis(key, digits[0], nus);
  }
  return m;
}

void OperadData::materialize_gamma() {
  if (!rule_) return;
  for (const auto& key : gamma_keys()) {
    if (!tables_.count(key)) tables_[key] = gamma_table(key);
  }
  rule_ = nullptr;
}

void OperadData::set_gamma_entry(const GammaKey& key, Index row, Index col, const Rational& value) {
  Matrix m = gamma_table(key);
  m.set(row, col, value);
  tables_[key] = std::move(m);
}

std::vector<std::vector<Seq>> input_tuples(const OperadData& op, const Seq& x, int budget) {
  std::vector<std::vector<Seq>> out;
  std::vector<Seq> cur;
  const int m = static_cast<int>(x.size());
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    const int reserve = m - i - 1;
    for (int len = 1; len <= left - reserve; ++len) {
      for (const Seq& z : orbits_of_length(op.ncolors(), len)) {
        if (op.dim(z, x[i]) == 0) continue;
        cur.push_back(z);
        rec(i + 1, left - len);
        cur.pop_back();
      }
    }
  };
  rec(0, budget);
  return out;
}

std::vector<GammaKey> OperadData::gamma_keys() const {
  std::vector<GammaKey> keys;
  for (const auto& [ck, comp] : components_) {
    if (comp.dim() == 0) continue;
    for (auto& zs : input_tuples(*this, ck.x, cap_)) {
      GammaKey k{ck.x, ck.y, std::move(zs)};
      if (gamma_output_dim(k) > 0) keys.push_back(std::move(k));
    }
  }
  return keys;
}

SparseVec act_rep(const OperadData& op, const Seq& rep, int y, const Perm& rho, const SparseVec& v) {
  const Component* c = op.component(rep, y);
  if (!c) return SparseVec();
  return c->action.act(rho, v);
}

OpVector act(const OperadData& op, const OpVector& mu, const Perm& sigma, const Seq& x) {
  if (sigma.size() != x.size() || x.size() != mu.seq.size()) throw std::invalid_argument("act: arity mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != mu.seq[sigma[i]]) throw std::invalid_argument("act: permutation does not respect colors");
  }
  const Perm rho = compose_perm(compose_perm(transport(mu.seq), sigma), inverse_perm(transport(x)));
  return OpVector{x, mu.out, act_rep(op, orbit_rep(x), mu.out, rho, mu.coords)};
}

OpVector compose(const OperadData& op, const OpVector& mu, const std::vector<OpVector>& nus) {
  const int m = static_cast<int>(mu.seq.size());
  if (static_cast<int>(nus.size()) != m) throw std::invalid_argument("compose: wrong number of inputs");
  std::vector<Seq> seqs;
  int total = 0;
  for (int i = 0; i < m; ++i) {
    if (nus[i].out != mu.seq[i]) throw std::invalid_argument("compose: color mismatch at slot " + std::to_string(i));
    seqs.push_back(nus[i].seq);
    total += static_cast<int>(nus[i].seq.size());
  }
  const Seq w = concat(seqs);
  if (total > op.cap()) {
    const auto k = op.nilpotent_degree();
    if (k && total > *k) return OpVector{w, mu.out, SparseVec()};
    throw CapExceeded("compose: total arity " + std::to_string(total) + " exceeds cap");
  }
  OpVector result{w, mu.out, SparseVec()};
  if (mu.coords.empty()) return result;
  for (const auto& nu : nus) {
    if (nu.coords.empty()) return result;
  }

  const Perm tau = transport(mu.seq);
  const Perm tau_inv = inverse_perm(tau);
  GammaKey key{orbit_rep(mu.seq), mu.out, {}};
  std::vector<const OpVector*> reordered(m);
  std::vector<Perm> transports;
  for (int j = 0; j < m; ++j) {
    reordered[j] = &nus[tau_inv[j]];
    key.zs.push_back(orbit_rep(reordered[j]->seq));
    transports.push_back(transport(reordered[j]->seq));
  }

  // multilinear evaluation of the table on the coordinate tensors
  std::vector<SparseVec::Entry> acc;
  std::vector<Index> idx(m);
  std::function<void(int, Rational)> rec = [&](int j, Rational coef) {
    if (j == m) return;
    for (const auto& [k, c] : reordered[j]->coords.entries()) {
      idx[j] = k;
      if (j + 1 == m) {
        for (const auto& [mk, mc] : mu.coords.entries()) {
          const Rational f = coef * c * mc;
          const SparseVec col = op.gamma_basis(key, mk, idx);
          for (const auto& [r, v] : col.entries()) acc.emplace_back(r, f * v);
        }
      } else {
        rec(j + 1, coef * c);
      }
    }
  };
  rec(0, Rational(1));
  SparseVec c = SparseVec::from_entries(std::move(acc));
  if (c.empty()) return result;

  std::vector<int> sizes;
  for (const auto& nu : nus) sizes.push_back(static_cast<int>(nu.seq.size()));
  const Perm Sigma = block_permutation(sizes, tau);
  const Perm T = direct_sum_perm(transports);
  const Perm pi = compose_perm(compose_perm(transport(concat(key.zs)), T), Sigma);
  const Perm rho = compose_perm(pi, inverse_perm(transport(w)));
  result.coords = act_rep(op, orbit_rep(w), mu.out, rho, c);
  return result;
}

OpVector compose_at(const OperadData& op, const OpVector& mu, int slot, const OpVector& nu) {
  std::vector<OpVector> nus;
  for (int i = 0; i < static_cast<int>(mu.seq.size()); ++i) {
    nus.push_back(i == slot ? nu : op.unit(mu.seq[i]));
  }
  return compose(op, mu, nus);
}

std::vector<Index> module_generators(const Component& c) {
  std::vector<Index> gens;
  SpanBuilder span(c.dim());
  for (Index k = 0; k < c.dim() && span.rank() < c.dim(); ++k) {
    if (span.contains(SparseVec::unit(k))) continue;
    gens.push_back(k);
    std::deque<SparseVec> queue{SparseVec::unit(k)};
    while (!queue.empty()) {
      SparseVec v = std::move(queue.front());
      queue.pop_front();
      if (!span.add(v)) continue;
      for (const auto& [j, g] : c.action.generators()) queue.push_back(g.apply(v));
    }
  }
  return gens;
}

OpVector basis_op(const Seq& rep, int y, Index k) { return OpVector{rep, y, SparseVec::unit(k)}; }

}  // namespace opwork

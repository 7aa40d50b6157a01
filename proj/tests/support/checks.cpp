#include "checks.hpp"

#include <map>

#include "opwork/operad/validate.hpp"

namespace opwork::checks {

Tally alpha_injective(const OperadData& op, const std::vector<Index>& c_dims, int budget) {
  TreeFunctor fc(op, ColoredSpace::uniform(c_dims), budget);
  TreeFunctor f1(op, fc.as_space(1), budget);
  const GradedMap a = alpha(f1, 1, fc, 1, fc);
  Tally t;
  for (const auto& [key, m] : a.pieces) {
    ++t.checked;
    if (rank(m) != m.cols())
      t.failures.push_back(op.name() + " weight " + std::to_string(key.first) + " color " + op.colors().id(key.second));
  }
  return t;
}

Tally alpha_square(const OperadData& op, const std::vector<Index>& c_dims, int budget) {
  TreeFunctor fc(op, ColoredSpace::uniform(c_dims), budget);
  TreeFunctor f1(op, fc.as_space(1), budget);
  const GradedMap a11 = alpha(f1, 1, fc, 1, fc);
  TreeFunctor f2(op, f1.as_space(1), budget);
  const GradedMap path_a = compose(alpha(f1, 2, fc, 1, fc), alpha(f2, 1, f1, 1, f1));
  TreeFunctor ff(op, fc.as_space(2), budget);
  const GradedMap path_b = compose(alpha(ff, 1, fc, 2, fc), functor_map(f2, ff, 1, to_colored(a11, f1, 1, fc, 2)));
  Tally t;
  for (const auto& [key, m] : path_a.pieces) {
    ++t.checked;
    const Matrix* other = path_b.at(key.first, key.second);
    if (!other || !(*other == m)) t.failures.push_back("weight " + std::to_string(key.first));
  }
  if (path_a.pieces.size() != path_b.pieces.size()) t.failures.push_back("piece sets differ");
  return t;
}

std::vector<OpVector> basis_operations(const OperadData& op, int y, int cap) {
  std::vector<OpVector> out;
  for (const auto& [key, comp] : op.components()) {
    if (key.y != y || key.x.empty() || static_cast<int>(key.x.size()) > cap) continue;
    for (Index k = 0; k < comp.dim(); ++k) out.push_back(basis_op(key.x, y, k));
  }
  return out;
}

Tally comult_slotwise(const RepresentedElement& e, int cap) {
  const OperadData& op = e.operad();
  const Jet whole = expand(e, cap);
  // jets of the basis states, so a part's value at ν is linear in its initial vector
  std::map<std::pair<int, Index>, Jet> state_jets;
  const auto state_jet = [&](int c, Index j) -> const Jet& {
    auto it = state_jets.find({c, j});
    if (it == state_jets.end()) {
      RepresentedElement s = e;
      s.color = c;
      s.initial = SparseVec::unit(j);
      it = state_jets.emplace(std::make_pair(c, j), expand(s, cap)).first;
    }
    return it->second;
  };
  const std::vector<Index> c_dims = e.c_dims();
  Tally t;
  for (const OpVector& mu : basis_operations(op, e.color, cap)) {
    const int m = mu.seq.size();
    const auto terms = comult(e, mu);
    std::vector<std::vector<OpVector>> options;
    for (int i = 0; i < m; ++i) options.push_back(basis_operations(op, mu.seq[i], cap - m + 1));
    std::vector<std::size_t> pick(m, 0);
    bool done = false;
    for (int i = 0; i < m; ++i) done = done || options[i].empty();
    while (!done) {
      std::vector<OpVector> nus;
      int arity = 0;
      for (int i = 0; i < m; ++i) {
        nus.push_back(options[i][pick[i]]);
        arity += nus.back().seq.size();
      }
      if (arity <= cap) {
        ++t.checked;
        std::vector<Index> sizes;
        for (const auto& nu : nus) sizes.push_back(tensor_size(tensor_dims(nu.seq, c_dims)));
        SparseVec lhs;
        for (const auto& [coef, parts] : terms) {
          std::vector<SparseVec> values;
          for (int i = 0; i < m; ++i) {
            SparseVec v;
            for (const auto& [j, c] : parts[i].initial.entries()) v.axpy(c, state_jet(parts[i].color, j).at(nus[i]));
            values.push_back(std::move(v));
          }
          lhs.axpy(coef, kron_all(values, sizes));
        }
        const OpVector composite = compose(op, mu, nus);
        if (!(lhs == whole.at(composite))) t.failures.push_back(describe(op, mu) + " composed at arity " + std::to_string(arity));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      done = i == pick.size();
    }
  }
  return t;
}

Tally lift_properties(const RepresentedElement& e, int cap) {
  Tally t;
  const Index n = e.state_dims()[e.color];
  const auto lifted = [&](const SparseVec& s) { return lift(e.d, e.p, e.color, s); };
  for (Index j = 0; j < n; ++j) {
    ++t.checked;
    if (!(counit(lifted(SparseVec::unit(j))) == e.p.maps[e.color].column(j))) t.failures.push_back("counit at state " + std::to_string(j));
  }
  const Rational a(2), b(-3, 2);
  for (Index j = 0; j < n; ++j) {
    const SparseVec u = e.initial, v = SparseVec::unit(j);
    const Jet lhs = expand(lifted(u * a + v * b), cap);
    const Jet rhs = jet_add(jet_scale(expand(lifted(u), cap), a), jet_scale(expand(lifted(v), cap), b));
    ++t.checked;
    if (!jets_equal(lhs, rhs)) t.failures.push_back("linearity with state " + std::to_string(j));
  }
  return t;
}

Tally translate_closure(const RepresentedElement& e, int cap) {
  const OperadData& op = e.operad();
  const std::vector<Index> c_dims = e.c_dims();
  const Jet f = expand(e, cap);
  Tally t;
  for (const OpVector& mu : basis_operations(op, e.color, 2)) {
    const int m = mu.seq.size();
    for (int slot = 0; slot < m; ++slot) {
      // co-elements of the other slot (arity 2 has exactly one)
      const Index others = m == 1 ? 1 : c_dims[mu.seq[1 - slot]];
      for (Index j = 0; j < others; ++j) {
        Context ctx{mu, slot, {}};
        for (int i = 0; i < m; ++i) ctx.args.emplace_back(op.unit(mu.seq[i]), i == slot ? 0 : j);
        const RepresentedElement te = translate(e, ctx);
        ++t.checked;
        if (te.d != e.d) t.failures.push_back("new automaton for " + describe(op, ctx));
        if (!jets_equal(expand(te, cap - ctx.weight()), translate(f, ctx))) t.failures.push_back("jet of " + describe(op, ctx));
      }
    }
  }
  return t;
}

}  // namespace opwork::checks

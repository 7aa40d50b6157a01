#include <deque>
#include <functional>

#include "opwork/cofree/cofree.hpp"

namespace opwork {

namespace {

/// A test element ν ⊗ φ of the free algebra; one column per basis co-element φ.
struct Test {
  OpVector nu;
  int weight = 0;
  Index offset = 0;
  Index size = 0;
};

/// Values of the translate by r on ν ⊗ φ, for all φ (a tensor over C^{⊗ν.seq}).
SparseVec hole_values(const Jet& f, const Context& r, const OpVector& nu) {
  const int n = static_cast<int>(r.mu.seq.size());
  std::vector<OpVector> ops(n);
  std::vector<Index> sizes(n), fixed(n);
  for (int i = 0; i < n; ++i) {
    ops[i] = i == r.slot ? nu : r.args[i].first;
    sizes[i] = tensor_size(tensor_dims(ops[i].seq, f.c_dims));
    fixed[i] = i == r.slot ? 0 : r.args[i].second;
  }
  const SparseVec full = f.at(compose(*f.op, r.mu, ops));
  std::vector<SparseVec::Entry> out;
  std::vector<Index> digits(n);
  for (const auto& [idx, c] : full.entries()) {
    tensor_digits(sizes, idx, digits);
    bool keep = true;
    for (int b = 0; b < n && keep; ++b) keep = b == r.slot || digits[b] == fixed[b];
    if (keep) out.emplace_back(digits[r.slot], c);
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec restrict_to(const SparseVec& v, Index bound) {
  SparseVec out;
  for (const auto& [i, c] : v.entries()) {
    if (i >= bound) break;
    out.push_back(i, c);
  }
  return out;
}

struct HankelData {
  int cap = 0;
  std::vector<std::vector<Context>> contexts;  // per hole color
  std::vector<std::vector<SparseVec>> rows;    // per hole color, over the tests of weight <= cap - context weight
  std::vector<std::vector<Test>> tests;        // per color, weight ascending
  std::vector<std::vector<Index>> prefix;      // prefix[c][b]: columns of tests with weight <= b
  HankelReport report;
};

std::vector<Test> make_tests(const OperadData& op, const std::vector<Index>& c_dims, int c, int max_weight) {
  std::vector<Test> out;
  Index offset = 0;
  for (int m = 1; m <= max_weight; ++m) {
    for (const Seq& z : orbits_of_length(op.ncolors(), m)) {
      const Component* comp = op.component(z, c);
      if (!comp) continue;
      const Index size = tensor_size(tensor_dims(z, c_dims));
      if (size == 0) continue;
      for (Index g : module_generators(*comp)) {
        out.push_back(Test{basis_op(z, c, g), m, offset, size});
        offset += size;
      }
    }
  }
  return out;
}

/// Contexts μ(c_1, ..., _, ..., c_n) with μ a module generator and c_i basis co-elements of C.
std::vector<Context> make_contexts(const OperadData& op, const std::vector<Index>& c_dims, int y, int max_weight) {
  std::vector<Context> out;
  for (int n = 1; n <= max_weight + 1; ++n) {
    for (const Seq& x : orbits_of_length(op.ncolors(), n)) {
      const Component* comp = op.component(x, y);
      if (!comp) continue;
      for (Index g : module_generators(*comp)) {
        for (int k = 0; k < n; ++k) {
          std::vector<Index> dims;
          for (int i = 0; i < n; ++i) dims.push_back(i == k ? 1 : c_dims[x[i]]);
          std::vector<Index> digits(n);
          for (Index t = 0; t < tensor_size(dims); ++t) {
            tensor_digits(dims, t, digits);
            Context ctx{basis_op(x, y, g), k, {}};
            for (int i = 0; i < n; ++i) ctx.args.emplace_back(op.unit(x[i]), digits[i]);
            out.push_back(std::move(ctx));
          }
        }
      }
    }
  }
  return out;
}

SparseVec row_of(const Jet& f, const Context& r, const std::vector<Test>& tests, int budget) {
  std::vector<SparseVec::Entry> acc;
  for (const Test& t : tests) {
    if (t.weight > budget) break;
    for (const auto& [i, c] : hole_values(f, r, t.nu).entries()) acc.emplace_back(t.offset + i, c);
  }
  return SparseVec::from_entries(std::move(acc));
}

Index rank_at(const HankelData& h, int a, int b, std::vector<std::vector<std::size_t>>* pivots = nullptr) {
  Index total = 0;
  if (pivots) pivots->assign(h.contexts.size(), {});
  for (std::size_t c = 0; c < h.contexts.size(); ++c) {
    const Index bound = h.prefix[c][b];
    SpanBuilder span(bound);
    for (std::size_t r = 0; r < h.contexts[c].size(); ++r) {
      if (h.contexts[c][r].weight() > a) break;
      if (span.add(restrict_to(h.rows[c][r], bound)) && pivots) (*pivots)[c].push_back(r);
    }
    total += span.rank();
  }
  return total;
}

HankelData analyze(const Jet& f) {
  const OperadData& op = *f.op;
  HankelData h;
  h.cap = f.cap;
  const int nc = op.ncolors();
  h.contexts.resize(nc);
  h.rows.resize(nc);
  for (int c = 0; c < nc; ++c) {
    h.tests.push_back(make_tests(op, f.c_dims, c, f.cap));
    std::vector<Index> pre(f.cap + 1, 0);
    for (const Test& t : h.tests[c]) pre[t.weight] = t.offset + t.size;
    for (int b = 1; b <= f.cap; ++b) pre[b] = std::max(pre[b], pre[b - 1]);
    h.prefix.push_back(std::move(pre));
  }
  for (Context& r : make_contexts(op, f.c_dims, f.color, f.cap - 1)) {
    const int c = r.hole_color();
    h.rows[c].push_back(row_of(f, r, h.tests[c], f.cap - r.weight()));
    h.contexts[c].push_back(std::move(r));
  }
  for (int l = 1; l <= f.cap; ++l) {
    Index best = 0;
    int split = 0;
    for (int a = 0; a < l; ++a) {
      const Index r = rank_at(h, a, l - a);
      if (r > best) {
        best = r;
        split = a;
      }
    }
    h.report.ranks.push_back(best);
    h.report.splits.push_back(split);
  }
  const auto& rk = h.report.ranks;
  h.report.stabilized = rk.size() >= 2 ? rk[rk.size() - 1] == rk[rk.size() - 2] : !rk.empty();
  std::vector<std::vector<std::size_t>> piv;
  rank_at(h, h.report.splits.back(), f.cap - h.report.splits.back(), &piv);
  for (int c = 0; c < nc; ++c) {
    for (std::size_t r : piv[c]) h.report.witness_contexts.push_back(describe(op, h.contexts[c][r]));
  }
  return h;
}

/// Exact solution of Σ_J X_J coef_J = rhs over the collected equations, free variables zero.
struct Solver {
  explicit Solver(Index n) : n_(n), coef_(n), aug_(n + 1) {}
  bool determined() const { return coef_.rank() == n_; }
  void add(const SparseVec& coef, const Rational& rhs) {
    if (coef.empty() && is_zero(rhs)) return;
    SparseVec row = coef;
    if (!is_zero(rhs)) row.push_back(n_, rhs);
    if (determined()) {
      consistent_ = consistent_ && aug_.contains(row);
      return;
    }
    coef_.add(coef);
    aug_.add(row);
  }
  std::optional<SparseVec> solution() const {
    if (!consistent_ || aug_.is_pivot(n_)) return std::nullopt;
    SparseVec x;
    for (Index p : aug_.pivots()) {
      const Rational v = aug_.row(p).at(n_);
      if (!is_zero(v)) x.push_back(p, v);
    }
    return x;
  }

 private:
  Index n_;
  SpanBuilder coef_;
  SpanBuilder aug_;
  bool consistent_ = true;
};

class Realizer {
 public:
  Realizer(const Jet& f, HankelData& h) : f_(f), op_(*f.op), h_(h) {}

  std::variant<RepresentedElement, RealizationFailure> run();

 private:
  RealizationFailure fail(std::string reason) const { return RealizationFailure{h_.report, std::move(reason)}; }
  std::optional<SparseVec> solve(const OpVector& mu, std::size_t state);
  Matrix composite_value(const OpVector& mu, const std::vector<OpVector>& nus) const;

  const Jet& f_;
  const OperadData& op_;
  HankelData& h_;
  int b_ = 0;
  std::vector<Index> n_;                        // states per color
  std::vector<Context> states_;                 // all states, colors in order
  std::vector<std::size_t> first_;              // index of the first state of each color
  std::vector<std::vector<SparseVec>> ecol_;    // ecol_[c][column] over the states of color c
  std::unique_ptr<StructureMaps> d_;
};

Matrix Realizer::composite_value(const OpVector& mu, const std::vector<OpVector>& nus) const {
  const int y = mu.out;
  Seq w;
  std::vector<Index> inner;
  for (const auto& nu : nus) {
    w.insert(w.end(), nu.seq.begin(), nu.seq.end());
    inner.push_back(tensor_size(tensor_dims(nu.seq, n_)));
  }
  const std::vector<Index> mid = tensor_dims(mu.seq, n_);
  const Perm back = inverse_perm(transport(w));
  std::vector<SparseVec> cols;
  std::vector<Index> digits(mu.seq.size());
  for (Index s = 0; s < n_[y]; ++s) {
    SparseVec acc;
    for (const auto& [idx, c] : d_->apply(mu, SparseVec::unit(s)).entries()) {
      tensor_digits(mid, idx, digits);
      SparseVec t = SparseVec::unit(0);
      for (std::size_t i = 0; i < nus.size() && !t.empty(); ++i) t = kron(t, inner[i], d_->apply(nus[i], SparseVec::unit(digits[i])));
      acc.axpy(c, t);
    }
    // d_{v·τ} = (·τ) ∘ d_v, so d_v = (·τ⁻¹) ∘ d_{v·τ}
    cols.push_back(permute_tensor(acc, tensor_dims(w, n_), back));
  }
  return Matrix::from_columns(tensor_size(tensor_dims(orbit_rep(w), n_)), std::move(cols));
}

std::optional<SparseVec> Realizer::solve(const OpVector& mu, std::size_t state) {
  const Context& r = states_[state];
  const int n = static_cast<int>(mu.seq.size());
  const std::vector<Index> sdims = tensor_dims(mu.seq, n_);
  Solver solver(tensor_size(sdims));
  const int budget = f_.cap - r.weight();
  std::vector<const Test*> pick(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (solver.determined()) return;
    if (i == n) {
      std::vector<OpVector> nus;
      std::vector<Index> sizes;
      for (const Test* t : pick) {
        nus.push_back(t->nu);
        sizes.push_back(t->size);
      }
      const OpVector inner = compose(op_, mu, nus);
      const SparseVec vals = inner.coords.empty() ? SparseVec() : hole_values(f_, r, inner);
      std::vector<Index> phi(n);
      const Index combos = tensor_size(sizes);
      for (Index t = 0; t < combos && !solver.determined(); ++t) {
        tensor_digits(sizes, t, phi);
        std::vector<SparseVec> parts;
        for (int j = 0; j < n; ++j) parts.push_back(ecol_[mu.seq[j]][pick[j]->offset + phi[j]]);
        solver.add(kron_all(parts, sdims), vals.at(t));
      }
      return;
    }
    for (const Test& t : h_.tests[mu.seq[i]]) {
      if (t.weight > b_ || t.weight > left - (n - i - 1)) break;
      pick[i] = &t;
      rec(i + 1, left - t.weight);
    }
  };
  rec(0, budget);
  return solver.solution();
}

std::variant<RepresentedElement, RealizationFailure> Realizer::run() {
  if (!h_.report.stabilized) return fail("Hankel ranks did not stabilize within the cap");
  const int nc = op_.ncolors();
  const int a = h_.report.splits.back();
  b_ = f_.cap - a;
  std::vector<std::vector<std::size_t>> piv;
  rank_at(h_, a, b_, &piv);
  n_.assign(nc, 0);
  ecol_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    first_.push_back(states_.size());
    n_[c] = piv[c].size();
    const Index bound = h_.prefix[c][b_];
    std::vector<std::vector<SparseVec::Entry>> cols(bound);
    for (std::size_t i = 0; i < piv[c].size(); ++i) {
      states_.push_back(h_.contexts[c][piv[c][i]]);
      for (const auto& [col, v] : restrict_to(h_.rows[c][piv[c][i]], bound).entries()) cols[col].emplace_back(i, v);
    }
    for (auto& col : cols) ecol_[c].push_back(SparseVec::from_entries(std::move(col)));
  }

  // initial state: the row of f itself in the basis of pivot rows
  const int y = f_.color;
  SparseVec s0;
  {
    const Index bound = h_.prefix[y][b_];
    SpanBuilder span(bound, true);
    for (std::size_t r : piv[y]) span.add(restrict_to(h_.rows[y][r], bound));
    const Context self{op_.unit(y), 0, {{op_.unit(y), 0}}};
    const auto e = span.express(restrict_to(row_of(f_, self, h_.tests[y], f_.cap), bound));
    if (!e) return fail("the jet is not in the span of its translates");
    s0 = *e;
  }

  // output p(s) = s(id ⊗ e_j)
  ColoredMap p;
  for (int c = 0; c < nc; ++c) {
    std::vector<SparseVec> cols;
    for (Index i = 0; i < n_[c]; ++i) cols.push_back(hole_values(f_, states_[first_[c] + i], op_.unit(c)));
    p.maps.push_back(Matrix::from_columns(f_.c_dims[c], std::move(cols)));
  }

  d_ = std::make_unique<StructureMaps>(op_, n_, f_.cap, StructureMaps::Kind::coalgebra);
  for (int arity = 1; arity <= f_.cap; ++arity) {
    for (const auto& [key, comp] : op_.components()) {
      if (static_cast<int>(key.x.size()) != arity || comp.dim() == 0) continue;
      const Index rows = tensor_size(tensor_dims(key.x, n_));
      const Index cols = n_[key.y];
      if (rows == 0 || cols == 0) {
        for (Index k = 0; k < comp.dim(); ++k) d_->set(key.x, key.y, k, Matrix(rows, cols));
        continue;
      }
      const PermAction tens = tensor_action(key.x, n_);
      SpanBuilder span(comp.dim(), true);
      std::vector<Matrix> values;
      const auto full = [&] { return span.rank() == comp.dim(); };
      // closure of one seed under the stabilizer: d_{μ·s} = s·d_μ
      const auto absorb = [&](SparseVec v0, Matrix m0) {
        std::deque<std::pair<SparseVec, Matrix>> queue;
        queue.emplace_back(std::move(v0), std::move(m0));
        while (!queue.empty() && !full()) {
          auto [v, m] = std::move(queue.front());
          queue.pop_front();
          if (!span.add(v)) continue;
          values.push_back(m);
          for (const auto& [j, g] : comp.action.generators()) queue.emplace_back(g.apply(v), tens.generator(j) * m);
        }
      };
      if (arity == 1 && key.x[0] == key.y) absorb(op_.unit(key.y).coords, Matrix::identity(cols));
      for (int m = 2; m < arity && !full(); ++m) {
        for (const Seq& xp : orbits_of_length(nc, m)) {
          const Component* outer = op_.component(xp, key.y);
          if (!outer || full()) continue;
          for (const auto& zs : input_tuples(op_, xp, arity)) {
            const Seq w = concat(zs);
            if (full() || static_cast<int>(w.size()) != arity || orbit_rep(w) != key.x) continue;
            std::vector<std::vector<Index>> gens;
            for (std::size_t i = 0; i < zs.size(); ++i) gens.push_back(module_generators(*op_.component(zs[i], xp[i])));
            std::vector<Index> gdims;
            for (const auto& g : gens) gdims.push_back(g.size());
            std::vector<Index> gd(zs.size());
            for (Index g : module_generators(*outer)) {
              const OpVector mu = basis_op(xp, key.y, g);
              for (Index t = 0; t < tensor_size(gdims) && !full(); ++t) {
                tensor_digits(gdims, t, gd);
                std::vector<OpVector> nus;
                for (std::size_t i = 0; i < zs.size(); ++i) nus.push_back(basis_op(zs[i], xp[i], gens[i][gd[i]]));
                const OpVector v = compose(op_, mu, nus);
                if (!v.coords.empty() && !span.contains(v.coords)) absorb(v.coords, composite_value(mu, nus));
              }
            }
          }
        }
      }
      while (!full()) {
        Index k = 0;
        while (span.contains(SparseVec::unit(k))) ++k;
        const OpVector mu = basis_op(key.x, key.y, k);
        std::vector<SparseVec> mcols;
        for (Index s = 0; s < cols; ++s) {
          const auto x = solve(mu, first_[key.y] + s);
          if (!x) return fail("no consistent cooperation at " + describe(op_, mu));
          mcols.push_back(*x);
        }
        absorb(SparseVec::unit(k), Matrix::from_columns(rows, std::move(mcols)));
      }
      for (Index k = 0; k < comp.dim(); ++k) {
        Matrix acc(rows, cols);
        for (const auto& [j, c] : span.express(SparseVec::unit(k)).value().entries()) acc = acc + values[j].scaled(c);
        d_->set(key.x, key.y, k, std::move(acc));
      }
    }
  }

  std::shared_ptr<const StructureMaps> d(std::move(d_));
  RepresentedElement e{d, std::move(p), y, std::move(s0)};
  const ValidationReport check = check_coalgebra(*d);
  if (!check.ok()) return fail("synthesized cooperations fail " + check.failures.front().kind + " at " + check.failures.front().where);
  if (!jets_equal(expand(e, f_.cap), f_)) return fail("synthesized element does not reproduce the jet");
  return e;
}

}  // namespace

HankelReport hankel(const Jet& f) { return analyze(f).report; }

std::variant<RepresentedElement, RealizationFailure> realize(const Jet& f) {
  HankelData h = analyze(f);
  return Realizer(f, h).run();
}

}  // namespace opwork

#include "opwork/cofree/cofree.hpp"

namespace opwork {

namespace {

/// Entries of a tensor over the concatenated blocks whose indices outside `hole` equal `fixed`,
/// as a tensor over the hole block.
SparseVec contract(const SparseVec& full, const std::vector<Index>& sizes, int hole, const std::vector<Index>& fixed) {
  std::vector<SparseVec::Entry> out;
  const int m = static_cast<int>(sizes.size());
  std::vector<Index> digits(m);
  for (const auto& [idx, c] : full.entries()) {
    tensor_digits(sizes, idx, digits);
    bool keep = true;
    for (int b = 0; b < m && keep; ++b) keep = b == hole || digits[b] == fixed[b];
    if (keep) out.emplace_back(digits[hole], c);
  }
  return SparseVec::from_entries(std::move(out));
}

void check_context(const OperadData& op, const Context& c, int color) {
  const int n = static_cast<int>(c.mu.seq.size());
  if (c.mu.out != color) throw std::invalid_argument("context: output color does not match");
  if (c.slot < 0 || c.slot >= n) throw std::invalid_argument("context: hole slot out of range");
  if (static_cast<int>(c.args.size()) != n) throw std::invalid_argument("context: one argument per slot expected");
  for (int i = 0; i < n; ++i) {
    if (i != c.slot && c.args[i].first.out != c.mu.seq[i]) throw std::invalid_argument("context: argument color mismatch");
  }
  (void)op;
}

}  // namespace

int Context::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (static_cast<int>(i) != slot) w += static_cast<int>(args[i].first.seq.size());
  }
  return w;
}

std::string describe(const OperadData& op, const Context& c) {
  std::string s = describe(op, c.mu) + " hole " + std::to_string(c.slot) + " (";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) s += ", ";
    s += static_cast<int>(i) == c.slot ? std::string("_") : describe(op, c.args[i].first) + ":" + std::to_string(c.args[i].second);
  }
  return s + ")";
}

std::vector<Index> RepresentedElement::c_dims() const {
  std::vector<Index> out;
  for (const auto& m : p.maps) out.push_back(m.rows());
  return out;
}

Index RepresentedElement::state_dim() const {
  Index n = 0;
  for (Index d : state_dims()) n += d;
  return n;
}

Jet expand(const RepresentedElement& e, int cap) {
  if (cap > e.d->cap()) throw CapExceeded("expand: cap above the presentation cap");
  Jet f = Jet::zero(e.operad(), e.c_dims(), e.color, cap);
  for (auto& [x, m] : f.components) {
    const std::vector<Index> sdims = tensor_dims(x, e.state_dims());
    for (Index k = 0; k < m.cols(); ++k) {
      m.column(k) = tensor_apply(e.p, x, sdims, e.d->get(x, e.color, k).apply(e.initial));
    }
  }
  return f;
}

Jet translate(const Jet& f, const Context& c) {
  const OperadData& op = *f.op;
  check_context(op, c, f.color);
  const int budget = f.cap - c.weight();
  if (budget < 1) throw CapExceeded("translate: the context uses the whole budget");
  Jet g = Jet::zero(op, f.c_dims, c.hole_color(), budget);
  const int n = static_cast<int>(c.mu.seq.size());
  std::vector<OpVector> ops(n);
  std::vector<Index> sizes(n), fixed(n);
  for (int i = 0; i < n; ++i) {
    if (i == c.slot) continue;
    ops[i] = c.args[i].first;
    sizes[i] = tensor_size(tensor_dims(ops[i].seq, f.c_dims));
    fixed[i] = c.args[i].second;
  }
  for (auto& [z, m] : g.components) {
    sizes[c.slot] = tensor_size(tensor_dims(z, f.c_dims));
    for (Index k = 0; k < m.cols(); ++k) {
      ops[c.slot] = basis_op(z, c.hole_color(), k);
      m.column(k) = contract(f.at(compose(op, c.mu, ops)), sizes, c.slot, fixed);
    }
  }
  return g;
}

RepresentedElement translate(const RepresentedElement& e, const Context& c) {
  check_context(e.operad(), c, e.color);
  const int n = static_cast<int>(c.mu.seq.size());
  const auto& sd = e.state_dims();
  // ev_i(s) = ψ_i((p ⊗ ... ⊗ p) d_{λ_i}(s))
  std::vector<std::vector<Rational>> ev(n);
  for (int i = 0; i < n; ++i) {
    if (i == c.slot) continue;
    const OpVector& lam = c.args[i].first;
    const std::vector<Index> ldims = tensor_dims(lam.seq, sd);
    for (Index j = 0; j < sd[c.mu.seq[i]]; ++j) {
      ev[i].push_back(tensor_apply(e.p, lam.seq, ldims, e.d->apply(lam, SparseVec::unit(j))).at(c.args[i].second));
    }
  }
  const SparseVec t = e.d->apply(c.mu, e.initial);
  const std::vector<Index> dims = tensor_dims(c.mu.seq, sd);
  std::vector<Index> digits(n);
  std::vector<SparseVec::Entry> acc;
  for (const auto& [idx, coef] : t.entries()) {
    tensor_digits(dims, idx, digits);
    Rational v = coef;
    for (int i = 0; i < n && !is_zero(v); ++i) {
      if (i != c.slot) v *= ev[i][digits[i]];
    }
    if (!is_zero(v)) acc.emplace_back(digits[c.slot], v);
  }
  return RepresentedElement{e.d, e.p, c.hole_color(), SparseVec::from_entries(std::move(acc))};
}

std::vector<std::pair<Rational, std::vector<RepresentedElement>>> comult(const RepresentedElement& e, const OpVector& mu) {
  if (static_cast<int>(mu.seq.size()) > e.d->cap()) throw CapExceeded("comult: arity above the presentation cap");
  if (mu.out != e.color) throw std::invalid_argument("comult: operation has the wrong output color");
  const SparseVec t = e.d->apply(mu, e.initial);
  const std::vector<Index> dims = tensor_dims(mu.seq, e.state_dims());
  std::vector<Index> digits(mu.seq.size());
  std::vector<std::pair<Rational, std::vector<RepresentedElement>>> out;
  for (const auto& [idx, coef] : t.entries()) {
    tensor_digits(dims, idx, digits);
    std::vector<RepresentedElement> parts;
    for (std::size_t i = 0; i < mu.seq.size(); ++i) parts.push_back(RepresentedElement{e.d, e.p, mu.seq[i], SparseVec::unit(digits[i])});
    out.emplace_back(coef, std::move(parts));
  }
  return out;
}

SparseVec counit(const RepresentedElement& e) { return e.p.maps.at(e.color).apply(e.initial); }

RepresentedElement lift(std::shared_ptr<const StructureMaps> d, ColoredMap p, int color, SparseVec d0) {
  const OperadData& op = d->operad();
  if (static_cast<int>(p.maps.size()) != op.ncolors()) throw std::invalid_argument("lift: one output map per color expected");
  for (int c = 0; c < op.ncolors(); ++c) {
    if (p.maps[c].cols() != d->dims()[c]) throw std::invalid_argument("lift: output map does not match the states");
  }
  if (color < 0 || color >= op.ncolors() || d0.extent() > d->dims()[color]) throw std::invalid_argument("lift: initial vector out of range");
  const ValidationReport rep = check_coalgebra(*d);
  if (!rep.ok()) {
    const auto& f = rep.failures.front();
    throw std::invalid_argument("lift: not a coalgebra (" + std::to_string(rep.failures.size()) + " failures, first: " + f.kind + " at " +
                                f.where + ")");
  }
  return RepresentedElement{std::move(d), std::move(p), color, std::move(d0)};
}

}  // namespace opwork

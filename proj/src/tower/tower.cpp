#include "opwork/tower/tower.hpp"

#include <memory>

#include "opwork/linalg/space.hpp"

namespace opwork {

namespace {

int budget_for(const OperadData& op, int levels) {
  const auto k = op.nilpotent_degree();
  if (!k) throw std::invalid_argument("tower: operad '" + op.name() + "' is not nilpotent, so P^∧(C) is infinite-dimensional");
  int b = 1;
  for (int i = 0; i < levels; ++i) b *= *k;
  return b;
}

Index weight_offset(const ColoredSpace& s, int y, int w) {
  Index n = 0;
  for (int v : s.weights.at(y)) n += v < w ? 1 : 0;
  return n;
}

ColoredSpace space_from(const GradedMap& g, int ncolors, int budget) {
  ColoredSpace s;
  for (int y = 0; y < ncolors; ++y) {
    std::vector<int> ws;
    for (int w = 1; w <= budget; ++w) {
      const Matrix* m = g.at(w, y);
      if (m) ws.insert(ws.end(), m->cols(), w);
    }
    s.weights.push_back(std::move(ws));
  }
  return s;
}

/// Per-color matrices of a graded map between weight-ordered spaces.
ColoredMap colored(const GradedMap& g, const ColoredSpace& src, const ColoredSpace& dst) {
  ColoredMap out;
  for (int y = 0; y < src.ncolors(); ++y) {
    Matrix m(dst.dim(y), src.dim(y));
    for (const auto& [key, piece] : g.pieces) {
      if (key.second != y) continue;
      const Index so = weight_offset(src, y, key.first);
      const Index d_o = weight_offset(dst, y, key.first);
      for (Index c = 0; c < piece.cols(); ++c) {
        SparseVec col;
        for (const auto& [r, v] : piece.column(c).entries()) col.push_back(d_o + r, v);
        m.column(so + c) = std::move(col);
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

GradedMap identity_map(TreeFunctor& t, int k) {
  GradedMap g;
  for (int y = 0; y < t.operad().ncolors(); ++y) {
    for (int w = 1; w <= t.budget(); ++w) g.pieces[{w, y}] = Matrix::identity(t.dim(k, Seq{y}, w));
  }
  return g;
}

/// Evaluation at the operad unit, P^∧(Y) → Y.
GradedMap counit(TreeFunctor& t) {
  GradedMap g;
  const OperadData& op = t.operad();
  const ColoredSpace& base = t.base();
  for (int y = 0; y < op.ncolors(); ++y) {
    for (int w = 1; w <= t.budget(); ++w) {
      const Index off = weight_offset(base, y, w);
      Index rows = 0;
      for (int v : base.weights[y]) rows += v == w ? 1 : 0;
      std::vector<SparseVec> cols;
      for (Index b = 0; b < t.dim(1, Seq{y}, w); ++b) {
        const SparseVec full = t.full_eval(1, Seq{y}, w, SparseVec::unit(b), Forest{{op.unit(y)}});
        SparseVec col;
        for (const auto& [i, c] : full.entries()) col.push_back(i - off, c);
        cols.push_back(std::move(col));
      }
      g.pieces[{w, y}] = Matrix::from_columns(rows, std::move(cols));
    }
  }
  return g;
}

bool injective(const GradedMap& g) {
  for (const auto& [key, m] : g.pieces) {
    if (rank(m) != m.cols()) return false;
  }
  return true;
}

Index total_rank(const GradedMap& g) {
  Index r = 0;
  for (const auto& [key, m] : g.pieces) r += rank(m);
  return r;
}

Index total_cols(const GradedMap& g) {
  Index n = 0;
  for (const auto& [key, m] : g.pieces) n += m.cols();
  return n;
}

void corrupt_rank(GradedMap& g) {
  for (auto& [key, m] : g.pieces) {
    if (m.cols() >= 2 && !m.column(1).empty()) {
      m.column(0) = m.column(1);
      return;
    }
  }
  for (auto& [key, m] : g.pieces) {
    if (m.cols() >= 1 && !m.column(0).empty()) {
      m.column(0) = SparseVec();
      return;
    }
  }
}

void corrupt_entry(GradedMap& g) {
  for (int pass = 0; pass < 2; ++pass) {
    for (auto& [key, m] : g.pieces) {
      if ((pass == 1 || key.first >= 2) && m.rows() > 0 && m.cols() > 0) {
        m.add_to(0, 0, Rational(1));
        return;
      }
    }
  }
}

/// Q_1 evaluated at a graded space Y: the pullback of Δ and α_{1,1}.
struct Lifting {
  std::unique_ptr<TreeFunctor> p;   // P^∧ and P^∧_2 over Y
  std::unique_ptr<TreeFunctor> pp;  // P^∧ over P^∧(Y)
  GradedMap delta, alpha, chi, lift;
  ColoredSpace space;
};

Lifting first_stage(const OperadData& op, const ColoredSpace& y, int budget, const TowerOptions& opts) {
  Lifting s;
  s.p = std::make_unique<TreeFunctor>(op, y, budget);
  s.pp = std::make_unique<TreeFunctor>(op, s.p->as_space(1), budget);
  s.delta = diagonal(*s.p);
  s.alpha = alpha(*s.pp, 1, *s.p, 1, *s.p);
  if (opts.corrupt_alpha) corrupt_rank(s.alpha);
  if (opts.corrupt_delta) corrupt_entry(s.delta);
  for (const auto& [key, d] : s.delta.pieces) {
    Pullback pb = pullback(d, s.alpha.pieces.at(key));
    s.chi.pieces[key] = std::move(pb.p1);
    s.lift.pieces[key] = std::move(pb.p2);
  }
  s.space = space_from(s.chi, op.ncolors(), budget);
  return s;
}

/// The data of the diagram defining Q_2 over a computed first stage.
struct SecondStage {
  Lifting lx;                        // Q_1 at X = Q_1(C)
  std::unique_ptr<TreeFunctor> ppp;  // P^∧ over (P^∧)^2(C)
  GradedMap chi_sq;                  // χ_1^2 : Q_1 Q_1 → (P^∧)^2
  GradedMap left, right;             // δ_1χ_1, χ_1δ_1 : Q_1 Q_1 → (P^∧)^3
  GradedMap chi, delta;              // projections of the pullback Q_1 ×_{(P^∧)^2} Q_1 Q_1
  GradedMap chi_eq, delta_eq;        // χ_2, δ_2 after equalizing δ_1χ_1 and χ_1δ_1
};

SecondStage second_stage(const OperadData& op, Lifting& lc, int budget) {
  SecondStage s;
  s.lx = first_stage(op, lc.space, budget, TowerOptions{});
  TreeFunctor& tcc = *lc.pp;
  s.ppp = std::make_unique<TreeFunctor>(op, tcc.as_space(1), budget);
  const ColoredMap chi_c = colored(lc.chi, lc.space, lc.p->as_space(1));
  const GradedMap p_chi = functor_map(*s.lx.p, tcc, 1, chi_c);
  const GradedMap pp_chi = functor_map(*s.lx.pp, *s.ppp, 1, to_colored(p_chi, *s.lx.p, 1, tcc, 1));
  const GradedMap p_delta = functor_map(*s.lx.p, *s.ppp, 1, colored(lc.lift, lc.space, tcc.as_space(1)));
  s.chi_sq = compose(p_chi, s.lx.chi);
  s.left = compose(pp_chi, s.lx.lift);
  s.right = compose(p_delta, s.lx.chi);
  for (const auto& [key, d] : lc.lift.pieces) {
    const Pullback pb = pullback(d, s.chi_sq.pieces.at(key));
    const Matrix keep = kernel((s.left.pieces.at(key) - s.right.pieces.at(key)) * pb.p2).basis();
    s.chi_eq.pieces[key] = pb.p1 * keep;
    s.delta_eq.pieces[key] = pb.p2 * keep;
    s.chi.pieces[key] = pb.p1;
    s.delta.pieces[key] = pb.p2;
  }
  return s;
}

void expect(ValidationReport& rep, const char* kind, const SparseVec& a, const SparseVec& b, const std::string& where) {
  ++rep.checks;
  if (a == b) return;
  Rational r(0);
  const SparseVec d = a - b;
  for (const auto& [i, c] : d.entries()) r = abs(c) > r ? Rational(abs(c)) : r;
  rep.failures.push_back({kind, where, r});
}

std::string where_text(const OperadData& op, std::pair<int, int> key, Index j) {
  return "weight " + std::to_string(key.first) + " color " + op.colors().id(key.second) + " basis " + std::to_string(j);
}

}  // namespace

PwedgeMaterialization materialize_pwedge(const OperadData& op, const std::vector<Index>& c_dims, const TowerOptions& opts) {
  PwedgeMaterialization m;
  m.budget = budget_for(op, 2);
  m.degree = *op.nilpotent_degree();
  Lifting lc = first_stage(op, ColoredSpace::uniform(c_dims), m.budget, opts);
  m.pwedge = lc.p->as_space(1);
  m.pwedge2 = lc.p->as_space(2);
  m.square = lc.pp->as_space(1);
  m.delta = std::move(lc.delta);
  m.alpha = std::move(lc.alpha);
  m.alpha_injective = injective(m.alpha);
  return m;
}

std::vector<TowerStage> tower(const OperadData& op, const std::vector<Index>& c_dims, int stages, const TowerOptions& opts) {
  if (stages < 1 || stages > 3) throw std::invalid_argument("tower: stages must be between 1 and 3");
  const int budget = budget_for(op, stages >= 3 ? 3 : 2);
  Lifting lc = first_stage(op, ColoredSpace::uniform(c_dims), budget, opts);
  std::vector<TowerStage> out;

  TowerStage q0;
  q0.space = lc.p->as_space(1);
  q0.embedding = identity_map(*lc.p, 1);
  q0.dim = q0.image_dim = q0.space.total_dim();
  out.push_back(std::move(q0));
  if (stages == 1) return out;

  TowerStage q1;
  q1.k = 1;
  q1.space = lc.space;
  q1.chi = lc.chi;
  q1.delta = lc.lift;
  q1.embedding = lc.chi;
  q1.dim = total_cols(lc.chi);
  q1.image_dim = total_rank(lc.chi);
  q1.chi_injective = injective(lc.chi);
  out.push_back(std::move(q1));
  if (stages == 2) return out;

  SecondStage s = second_stage(op, lc, budget);
  TowerStage q2;
  q2.k = 2;
  q2.space = space_from(s.chi_eq, op.ncolors(), budget);
  q2.embedding = compose(lc.chi, s.chi_eq);
  q2.dim = total_cols(s.chi_eq);
  q2.image_dim = total_rank(q2.embedding);
  q2.chi_injective = injective(s.chi_eq);
  q2.chi = std::move(s.chi_eq);
  q2.delta = std::move(s.delta_eq);
  out.push_back(std::move(q2));
  return out;
}

ComonadReport verify_comonad(const OperadData& op, const std::vector<Index>& c_dims, const TowerOptions& opts) {
  ComonadReport rep;
  const int budget = budget_for(op, 3);
  Lifting lc = first_stage(op, ColoredSpace::uniform(c_dims), budget, opts);
  SecondStage s = second_stage(op, lc, budget);
  rep.dim = total_cols(lc.chi);

  auto& checks = rep.checks;
  const auto inj = [&](const char* what, const GradedMap& g) {
    ++checks.checks;
    if (!injective(g)) checks.failures.push_back({"injectivity", what, Rational(0)});
  };
  inj("chi_1", lc.chi);
  inj("chi_1^2", s.chi_sq);
  inj("alpha_1,1", lc.alpha);

  // the comultiplication comes from the pullback alone, so that coassociativity is tested
  // rather than imposed by the equalizer
  const auto invertible = [](const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.cols(); };
  rep.stabilized = true;
  bool liftable = true;
  std::map<std::pair<int, int>, Matrix> comult;  // Q_1 → Q_1 Q_1
  for (const auto& [key, c2] : s.chi.pieces) {
    rep.stabilized = rep.stabilized && invertible(s.chi_eq.pieces.at(key));
    if (!invertible(c2)) {
      liftable = false;
      continue;
    }
    comult[key] = s.delta.pieces.at(key) * inverse(c2);
  }
  ++checks.checks;
  if (!rep.stabilized) checks.failures.push_back({"stabilization", "chi_2 : Q_2 -> Q_1 is not invertible", Rational(0)});
  if (!liftable) {
    checks.failures.push_back({"lift", "delta_1 does not lift uniquely through chi_1^2", Rational(0)});
    return rep;
  }

  const GradedMap eps_outer = counit(*lc.pp);
  const GradedMap eps_c = counit(*lc.p);
  const GradedMap eps_inner = functor_map(*lc.pp, *lc.p, 1, colored(eps_c, lc.p->as_space(1), ColoredSpace::uniform(c_dims)));
  for (const auto& [key, chi] : lc.chi.pieces) {
    const Matrix& d1 = lc.lift.pieces.at(key);
    const Matrix& dq = comult.at(key);
    const Matrix outer = eps_outer.pieces.at(key) * d1;
    const Matrix inner = eps_inner.pieces.at(key) * d1;
    const Matrix coass_l = s.left.pieces.at(key) * dq;
    const Matrix coass_r = s.right.pieces.at(key) * dq;
    const Matrix lax_l = lc.alpha.pieces.at(key) * s.chi_sq.pieces.at(key) * dq;
    const Matrix lax_r = lc.delta.pieces.at(key) * chi;
    for (Index j = 0; j < chi.cols(); ++j) {
      const std::string at = where_text(op, key, j);
      expect(checks, "counit", outer.column(j), chi.column(j), "outer counit at " + at);
      expect(checks, "counit", inner.column(j), chi.column(j), "inner counit at " + at);
      expect(checks, "coassociativity", coass_l.column(j), coass_r.column(j), at);
      expect(checks, "lax-diagonal", lax_l.column(j), lax_r.column(j), at);
    }
  }
  return rep;
}

}  // namespace opwork

#include "corpus.hpp"

#include "opwork/operad/builders.hpp"

namespace opwork::corpus {

namespace {

/// Structure maps given on e_id of each arity; column s of arity n is d_{e_id}(s).
std::shared_ptr<StructureMaps> from_identity(const OperadData& as, Index states, int cap,
                                             const std::function<SparseVec(int n, Index s)>& d_id) {
  auto d = std::make_shared<StructureMaps>(as, std::vector<Index>{states}, cap, StructureMaps::Kind::coalgebra);
  for (int n = 1; n <= cap; ++n) {
    std::vector<SparseVec> cols;
    for (Index s = 0; s < states; ++s) cols.push_back(d_id(n, s));
    d->set(Seq(n, 0), 0, perm_rank(identity_perm(n)), Matrix::from_columns(tensor_size(std::vector<Index>(n, states)), std::move(cols)));
  }
  d->complete_by_equivariance();
  return d;
}

Index word(const std::vector<Index>& letters, Index base) {
  Index k = 0;
  for (Index l : letters) k = k * base + l;
  return k;
}

Matrix columns(Index rows, std::vector<std::vector<std::pair<Index, int>>> cols) {
  std::vector<SparseVec> out;
  for (auto& c : cols) {
    std::vector<SparseVec::Entry> e;
    for (auto [i, v] : c) e.emplace_back(i, Rational(v));
    out.push_back(SparseVec::from_entries(std::move(e)));
  }
  return Matrix::from_columns(rows, std::move(out));
}

}  // namespace

RepresentedElement grouplike(const OperadData& as, int cap) {
  auto d = from_identity(as, 1, cap, [](int, Index) { return SparseVec::unit(0); });
  return lift(d, ColoredMap{{Matrix::identity(1)}}, 0, SparseVec::unit(0));
}

RepresentedElement primitive_pair(const OperadData& as, int cap) {
  // g = 0, x = 1
  auto d = from_identity(as, 2, cap, [](int n, Index s) {
    if (s == 0) return SparseVec::unit(0);
    std::vector<SparseVec::Entry> e;
    for (int i = 0; i < n; ++i) {
      std::vector<Index> w(n, 0);
      w[i] = 1;
      e.emplace_back(word(w, 2), Rational(1));
    }
    return SparseVec::from_entries(std::move(e));
  });
  return lift(d, ColoredMap{{columns(1, {{{0, 1}}, {{0, 1}}})}}, 0, SparseVec::unit(1));
}

RepresentedElement matrix_coefficients(const OperadData& as, int cap) {
  // f11 = 0, f12 = 1, f22 = 2
  auto d = from_identity(as, 3, cap, [](int n, Index s) {
    if (s != 1) return SparseVec::unit(word(std::vector<Index>(n, s), 3));
    std::vector<SparseVec::Entry> e;
    for (int jump = 0; jump < n; ++jump) {
      std::vector<Index> w(n);
      for (int t = 0; t < n; ++t) w[t] = t < jump ? 0 : t == jump ? 1 : 2;
      e.emplace_back(word(w, 3), Rational(1));
    }
    return SparseVec::from_entries(std::move(e));
  });
  return lift(d, ColoredMap{{columns(2, {{{0, 1}, {1, 1}}, {{0, 1}}, {{0, 2}, {1, 3}}})}}, 0, SparseVec::unit(1));
}

Jet anbn(const OperadData& as, int cap) {
  std::map<Seq, std::map<Index, SparseVec>> vals;
  for (int n = 2; n <= cap; n += 2) {
    std::vector<Index> w(n, 0);
    for (int i = n / 2; i < n; ++i) w[i] = 1;
    vals[Seq(n, 0)][perm_rank(identity_perm(n))] = SparseVec::unit(word(w, 2));
  }
  return Jet::from_values(as, {2}, 0, cap, vals);
}

std::vector<Entry> documents() {
  std::vector<Entry> out;
  const auto builtin = [](const std::string& name, int cap) { return io::operad_payload(build_builtin(name, cap)); };
  out.push_back({"as.op.json", {io::Kind::operad, builtin("as", 8)}});
  out.push_back({"com.op.json", {io::Kind::operad, builtin("com", 5)}});
  out.push_back({"module.op.json", {io::Kind::operad, builtin("module", 4)}});
  out.push_back({"cas2.op.json", {io::Kind::operad, builtin("cas2", 4)}});
  out.push_back({"nilcom2.op.json", {io::Kind::operad, builtin("nilcom2", 2)}});
  {
    OperadData n2 = build_builtin("nilcom2", 2);
    n2.materialize_gamma();
    out.push_back({"nilcom2-explicit.op.json", {io::Kind::operad, io::operad_payload(n2)}});
  }
  {
    // one wrong entry in the table of γ(e; e, (x,x)) for As
    OperadData as3 = build_builtin("as", 3);
    as3.materialize_gamma();
    const GammaKey key{Seq{0, 0}, 0, {Seq{0}, Seq{0, 0}}};
    as3.set_gamma_entry(key, 0, 0, as3.gamma_table(key).column(0).at(0) + 1);
    out.push_back({"as3-corrupt.op.json", {io::Kind::operad, io::operad_payload(as3)}});
  }
  out.push_back({"c2.space.json", {io::Kind::colored_space, io::space_payload(ColorSet({"x"}), {2})}});

  const OperadData as6 = build_builtin("as", 6);
  const io::Json as6_payload = io::operad_payload(as6);
  const std::vector<std::pair<std::string, RepresentedElement>> elements = {
      {"grouplike", grouplike(as6, 6)}, {"primitive", primitive_pair(as6, 6)}, {"matcoef", matrix_coefficients(as6, 6)}};
  for (const auto& [name, e] : elements) {
    out.push_back({name + ".elem.json", {io::Kind::represented_element, io::element_payload(e, as6_payload)}});
    out.push_back({name + ".jet.json", {io::Kind::jet, io::jet_payload(expand(e, 6), as6_payload)}});
  }
  out.push_back({"matcoef.coalg.json", {io::Kind::coalgebra, io::coalgebra_payload(*elements[2].second.d, as6_payload)}});
  {
    // d_{e_id}(f12) in arity 2 loses the term f11 ⊗ f12
    io::Json broken = io::coalgebra_payload(*elements[2].second.d, as6_payload);
    for (auto& m : broken["maps"]) {
      if (m["inputs"].size() == 2 && m["basis"] == 0) m["matrix"]["data"][1][1] = "0/1";
    }
    out.push_back({"matcoef-broken.coalg.json", {io::Kind::coalgebra, broken}});
  }
  const OperadData as8 = build_builtin("as", 8);
  out.push_back({"anbn.jet.json", {io::Kind::jet, io::jet_payload(anbn(as8, 8), io::operad_payload(as8))}});
  return out;
}

}  // namespace opwork::corpus

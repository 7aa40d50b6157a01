#include "opwork/functors/identities.hpp"

#include <functional>

#include "opwork/functors/prop.hpp"

namespace opwork {

bool IdentityReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

ColoredMap random_endomorphisms(const std::vector<Index>& dims, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  ColoredMap phi;
  for (Index d : dims) {
    Matrix m(d, d);
    for (Index j = 0; j < d; ++j) {
      SparseVec col;
      for (Index i = 0; i < d; ++i) col.push_back(i, Rational(dist(rng)));
      m.column(j) = std::move(col);
    }
    phi.maps.push_back(std::move(m));
  }
  return phi;
}

Matrix free_algebra_map(const FreeAlgebra& fa, int weight, int y, const ColoredMap& phi) {
  const Index n = fa.dim(weight, y);
  std::vector<SparseVec> cols;
  for (Index b = 0; b < n; ++b) {
    SparseVec acc;
    for (const auto& [mu, t] : fa.lift(FreeAlgebra::Element{weight, y, SparseVec::unit(b)})) {
      const SparseVec moved = tensor_apply(phi, mu.seq, tensor_dims(mu.seq, fa.a_dims()), t);
      acc = acc + fa.class_of(mu, moved).coords;
    }
    cols.push_back(std::move(acc));
  }
  return Matrix::from_columns(n, std::move(cols));
}

namespace {

Matrix tensor_power(const ColoredMap& phi, const Seq& x, const std::vector<Index>& dims) {
  const std::vector<Index> td = tensor_dims(x, dims);
  const Index n = tensor_size(td);
  std::vector<SparseVec> cols;
  for (Index t = 0; t < n; ++t) cols.push_back(tensor_apply(phi, x, td, SparseVec::unit(t)));
  return Matrix::from_columns(n, std::move(cols));
}

Matrix quotient_map(const Quotient& q, const Matrix& amb) {
  std::vector<SparseVec> cols;
  for (Index b = 0; b < q.dim; ++b) cols.push_back(q.project(amb.apply(q.lift(SparseVec::unit(b)))));
  return Matrix::from_columns(q.dim, std::move(cols));
}

Matrix subspace_map(const Subspace& s, const Matrix& amb) {
  std::vector<SparseVec> cols;
  for (const auto& v : s.basis_vectors()) {
    const SparseVec img = amb.apply(v);
    if (!s.contains(img)) throw std::logic_error("subspace_map: image leaves the subspace");
    cols.push_back(s.coords(img));
  }
  return Matrix::from_columns(s.dim(), std::move(cols));
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  Matrix out;
  bool first = true;
  for (const auto& b : blocks) {
    out = first ? b : out.direct_sum(b);
    first = false;
  }
  return out;
}

std::string piece_label(const OperadData& op, int weight, const Seq& x) {
  return "weight " + std::to_string(weight) + " at " + seq_key(op.colors(), x);
}

void record_piece(IdentityCheck& chk, std::string label, Index lhs, Index rhs) {
  if (lhs != rhs) chk.dims_equal = false;
  chk.pieces.push_back({std::move(label), lhs, rhs});
}

void record_iso(IdentityCheck& chk, const Matrix& iota) {
  if (iota.rows() != iota.cols() || rank(iota) != iota.cols()) chk.iso = false;
}

/// One orbit summand of a coend/end over z with ℙ(z; x) as the operation space.
struct PropPiece {
  Seq z;
  PropComponent pc;
  Index dim_t;
};

std::vector<PropPiece> prop_pieces(const OperadData& op, const Seq& x, int weight, const std::vector<Index>& dims) {
  std::vector<PropPiece> out;
  for (const Seq& z : orbits_of_length(op.ncolors(), weight)) {
    PropComponent pc(op, z, x);
    const Index dt = tensor_size(tensor_dims(z, dims));
    if (pc.dim() == 0 || dt == 0) continue;
    out.push_back(PropPiece{z, std::move(pc), dt});
  }
  return out;
}

/// [ν, σ] ↦ (ν_i, σ) for a basis index of a PROP component.
std::pair<std::vector<OpVector>, Perm> prop_element(const PropComponent& pc, Index p) {
  for (const auto& s : pc.summands()) {
    if (p < s.offset || p >= s.offset + s.dim()) continue;
    const Index local = p - s.offset;
    const Index coset = local / s.inner;
    std::vector<Index> digits(s.blocks.size());
    tensor_digits(s.inner_dims, local % s.inner, digits);
    std::vector<OpVector> nus;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) nus.push_back(basis_op(s.blocks[i], pc.out_seq()[i], digits[i]));
    return {nus, s.cosets[coset]};
  }
  throw std::out_of_range("prop_element: index out of range");
}

PermAction diagonal_action(const PermAction& left, const PermAction& right, int degree, bool dual) {
  PermAction a(left.dim() * right.dim(), degree);
  for (const auto& [j, g] : left.generators()) a.set_generator(j, (dual ? g.transpose() : g).kron(right.generator(j)));
  return a;
}

IdentityCheck check_pi_eps(const OperadData& op, const std::vector<Index>& a_dims, const std::vector<ColoredMap>& panel) {
  IdentityCheck chk;
  chk.name = "pi eps = id";
  const ColoredSpace a = ColoredSpace::uniform(a_dims);
  for (int y = 0; y < op.ncolors(); ++y) record_piece(chk, "color " + op.colors().id(y), TensorBasis(a, Seq{y}, 1).size(), a_dims[y]);
  for (const auto& phi : panel) {
    ++chk.maps_tested;
    bool ok = true;
    for (int y = 0; y < op.ncolors(); ++y) ok = ok && tensor_power(phi, Seq{y}, a_dims) == phi.maps[y];
    if (ok) ++chk.maps_passed;
  }
  return chk;
}

IdentityCheck check_pi_prop_eps(const FreeAlgebra& fa, const OperadData& op, const std::vector<ColoredMap>& panel) {
  IdentityCheck chk;
  chk.name = "pi P eps = P~";
  const auto& dims = fa.a_dims();
  for (int n = 1; n <= fa.cap(); ++n) {
    for (int y = 0; y < op.ncolors(); ++y) {
      const auto pieces = prop_pieces(op, Seq{y}, n, dims);
      std::vector<Quotient> qs;
      std::vector<SparseVec> iota_cols;
      Index lhs = 0;
      for (const auto& pp : pieces) {
        const PermAction t = tensor_action(pp.z, dims);
        qs.push_back(coinvariants(diagonal_action(pp.pc.right_action(), t, n, false)));
        lhs += qs.back().dim;
        for (Index b = 0; b < qs.back().dim; ++b) {
          SparseVec col;
          const SparseVec amb = qs.back().lift(SparseVec::unit(b));
          for (const auto& [i, c] : amb.entries()) {
            auto [nus, sigma] = prop_element(pp.pc, i / pp.dim_t);
            const OpVector mu = act(op, nus[0], sigma, pp.z);
            col.axpy(c, fa.class_of(mu, SparseVec::unit(i % pp.dim_t)).coords);
          }
          iota_cols.push_back(std::move(col));
        }
      }
      record_piece(chk, piece_label(op, n, Seq{y}), lhs, fa.dim(n, y));
      const Matrix iota = Matrix::from_columns(fa.dim(n, y), std::move(iota_cols));
      record_iso(chk, iota);
      for (const auto& phi : panel) {
        std::vector<Matrix> ls;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
          ls.push_back(quotient_map(qs[p], Matrix::identity(pieces[p].pc.dim()).kron(tensor_power(phi, pieces[p].z, dims))));
        }
        const Matrix l = block_diag(ls);
        const Matrix r = free_algebra_map(fa, n, y, phi);
        ++chk.maps_tested;
        if (pieces.empty() || iota * l == r * iota) ++chk.maps_passed;
      }
    }
  }
  return chk;
}

IdentityCheck check_pi_prop_wedge_eps(const Cowedge& cw, const OperadData& op, const std::vector<Index>& c_dims,
                                      const std::vector<ColoredMap>& panel) {
  IdentityCheck chk;
  chk.name = "pi P^ eps = P^";
  for (int n = 1; n <= cw.cap(); ++n) {
    for (int y = 0; y < op.ncolors(); ++y) {
      const auto pieces = prop_pieces(op, Seq{y}, n, c_dims);
      const auto& cps = cw.pieces(n, y);
      std::vector<Subspace> invs;
      std::vector<SparseVec> iota_cols;
      Index lhs = 0;
      for (const auto& pp : pieces) {
        const PermAction t = tensor_action(pp.z, c_dims);
        invs.push_back(invariants(diagonal_action(pp.pc.right_action(), t, n, true)));
        lhs += invs.back().dim();
        // J: ℙ(z;(y)) → P(z;y), [ν,σ] ↦ ν·σ; a functional F on ℙ becomes F J⁻¹ on P
        std::vector<SparseVec> jcols;
        for (Index p = 0; p < pp.pc.dim(); ++p) {
          auto [nus, sigma] = prop_element(pp.pc, p);
          jcols.push_back(act(op, nus[0], sigma, pp.z).coords);
        }
        const Matrix jinv = inverse(Matrix::from_columns(pp.pc.dim(), std::move(jcols)));
        std::size_t slot = 0;
        while (slot < cps.size() && cps[slot].x != pp.z) ++slot;
        for (const auto& f : invs.back().basis_vectors()) {
          std::vector<SparseVec::Entry> g;
          for (const auto& [i, c] : f.entries()) {
            const Index p = i / pp.dim_t;
            for (Index k = 0; k < jinv.cols(); ++k) {
              const Rational w = jinv.at(p, k);
              if (!is_zero(w)) g.emplace_back(k * pp.dim_t + i % pp.dim_t, c * w);
            }
          }
          const SparseVec gv = SparseVec::from_entries(std::move(g));
          SparseVec col;
          if (slot < cps.size()) {
            const Subspace& inv = cw.invariant(n, y, slot);
            if (inv.contains(gv)) {
              const SparseVec co = inv.coords(gv);
              for (const auto& [i, c] : co.entries()) col.push_back(cps[slot].offset + i, c);
            } else {
              chk.iso = false;
            }
          }
          iota_cols.push_back(std::move(col));
        }
      }
      record_piece(chk, piece_label(op, n, Seq{y}), lhs, cw.dim(n, y));
      const Matrix iota = Matrix::from_columns(cw.dim(n, y), std::move(iota_cols));
      record_iso(chk, iota);
      for (const auto& phi : panel) {
        std::vector<Matrix> ls, rs;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
          ls.push_back(subspace_map(invs[p], Matrix::identity(pieces[p].pc.dim()).kron(tensor_power(phi, pieces[p].z, c_dims))));
        }
        for (std::size_t s = 0; s < cps.size(); ++s) {
          rs.push_back(subspace_map(cw.invariant(n, y, s), Matrix::identity(cps[s].dim_p).kron(tensor_power(phi, cps[s].x, c_dims))));
        }
        ++chk.maps_tested;
        if (pieces.empty() || iota * block_diag(ls) == block_diag(rs) * iota) ++chk.maps_passed;
      }
    }
  }
  return chk;
}


/// Positive integer tuples of length m with the given sum, lexicographic.
std::vector<std::vector<int>> compositions(int sum, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    const int slots = m - static_cast<int>(cur.size());
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (slots - 1); ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(sum);
  return out;
}

IdentityCheck check_eps_free(const FreeAlgebra& fa, const OperadData& op, const std::vector<ColoredMap>& panel) {
  IdentityCheck chk;
  chk.name = "eps P~ = P eps";
  const auto& dims = fa.a_dims();
  std::vector<std::vector<std::vector<Matrix>>> fmaps(panel.size());  // [map][weight][color]
  for (std::size_t q = 0; q < panel.size(); ++q) {
    fmaps[q].resize(fa.cap() + 1);
    for (int w = 1; w <= fa.cap(); ++w) {
      for (int y = 0; y < op.ncolors(); ++y) fmaps[q][w].push_back(free_algebra_map(fa, w, y, panel[q]));
    }
  }
  for (int m = 2; m <= fa.cap(); ++m) {
    for (const Seq& x : orbits_of_length(op.ncolors(), m)) {
      for (int w = m; w <= fa.cap(); ++w) {
        const auto tuples = compositions(w, m);
        std::map<std::vector<int>, Index> offsets;
        Index lhs = 0;
        for (const auto& tup : tuples) {
          offsets[tup] = lhs;
          Index size = 1;
          for (int i = 0; i < m; ++i) size *= fa.dim(tup[i], x[i]);
          lhs += size;
        }
        const auto pieces = prop_pieces(op, x, w, dims);
        std::vector<Quotient> qs;
        std::vector<SparseVec> iota_cols;
        Index rhs = 0;
        for (const auto& pp : pieces) {
          qs.push_back(coinvariants(diagonal_action(pp.pc.right_action(), tensor_action(pp.z, dims), w, false)));
          rhs += qs.back().dim;
          const std::vector<Index> zdims = tensor_dims(pp.z, dims);
          for (Index b = 0; b < qs.back().dim; ++b) {
            std::vector<SparseVec::Entry> col;
            const SparseVec amb = qs.back().lift(SparseVec::unit(b));
            for (const auto& [i, c] : amb.entries()) {
              auto [nus, sigma] = prop_element(pp.pc, i / pp.dim_t);
              // [ν, σ] ⊗ t ~ [ν, id] ⊗ σ_* t, then split the tensor by blocks
              std::vector<Seq> blocks;
              for (const auto& nu : nus) blocks.push_back(nu.seq);
              const Seq wseq = concat(blocks);
              const SparseVec moved = permute_tensor(SparseVec::unit(i % pp.dim_t), zdims, inverse_perm(sigma));
              const std::vector<Index> wdims = tensor_dims(wseq, dims);
              std::vector<Index> digits(wseq.size());
              tensor_digits(wdims, moved.entries().at(0).first, digits);
              std::vector<int> tup;
              std::vector<SparseVec> classes;
              std::vector<Index> cdims;
              std::size_t pos = 0;
              for (std::size_t k = 0; k < nus.size(); ++k) {
                const std::size_t len = nus[k].seq.size();
                const std::vector<Index> bd(wdims.begin() + pos, wdims.begin() + pos + len);
                const std::vector<Index> bdig(digits.begin() + pos, digits.begin() + pos + len);
                pos += len;
                classes.push_back(fa.class_of(nus[k], SparseVec::unit(tensor_index(bd, bdig))).coords);
                tup.push_back(static_cast<int>(len));
                cdims.push_back(fa.dim(static_cast<int>(len), x[k]));
              }
              const SparseVec t = kron_all(classes, cdims) * (c * moved.entries().at(0).second);
              for (const auto& [j, v] : t.entries()) col.emplace_back(offsets.at(tup) + j, v);
            }
            iota_cols.push_back(SparseVec::from_entries(std::move(col)));
          }
        }
        record_piece(chk, piece_label(op, w, x), lhs, rhs);
        const Matrix iota = Matrix::from_columns(lhs, std::move(iota_cols));
        record_iso(chk, iota);
        for (std::size_t q = 0; q < panel.size(); ++q) {
          std::vector<Matrix> ls, rs;
          for (const auto& tup : tuples) {
            Matrix k = Matrix::identity(1);
            for (int i = 0; i < m; ++i) k = k.kron(fmaps[q][tup[i]][x[i]]);
            ls.push_back(std::move(k));
          }
          for (std::size_t p = 0; p < pieces.size(); ++p) {
            rs.push_back(quotient_map(qs[p], Matrix::identity(pieces[p].pc.dim()).kron(tensor_power(panel[q], pieces[p].z, dims))));
          }
          ++chk.maps_tested;
          if (lhs == 0 || rhs == 0 || iota * block_diag(rs) == block_diag(ls) * iota) ++chk.maps_passed;
        }
      }
    }
  }
  return chk;
}


void expect_equal(ValidationReport& rep, const char* kind, const FreeAlgebra::Element& a, const FreeAlgebra::Element& b,
                  const std::function<std::string()>& where) {
  ++rep.checks;
  if (a.weight == b.weight && a.color == b.color && a.coords == b.coords) return;
  Rational r(0);
  const SparseVec d = a.coords - b.coords;
  for (const auto& [i, c] : d.entries()) r = abs(c) > r ? Rational(abs(c)) : r;
  rep.failures.push_back({kind, where(), r});
}

/// Calls f with every tuple of basis elements of P~(A) whose colors follow x and whose
/// weights sum to at most the cap.
void for_each_argument_tuple(const FreeAlgebra& fa, const Seq& x, const std::function<void(const std::vector<FreeAlgebra::Element>&)>& f) {
  const int m = static_cast<int>(x.size());
  for (int w = m; w <= fa.cap(); ++w) {
    for (const auto& tup : compositions(w, m)) {
      std::vector<Index> dims;
      for (int i = 0; i < m; ++i) dims.push_back(fa.dim(tup[i], x[i]));
      std::vector<Index> digits(m);
      for (Index t = 0; t < tensor_size(dims); ++t) {
        tensor_digits(dims, t, digits);
        std::vector<FreeAlgebra::Element> args;
        for (int i = 0; i < m; ++i) args.push_back({tup[i], x[i], SparseVec::unit(digits[i])});
        f(args);
      }
    }
  }
}

std::string args_text(const std::vector<FreeAlgebra::Element>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    s += (i ? ", " : "") + std::string("w") + std::to_string(args[i].weight) + "#" +
         (args[i].coords.empty() ? std::string("0") : std::to_string(args[i].coords.entries()[0].first));
  }
  return s + ")";
}

ValidationReport check_free_structure(const FreeAlgebra& fa, const OperadData& op) {
  ValidationReport rep;
  const auto& dims = fa.a_dims();
  const int cap = fa.cap();
  // unit
  for (int w = 1; w <= cap; ++w) {
    for (int y = 0; y < op.ncolors(); ++y) {
      for (Index b = 0; b < fa.dim(w, y); ++b) {
        const FreeAlgebra::Element e{w, y, SparseVec::unit(b)};
        expect_equal(rep, "unit", fa.multiply(op.unit(y), {e}), e, [&] { return "id(" + args_text({e}) + ")"; });
      }
    }
  }
  for (const auto& [key, comp] : op.components()) {
    const int m = static_cast<int>(key.x.size());
    if (m > cap || comp.dim() == 0) continue;
    const std::vector<Index> tdims = tensor_dims(key.x, dims);
    for (Index k = 0; k < comp.dim(); ++k) {
      const OpVector mu = basis_op(key.x, key.y, k);
      // structure map on generators
      std::vector<Index> digits(m);
      for (Index t = 0; t < tensor_size(tdims); ++t) {
        tensor_digits(tdims, t, digits);
        std::vector<FreeAlgebra::Element> gens;
        for (int i = 0; i < m; ++i) gens.push_back(fa.generator(key.x[i], digits[i]));
        expect_equal(rep, "unit", fa.multiply(mu, gens), fa.class_of(mu, SparseVec::unit(t)),
                     [&] { return describe(op, mu) + " on generators " + std::to_string(t); });
      }
      // outer equivariance: (μ·s)(a) = μ(s_* a)
      for (int j : stabilizer_generators(key.x)) {
        const OpVector mus = act(op, mu, adjacent(m, j), key.x);
        for_each_argument_tuple(fa, key.x, [&](const std::vector<FreeAlgebra::Element>& args) {
          auto swapped = args;
          std::swap(swapped[j], swapped[j + 1]);
          expect_equal(rep, "well-defined", fa.multiply(mus, args), fa.multiply(mu, swapped),
                       [&] { return describe(op, mu) + " s" + std::to_string(j) + " " + args_text(args); });
        });
      }
      // inner relations map to zero
      for (int i = 0; i < m; ++i) {
        std::vector<std::vector<std::pair<OpVector, SparseVec>>> args(m);
        bool have = true;
        for (int q = 0; q < m; ++q) {
          if (q == i) continue;
          if (dims[key.x[q]] == 0) have = false;
          else args[q] = fa.lift(fa.generator(key.x[q], 0));
        }
        if (!have) continue;
        for (int wi = 1; wi + (m - 1) <= cap; ++wi) {
          const auto& ps = fa.pieces(wi, key.x[i]);
          for (const auto& piece : ps) {
            const Component* pc = op.component(piece.x, key.x[i]);
            const PermAction tens = tensor_action(piece.x, dims);
            for (int s : stabilizer_generators(piece.x)) {
              for (Index v = 0; v < piece.dim_p * piece.dim_t; ++v) {
                const Index kp = v / piece.dim_t;
                const Index tp = v % piece.dim_t;
                auto& terms = args[i];
                terms.clear();
                terms.emplace_back(basis_op(piece.x, key.x[i], kp), SparseVec::unit(tp));
                const SparseVec rk = pc->action.generator(s).column(kp);
                const SparseVec rt = tens.generator(s).column(tp);
                for (const auto& [a, ca] : rk.entries()) {
                  terms.emplace_back(OpVector{piece.x, key.x[i], SparseVec::unit(a) * Rational(-ca)}, rt);
                }
                const FreeAlgebra::Element zero{wi + m - 1, key.y, SparseVec()};
                expect_equal(rep, "well-defined", fa.multiply_terms(mu, args), zero, [&] {
                  return describe(op, mu) + " relation s" + std::to_string(s) + " in slot " + std::to_string(i) + " at ambient " +
                         std::to_string(v);
                });
              }
            }
          }
        }
      }
      // associativity: μ(ν(λ(a))) = (γ(γ(μ;ν);λ))(a)
      for (const auto& zs : input_tuples(op, key.x, cap)) {
        std::vector<Index> ndims;
        for (int i = 0; i < m; ++i) ndims.push_back(op.dim(zs[i], key.x[i]));
        const Seq w = concat(zs);
        std::vector<Index> nd(m);
        for (Index nt = 0; nt < tensor_size(ndims); ++nt) {
          tensor_digits(ndims, nt, nd);
          std::vector<OpVector> nus;
          for (int i = 0; i < m; ++i) nus.push_back(basis_op(zs[i], key.x[i], nd[i]));
          const OpVector mn = compose(op, mu, nus);
          for (const auto& ls : input_tuples(op, w, cap)) {
            std::vector<Index> ldims;
            for (std::size_t j = 0; j < ls.size(); ++j) ldims.push_back(op.dim(ls[j], w[j]));
            const Seq leaves = concat(ls);
            const std::vector<Index> gdims = tensor_dims(leaves, dims);
            std::vector<Index> ld(ls.size()), gd(leaves.size());
            for (Index lt = 0; lt < tensor_size(ldims); ++lt) {
              tensor_digits(ldims, lt, ld);
              std::vector<OpVector> lams;
              for (std::size_t j = 0; j < ls.size(); ++j) lams.push_back(basis_op(ls[j], w[j], ld[j]));
              const OpVector full = compose(op, mn, lams);
              for (Index g = 0; g < tensor_size(gdims); ++g) {
                tensor_digits(gdims, g, gd);
                std::vector<FreeAlgebra::Element> level1;
                std::size_t pos = 0;
                for (const auto& lam : lams) {
                  std::vector<FreeAlgebra::Element> gens;
                  for (int c : lam.seq) gens.push_back(fa.generator(c, gd[pos++]));
                  level1.push_back(fa.multiply(lam, gens));
                }
                std::vector<FreeAlgebra::Element> level2;
                std::size_t off = 0;
                for (int i = 0; i < m; ++i) {
                  std::vector<FreeAlgebra::Element> part(level1.begin() + static_cast<std::ptrdiff_t>(off),
                                                         level1.begin() + static_cast<std::ptrdiff_t>(off + zs[i].size()));
                  off += zs[i].size();
                  level2.push_back(fa.multiply(nus[i], part));
                }
                expect_equal(rep, "associativity", fa.multiply(mu, level2), fa.class_of(full, SparseVec::unit(g)), [&] {
                  std::string s = describe(op, mu) + " ; (";
                  for (int i = 0; i < m; ++i) s += (i ? ", " : "") + describe(op, nus[i]);
                  s += ") ; (";
                  for (std::size_t j = 0; j < lams.size(); ++j) s += (j ? ", " : "") + describe(op, lams[j]);
                  return s + ") on generators " + std::to_string(g);
                });
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace

IdentityReport verify_identities(const OperadData& op, const std::vector<Index>& a_dims, const std::vector<Index>& c_dims, int cap,
                                 std::uint64_t seed, int panel) {
  IdentityReport rep;
  rep.seed = seed;
  rep.panel = panel;
  std::mt19937_64 rng(seed);
  std::vector<ColoredMap> pa, pc;
  for (int i = 0; i < panel; ++i) pa.push_back(random_endomorphisms(a_dims, rng));
  for (int i = 0; i < panel; ++i) pc.push_back(random_endomorphisms(c_dims, rng));
  const FreeAlgebra fa(op, a_dims, cap);
  const Cowedge cw(op, c_dims, cap);
  rep.checks.push_back(check_pi_eps(op, a_dims, pa));
  rep.checks.push_back(check_pi_prop_eps(fa, op, pa));
  rep.checks.push_back(check_pi_prop_wedge_eps(cw, op, c_dims, pc));
  IdentityCheck d = check_eps_free(fa, op, pa);
  d.structure = check_free_structure(fa, op);
  rep.checks.push_back(std::move(d));
  return rep;
}

}  // namespace opwork

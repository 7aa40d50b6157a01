#include "opwork/functors/lax.hpp"

#include <stdexcept>

namespace opwork {

const Matrix* GradedMap::at(int weight, int y) const {
  auto it = pieces.find({weight, y});
  return it == pieces.end() ? nullptr : &it->second;
}

Seq forest_leaves(const Seq& roots, const Forest& f, std::size_t levels) {
  Seq cur = roots;
  for (std::size_t lv = 0; lv < levels; ++lv) {
    std::vector<Seq> parts;
    for (const auto& op : f.at(lv)) parts.push_back(op.seq);
    cur = concat(parts);
  }
  return cur;
}

namespace {

template <class Fn>
GradedMap assemble(TreeFunctor& src, int ks, TreeFunctor& dst, int kd, Fn make_fn) {
  GradedMap g;
  const int budget = std::min(src.budget(), dst.budget());
  for (int y = 0; y < src.operad().ncolors(); ++y) {
    for (int w = 1; w <= budget; ++w) {
      const Index ns = src.dim(ks, Seq{y}, w);
      const Index nd = dst.dim(kd, Seq{y}, w);
      std::vector<SparseVec> cols;
      for (Index b = 0; b < ns; ++b) {
        const SparseVec e = SparseVec::unit(b);
        cols.push_back(dst.coords_of(kd, Seq{y}, w, make_fn(y, w, e)));
      }
      g.pieces[{w, y}] = Matrix::from_columns(nd, std::move(cols));
    }
  }
  return g;
}

}  // namespace

GradedMap alpha(TreeFunctor& outer, int n, TreeFunctor& inner, int m, TreeFunctor& target) {
  const std::vector<Index> c_dims = inner.base().dims();
  const std::vector<Index> d_dims = outer.base().dims();
  return assemble(outer, n, target, n + m, [&](int y, int w, const SparseVec& e) {
    return [&, y, w, e](const Forest& f) {
      const SparseVec td = outer.full_eval(n, Seq{y}, w, e, f);
      SparseVec out;
      if (td.empty()) return out;
      const Seq mid = forest_leaves(Seq{y}, f, n);
      const auto subs = split_forest(f, n, mid.size());
      const std::vector<Index> mid_dims = tensor_dims(mid, d_dims);
      std::vector<Index> digits(mid.size());
      for (const auto& [idx, coeff] : td.entries()) {
        tensor_digits(mid_dims, idx, digits);
        SparseVec t = SparseVec::unit(0);
        for (std::size_t s = 0; s < mid.size(); ++s) {
          const auto [ws, local] = inner.locate(m, mid[s], digits[s]);
          const SparseVec part = inner.full_eval(m, Seq{mid[s]}, ws, SparseVec::unit(local), subs[s]);
          const Seq leaves = forest_leaves(Seq{mid[s]}, subs[s], m);
          t = kron(t, tensor_size(tensor_dims(leaves, c_dims)), part);
          if (t.empty()) break;
        }
        out.axpy(coeff, t);
      }
      return out;
    };
  });
}

GradedMap diagonal(TreeFunctor& f) {
  const OperadData& op = f.operad();
  return assemble(f, 1, f, 2, [&](int y, int w, const SparseVec& e) {
    return [&, y, w, e](const Forest& fr) {
      const OpVector g = compose(op, fr.at(0).at(0), fr.at(1));
      if (g.coords.empty()) return SparseVec();
      return f.full_eval(1, Seq{y}, w, e, Forest{{g}});
    };
  });
}

GradedMap functor_map(TreeFunctor& src, TreeFunctor& dst, int k, const ColoredMap& phi) {
  const std::vector<Index> d_dims = src.base().dims();
  return assemble(src, k, dst, k, [&](int y, int w, const SparseVec& e) {
    return [&, y, w, e](const Forest& f) {
      const SparseVec t = src.full_eval(k, Seq{y}, w, e, f);
      const Seq leaves = forest_leaves(Seq{y}, f, k);
      return tensor_apply(phi, leaves, tensor_dims(leaves, d_dims), t);
    };
  });
}

ColoredMap to_colored(const GradedMap& g, TreeFunctor& src, int ks, TreeFunctor& dst, int kd) {
  ColoredMap out;
  const int budget = std::min(src.budget(), dst.budget());
  for (int y = 0; y < src.operad().ncolors(); ++y) {
    const Index ns = src.as_space(ks).dim(y);
    const Index nd = dst.as_space(kd).dim(y);
    Matrix m(nd, ns);
    for (int w = 1; w <= budget; ++w) {
      const Matrix* piece = g.at(w, y);
      if (!piece) continue;
      for (Index c = 0; c < piece->cols(); ++c) {
        SparseVec col;
        for (const auto& [r, v] : piece->column(c).entries()) col.push_back(dst.global_index(kd, y, w, r), v);
        m.column(src.global_index(ks, y, w, c)) = std::move(col);
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  GradedMap out;
  for (const auto& [key, fm] : f.pieces) {
    const Matrix* gm = g.at(key.first, key.second);
    if (!gm) throw std::invalid_argument("compose: graded pieces do not match");
    out.pieces[key] = *gm * fm;
  }
  return out;
}

}  // namespace opwork

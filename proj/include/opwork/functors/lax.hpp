#pragma once

#include <map>
#include <utility>

#include "opwork/functors/tree.hpp"

namespace opwork {

/// A weight- and color-preserving map between two graded functor values.
struct GradedMap {
  std::map<std::pair<int, int>, Matrix> pieces;  // (weight, color)
  const Matrix* at(int weight, int y) const;
};

/// Colors of the leaves after `levels` levels of the forest.
Seq forest_leaves(const Seq& roots, const Forest& f, std::size_t levels);

/// α_{n,m} : P^∧_n(P^∧_m(C)) → P^∧_{n+m}(C). `outer` must be built over
/// inner.as_space(m); `target` is any functor over C (it may be `inner` itself).
GradedMap alpha(TreeFunctor& outer, int n, TreeFunctor& inner, int m, TreeFunctor& target);
/// Δ : P^∧(C) → P^∧_2(C), Δf(μ; ν) = f(γ(μ; ν)).
GradedMap diagonal(TreeFunctor& f);
/// P^∧_k(φ) for φ : D → D' weight-preserving.
GradedMap functor_map(TreeFunctor& src, TreeFunctor& dst, int k, const ColoredMap& phi);
/// Assembles a graded map into per-color matrices on src.as_space(ks) → dst.as_space(kd).
ColoredMap to_colored(const GradedMap& g, TreeFunctor& src, int ks, TreeFunctor& dst, int kd);
/// g ∘ f piecewise.
GradedMap compose(const GradedMap& g, const GradedMap& f);

}  // namespace opwork

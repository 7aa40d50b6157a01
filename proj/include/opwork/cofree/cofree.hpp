#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opwork/functors/coalgebra.hpp"
#include "opwork/functors/colored_space.hpp"

namespace opwork {

/// Truncation of an element of P^∧(C)_y: for every orbit representative x of arity <= cap,
/// the map P(x;y) → C^{⊗x} as a matrix (column k = value at the basis operation e_k).
struct Jet {
  const OperadData* op = nullptr;
  std::vector<Index> c_dims;
  int color = 0;
  int cap = 0;
  std::map<Seq, Matrix> components;

  static Jet zero(const OperadData& op, std::vector<Index> c_dims, int color, int cap);
  /// Values on some basis operations of each representative; the rest follow by equivariance.
  /// Throws if the given values do not generate a component.
  static Jet from_values(const OperadData& op, std::vector<Index> c_dims, int color, int cap,
                         const std::map<Seq, std::map<Index, SparseVec>>& values);

  /// Value at an operation on any sequence: f(μ0·τ) = f(μ0)·τ.
  SparseVec at(const OpVector& mu) const;
  /// f(μ·s) = f(μ)·s for the stabilizer generators of every representative.
  bool equivariant() const;
};

bool jets_equal(const Jet& f, const Jet& g);
Jet jet_add(const Jet& f, const Jet& g);
Jet jet_scale(const Jet& f, const Rational& c);

/// An element of P^∧(C) given by a finite coalgebra: states S with cooperations d, an output
/// p : S → C and an initial state s0 ∈ S_color.
struct RepresentedElement {
  std::shared_ptr<const StructureMaps> d;
  ColoredMap p;
  int color = 0;
  SparseVec initial;

  const OperadData& operad() const { return d->operad(); }
  const std::vector<Index>& state_dims() const { return d->dims(); }
  std::vector<Index> c_dims() const;
  Index state_dim() const;
};

/// A μ-translation context: μ with a hole at `slot`; the other slots carry a basis operation
/// λ_i and a basis co-element (an index into C^{⊗λ_i.seq}).
struct Context {
  OpVector mu;
  int slot = 0;
  std::vector<std::pair<OpVector, Index>> args;  // args[slot] is ignored
  int weight() const;
  int hole_color() const { return mu.seq.at(slot); }
};
std::string describe(const OperadData& op, const Context& c);

struct HankelReport {
  std::vector<Index> ranks;  // ranks[ℓ-1] for budget ℓ = 1..cap
  std::vector<int> splits;   // context weight bound achieving ranks[ℓ-1]
  bool stabilized = false;
  std::vector<std::string> witness_contexts;  // basis of the translation space at top cap
};

struct RealizationFailure {
  HankelReport hankel;
  std::string reason;
};

/// Component at μ is (p ⊗ ... ⊗ p)(d_μ(s0)).
Jet expand(const RepresentedElement& e, int cap);
/// b ↦ f(γ(μ; a_1, ..., b, ..., a_n)) on the remaining budget.
Jet translate(const Jet& f, const Context& c);
/// The translate of the element, sharing its automaton.
RepresentedElement translate(const RepresentedElement& e, const Context& c);
HankelReport hankel(const Jet& f);
std::variant<RepresentedElement, RealizationFailure> realize(const Jet& f);
/// d_μ(s0) expanded in the tensor basis of the states.
std::vector<std::pair<Rational, std::vector<RepresentedElement>>> comult(const RepresentedElement& e, const OpVector& mu);
/// p(s0).
SparseVec counit(const RepresentedElement& e);
/// Throws if d fails the coalgebra checks.
RepresentedElement lift(std::shared_ptr<const StructureMaps> d, ColoredMap p, int color, SparseVec d0);

}  // namespace opwork

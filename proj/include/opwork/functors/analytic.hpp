#pragma once

#include <map>
#include <utility>
#include <vector>

#include "opwork/functors/colored_space.hpp"
#include "opwork/operad/operad.hpp"

namespace opwork {

/// Dimensions of the graded pieces (weight n, color y), 1 <= n <= cap. Weights above
/// the cap are unknown, not zero.
struct GradedSpace {
  int cap = 0;
  int ncolors = 0;
  std::map<std::pair<int, int>, Index> dims;

  Index dim(int weight, int y) const;
  /// Sum over colors, weights 1..cap.
  std::vector<Index> weight_totals() const;
  Index total() const;
  bool operator==(const GradedSpace&) const = default;
};

/// One orbit summand of a graded piece: P(x;y) ⊗ A^{⊗x} modulo (or fixed by) Stab(x).
struct OrbitPiece {
  Seq x;
  Index dim_p = 0;
  Index dim_t = 0;
  Index offset = 0;  // position of this summand inside the graded piece
};

/// The free P-algebra P~(A) truncated at the cap: coinvariants of the diagonal action
/// on P(x;y) ⊗ A^{⊗x}, ambient index k·dim_t + t.
class FreeAlgebra {
 public:
  struct Element {
    int weight = 0;
    int color = 0;
    SparseVec coords;
  };

  FreeAlgebra(const OperadData& op, std::vector<Index> a_dims, int cap);

  const GradedSpace& graded() const { return graded_; }
  const std::vector<Index>& a_dims() const { return a_dims_; }
  int cap() const { return cap_; }
  Index dim(int weight, int y) const { return graded_.dim(weight, y); }
  const std::vector<OrbitPiece>& pieces(int weight, int y) const;
  const Quotient& quotient(int weight, int y, std::size_t piece) const;

  /// Class of μ ⊗ t for μ on any sequence x and t a full tensor over A^{⊗x}.
  Element class_of(const OpVector& mu, const SparseVec& t) const;
  /// Representative of a class: list of (μ on the orbit representative, tensor) terms.
  std::vector<std::pair<OpVector, SparseVec>> lift(const Element& e) const;
  /// The structure map μ(a_1, ..., a_m); throws CapExceeded past the cap.
  Element multiply(const OpVector& mu, const std::vector<Element>& args) const;
  /// Same on explicit representatives: args[i] is a list of (operation, tensor) terms.
  Element multiply_terms(const OpVector& mu, const std::vector<std::vector<std::pair<OpVector, SparseVec>>>& args) const;
  /// Generator a ∈ A_c as a weight-1 element μ = id_c.
  Element generator(int c, Index i) const;

 private:
  const OperadData* op_;
  std::vector<Index> a_dims_;
  int cap_;
  GradedSpace graded_;
  std::map<std::pair<int, int>, std::vector<OrbitPiece>> pieces_;
  std::map<std::pair<int, int>, std::vector<Quotient>> quotients_;
};

/// The completed coalgebra P^∧(C) gradedwise: Stab(x)-invariants of
/// Hom(P(x;y), C^{⊗x}), ambient index k·dim_t + t (the value at basis k, tensor t).
class Cowedge {
 public:
  Cowedge(const OperadData& op, std::vector<Index> c_dims, int cap);

  const GradedSpace& graded() const { return graded_; }
  int cap() const { return cap_; }
  Index dim(int weight, int y) const { return graded_.dim(weight, y); }
  const std::vector<OrbitPiece>& pieces(int weight, int y) const;
  const Subspace& invariant(int weight, int y, std::size_t piece) const;

  /// f(μ) for a graded-piece element f and μ on any sequence of that weight.
  SparseVec evaluate(int weight, int y, const SparseVec& f, const OpVector& mu) const;

 private:
  const OperadData* op_;
  std::vector<Index> c_dims_;
  int cap_;
  GradedSpace graded_;
  std::map<std::pair<int, int>, std::vector<OrbitPiece>> pieces_;
  std::map<std::pair<int, int>, std::vector<Subspace>> invariants_;
};

}  // namespace opwork

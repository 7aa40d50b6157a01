#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "opwork/linalg/echelon.hpp"

namespace opwork {

/// Finite-dimensional space with labeled basis. Empty labels mean "e0", "e1", ...
class FinVectSpace {
 public:
  FinVectSpace() = default;
  explicit FinVectSpace(Index dim) : dim_(dim) {}
  FinVectSpace(Index dim, std::vector<std::string> labels);

  Index dim() const { return dim_; }
  std::string label(Index i) const;
  bool has_labels() const { return !labels_.empty(); }
  bool operator==(const FinVectSpace& o) const { return dim_ == o.dim_; }

 private:
  Index dim_ = 0;
  std::vector<std::string> labels_;
};

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(FinVectSpace domain, FinVectSpace codomain, Matrix matrix);
  explicit LinearMap(Matrix matrix)
      : LinearMap(FinVectSpace(matrix.cols()), FinVectSpace(matrix.rows()), std::move(matrix)) {}
  static LinearMap identity(const FinVectSpace& v) { return LinearMap(v, v, Matrix::identity(v.dim())); }

  const FinVectSpace& domain() const { return domain_; }
  const FinVectSpace& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  FinVectSpace domain_;
  FinVectSpace codomain_;
  Matrix matrix_;
};

Subspace kernel(const Matrix& f);
inline Subspace kernel(const LinearMap& f) { return kernel(f.matrix()); }
Subspace image(const Matrix& f);
inline Subspace image(const LinearMap& f) { return image(f.matrix()); }
Index rank(const Matrix& f);

struct Pullback {
  Subspace space;  // inside domain(f) ⊕ domain(g)
  Matrix p1;       // space -> domain(f), in basis coordinates
  Matrix p2;       // space -> domain(g)
};
/// {(a,b) : f(a) = g(b)} with its projections.
Pullback pullback(const Matrix& f, const Matrix& g);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);
/// Sum of two subspaces.
Subspace sum(const Subspace& a, const Subspace& b);
/// A ⊗ B as a subspace of ambient(A) ⊗ ambient(B).
Subspace tensor_subspace(const Subspace& a, const Subspace& b);
/// Image of a subspace under a map.
Subspace map_subspace(const Matrix& f, const Subspace& s);

LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
LinearMap compose(const LinearMap& g, const LinearMap& f);  // g ∘ f
SparseVec apply(const LinearMap& f, const SparseVec& v);
/// Hom(V, W) with basis E_{ij}, index i*dim V + j (row-major matrix entries).
FinVectSpace hom_space(const FinVectSpace& v, const FinVectSpace& w);
LinearMap dual(const LinearMap& f);

/// Inverse of a square invertible matrix; throws if singular.
Matrix inverse(const Matrix& m);
/// The matrix of the restriction of f to s, in the coordinates of s and of t
/// (requires f(s) ⊆ t).
Matrix restrict(const Matrix& f, const Subspace& s, const Subspace& t);

/// Quotient of ambient space by a subspace: the basis is the non-pivot indices.
struct Quotient {
  Index ambient = 0;
  Index dim = 0;
  std::vector<Index> free;  // ambient indices representing the quotient basis
  std::vector<std::ptrdiff_t> position;  // ambient index -> quotient index or -1
  SpanBuilder relations{0};
  SparseVec project(const SparseVec& v) const;
  Matrix matrix() const;  // quotient map
  /// Canonical lift of a quotient vector.
  SparseVec lift(const SparseVec& q) const;
};
Quotient quotient(Index ambient, const std::vector<SparseVec>& relations);

}  // namespace opwork

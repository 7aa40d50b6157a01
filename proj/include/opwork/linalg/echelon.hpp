#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "opwork/linalg/sparse.hpp"

namespace opwork {

/// Incremental reduced row echelon form. Each stored row has its pivot at its
/// first nonzero entry, pivot coefficient 1, and zeros at every other pivot.
/// Optionally tracks how each row is expressed through the accepted inputs.
class SpanBuilder {
 public:
  explicit SpanBuilder(Index ambient, bool track = false) : ambient_(ambient), track_(track) {}

  Index ambient() const { return ambient_; }
  Index rank() const { return rows_.size(); }

  /// Returns true when v was independent of the span (and is now part of it).
  bool add(const SparseVec& v);

  /// Remainder of v modulo the span; zero at all pivots.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Coefficients of v over the accepted inputs (numbered by acceptance order).
  /// Requires tracking. Empty optional when v is outside the span.
  std::optional<SparseVec> express(const SparseVec& v) const;

  std::vector<Index> pivots() const;
  std::vector<SparseVec> rows() const;
  const SparseVec& row(Index pivot) const { return rows_.at(pivot).v; }
  bool is_pivot(Index i) const { return rows_.count(i) != 0; }
  /// Pivots of rows with a nonzero entry in column c (c not a pivot).
  const std::set<Index>* rows_touching(Index c) const;

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  void unindex(Index pivot, const SparseVec& v);
  void index(Index pivot, const SparseVec& v);

  Index ambient_;
  bool track_;
  Index accepted_ = 0;
  std::map<Index, Row> rows_;
  std::map<Index, std::set<Index>> col_rows_;
};

/// A subspace in canonical form: the RREF basis, pivots ascending.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}
  static Subspace span(Index ambient, const std::vector<SparseVec>& vectors);
  static Subspace from_builder(const SpanBuilder& b);
  static Subspace full(Index ambient);

  Index ambient() const { return ambient_; }
  Index dim() const { return rows_.size(); }
  const std::vector<SparseVec>& basis_vectors() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  /// Columns are the basis vectors.
  Matrix basis() const { return Matrix::from_columns(ambient_, rows_); }

  bool contains(const SparseVec& v) const;
  /// Coordinates of v (assumed inside) with respect to basis_vectors().
  SparseVec coords(const SparseVec& v) const;
  /// Vector with the given coordinates.
  SparseVec vector(const SparseVec& coords) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
  bool contains(const Subspace& o) const;

 private:
  Index ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<Index> pivots_;
};

}  // namespace opwork

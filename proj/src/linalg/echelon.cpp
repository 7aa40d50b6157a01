#include "opwork/linalg/echelon.hpp"

#include <stdexcept>

namespace opwork {

void SpanBuilder::unindex(Index pivot, const SparseVec& v) {
  for (const auto& [i, c] : v.entries()) {
    if (i == pivot) continue;
    auto it = col_rows_.find(i);
    if (it == col_rows_.end()) continue;
    it->second.erase(pivot);
    if (it->second.empty()) col_rows_.erase(it);
  }
}

void SpanBuilder::index(Index pivot, const SparseVec& v) {
  for (const auto& [i, c] : v.entries()) {
    if (i != pivot) col_rows_[i].insert(pivot);
  }
}

const std::set<Index>* SpanBuilder::rows_touching(Index c) const {
  auto it = col_rows_.find(c);
  return it == col_rows_.end() ? nullptr : &it->second;
}

SparseVec SpanBuilder::reduce(const SparseVec& v) const {
  SparseVec r = v;
  for (const auto& [i, c] : v.entries()) {
    auto it = rows_.find(i);
    if (it != rows_.end()) r.axpy(-c, it->second.v);
  }
  return r;
}

bool SpanBuilder::add(const SparseVec& v) {
  if (v.extent() > ambient_) throw std::invalid_argument("SpanBuilder::add: vector exceeds ambient dimension");
  SparseVec r = v;
  SparseVec combo;
  if (track_) combo = SparseVec::unit(accepted_);
  for (const auto& [i, c] : v.entries()) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    r.axpy(-c, it->second.v);
    if (track_) combo.axpy(-c, it->second.combo);
  }
  if (r.empty()) return false;
  const Index q = r.entries().front().first;
  const Rational inv = 1 / r.entries().front().second;
  r.scale(inv);
  if (track_) combo.scale(inv);

  // clear column q from the rows that have it
  if (auto* touching = rows_touching(q)) {
    std::vector<Index> hit(touching->begin(), touching->end());
    for (Index p : hit) {
      Row& row = rows_.at(p);
      const Rational c = row.v.at(q);
      unindex(p, row.v);
      row.v.axpy(-c, r);
      if (track_) row.combo.axpy(-c, combo);
      index(p, row.v);
    }
  }
  index(q, r);
  rows_.emplace(q, Row{std::move(r), std::move(combo)});
  ++accepted_;
  return true;
}

std::optional<SparseVec> SpanBuilder::express(const SparseVec& v) const {
  if (!track_) throw std::logic_error("SpanBuilder::express requires tracking");
  SparseVec r = v;
  SparseVec out;
  for (const auto& [i, c] : v.entries()) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    r.axpy(-c, it->second.v);
    out.axpy(c, it->second.combo);
  }
  if (!r.empty()) return std::nullopt;
  return out;
}

std::vector<Index> SpanBuilder::pivots() const {
  std::vector<Index> p;
  p.reserve(rows_.size());
  for (const auto& [k, row] : rows_) p.push_back(k);
  return p;
}

std::vector<SparseVec> SpanBuilder::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [k, row] : rows_) out.push_back(row.v);
  return out;
}

Subspace Subspace::from_builder(const SpanBuilder& b) {
  Subspace s(b.ambient());
  s.rows_ = b.rows();
  s.pivots_ = b.pivots();
  return s;
}

Subspace Subspace::span(Index ambient, const std::vector<SparseVec>& vectors) {
  SpanBuilder b(ambient);
  for (const auto& v : vectors) b.add(v);
  return from_builder(b);
}

Subspace Subspace::full(Index ambient) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) {
    s.rows_.push_back(SparseVec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

SparseVec Subspace::coords(const SparseVec& v) const {
  SparseVec c;
  for (Index k = 0; k < pivots_.size(); ++k) c.push_back(k, v.at(pivots_[k]));
  return c;
}

SparseVec Subspace::vector(const SparseVec& coords) const {
  SparseVec v;
  for (const auto& [k, c] : coords.entries()) v.axpy(c, rows_.at(k));
  return v;
}

bool Subspace::contains(const SparseVec& v) const {
  if (v.extent() > ambient_) return false;
  return vector(coords(v)) == v;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  for (const auto& v : o.rows_) {
    if (!contains(v)) return false;
  }
  return true;
}

}  // namespace opwork

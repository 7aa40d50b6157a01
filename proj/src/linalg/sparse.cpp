#include "opwork/linalg/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace opwork {

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
      if (is_zero(v.entries_.back().second)) v.entries_.pop_back();
    } else if (!is_zero(e.second)) {
      v.entries_.push_back(std::move(e));
    }
  }
  // a later duplicate can cancel an entry that was already popped; re-check
  std::erase_if(v.entries_, [](const Entry& e) { return is_zero(e.second); });
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Rational> dense) {
  SparseVec v;
  for (Index i = 0; i < dense.size(); ++i) v.push_back(i, dense[i]);
  return v;
}

Rational SparseVec::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Rational(0);
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (is_zero(c) || other.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (!is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rational& c) {
  if (is_zero(c)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec r = *this;
  r.axpy(Rational(1), o);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
  SparseVec r = *this;
  r.axpy(Rational(-1), o);
  return r;
}

SparseVec SparseVec::operator*(const Rational& c) const {
  SparseVec r = *this;
  r.scale(c);
  return r;
}

std::vector<Rational> SparseVec::to_dense(Index dim) const {
  std::vector<Rational> d(dim);
  for (const auto& [i, c] : entries_) {
    if (i >= dim) throw std::out_of_range("SparseVec::to_dense: index beyond dimension");
    d[i] = c;
  }
  return d;
}

Matrix Matrix::identity(Index n) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.columns_[i] = SparseVec::unit(i);
  return m;
}

Matrix Matrix::from_dense(Index rows, Index cols, std::span<const Rational> row_major) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("Matrix::from_dense: size mismatch");
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m.columns_[j].push_back(i, row_major[i * cols + j]);
  }
  return m;
}

Matrix Matrix::from_columns(Index rows, std::vector<SparseVec> columns) {
  Matrix m;
  m.rows_ = rows;
  m.cols_ = columns.size();
  for (const auto& c : columns) {
    if (c.extent() > rows) throw std::invalid_argument("Matrix::from_columns: entry beyond row count");
  }
  m.columns_ = std::move(columns);
  return m;
}

Matrix Matrix::from_rows(Index cols, const std::vector<SparseVec>& rows) {
  Matrix m(rows.size(), cols);
  for (Index i = 0; i < rows.size(); ++i) {
    for (const auto& [j, c] : rows[i].entries()) {
      if (j >= cols) throw std::invalid_argument("Matrix::from_rows: entry beyond column count");
      m.columns_[j].push_back(i, c);
    }
  }
  return m;
}

Rational Matrix::at(Index i, Index j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
  return columns_[j].at(i);
}

void Matrix::set(Index i, Index j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::set");
  Rational cur = columns_[j].at(i);
  SparseVec delta;
  delta.push_back(i, value - cur);
  columns_[j].axpy(Rational(1), delta);
}

void Matrix::add_to(Index i, Index j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::add_to");
  SparseVec delta;
  delta.push_back(i, value);
  columns_[j].axpy(Rational(1), delta);
}

SparseVec Matrix::apply(const SparseVec& v) const {
  if (v.extent() > cols_) throw std::invalid_argument("Matrix::apply: vector longer than domain");
  if (v.nnz() == 1) {
    SparseVec r = columns_[v.entries().front().first];
    r.scale(v.entries().front().second);
    return r;
  }
  std::vector<SparseVec::Entry> acc;
  for (const auto& [j, c] : v.entries()) {
    for (const auto& [i, a] : columns_[j].entries()) acc.emplace_back(i, c * a);
  }
  return SparseVec::from_entries(std::move(acc));
}

std::vector<Rational> Matrix::apply_dense(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply_dense: dimension mismatch");
  std::vector<Rational> r(rows_);
  for (Index j = 0; j < cols_; ++j) {
    if (is_zero(v[j])) continue;
    for (const auto& [i, a] : columns_[j].entries()) r[i] += a * v[j];
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (Index j = 0; j < o.cols_; ++j) r.columns_[j] = apply(o.columns_[j]);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix r = *this;
  for (Index j = 0; j < cols_; ++j) r.columns_[j].axpy(Rational(1), o.columns_[j]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
  Matrix r = *this;
  for (Index j = 0; j < cols_; ++j) r.columns_[j].axpy(Rational(-1), o.columns_[j]);
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r = *this;
  for (auto& col : r.columns_) col.scale(c);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && columns_ == o.columns_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (Index j = 0; j < cols_; ++j) {
    for (const auto& [i, c] : columns_[j].entries()) t.columns_[i].push_back(j, c);
  }
  return t;
}

std::vector<SparseVec> Matrix::row_vectors() const { return transpose().columns_; }

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (Index j1 = 0; j1 < cols_; ++j1) {
    for (Index j2 = 0; j2 < o.cols_; ++j2) {
      r.columns_[j1 * o.cols_ + j2] = opwork::kron(columns_[j1], o.rows_, o.columns_[j2]);
    }
  }
  return r;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

Rational Matrix::max_abs() const {
  Rational m(0);
  for (const auto& c : columns_) {
    for (const auto& [i, v] : c.entries()) {
      Rational a = abs(v);
      if (a > m) m = a;
    }
  }
  return m;
}

std::vector<Rational> Matrix::to_dense_row_major() const {
  std::vector<Rational> d(rows_ * cols_);
  for (Index j = 0; j < cols_; ++j) {
    for (const auto& [i, c] : columns_[j].entries()) d[i * cols_ + j] = c;
  }
  return d;
}

Matrix Matrix::select_columns(std::span<const Index> cols) const {
  Matrix r(rows_, cols.size());
  for (Index k = 0; k < cols.size(); ++k) r.columns_[k] = columns_.at(cols[k]);
  return r;
}

Matrix Matrix::select_rows(std::span<const Index> rows) const {
  std::vector<std::ptrdiff_t> position(rows_, -1);
  for (Index k = 0; k < rows.size(); ++k) position.at(rows[k]) = static_cast<std::ptrdiff_t>(k);
  Matrix r(rows.size(), cols_);
  for (Index j = 0; j < cols_; ++j) {
    std::vector<SparseVec::Entry> acc;
    for (const auto& [i, c] : columns_[j].entries()) {
      if (position[i] >= 0) acc.emplace_back(static_cast<Index>(position[i]), c);
    }
    r.columns_[j] = SparseVec::from_entries(std::move(acc));
  }
  return r;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("Matrix::hconcat: row mismatch");
  Matrix r = *this;
  r.cols_ += o.cols_;
  r.columns_.insert(r.columns_.end(), o.columns_.begin(), o.columns_.end());
  return r;
}

Matrix Matrix::vconcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("Matrix::vconcat: column mismatch");
  Matrix r(rows_ + o.rows_, cols_);
  for (Index j = 0; j < cols_; ++j) {
    r.columns_[j] = columns_[j];
    for (const auto& [i, c] : o.columns_[j].entries()) r.columns_[j].push_back(rows_ + i, c);
  }
  return r;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  Matrix r(rows_ + o.rows_, cols_ + o.cols_);
  for (Index j = 0; j < cols_; ++j) r.columns_[j] = columns_[j];
  for (Index j = 0; j < o.cols_; ++j) {
    for (const auto& [i, c] : o.columns_[j].entries()) r.columns_[cols_ + j].push_back(rows_ + i, c);
  }
  return r;
}

Index tensor_size(std::span<const Index> dims) {
  Index n = 1;
  for (Index d : dims) n *= d;
  return n;
}

Index tensor_index(std::span<const Index> dims, std::span<const Index> digits) {
  Index idx = 0;
  for (Index k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

void tensor_digits(std::span<const Index> dims, Index index, std::span<Index> digits) {
  for (Index k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

SparseVec kron(const SparseVec& a, Index dim_b, const SparseVec& b) {
  SparseVec r;
  for (const auto& [i, x] : a.entries()) {
    for (const auto& [j, y] : b.entries()) r.push_back(i * dim_b + j, x * y);
  }
  return r;
}

SparseVec kron_all(std::span<const SparseVec> factors, std::span<const Index> dims) {
  SparseVec r = SparseVec::unit(0);
  for (Index k = 0; k < factors.size(); ++k) r = kron(r, dims[k], factors[k]);
  return r;
}

}  // namespace opwork

#include "opwork/linalg/space.hpp"

#include <stdexcept>

namespace opwork {

FinVectSpace::FinVectSpace(Index dim, std::vector<std::string> labels) : dim_(dim), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != dim_) {
    throw std::invalid_argument("FinVectSpace: label count differs from dimension");
  }
}

std::string FinVectSpace::label(Index i) const {
  if (i >= dim_) throw std::out_of_range("FinVectSpace::label");
  if (labels_.empty()) return "e" + std::to_string(i);
  return labels_[i];
}

LinearMap::LinearMap(FinVectSpace domain, FinVectSpace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw std::invalid_argument("LinearMap: matrix shape does not match spaces");
  }
}

Subspace kernel(const Matrix& f) {
  const Index n = f.cols();
  SpanBuilder b(n);
  for (const auto& r : f.row_vectors()) b.add(r);
  std::vector<SparseVec> vecs;
  for (Index c = 0; c < n; ++c) {
    if (b.is_pivot(c)) continue;
    std::vector<SparseVec::Entry> e;
    e.emplace_back(c, Rational(1));
    if (const auto* touching = b.rows_touching(c)) {
      for (Index p : *touching) e.emplace_back(p, -b.row(p).at(c));
    }
    vecs.push_back(SparseVec::from_entries(std::move(e)));
  }
  return Subspace::span(n, vecs);
}

Subspace image(const Matrix& f) { return Subspace::span(f.rows(), f.columns()); }

Index rank(const Matrix& f) {
  SpanBuilder b(f.rows());
  for (const auto& c : f.columns()) b.add(c);
  return b.rank();
}

Pullback pullback(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.rows()) throw std::invalid_argument("pullback: codomain mismatch");
  const Index n1 = f.cols();
  const Index n2 = g.cols();
  Matrix joint = f.hconcat(g.scaled(Rational(-1)));
  Pullback out;
  out.space = kernel(joint);
  const Index k = out.space.dim();
  out.p1 = Matrix(n1, k);
  out.p2 = Matrix(n2, k);
  for (Index j = 0; j < k; ++j) {
    for (const auto& [i, c] : out.space.basis_vectors()[j].entries()) {
      if (i < n1) {
        out.p1.column(j).push_back(i, c);
      } else {
        out.p2.column(j).push_back(i - n1, c);
      }
    }
  }
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  Pullback pb = pullback(a.basis(), b.basis());
  return image(a.basis() * pb.p1);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<SparseVec> v = a.basis_vectors();
  v.insert(v.end(), b.basis_vectors().begin(), b.basis_vectors().end());
  return Subspace::span(a.ambient(), v);
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  std::vector<SparseVec> v;
  for (const auto& x : a.basis_vectors()) {
    for (const auto& y : b.basis_vectors()) v.push_back(kron(x, b.ambient(), y));
  }
  return Subspace::span(a.ambient() * b.ambient(), v);
}

Subspace map_subspace(const Matrix& f, const Subspace& s) {
  if (f.cols() != s.ambient()) throw std::invalid_argument("map_subspace: shape mismatch");
  std::vector<SparseVec> v;
  for (const auto& x : s.basis_vectors()) v.push_back(f.apply(x));
  return Subspace::span(f.rows(), v);
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  return LinearMap(FinVectSpace(f.domain().dim() * g.domain().dim()),
                   FinVectSpace(f.codomain().dim() * g.codomain().dim()), f.matrix().kron(g.matrix()));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.codomain().dim() != g.domain().dim()) throw std::invalid_argument("compose: shape mismatch");
  return LinearMap(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

SparseVec apply(const LinearMap& f, const SparseVec& v) { return f.matrix().apply(v); }

FinVectSpace hom_space(const FinVectSpace& v, const FinVectSpace& w) { return FinVectSpace(v.dim() * w.dim()); }

LinearMap dual(const LinearMap& f) { return LinearMap(f.codomain(), f.domain(), f.matrix().transpose()); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  SpanBuilder b(n, true);
  for (const auto& c : m.columns()) {
    if (!b.add(c)) throw std::domain_error("inverse: matrix is singular");
  }
  Matrix inv(n, n);
  for (Index i = 0; i < n; ++i) inv.column(i) = *b.express(SparseVec::unit(i));
  return inv;
}

Matrix restrict(const Matrix& f, const Subspace& s, const Subspace& t) {
  if (f.cols() != s.ambient() || f.rows() != t.ambient()) throw std::invalid_argument("restrict: shape mismatch");
  Matrix r(t.dim(), s.dim());
  for (Index k = 0; k < s.dim(); ++k) {
    SparseVec img = f.apply(s.basis_vectors()[k]);
    SparseVec c = t.coords(img);
    if (!(t.vector(c) == img)) throw std::domain_error("restrict: image leaves the target subspace");
    r.column(k) = std::move(c);
  }
  return r;
}

SparseVec Quotient::project(const SparseVec& v) const {
  SparseVec red = relations.reduce(v);
  SparseVec out;
  for (const auto& [i, c] : red.entries()) out.push_back(static_cast<Index>(position[i]), c);
  return out;
}

Matrix Quotient::matrix() const {
  Matrix m(dim, ambient);
  for (Index j = 0; j < ambient; ++j) m.column(j) = project(SparseVec::unit(j));
  return m;
}

SparseVec Quotient::lift(const SparseVec& q) const {
  SparseVec v;
  for (const auto& [k, c] : q.entries()) v.axpy(c, SparseVec::unit(free.at(k)));
  return v;
}

Quotient quotient(Index ambient, const std::vector<SparseVec>& relations) {
  Quotient q;
  q.ambient = ambient;
  q.relations = SpanBuilder(ambient);
  for (const auto& r : relations) q.relations.add(r);
  q.position.assign(ambient, -1);
  for (Index i = 0; i < ambient; ++i) {
    if (q.relations.is_pivot(i)) continue;
    q.position[i] = static_cast<std::ptrdiff_t>(q.free.size());
    q.free.push_back(i);
  }
  q.dim = q.free.size();
  return q;
}

}  // namespace opwork

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "opwork/linalg/perm_action.hpp"
#include "opwork/linalg/space.hpp"
#include "oracles.hpp"

using namespace opwork;

namespace {

Matrix random_matrix(Index rows, Index cols, Index rank_bound, std::mt19937_64& rng) {
  // product of rows x k and k x cols factors, so the rank is at most k
  std::uniform_int_distribution<int> c(-2, 2);
  Matrix a(rows, rank_bound), b(rank_bound, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < rank_bound; ++j) a.set(i, j, c(rng));
  for (Index i = 0; i < rank_bound; ++i)
    for (Index j = 0; j < cols; ++j) b.set(i, j, c(rng));
  return a * b;
}

std::size_t oracle_rank(const Matrix& m) { return oracle::dense_rank(oracle::to_dense(m.row_vectors(), m.cols())); }

Index dim_sum(const Subspace& a, const Subspace& b) {
  std::vector<SparseVec> all = a.basis_vectors();
  all.insert(all.end(), b.basis_vectors().begin(), b.basis_vectors().end());
  return oracle::dense_rank(oracle::to_dense(all, a.ambient()));
}

}  // namespace

TEST_CASE("rational text form is canonical and strict") {
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("7/1") == 7);
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  for (const char* bad : {"2/4", "-0/1", "1/0", "1/-2", "01/2", "3", "1/2 ", "+1/2", ""}) CHECK_THROWS(parse_rational(bad));
}

TEST_CASE("kernel and image dimensions agree with a dense elimination") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Index r = 1 + rng() % 7, c = 1 + rng() % 7, k = 1 + rng() % 4;
    const Matrix m = random_matrix(r, c, k, rng);
    const std::size_t rk = oracle_rank(m);
    CHECK(rank(m) == rk);
    CHECK(image(m).dim() == rk);
    const Subspace ker = kernel(m);
    CHECK(ker.dim() + rk == c);
    for (const auto& v : ker.basis_vectors()) CHECK(m.apply(v).empty());
  }
}

TEST_CASE("pullback is the solution set of f(a) = g(b)") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 25; ++t) {
    const Index n = 1 + rng() % 5;
    const Matrix f = random_matrix(n, 1 + rng() % 4, 2, rng), g = random_matrix(n, 1 + rng() % 4, 2, rng);
    const Pullback pb = pullback(f, g);
    for (Index j = 0; j < pb.p1.cols(); ++j) CHECK(f.apply(pb.p1.column(j)) == g.apply(pb.p2.column(j)));
    // dim = dim ker [f | -g]
    Matrix fg(n, f.cols() + g.cols());
    for (Index j = 0; j < f.cols(); ++j) fg.column(j) = f.column(j);
    for (Index j = 0; j < g.cols(); ++j) fg.column(f.cols() + j) = g.column(j) * Rational(-1);
    CHECK(pb.space.dim() == f.cols() + g.cols() - oracle_rank(fg));
  }
}

TEST_CASE("intersection and sum satisfy the dimension formula") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const Index n = 1 + rng() % 8;
    const Subspace a = Subspace::span(n, oracle::random_vectors(n, rng() % (n + 1), rng));
    const Subspace b = Subspace::span(n, oracle::random_vectors(n, rng() % (n + 1), rng));
    const Subspace i = intersect(a, b), s = sum(a, b);
    CHECK(s.dim() == dim_sum(a, b));
    CHECK(i.dim() + s.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
  }
}

TEST_CASE("inverse, dual and tensor maps") {
  std::mt19937_64 rng(14);
  int inverted = 0;
  for (int t = 0; t < 20; ++t) {
    const Index n = 1 + rng() % 5;
    const Matrix m = random_matrix(n, n, n, rng);
    if (oracle_rank(m) == n) {
      CHECK(m * inverse(m) == Matrix::identity(n));
      ++inverted;
    } else {
      CHECK_THROWS(inverse(m));
    }
  }
  CHECK(inverted > 0);
  const LinearMap f(random_matrix(2, 3, 2, rng)), g(random_matrix(3, 2, 2, rng));
  CHECK(dual(f).matrix() == f.matrix().transpose());
  CHECK(tensor_map(f, g).matrix() == f.matrix().kron(g.matrix()));
  CHECK(compose(g, f).matrix() == g.matrix() * f.matrix());
}

TEST_CASE("quotient lifts and projects") {
  const Quotient q = quotient(4, {SparseVec::unit(0) - SparseVec::unit(1), SparseVec::unit(2) * Rational(2)});
  CHECK(q.dim == 2);
  CHECK(q.project(SparseVec::unit(0)) == q.project(SparseVec::unit(1)));
  CHECK(q.project(SparseVec::unit(2)).empty());
  for (Index i = 0; i < q.dim; ++i) CHECK(q.project(q.lift(SparseVec::unit(i))) == SparseVec::unit(i));
}

TEST_CASE("intersection of tensor products of subspaces") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const Index n = 1 + rng() % 4, m = 1 + rng() % 4;
    const auto common_v = oracle::random_vectors(n, rng() % (n + 1), rng);
    const auto common_w = oracle::random_vectors(m, rng() % (m + 1), rng);
    auto grow = [&](std::vector<SparseVec> vs, Index ambient) {
      for (const auto& v : oracle::random_vectors(ambient, rng() % 2, rng)) vs.push_back(v);
      return Subspace::span(ambient, vs);
    };
    const Subspace a = grow(common_v, n), a2 = grow(common_v, n), b = grow(common_w, m), b2 = grow(common_w, m);
    const Subspace lhs = intersect(tensor_subspace(a, b), tensor_subspace(a2, b2));
    CHECK(lhs == tensor_subspace(intersect(a, a2), intersect(b, b2)));
  }
}

TEST_CASE("permutation actions on tensors") {
  const std::vector<Index> dims{2, 3, 2};
  const Perm s{1, 2, 0};
  SparseVec t;
  for (Index i = 0; i < 12; ++i) t.push_back(i, Rational(i + 1));
  // slot i of t·σ is slot σ(i) of t
  const SparseVec u = permute_tensor(t, dims, s);
  CHECK(permuted_dims(dims, s) == std::vector<Index>{3, 2, 2});
  std::vector<Index> d(3), e(3);
  for (Index i = 0; i < 12; ++i) {
    tensor_digits(dims, i, d);
    for (int k = 0; k < 3; ++k) e[k] = d[s[k]];
    CHECK(u.at(tensor_index(permuted_dims(dims, s), e)) == t.at(i));
  }
  CHECK(permute_tensor(u, permuted_dims(dims, s), inverse_perm(s)) == t);

  // regular representation of S_3: one invariant line
  PermAction reg(6, 3);
  for (int j = 0; j < 2; ++j) {
    Matrix m(6, 6);
    const auto perms = all_perms(3);
    for (Index k = 0; k < 6; ++k) {
      const Perm p = compose_perm(perms[k], adjacent(3, j));
      m.set(std::find(perms.begin(), perms.end(), p) - perms.begin(), k, 1);
    }
    reg.set_generator(j, m);
  }
  CHECK_FALSE(reg.coxeter_violation().has_value());
  CHECK(reg.group_elements().size() == 6);
  CHECK(invariants(reg).dim() == 1);
  CHECK(coinvariants(reg).dim == 1);
  CHECK(oracle_rank(averaging_projector(reg)) == 1);
  for (const auto& p : all_perms(4)) CHECK(compose_perm(p, inverse_perm(p)) == identity_perm(4));
  for (const auto& p : all_perms(4)) {
    Perm q = identity_perm(4);
    for (int j : descent_word(p)) q = compose_perm(adjacent(4, j), q);
    CHECK(q == p);
  }
}

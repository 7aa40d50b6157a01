#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "checks.hpp"
#include "opwork/functors/analytic.hpp"
#include "opwork/functors/coalgebra.hpp"
#include "opwork/functors/identities.hpp"
#include "opwork/functors/prop.hpp"
#include "opwork/operad/builders.hpp"
#include "oracles.hpp"

using namespace opwork;

namespace {

const std::vector<std::string> kBuiltins{"as", "com", "module", "cas2", "nilcom2"};

std::vector<Index> uniform(const OperadData& op, Index d) { return std::vector<Index>(op.ncolors(), d); }

}  // namespace

TEST_CASE("free algebra dimensions") {
  const OperadData com = build_comm(3), as = build_assoc(3);
  CHECK(FreeAlgebra(com, {2}, 3).graded().weight_totals() == std::vector<Index>{2, 3, 4});
  CHECK(FreeAlgebra(as, {2}, 3).graded().weight_totals() == std::vector<Index>{2, 4, 8});
  for (Index d = 1; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n) {
      CHECK(FreeAlgebra(com, {d}, 3).dim(n, 0) == oracle::binomial(d + n - 1, n));
      Index power = 1;
      for (int i = 0; i < n; ++i) power *= d;
      CHECK(FreeAlgebra(as, {d}, 3).dim(n, 0) == power);
    }
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const OperadData op = build_builtin(name, 3);
    for (Index d = 1; d <= 2; ++d) CHECK(FreeAlgebra(op, uniform(op, d), 3).graded().weight_totals() == oracle::character_dims(op, uniform(op, d), 3));
  }
}

TEST_CASE("cowedge dimensions equal free algebra dimensions") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const OperadData op = build_builtin(name, 3);
    CHECK(Cowedge(op, uniform(op, 2), 3).graded() == FreeAlgebra(op, uniform(op, 2), 3).graded());
  }
}

TEST_CASE("free algebra multiplication") {
  const OperadData com = build_comm(3);
  const FreeAlgebra fa(com, {2}, 3);
  const auto a = fa.generator(0, 0), b = fa.generator(0, 1);
  const OpVector mu = basis_op(Seq{0, 0}, 0, 0);
  // commutative: ab = ba, and the weight adds
  const auto ab = fa.multiply(mu, {a, b}), ba = fa.multiply(mu, {b, a});
  CHECK(ab.weight == 2);
  CHECK(ab.coords == ba.coords);
  CHECK_FALSE(ab.coords == fa.multiply(mu, {a, a}).coords);
  CHECK_THROWS_AS(fa.multiply(mu, {ab, ab}), CapExceeded);
  const OperadData as = build_assoc(3);
  const FreeAlgebra fas(as, {2}, 3);
  const OpVector e = basis_op(Seq{0, 0}, 0, 0);
  CHECK_FALSE(fas.multiply(e, {fas.generator(0, 0), fas.generator(0, 1)}).coords ==
              fas.multiply(e, {fas.generator(0, 1), fas.generator(0, 0)}).coords);
}

TEST_CASE("PROP components") {
  const OperadData com = build_comm(4);
  CHECK(PropComponent(com, Seq{0, 0, 0}, Seq{0, 0}).dim() == 6);
  for (const auto& name : {"com", "as", "module"}) {
    CAPTURE(name);
    const OperadData op = build_builtin(name, 4);
    const int k = op.ncolors();
    for (const Seq& z : {Seq{0, 0, 0}, Seq{0, 0, 0, 0}, Seq{0, 0, k - 1}})
      for (const Seq& x : {Seq{0}, Seq{0, 0}, Seq{0, k - 1}, Seq{0, 0, 0}}) {
        const PropComponent pc(op, z, x);
        CHECK(pc.dim() == oracle::prop_dim(op, z, x));
        CHECK_FALSE(pc.right_action().coxeter_violation().has_value());
        CHECK_FALSE(pc.left_action().coxeter_violation().has_value());
      }
  }
}

TEST_CASE("functor identities") {
  for (const auto& name : {"com", "as"}) {
    CAPTURE(name);
    const IdentityReport r = verify_identities(build_builtin(name, 3), {2}, {2}, 3, 20240601, 20);
    CHECK(r.checks.size() == 4);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.dims_equal);
      CHECK(c.iso);
      CHECK(c.maps_tested > 0);
      CHECK(c.maps_passed == c.maps_tested);
    }
    CHECK(r.ok());
  }
  const OperadData mod = build_two_color_module(3);
  CHECK(verify_identities(mod, {1, 2}, {2, 1}, 3, 5, 5).ok());
}

TEST_CASE("lax comparison maps") {
  for (const auto& name : {"as", "com", "module", "nilcom2"}) {
    CAPTURE(name);
    const OperadData op = build_builtin(name, 4);
    const auto t = checks::alpha_injective(op, uniform(op, 2), 4);
    CHECK(t.ok());
  }
  const OperadData cas2 = build_builtin("cas2", 3);
  CHECK(checks::alpha_injective(cas2, {2, 2}, 3).ok());
  CHECK(checks::alpha_square(build_builtin("nilcom2", 2), {2}, 4).ok());
}

TEST_CASE("functoriality of P^ on maps") {
  const OperadData com = build_comm(3);
  TreeFunctor fc(com, ColoredSpace::uniform({2}), 3);
  ColoredMap id{{Matrix::identity(2)}};
  for (int k = 0; k <= 2; ++k)
    for (const auto& [key, m] : functor_map(fc, fc, k, id).pieces) CHECK(m == Matrix::identity(m.cols()));
  std::mt19937_64 rng(3);
  const ColoredMap f = random_endomorphisms({2}, rng), g = random_endomorphisms({2}, rng);
  const ColoredMap gf{{g.maps[0] * f.maps[0]}};
  const GradedMap lhs = functor_map(fc, fc, 1, gf), rhs = compose(functor_map(fc, fc, 1, g), functor_map(fc, fc, 1, f));
  for (const auto& [key, m] : lhs.pieces) CHECK(m == *rhs.at(key.first, key.second));
}

TEST_CASE("coalgebra and algebra checks") {
  const OperadData as = build_assoc(4);
  // primitive-style coalgebra on {g, x}; dropping one term of d(x) breaks coassociativity
  for (int variant = 0; variant < 2; ++variant) {
    StructureMaps d(as, {2}, 4, StructureMaps::Kind::coalgebra);
    for (int n = 1; n <= 4; ++n) {
      const std::vector<Index> dims(n, 2);
      Matrix m(tensor_size(dims), 2);
      m.column(0) = SparseVec::unit(0);
      std::vector<SparseVec::Entry> es;
      for (int i = 0; i < n; ++i) {
        if (variant == 1 && n == 2 && i == 1) continue;
        std::vector<Index> digits(n, 0);
        digits[i] = 1;
        es.emplace_back(tensor_index(dims, digits), Rational(1));
      }
      m.column(1) = SparseVec::from_entries(es);
      d.set(Seq(n, 0), 0, 0, m);
    }
    d.complete_by_equivariance();
    CHECK(check_coalgebra(d).ok() == (variant == 0));
  }

  // upper triangular 2x2 matrices, basis E11, E12, E22; e_π multiplies slots in the order π
  const int mult[3][3] = {{0, 1, -1}, {-1, -1, 1}, {-1, -1, 2}};
  StructureMaps alg(as, {3}, 3, StructureMaps::Kind::algebra);
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Index> dims(n, 3);
    for (const auto& pi : all_perms(n)) {
      Matrix m(3, tensor_size(dims));
      std::vector<Index> digits(n);
      for (Index t = 0; t < m.cols(); ++t) {
        tensor_digits(dims, t, digits);
        int acc = digits[pi[0]];
        for (int i = 1; i < n && acc >= 0; ++i) acc = mult[acc][digits[pi[i]]];
        if (acc >= 0) m.set(acc, t, 1);
      }
      alg.set(Seq(n, 0), 0, perm_rank(pi), m);
    }
  }
  CHECK(check_algebra(alg).ok());
  Matrix broken = alg.get(Seq{0, 0}, 0, 0);
  broken.set(1, 0, 1);
  alg.set(Seq{0, 0}, 0, 0, broken);
  CHECK_FALSE(check_algebra(alg).ok());
}

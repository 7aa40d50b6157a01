#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "opwork/operad/builders.hpp"
#include "opwork/operad/validate.hpp"

using namespace opwork;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::set<std::string> failure_kinds(const ValidationReport& r) {
  std::set<std::string> kinds;
  for (const auto& f : r.failures) kinds.insert(f.kind);
  return kinds;
}

// e_π reads a_{π(0)} ... a_{π(n-1)}; substituting the word of ν_j (shifted past the inputs
// of ν_0..ν_{j-1}) for a_j gives the word of the composite
Perm substitute(const Perm& mu, const std::vector<Perm>& nus) {
  std::vector<int> offset(nus.size(), 0);
  for (std::size_t j = 1; j < nus.size(); ++j) offset[j] = offset[j - 1] + nus[j - 1].size();
  Perm word;
  for (int slot : mu)
    for (int letter : nus[slot]) word.push_back(offset[slot] + letter);
  return word;
}

}  // namespace

TEST_CASE("builtin operads satisfy the axioms") {
  for (const auto& [name, cap] : std::vector<std::pair<std::string, int>>{{"as", 5}, {"com", 5}, {"module", 4}, {"cas2", 3}, {"nilcom2", 4}}) {
    CAPTURE(name);
    const OperadData op = build_builtin(name, cap);
    const ValidationReport r = validate(op);
    CHECK(r.checks > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("component dimensions") {
  const OperadData as = build_assoc(5), com = build_comm(5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(as.dim(Seq(n, 0), 0) == factorial(n));
    CHECK(com.dim(Seq(n, 0), 0) == 1);
  }
  CHECK(as.dim(Seq(6, 0), 0) == 0);
  const OperadData nil = build_nilpotent(build_comm(4), 2);
  CHECK(nil.dim(Seq{0, 0}, 0) == 1);
  CHECK(nil.dim(Seq{0, 0, 0}, 0) == 0);
  CHECK(nil.nilpotent_degree() == 2);
  const OperadData mod = build_two_color_module(3);
  const int a = mod.colors().index("a"), m = mod.colors().index("m");
  CHECK(mod.dim(Seq{a, a}, a) == 1);
  CHECK(mod.dim(Seq{a, m}, m) == 1);
  CHECK(mod.dim(Seq{m, m}, m) == 0);
  CHECK(mod.dim(Seq{a, m}, a) == 0);
}

TEST_CASE("As composition is word substitution") {
  const OperadData as = build_assoc(5);
  const std::vector<std::vector<int>> shapes{{1, 1}, {2, 1}, {1, 3}, {2, 2}, {1, 1, 1}, {2, 1, 2}, {1, 2, 1}};
  for (const auto& shape : shapes) {
    const int m = shape.size();
    for (const auto& pi : all_perms(m)) {
      std::vector<std::vector<Perm>> choices;
      for (int k : shape) choices.push_back(all_perms(k));
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::vector<Perm> nus;
        std::vector<OpVector> args;
        int total = 0;
        for (int j = 0; j < m; ++j) {
          nus.push_back(choices[j][pick[j]]);
          args.push_back(basis_op(Seq(shape[j], 0), 0, perm_rank(nus.back())));
          total += shape[j];
        }
        const OpVector got = compose(as, basis_op(Seq(m, 0), 0, perm_rank(pi)), args);
        CHECK(got.seq == Seq(total, 0));
        CHECK(got.coords == SparseVec::unit(perm_rank(substitute(pi, nus))));
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
        if (j == pick.size()) break;
      }
    }
  }
}

TEST_CASE("units and the cap") {
  const OperadData as = build_assoc(3);
  const OpVector mu = basis_op(Seq{0, 0, 0}, 0, 3);
  CHECK(compose(as, as.unit(0), {mu}) == mu);
  CHECK(compose(as, mu, {as.unit(0), as.unit(0), as.unit(0)}) == mu);
  CHECK_THROWS_AS(compose_at(as, mu, 0, basis_op(Seq{0, 0}, 0, 0)), CapExceeded);
}

TEST_CASE("action on operations matches transport") {
  const OperadData as = build_assoc(4);
  // acting by σ then σ⁻¹ returns the operation
  const OpVector mu = basis_op(Seq{0, 0, 0}, 0, 4);
  for (const auto& s : all_perms(3)) {
    const OpVector t = act(as, mu, s, Seq{0, 0, 0});
    CHECK(act(as, t, inverse_perm(s), Seq{0, 0, 0}) == mu);
  }
  // As(n) is the regular representation, so any single e_π generates it
  const Component* c = as.component(Seq{0, 0, 0}, 0);
  REQUIRE(c);
  CHECK(module_generators(*c).size() == 1);
  const OperadData com = build_comm(3);
  CHECK(module_generators(*com.component(Seq{0, 0, 0}, 0)).size() == 1);
}

TEST_CASE("planted corruptions are detected") {
  SUBCASE("one entry of an As table") {
    OperadData as = build_assoc(3);
    as.materialize_gamma();
    const GammaKey key{Seq{0, 0}, 0, {Seq{0}, Seq{0, 0}}};
    as.set_gamma_entry(key, 0, 0, as.gamma_table(key).at(0, 0) + 1);
    CHECK_FALSE(validate(as).ok());
  }
  SUBCASE("one entry of a Com table breaks equivariance") {
    OperadData com = build_comm(4);
    com.materialize_gamma();
    com.set_gamma_entry(GammaKey{Seq{0, 0}, 0, {Seq{0}, Seq{0, 0}}}, 0, 0, 2);
    CHECK(failure_kinds(validate(com)).count("equivariance"));
  }
  SUBCASE("an equivariant rescaling of Com tables breaks associativity only") {
    OperadData com = build_comm(4);
    com.materialize_gamma();
    com.set_gamma_entry(GammaKey{Seq{0, 0}, 0, {Seq{0}, Seq{0, 0}}}, 0, 0, 2);
    com.set_gamma_entry(GammaKey{Seq{0, 0}, 0, {Seq{0, 0}, Seq{0}}}, 0, 0, 2);
    const ValidationReport r = validate(com);
    CHECK(failure_kinds(r).count("associativity"));
    CHECK_FALSE(failure_kinds(r).count("equivariance"));
  }
  SUBCASE("unit law") {
    OperadData com = build_comm(3);
    com.materialize_gamma();
    com.set_gamma_entry(GammaKey{Seq{0}, 0, {Seq{0, 0}}}, 0, 0, 3);
    CHECK(failure_kinds(validate(com)).count("unit"));
  }
  SUBCASE("every single entry of the As cap 3 tables") {
    const OperadData base = build_assoc(3);
    std::size_t planted = 0;
    for (const auto& key : base.gamma_keys()) {
      const Matrix t = base.gamma_table(key);
      for (Index col = 0; col < t.cols(); ++col) {
        OperadData op = build_assoc(3);
        op.materialize_gamma();
        op.set_gamma_entry(key, 0, col, t.at(0, col) + 1);
        CHECK_FALSE(validate(op).ok());
        ++planted;
      }
    }
    CHECK(planted > 10);
  }
}

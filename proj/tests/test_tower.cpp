#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opwork/operad/builders.hpp"
#include "opwork/tower/tower.hpp"

using namespace opwork;

TEST_CASE("nilpotent Com, degree 2, dim C = 2") {
  const OperadData op = build_builtin("nilcom2", 2);
  const auto stages = tower(op, {2}, 3);
  REQUIRE(stages.size() == 3);
  for (const auto& s : stages) {
    CAPTURE(s.k);
    // C plus the symmetric square of C
    CHECK(s.dim == 5);
    CHECK(s.image_dim == 5);
    CHECK(s.chi_injective);
  }
  const ComonadReport r = verify_comonad(op, {2});
  CHECK(r.stabilized);
  CHECK(r.dim == 5);
  CHECK(r.checks.checks > 0);
  CHECK(r.checks.ok());
}

TEST_CASE("P^ of a nilpotent operad") {
  const OperadData op = build_builtin("nilcom2", 2);
  const PwedgeMaterialization m = materialize_pwedge(op, {2});
  CHECK(m.pwedge.total_dim() == 5);
  CHECK(m.alpha_injective);
  CHECK_THROWS(materialize_pwedge(build_comm(3), {2}));
}

TEST_CASE("degree 1 and zero-dimensional C") {
  const auto one = tower(build_builtin("nilcom1", 1), {2}, 3);
  for (const auto& s : one) CHECK(s.dim == 2);
  const auto empty = tower(build_builtin("nilcom2", 2), {0}, 2);
  for (const auto& s : empty) CHECK(s.dim == 0);
}

TEST_CASE("planted defects are caught") {
  const OperadData op = build_builtin("nilcom2", 2);
  TowerOptions alpha_bad;
  alpha_bad.corrupt_alpha = true;
  CHECK_FALSE(verify_comonad(op, {2}, alpha_bad).ok());
  TowerOptions delta_bad;
  delta_bad.corrupt_delta = true;
  CHECK_FALSE(verify_comonad(op, {2}, delta_bad).ok());
}

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "opwork/functors/analytic.hpp"
#include "opwork/functors/colored_space.hpp"
#include "opwork/operad/validate.hpp"

namespace opwork {

/// One functor identity, checked gradedwise.
struct IdentityCheck {
  std::string name;
  struct Piece {
    std::string label;  // graded piece
    Index lhs = 0;
    Index rhs = 0;
  };
  std::vector<Piece> pieces;
  bool dims_equal = true;
  bool iso = true;  // the comparison map is invertible on every piece
  std::size_t maps_tested = 0;
  std::size_t maps_passed = 0;
  ValidationReport structure;  // extra structural checks (monad laws for P~)
  bool ok() const { return dims_equal && iso && maps_passed == maps_tested && structure.ok(); }
};

struct IdentityReport {
  std::uint64_t seed = 0;
  int panel = 0;
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// πε = id, πℙε = P~, πℙ^∧ε = P^∧ and εP~ = ℙε: dimensions, invertibility of the
/// comparison maps, and naturality against `panel` seeded random endomorphisms. The last
/// identity also checks the monad structure of P~ (well-definedness, unit, associativity).
IdentityReport verify_identities(const OperadData& op, const std::vector<Index>& a_dims, const std::vector<Index>& c_dims,
                                 int cap, std::uint64_t seed = 20240601, int panel = 20);

/// Endomorphisms with entries uniform in [-2, 2].
ColoredMap random_endomorphisms(const std::vector<Index>& dims, std::mt19937_64& rng);

/// P~(φ) on one graded piece.
Matrix free_algebra_map(const FreeAlgebra& fa, int weight, int y, const ColoredMap& phi);

}  // namespace opwork

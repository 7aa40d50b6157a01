#pragma once

#include "opwork/operad/operad.hpp"

namespace opwork {

/// Rank of a permutation in lexicographic order, and its inverse.
Index perm_rank(const Perm& p);
Perm perm_unrank(int n, Index r);

/// As: As(n) is the regular representation; basis e_π reads a_{π(0)} ... a_{π(n-1)}.
OperadData build_assoc(int cap);
/// Com: one-dimensional components with trivial action.
OperadData build_comm(int cap);
/// Zeroes every component of arity > k (and the compositions into them).
OperadData build_nilpotent(const OperadData& base, int k);
/// Colors {a, m}: a commutative algebra (a^n -> a) and a module over it (a^n m -> m).
OperadData build_two_color_module(int cap);
/// Colored associative operad: P(x;y) spanned by the orderings of the inputs, any colors.
OperadData build_colored_assoc(int ncolors, int cap);
/// "as", "cas2", "com", "module", or "nilcom<k>".
OperadData build_builtin(const std::string& name, int cap);

}  // namespace opwork

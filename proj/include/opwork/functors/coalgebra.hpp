#pragma once

#include <map>
#include <vector>

#include "opwork/operad/validate.hpp"

namespace opwork {

/// Structure maps of a finite-dimensional P-coalgebra (d_μ : D_y → D^{⊗x}) or P-algebra
/// (m_μ : A^{⊗x} → A_y), one matrix per basis operation of every stored orbit component
/// of arity <= cap. Values on other members of the orbit follow by equivariance.
class StructureMaps {
 public:
  enum class Kind { coalgebra, algebra };

  StructureMaps(const OperadData& op, std::vector<Index> dims, int cap, Kind kind);

  const OperadData& operad() const { return *op_; }
  const std::vector<Index>& dims() const { return dims_; }
  int cap() const { return cap_; }
  Kind kind() const { return kind_; }

  void set(const Seq& x, int y, Index k, Matrix m);
  bool has(const Seq& x, int y, Index k) const;
  const Matrix& get(const Seq& x, int y, Index k) const;
  const std::map<ComponentKey, std::map<Index, Matrix>>& data() const { return maps_; }
  /// Components within the cap lacking some basis map.
  std::vector<ComponentKey> incomplete() const;
  /// Fills missing basis maps from the given ones through the stabilizer action
  /// (greedy closure of the submodule they generate). Throws if they do not generate.
  void complete_by_equivariance();

  /// Coalgebra: d_μ(s) ∈ D^{⊗μ.seq}. Algebra: m_μ(t) ∈ A_{μ.out} for t ∈ A^{⊗μ.seq}.
  SparseVec apply(const OpVector& mu, const SparseVec& v) const;

 private:
  const OperadData* op_;
  std::vector<Index> dims_;
  int cap_;
  Kind kind_;
  std::map<ComponentKey, std::map<Index, Matrix>> maps_;
};

/// Counit, equivariance and coassociativity squares on all composable basis pairs within cap.
ValidationReport check_coalgebra(const StructureMaps& d);
/// Unit, equivariance and associativity squares on all composable basis pairs within cap.
ValidationReport check_algebra(const StructureMaps& a);

}  // namespace opwork

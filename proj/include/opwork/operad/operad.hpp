#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opwork/combinat/colored_seq.hpp"

namespace opwork {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComponentKey {
  Seq x;  // orbit representative
  int y = 0;
  auto operator<=>(const ComponentKey&) const = default;
};

struct Component {
  PermAction action;  // right action of Stab(x) on P(x;y)
  std::vector<std::string> labels;
  Index dim() const { return action.dim(); }
};

/// Basis operations of P(x;y) generating it as a module over the stabilizer of x.
std::vector<Index> module_generators(const Component& c);

/// Key of a composition table: x sorted, zs[i] sorted with output color x[i].
struct GammaKey {
  Seq x;
  int y = 0;
  std::vector<Seq> zs;
  auto operator<=>(const GammaKey&) const = default;
};

/// Element of P(seq; out), in the coordinates of P(rep(seq); out) transported along
/// the canonical permutation τ_seq.
struct OpVector {
  Seq seq;
  int out = 0;
  SparseVec coords;
  bool operator==(const OpVector&) const = default;
};

/// An arity-capped colored symmetric operad with components stored per orbit.
class OperadData {
 public:
  using GammaRule = std::function<SparseVec(const GammaKey&, Index, const std::vector<Index>&)>;

  OperadData(ColorSet colors, int cap) : colors_(std::move(colors)), cap_(cap) {}

  const ColorSet& colors() const { return colors_; }
  int ncolors() const { return colors_.size(); }
  int cap() const { return cap_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::optional<int> nilpotent_degree() const { return nilpotent_; }
  void set_nilpotent_degree(std::optional<int> k) { nilpotent_ = k; }

  void set_component(const Seq& x, int y, Component c);
  /// Component of the orbit of x; nullptr when zero.
  const Component* component(const Seq& x, int y) const;
  Index dim(const Seq& x, int y) const;
  const std::map<ComponentKey, Component>& components() const { return components_; }

  void set_unit(int y, Index basis_index) { units_[y] = basis_index; }
  Index unit_index(int y) const { return units_.at(y); }
  OpVector unit(int y) const { return OpVector{Seq{y}, y, SparseVec::unit(unit_index(y))}; }

  void set_gamma_rule(GammaRule rule) { rule_ = std::move(rule); }
  bool has_gamma_rule() const { return static_cast<bool>(rule_); }
  void set_gamma_table(const GammaKey& key, Matrix m);
  const std::map<GammaKey, Matrix>& gamma_tables() const { return tables_; }
  /// Converts every rule-provided table within the cap into stored tables.
  void materialize_gamma();
  /// Overwrites one table entry (materializing the table if needed).
  void set_gamma_entry(const GammaKey& key, Index row, Index col, const Rational& value);

  /// Columns count of the table for key: dim P(x) · Π dim P(z_i).
  std::vector<Index> gamma_input_dims(const GammaKey& key) const;
  Index gamma_output_dim(const GammaKey& key) const;
  /// γ on basis vectors of orbit representatives; coordinates of P(rep(concat zs); y)
  /// along the transport of concat(zs).
  SparseVec gamma_basis(const GammaKey& key, Index mu, const std::vector<Index>& nus) const;
  /// Full table for key (from storage or rule).
  Matrix gamma_table(const GammaKey& key) const;

  /// All keys (x, y, zs) within the cap whose components are nonzero.
  std::vector<GammaKey> gamma_keys() const;

 private:
  ColorSet colors_;
  int cap_;
  std::string name_;
  std::optional<int> nilpotent_;
  std::map<ComponentKey, Component> components_;
  std::map<int, Index> units_;
  std::map<GammaKey, Matrix> tables_;
  GammaRule rule_;
};

/// μ·σ for σ : x̄ → μ.seq (x_i = seq_{σ(i)}).
OpVector act(const OperadData& op, const OpVector& mu, const Perm& sigma, const Seq& x);
/// R(ρ) v on P(rep; y) for ρ in Stab(rep).
SparseVec act_rep(const OperadData& op, const Seq& rep, int y, const Perm& rho, const SparseVec& v);
/// γ(μ; ν_1, ..., ν_m); throws CapExceeded beyond the cap.
OpVector compose(const OperadData& op, const OpVector& mu, const std::vector<OpVector>& nus);
/// Partial composition μ ∘_i ν.
OpVector compose_at(const OperadData& op, const OpVector& mu, int slot, const OpVector& nu);
/// Basis vector k of P(rep; y) as an OpVector.
OpVector basis_op(const Seq& rep, int y, Index k);

/// Sequences of sorted blocks (z_1..z_m) with output colors x_i, nonzero components,
/// and total arity at most `budget`.
std::vector<std::vector<Seq>> input_tuples(const OperadData& op, const Seq& x, int budget);

}  // namespace opwork

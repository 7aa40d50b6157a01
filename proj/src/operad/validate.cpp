#include "opwork/operad/validate.hpp"

#include <functional>
#include <sstream>

namespace opwork {

std::string describe(const OperadData& op, const OpVector& v) {
  std::ostringstream os;
  os << seq_key(op.colors(), v.seq) << "->" << op.colors().id(v.out) << "[";
  bool first = true;
  for (const auto& [i, c] : v.coords.entries()) {
    if (!first) os << " ";
    first = false;
    os << to_string(c) << "*e" << i;
  }
  os << "]";
  return os.str();
}

namespace {

Rational residual(const SparseVec& a, const SparseVec& b) {
  Rational m(0);
  const SparseVec d = a - b;
  for (const auto& [i, c] : d.entries()) {
    Rational x = abs(c);
    if (x > m) m = x;
  }
  return m;
}

class Checker {
 public:
  Checker(const OperadData& op, ValidationReport& rep) : op_(op), rep_(rep) {}

  void expect(const char* kind, const OpVector& lhs, const OpVector& rhs, const std::function<std::string()>& where) {
    ++rep_.checks;
    if (lhs.seq == rhs.seq && lhs.coords == rhs.coords) return;
    rep_.failures.push_back({kind, where(), residual(lhs.coords, rhs.coords)});
  }

 private:
  const OperadData& op_;
  ValidationReport& rep_;
};

std::string tuple_text(const OperadData& op, const OpVector& mu, const std::vector<OpVector>& nus) {
  std::string s = describe(op, mu) + " ; (";
  for (std::size_t i = 0; i < nus.size(); ++i) s += (i ? ", " : "") + describe(op, nus[i]);
  return s + ")";
}

/// Calls f on every tuple of basis vectors of the components (zs[i]; x[i]).
void for_each_basis_tuple(const OperadData& op, const Seq& x, const std::vector<Seq>& zs,
                          const std::function<void(const std::vector<OpVector>&)>& f) {
  std::vector<Index> dims;
  for (std::size_t i = 0; i < zs.size(); ++i) dims.push_back(op.dim(zs[i], x[i]));
  const Index total = tensor_size(dims);
  std::vector<Index> digits(dims.size());
  std::vector<OpVector> nus(zs.size());
  for (Index t = 0; t < total; ++t) {
    tensor_digits(dims, t, digits);
    for (std::size_t i = 0; i < zs.size(); ++i) nus[i] = basis_op(zs[i], x[i], digits[i]);
    f(nus);
  }
}

}  // namespace

ValidationReport validate(const OperadData& op, int cap) {
  ValidationReport rep;
  Checker check(op, rep);

  for (const auto& [key, comp] : op.components()) {
    if (static_cast<int>(key.x.size()) > cap || comp.dim() == 0) continue;
    ++rep.checks;
    if (auto v = comp.action.coxeter_violation()) {
      rep.failures.push_back({"coxeter", seq_key(op.colors(), key.x) + "->" + op.colors().id(key.y) + ": " + *v, Rational(0)});
    }
    for (Index k = 0; k < comp.dim(); ++k) {
      const OpVector b = basis_op(key.x, key.y, k);
      check.expect("unit", compose(op, op.unit(key.y), {b}), b, [&] { return "id∘" + describe(op, b); });
      std::vector<OpVector> ids;
      for (int c : key.x) ids.push_back(op.unit(c));
      check.expect("unit", compose(op, b, ids), b, [&] { return describe(op, b) + "∘(id,...,id)"; });
    }
  }

  for (const GammaKey& key : op.gamma_keys()) {
    const Seq w = concat(key.zs);
    if (static_cast<int>(w.size()) > cap) continue;
    const Index dmu = op.dim(key.x, key.y);
    const int m = static_cast<int>(key.x.size());
    std::vector<int> sizes;
    for (const auto& z : key.zs) sizes.push_back(static_cast<int>(z.size()));

    for (Index k = 0; k < dmu; ++k) {
      const OpVector mu = basis_op(key.x, key.y, k);
      for_each_basis_tuple(op, key.x, key.zs, [&](const std::vector<OpVector>& nus) {
        // μ-side equivariance
        for (int j : stabilizer_generators(key.x)) {
          const Perm s = adjacent(m, j);
          OpVector mus = act(op, mu, s, key.x);
          std::vector<OpVector> swapped = nus;
          std::swap(swapped[j], swapped[j + 1]);
          OpVector lhs = compose(op, mus, nus);
          OpVector rhs = act(op, compose(op, mu, swapped), block_permutation(sizes, s), w);
          check.expect("equivariance", lhs, rhs, [&] { return "slot swap s" + std::to_string(j) + " at " + tuple_text(op, mu, nus); });
        }
        // ν-side equivariance
        for (int i = 0; i < m; ++i) {
          for (int j : stabilizer_generators(key.zs[i])) {
            std::vector<Perm> parts;
            for (int b = 0; b < m; ++b) parts.push_back(b == i ? adjacent(sizes[b], j) : identity_perm(sizes[b]));
            std::vector<OpVector> moved = nus;
            moved[i] = act(op, nus[i], parts[i], nus[i].seq);
            OpVector lhs = compose(op, mu, moved);
            OpVector rhs = act(op, compose(op, mu, nus), direct_sum_perm(parts), w);
            check.expect("equivariance", lhs, rhs, [&] {
              return "input " + std::to_string(i) + " s" + std::to_string(j) + " at " + tuple_text(op, mu, nus);
            });
          }
        }
        // associativity squares
        const OpVector inner = compose(op, mu, nus);
        for (const auto& ts : input_tuples(op, w, cap)) {
          for_each_basis_tuple(op, w, ts, [&](const std::vector<OpVector>& lams) {
            OpVector lhs = compose(op, inner, lams);
            std::vector<OpVector> grouped;
            std::size_t pos = 0;
            for (int i = 0; i < m; ++i) {
              std::vector<OpVector> part(lams.begin() + static_cast<std::ptrdiff_t>(pos),
                                         lams.begin() + static_cast<std::ptrdiff_t>(pos + sizes[i]));
              pos += sizes[i];
              grouped.push_back(compose(op, nus[i], part));
            }
            OpVector rhs = compose(op, mu, grouped);
            check.expect("associativity", lhs, rhs, [&] {
              std::string s = tuple_text(op, mu, nus) + " ; (";
              for (std::size_t q = 0; q < lams.size(); ++q) s += (q ? ", " : "") + describe(op, lams[q]);
              return s + ")";
            });
          });
        }
      });
    }
  }
  return rep;
}

}  // namespace opwork

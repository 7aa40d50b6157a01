#include "opwork/operad/builders.hpp"

#include <memory>

namespace opwork {

Index perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Index r = 0;
  for (int i = 0; i < n; ++i) {
    Index smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i] ? 1 : 0;
    r = r * static_cast<Index>(n - i) + smaller;
  }
  return r;
}

Perm perm_unrank(int n, Index r) {
  std::vector<Index> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const Index base = static_cast<Index>(n - i);
    digits[i] = r % base;
    r /= base;
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return p;
}

namespace {

Index factorial(int n) {
  Index f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Index>(i);
  return f;
}

Component trivial_component(const Seq& x) {
  Component c{PermAction(1, static_cast<int>(x.size())), {}};
  for (int j : stabilizer_generators(x)) c.action.set_generator(j, Matrix::identity(1));
  return c;
}

}  // namespace

OperadData build_assoc(int cap) {
  OperadData op(ColorSet({"x"}), cap);
  op.set_name("as");
  for (int n = 1; n <= cap; ++n) {
    const Index d = factorial(n);
    Component c{PermAction(d, n), {}};
    for (int j = 0; j + 1 < n; ++j) {
      Matrix m(d, d);
      for (Index k = 0; k < d; ++k) {
        Perm p = perm_unrank(n, k);
        // e_π·s = e_{s∘π}: swap the values j and j+1
        for (int& v : p) v = v == j ? j + 1 : (v == j + 1 ? j : v);
        m.column(k) = SparseVec::unit(perm_rank(p));
      }
      c.action.set_generator(j, std::move(m));
    }
    op.set_component(Seq(n, 0), 0, std::move(c));
  }
  op.set_unit(0, 0);
  op.set_gamma_rule([](const GammaKey& key, Index mu, const std::vector<Index>& nus) {
    const int m = static_cast<int>(key.x.size());
    const Perm pi = perm_unrank(m, mu);
    std::vector<int> off(m + 1, 0);
    std::vector<Perm> rhos;
    for (int i = 0; i < m; ++i) {
      const int len = static_cast<int>(key.zs[i].size());
      rhos.push_back(perm_unrank(len, nus[i]));
      off[i + 1] = off[i] + len;
    }
    Perm word;
    for (int k = 0; k < m; ++k) {
      const int b = pi[k];
      for (int v : rhos[b]) word.push_back(off[b] + v);
    }
    return SparseVec::unit(perm_rank(word));
  });
  return op;
}

OperadData build_comm(int cap) {
  OperadData op(ColorSet({"x"}), cap);
  op.set_name("com");
  for (int n = 1; n <= cap; ++n) op.set_component(Seq(n, 0), 0, trivial_component(Seq(n, 0)));
  op.set_unit(0, 0);
  op.set_gamma_rule([](const GammaKey&, Index, const std::vector<Index>&) { return SparseVec::unit(0); });
  return op;
}

OperadData build_nilpotent(const OperadData& base, int k) {
  if (k < 1) throw std::invalid_argument("build_nilpotent: degree must be positive");
  OperadData op(base.colors(), base.cap());
  op.set_name("nil" + base.name() + std::to_string(k));
  op.set_nilpotent_degree(k);
  for (const auto& [key, comp] : base.components()) {
    if (static_cast<int>(key.x.size()) <= k) op.set_component(key.x, key.y, comp);
  }
  for (int y = 0; y < base.ncolors(); ++y) op.set_unit(y, base.unit_index(y));
  for (const auto& [key, table] : base.gamma_tables()) {
    if (static_cast<int>(concat(key.zs).size()) <= k && op.dim(key.x, key.y) > 0) op.set_gamma_table(key, table);
  }
  if (base.has_gamma_rule()) {
    auto shared = std::make_shared<const OperadData>(base);
    op.set_gamma_rule([shared](const GammaKey& key, Index mu, const std::vector<Index>& nus) {
      return shared->gamma_basis(key, mu, nus);
    });
  }
  return op;
}

OperadData build_two_color_module(int cap) {
  OperadData op(ColorSet({"a", "m"}), cap);
  op.set_name("module");
  const int a = 0;
  const int mcol = 1;
  for (int n = 1; n <= cap; ++n) {
    op.set_component(Seq(n, a), a, trivial_component(Seq(n, a)));
    Seq x(n - 1, a);
    x.push_back(mcol);
    op.set_component(x, mcol, trivial_component(x));
  }
  op.set_unit(a, 0);
  op.set_unit(mcol, 0);
  op.set_gamma_rule([](const GammaKey&, Index, const std::vector<Index>&) { return SparseVec::unit(0); });
  return op;
}

OperadData build_colored_assoc(int ncolors, int cap) {
  std::vector<std::string> ids;
  for (int c = 0; c < ncolors; ++c) ids.push_back(std::string(1, static_cast<char>('a' + c)));
  OperadData op{ColorSet(ids), cap};
  op.set_name("cas" + std::to_string(ncolors));
  for (int n = 1; n <= cap; ++n) {
    const Index d = factorial(n);
    for (const Seq& x : orbits_of_length(ncolors, n)) {
      Component c{PermAction(d, n), {}};
      for (int j : stabilizer_generators(x)) {
        Matrix m(d, d);
        for (Index k = 0; k < d; ++k) {
          Perm p = perm_unrank(n, k);
          for (int& v : p) v = v == j ? j + 1 : (v == j + 1 ? j : v);
          m.column(k) = SparseVec::unit(perm_rank(p));
        }
        c.action.set_generator(j, std::move(m));
      }
      for (int y = 0; y < ncolors; ++y) op.set_component(x, y, c);
    }
  }
  for (int y = 0; y < ncolors; ++y) op.set_unit(y, 0);
  op.set_gamma_rule([](const GammaKey& key, Index mu, const std::vector<Index>& nus) {
    const int m = static_cast<int>(key.x.size());
    const Perm pi = perm_unrank(m, mu);
    std::vector<int> off(m + 1, 0);
    std::vector<Perm> rhos;
    for (int i = 0; i < m; ++i) {
      const int len = static_cast<int>(key.zs[i].size());
      rhos.push_back(perm_unrank(len, nus[i]));
      off[i + 1] = off[i] + len;
    }
    Perm word;
    for (int k = 0; k < m; ++k) {
      const int b = pi[k];
      for (int v : rhos[b]) word.push_back(off[b] + v);
    }
    // the word lives on concat(zs); move it to the orbit representative
    return SparseVec::unit(perm_rank(compose_perm(transport(concat(key.zs)), word)));
  });
  return op;
}

OperadData build_builtin(const std::string& name, int cap) {
  if (name == "as") return build_assoc(cap);
  if (name == "com") return build_comm(cap);
  if (name == "module") return build_two_color_module(cap);
  if (name == "cas2") return build_colored_assoc(2, cap);
  if (name.rfind("nilcom", 0) == 0 && name.size() > 6) return build_nilpotent(build_comm(cap), std::stoi(name.substr(6)));
  if (name.rfind("nilas", 0) == 0 && name.size() > 5) return build_nilpotent(build_assoc(cap), std::stoi(name.substr(5)));
  throw std::invalid_argument("unknown builtin operad '" + name + "'");
}

}  // namespace opwork

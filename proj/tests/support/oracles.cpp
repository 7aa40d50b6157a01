#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace opwork::oracle {

std::size_t dense_rank(Dense rows) {
  std::size_t r = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

Dense to_dense(const std::vector<SparseVec>& vs, Index n) {
  Dense out;
  for (const auto& v : vs) {
    std::vector<Rational> row(n);
    for (const auto& [i, c] : v.entries()) row[i] = c;
    out.push_back(std::move(row));
  }
  return out;
}

Index binomial(Index n, Index k) {
  if (k > n) return 0;
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Index> character_dims(const OperadData& op, const std::vector<Index>& dims, int cap) {
  std::vector<Rational> totals(cap, Rational(0));
  for (const auto& [key, comp] : op.components()) {
    const int n = static_cast<int>(key.x.size());
    if (n < 1 || n > cap || comp.dim() == 0) continue;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational sum = 0;
    Index order = 0;
    do {
      bool stabilizes = true;
      for (int i = 0; i < n; ++i) stabilizes = stabilizes && key.x[p[i]] == key.x[i];
      if (!stabilizes) continue;
      ++order;
      const Matrix m = comp.action.matrix(p);
      Rational trace = 0;
      for (Index i = 0; i < m.rows(); ++i) trace += m.at(i, i);
      Rational tensor = 1;
      std::vector<bool> seen(n, false);
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
        tensor *= dims[key.x[i]];
      }
      sum += trace * tensor;
    } while (std::next_permutation(p.begin(), p.end()));
    totals[n - 1] += sum / Rational(order);
  }
  std::vector<Index> out;
  for (const auto& t : totals) out.push_back(t.get_num().get_ui());
  return out;
}

Index prop_dim(const OperadData& op, const Seq& z, const Seq& x) {
  const std::size_t n = z.size(), m = x.size();
  std::vector<std::size_t> f(n, 0);
  Index total = 0;
  while (true) {
    Index term = 1;
    for (std::size_t i = 0; i < m && term; ++i) {
      Seq block;
      for (std::size_t j = 0; j < n; ++j)
        if (f[j] == i) block.push_back(z[j]);
      std::sort(block.begin(), block.end());
      term *= op.dim(block, x[i]);
    }
    total += term;
    std::size_t j = 0;
    while (j < n && ++f[j] == m) f[j++] = 0;
    if (j == n) break;
  }
  return total;
}

namespace {

using Word = std::vector<Index>;

std::vector<Word> words(Index d, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Index a = 0; a < d; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Index> word_hankel_ranks(const Jet& f) {
  const Index d = f.c_dims.at(0);
  const auto series = [&](const Word& w) -> Rational {
    const auto it = f.components.find(Seq(w.size(), 0));
    if (it == f.components.end()) return 0;
    Index idx = 0;
    for (Index a : w) idx = idx * d + a;
    return it->second.column(0).at(idx);
  };
  std::vector<Index> ranks;
  for (int l = 1; l <= f.cap; ++l) {
    Index best = 0;
    for (int a = 0; a < l; ++a) {
      std::vector<Word> cols;
      for (int s = 1; s <= l - a; ++s)
        for (auto& w : words(d, s)) cols.push_back(w);
      Dense rows;
      for (int weight = 0; weight <= a; ++weight)
        for (int left = 0; left <= weight; ++left)
          for (const auto& u : words(d, left))
            for (const auto& v : words(d, weight - left)) {
              std::vector<Rational> row;
              for (const auto& w : cols) {
                Word uwv = u;
                uwv.insert(uwv.end(), w.begin(), w.end());
                uwv.insert(uwv.end(), v.begin(), v.end());
                row.push_back(series(uwv));
              }
              rows.push_back(std::move(row));
            }
      best = std::max<Index>(best, dense_rank(std::move(rows)));
    }
    ranks.push_back(best);
  }
  return ranks;
}

std::vector<SparseVec> random_vectors(Index n, Index k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<SparseVec> out;
  for (Index i = 0; i < k; ++i) {
    std::vector<Rational> dense(n);
    for (auto& c : dense) c = coef(rng);
    out.push_back(SparseVec::from_dense(dense));
  }
  return out;
}

}  // namespace opwork::oracle

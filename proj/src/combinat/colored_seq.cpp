#include "opwork/combinat/colored_seq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace opwork {

ColorSet::ColorSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw std::invalid_argument("ColorSet: duplicate color id");
  }
}

int ColorSet::index(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw std::invalid_argument("unknown color '" + id + "'");
  return static_cast<int>(it - ids_.begin());
}

std::string seq_key(const ColorSet& colors, const Seq& s) {
  std::string k = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) k += ",";
    k += colors.id(s[i]);
  }
  return k + ")";
}

Seq orbit_rep(const Seq& x) {
  Seq r = x;
  std::sort(r.begin(), r.end());
  return r;
}

Perm transport(const Seq& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
  // order[r] = position in x of the r-th element of rep; τ = order⁻¹
  return inverse_perm(order);
}

std::vector<Perm> hom_set(const Seq& x, const Seq& y) {
  std::vector<Perm> out;
  if (x.size() != y.size()) return out;
  for (const Perm& p : all_perms(static_cast<int>(x.size()))) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[i] == y[p[i]];
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Seq> orbits_of_length(int ncolors, int length) {
  std::vector<Seq> out;
  Seq cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int c = from; c < ncolors; ++c) {
      cur.push_back(c);
      rec(c);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> stabilizer_generators(const Seq& rep) {
  std::vector<int> g;
  for (std::size_t j = 0; j + 1 < rep.size(); ++j) {
    if (rep[j] == rep[j + 1]) g.push_back(static_cast<int>(j));
  }
  return g;
}

std::size_t stabilizer_order(const Seq& x) {
  std::map<int, int> counts;
  for (int c : x) ++counts[c];
  std::size_t order = 1;
  for (const auto& [c, k] : counts) {
    for (int i = 2; i <= k; ++i) order *= static_cast<std::size_t>(i);
  }
  return order;
}

std::vector<Index> tensor_dims(const Seq& x, const std::vector<Index>& color_dims) {
  std::vector<Index> d;
  d.reserve(x.size());
  for (int c : x) d.push_back(color_dims.at(c));
  return d;
}

PermAction tensor_action(const Seq& rep, const std::vector<Index>& color_dims) {
  const auto dims = tensor_dims(rep, color_dims);
  const Index n = tensor_size(dims);
  const int deg = static_cast<int>(rep.size());
  PermAction a(n, deg);
  for (int j : stabilizer_generators(rep)) {
    Matrix m(n, n);
    const Perm s = adjacent(deg, j);
    for (Index t = 0; t < n; ++t) m.column(t) = permute_tensor(SparseVec::unit(t), dims, s);
    a.set_generator(j, std::move(m));
  }
  return a;
}

Seq concat(const std::vector<Seq>& blocks) {
  Seq w;
  for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
  return w;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> block_offsets(const std::vector<Seq>& blocks) {
  std::vector<int> off(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) off[i + 1] = off[i] + static_cast<int>(blocks[i].size());
  return off;
}

}  // namespace

std::vector<BlockDecomposition> block_decompositions(const Seq& z, int m) {
  if (m < 1) throw std::invalid_argument("block_decompositions: m must be positive");
  std::map<int, int> counts;
  for (int c : z) ++counts[c];
  std::vector<std::pair<int, int>> colors(counts.begin(), counts.end());
  std::vector<BlockDecomposition> out;
  std::vector<std::vector<int>> alloc(m, std::vector<int>(colors.size(), 0));

  // distribute color ci among blocks bi.., remaining r
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t ci, int bi, int remaining) {
    if (ci == colors.size()) {
      BlockDecomposition d;
      for (int b = 0; b < m; ++b) {
        Seq blk;
        for (std::size_t k = 0; k < colors.size(); ++k) blk.insert(blk.end(), alloc[b][k], colors[k].first);
        if (blk.empty()) return;
        d.blocks.push_back(std::move(blk));
      }
      d.multiplicity = 1;
      for (std::size_t k = 0; k < colors.size(); ++k) {
        std::size_t left = colors[k].second;
        for (int b = 0; b < m; ++b) {
          d.multiplicity *= binomial(left, alloc[b][k]);
          left -= alloc[b][k];
        }
      }
      out.push_back(std::move(d));
      return;
    }
    if (bi == m - 1) {
      alloc[bi][ci] = remaining;
      const int next = ci + 1 < colors.size() ? colors[ci + 1].second : 0;
      rec(ci + 1, 0, next);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      alloc[bi][ci] = k;
      rec(ci, bi + 1, remaining - k);
    }
  };
  if (!colors.empty()) rec(0, 0, colors[0].second);
  std::sort(out.begin(), out.end(),
            [](const BlockDecomposition& a, const BlockDecomposition& b) { return a.blocks < b.blocks; });
  return out;
}

std::vector<Perm> coset_reps(const Seq& z, const std::vector<Seq>& blocks) {
  const Seq w = concat(blocks);
  if (orbit_rep(w) != orbit_rep(z)) throw std::invalid_argument("coset_reps: blocks do not decompose z");
  const int n = static_cast<int>(z.size());
  const auto off = block_offsets(blocks);
  std::map<int, std::vector<int>> zpos;  // color -> positions in z
  for (int k = 0; k < n; ++k) zpos[z[k]].push_back(k);
  // color -> per block, list of positions in w (ascending)
  std::map<int, std::vector<std::vector<int>>> wpos;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int t = 0; t < static_cast<int>(blocks[b].size()); ++t) {
      auto& v = wpos[blocks[b][t]];
      v.resize(blocks.size());
      v[b].push_back(off[b] + t);
    }
  }
  std::vector<int> color_list;
  std::vector<std::vector<int>> words;  // per color: initial block word
  for (const auto& [c, pos] : zpos) {
    color_list.push_back(c);
    std::vector<int> word;
    for (std::size_t b = 0; b < blocks.size(); ++b) word.insert(word.end(), wpos[c][b].size(), static_cast<int>(b));
    words.push_back(std::move(word));
  }
  std::vector<Perm> out;
  std::function<void(std::size_t, Perm&)> rec = [&](std::size_t ci, Perm& sigma) {
    if (ci == color_list.size()) {
      out.push_back(sigma);
      return;
    }
    std::vector<int> word = words[ci];
    const int c = color_list[ci];
    do {
      std::vector<std::size_t> used(blocks.size(), 0);
      for (std::size_t r = 0; r < word.size(); ++r) {
        const int b = word[r];
        sigma[zpos[c][r]] = wpos[c][b][used[b]++];
      }
      rec(ci + 1, sigma);
    } while (std::next_permutation(word.begin(), word.end()));
  };
  Perm sigma(n, -1);
  rec(0, sigma);
  return out;
}

std::pair<Perm, Perm> canonical_split(const Perm& pi, const Seq& z, const std::vector<Seq>& blocks) {
  const int n = static_cast<int>(z.size());
  const auto off = block_offsets(blocks);
  std::vector<int> block_of(off.back());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int p = off[b]; p < off[b + 1]; ++p) block_of[p] = static_cast<int>(b);
  }
  // next free slot per (block, color): blocks are sorted so colors are contiguous
  std::map<std::pair<int, int>, int> next;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int t = static_cast<int>(blocks[b].size()) - 1; t >= 0; --t) next[{static_cast<int>(b), blocks[b][t]}] = off[b] + t;
  }
  Perm sigma(n);
  for (int k = 0; k < n; ++k) sigma[k] = next[{block_of[pi[k]], z[k]}]++;
  Perm rho = compose_perm(pi, inverse_perm(sigma));
  return {rho, sigma};
}

Perm block_part(const Perm& rho, const std::vector<Seq>& blocks, int b) {
  const auto off = block_offsets(blocks);
  Perm p(blocks[b].size());
  for (int t = 0; t < static_cast<int>(p.size()); ++t) {
    const int img = rho[off[b] + t] - off[b];
    if (img < 0 || img >= static_cast<int>(p.size())) throw std::invalid_argument("block_part: not block preserving");
    p[t] = img;
  }
  return p;
}

Perm block_permutation(const std::vector<int>& sizes, const Perm& sigma) {
  const std::size_t m = sizes.size();
  const Perm inv = inverse_perm(sigma);
  std::vector<int> new_off(m + 1, 0);
  for (std::size_t j = 0; j < m; ++j) new_off[j + 1] = new_off[j] + sizes[inv[j]];
  Perm p;
  for (std::size_t i = 0; i < m; ++i) {
    for (int t = 0; t < sizes[i]; ++t) p.push_back(new_off[sigma[i]] + t);
  }
  return p;
}

Perm direct_sum_perm(const std::vector<Perm>& parts) {
  Perm p;
  int off = 0;
  for (const auto& q : parts) {
    for (int v : q) p.push_back(off + v);
    off += static_cast<int>(q.size());
  }
  return p;
}

PermAction induce(const Seq& z, const std::vector<Seq>& blocks, const std::vector<const PermAction*>& block_actions) {
  if (!is_sorted_seq(z)) throw std::invalid_argument("induce: z must be an orbit representative");
  if (block_actions.size() != blocks.size()) throw std::invalid_argument("induce: one action per block required");
  std::vector<Index> dims;
  for (const auto* a : block_actions) dims.push_back(a->dim());
  const Index inner = tensor_size(dims);
  const auto reps = coset_reps(z, blocks);
  std::map<Perm, Index> rep_index;
  for (Index c = 0; c < reps.size(); ++c) rep_index[reps[c]] = c;
  const Index total = reps.size() * inner;
  const int n = static_cast<int>(z.size());
  PermAction out(total, n);
  std::vector<Index> digits(dims.size());
  for (int j : stabilizer_generators(z)) {
    Matrix m(total, total);
    const Perm s = adjacent(n, j);
    for (Index c = 0; c < reps.size(); ++c) {
      auto [rho, sigma] = canonical_split(compose_perm(reps[c], s), z, blocks);
      const Index c2 = rep_index.at(sigma);
      for (Index t = 0; t < inner; ++t) {
        tensor_digits(dims, t, digits);
        SparseVec v = SparseVec::unit(0);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          SparseVec part = block_actions[b]->act(block_part(rho, blocks, static_cast<int>(b)), SparseVec::unit(digits[b]));
          v = kron(v, dims[b], part);
        }
        SparseVec col;
        for (const auto& [i, x] : v.entries()) col.push_back(c2 * inner + i, x);
        m.column(c * inner + t) = std::move(col);
      }
    }
    out.set_generator(j, std::move(m));
  }
  return out;
}

}  // namespace opwork

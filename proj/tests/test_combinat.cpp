#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "opwork/combinat/colored_seq.hpp"
#include "opwork/operad/builders.hpp"
#include "oracles.hpp"

using namespace opwork;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<Seq> all_seqs(int ncolors, int length) {
  std::vector<Seq> out{Seq{}};
  for (int k = 0; k < length; ++k) {
    std::vector<Seq> next;
    for (const auto& s : out)
      for (int c = 0; c < ncolors; ++c) {
        Seq t = s;
        t.push_back(c);
        next.push_back(t);
      }
    out = std::move(next);
  }
  return out;
}

// brute force: every map from positions to blocks, grouped by the sorted blocks it gives
std::map<std::vector<Seq>, std::size_t> brute_decompositions(const Seq& z, int m) {
  std::map<std::vector<Seq>, std::size_t> out;
  std::vector<int> f(z.size(), 0);
  while (true) {
    std::vector<Seq> blocks(m);
    for (std::size_t j = 0; j < z.size(); ++j) blocks[f[j]].push_back(z[j]);
    bool nonempty = true;
    for (auto& b : blocks) {
      nonempty = nonempty && !b.empty();
      std::sort(b.begin(), b.end());
    }
    if (nonempty) ++out[blocks];
    std::size_t j = 0;
    while (j < z.size() && ++f[j] == m) f[j++] = 0;
    if (j == z.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("orbit representatives and transports") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& x : all_seqs(3, n)) {
      const Seq rep = orbit_rep(x);
      CHECK(std::is_sorted(rep.begin(), rep.end()));
      const Perm tau = transport(x);
      for (int i = 0; i < n; ++i) CHECK(x[i] == rep[tau[i]]);
      std::map<int, std::size_t> counts;
      for (int c : x) ++counts[c];
      std::size_t order = 1;
      for (const auto& [c, k] : counts) order *= factorial(k);
      CHECK(stabilizer_order(x) == order);
      CHECK(hom_set(x, rep).size() == order);
      for (const auto& s : hom_set(x, rep))
        for (int i = 0; i < n; ++i) CHECK(x[i] == rep[s[i]]);
    }
}

TEST_CASE("orbits of a given length are multisets") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n) CHECK(orbits_of_length(k, n).size() == oracle::binomial(n + k - 1, n));
}

TEST_CASE("permutation ranks are lexicographic") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_perms(n);
    CHECK(perms.size() == factorial(n));
    for (Index r = 0; r < perms.size(); ++r) {
      CHECK(perm_rank(perms[r]) == r);
      CHECK(perm_unrank(n, r) == perms[r]);
    }
    CHECK(perm_rank(identity_perm(n)) == 0);
  }
}

TEST_CASE("block decompositions match brute-force enumeration") {
  for (const Seq& z : {Seq{0, 0, 0}, Seq{0, 0, 1}, Seq{0, 1, 1, 2}, Seq{0, 0, 1, 1}})
    for (int m = 1; m <= static_cast<int>(z.size()); ++m) {
      const auto brute = brute_decompositions(z, m);
      const auto decs = block_decompositions(z, m);
      CHECK(decs.size() == brute.size());
      for (const auto& d : decs) {
        REQUIRE(brute.count(d.blocks));
        CHECK(d.multiplicity == brute.at(d.blocks));
        const auto reps = coset_reps(z, d.blocks);
        CHECK(reps.size() == d.multiplicity);
        const Seq w = concat(d.blocks);
        for (const auto& s : reps)
          for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == w[s[i]]);
        // every map z -> concat(blocks) factors through exactly one representative
        std::map<Perm, std::size_t> hits;
        for (const auto& pi : hom_set(z, w)) {
          const auto [rho, sigma] = canonical_split(pi, z, d.blocks);
          CHECK(compose_perm(rho, sigma) == pi);
          CHECK(std::find(reps.begin(), reps.end(), sigma) != reps.end());
          ++hits[sigma];
        }
        CHECK(hits.size() == reps.size());
      }
    }
}

TEST_CASE("tensor action of the stabilizer") {
  const Seq rep{0, 0, 1};
  const PermAction a = tensor_action(rep, {2, 3});
  CHECK(a.dim() == 12);
  CHECK_FALSE(a.coxeter_violation().has_value());
  // Sym^2(Q^2) ⊗ Q^3
  CHECK(invariants(a).dim() == 9);
  CHECK(tensor_dims(Seq{1, 0}, {2, 3}) == std::vector<Index>{3, 2});
  CHECK(block_permutation({1, 2}, Perm{1, 0}) == Perm{2, 0, 1});
  CHECK(direct_sum_perm({Perm{1, 0}, Perm{0}}) == Perm{1, 0, 2});
}

// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "checks.hpp"
#include "corpus.hpp"
#include "opwork/functors/analytic.hpp"
#include "opwork/functors/identities.hpp"
#include "opwork/functors/prop.hpp"
#include "opwork/operad/builders.hpp"
#include "opwork/tower/tower.hpp"
#include "oracles.hpp"

using namespace opwork;

namespace {

// Every comparison below is exact rational equality: the tolerance is zero.
const Rational kTolerance = 0;
constexpr std::uint64_t kSeed = 20240601;
constexpr int kPanel = 20;
constexpr int kQuadruples = 100;
constexpr Index kAmbient = 8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string join(const std::vector<Index>& v) {
  std::string s;
  for (Index x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

bool within_tolerance(const Matrix& a, const Matrix& b) { return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).max_abs() <= kTolerance; }

void operad_axioms(Outcome& o) {
  for (const auto& [name, cap] : std::vector<std::pair<std::string, int>>{{"as", 5}, {"com", 5}, {"module", 4}}) {
    const ValidationReport r = validate(build_builtin(name, cap));
    o.detail << " " << name << "@" << cap << ":" << r.checks << " checks/" << r.failures.size() << " failures;";
    o.require(r.ok() && r.checks > 0, name);
  }
  // every single-entry corruption of the As cap 3 tables
  const OperadData base = build_assoc(3);
  std::size_t planted = 0, caught = 0;
  for (const auto& key : base.gamma_keys()) {
    const Matrix t = base.gamma_table(key);
    for (Index row = 0; row < t.rows(); ++row)
      for (Index col = 0; col < t.cols(); ++col) {
        OperadData op = build_assoc(3);
        op.materialize_gamma();
        op.set_gamma_entry(key, row, col, t.at(row, col) + 1);
        ++planted;
        caught += !validate(op).ok();
      }
  }
  // an equivariant corruption only the associativity squares can see
  OperadData com = build_comm(4);
  com.materialize_gamma();
  com.set_gamma_entry(GammaKey{Seq{0, 0}, 0, {Seq{0}, Seq{0, 0}}}, 0, 0, 2);
  com.set_gamma_entry(GammaKey{Seq{0, 0}, 0, {Seq{0, 0}, Seq{0}}}, 0, 0, 2);
  std::size_t assoc = 0, other = 0;
  for (const auto& f : validate(com).failures) (f.kind == "associativity" ? assoc : other) += 1;
  o.detail << " planted " << caught << "/" << planted << " detected; rescaled Com: " << assoc << " associativity failures";
  o.require(caught == planted, "planted corruption missed");
  o.require(assoc > 0 && other == 0, "associativity square");
}

void identities(Outcome& o) {
  for (const auto& name : {"com", "as"}) {
    const IdentityReport r = verify_identities(build_builtin(name, 3), {2}, {2}, 3, kSeed, kPanel);
    std::size_t tested = 0, passed = 0;
    for (const auto& c : r.checks) {
      tested += c.maps_tested;
      passed += c.maps_passed;
      o.require(c.dims_equal && c.iso, std::string(name) + " " + c.name);
      o.require(c.maps_tested >= static_cast<std::size_t>(kPanel), std::string(name) + " panel size");
    }
    o.detail << " " << name << ": " << r.checks.size() << " identities, naturality " << passed << "/" << tested << ";";
    o.require(r.ok() && r.checks.size() == 4, name);
  }
}

void dimensions(Outcome& o) {
  const OperadData com = build_comm(3), as = build_assoc(3);
  const auto fc = FreeAlgebra(com, {2}, 3).graded().weight_totals();
  const auto fa = FreeAlgebra(as, {2}, 3).graded().weight_totals();
  o.detail << " free(Com)=" << join(fc) << " free(As)=" << join(fa);
  o.require(fc == std::vector<Index>{2, 3, 4} && fc == oracle::character_dims(com, {2}, 3), "Com");
  o.require(fa == std::vector<Index>{2, 4, 8} && fa == oracle::character_dims(as, {2}, 3), "As");
  for (const auto& name : {"as", "com", "module", "cas2", "nilcom2"}) {
    const OperadData op = build_builtin(name, 3);
    const std::vector<Index> d(op.ncolors(), 2);
    const FreeAlgebra free(op, d, 3);
    o.require(Cowedge(op, d, 3).graded() == free.graded(), std::string("cowedge ") + name);
    o.require(free.graded().weight_totals() == oracle::character_dims(op, d, 3), std::string("oracle ") + name);
  }
  const Index prop = PropComponent(build_comm(3), Seq{0, 0, 0}, Seq{0, 0}).dim();
  o.detail << " cowedge=free for 5 builtins; prop(Com,3->2)=" << prop;
  o.require(prop == 6 && prop == oracle::prop_dim(build_comm(3), Seq{0, 0, 0}, Seq{0, 0}), "prop");
}

void lax(Outcome& o) {
  std::size_t pieces = 0;
  for (const auto& [name, cap] : std::vector<std::pair<std::string, int>>{{"as", 4}, {"com", 4}, {"module", 4}, {"nilcom2", 4}, {"cas2", 3}}) {
    const OperadData op = build_builtin(name, cap);
    const auto t = checks::alpha_injective(op, std::vector<Index>(op.ncolors(), 2), cap);
    pieces += t.checked;
    o.require(t.ok(), "alpha " + name);
  }
  const auto sq = checks::alpha_square(build_builtin("nilcom2", 2), {2}, 4);
  o.detail << " alpha_1,1 injective on " << pieces << " graded pieces; square on nilcom2: " << sq.checked << " pieces";
  o.require(sq.ok(), "associativity square");
}

void tower_collapse(Outcome& o) {
  const OperadData op = build_builtin("nilcom2", 2);
  const auto stages = tower(op, {2}, 3);
  o.require(stages.size() == 3, "three stages");
  for (const auto& s : stages) {
    o.detail << " Q" << s.k << "=" << s.dim;
    o.require(s.dim == 5 && s.chi_injective, "Q" + std::to_string(s.k));
  }
  const ComonadReport r = verify_comonad(op, {2});
  o.detail << "; comonad " << r.checks.checks << " checks/" << r.checks.failures.size() << " failures";
  o.require(r.ok(), "verify_comonad");
}

struct Named {
  std::string name;
  RepresentedElement e;
};

void rep_is_rec(Outcome& o, const std::vector<Named>& elements) {
  for (const auto& [name, e] : elements) {
    const Jet f = expand(e, 6);
    const HankelReport h = hankel(f);
    o.require(h.stabilized && h.ranks.back() <= e.state_dim(), name + " hankel");
    o.require(h.ranks == oracle::word_hankel_ranks(f), name + " oracle");
    const auto r = realize(f);
    const auto* got = std::get_if<RepresentedElement>(&r);
    o.require(got != nullptr, name + " realize");
    if (!got) continue;
    o.require(got->state_dim() == h.ranks.back(), name + " minimal");
    o.require(jets_equal(expand(*got, 6), f), name + " round-trip");
    o.detail << " " << name << ": rank " << h.ranks.back() << ", states " << got->state_dim() << ";";
  }
}

void non_example(Outcome& o) {
  const OperadData as8 = build_assoc(8);
  const Jet f = corpus::anbn(as8, 8);
  const HankelReport h = hankel(f);
  o.detail << " ranks at caps 4,6,8: " << h.ranks[3] << "," << h.ranks[5] << "," << h.ranks[7];
  o.require(h.ranks[3] < h.ranks[5] && h.ranks[5] < h.ranks[7], "increasing");
  o.require(h.ranks == oracle::word_hankel_ranks(f), "oracle");
  o.require(std::holds_alternative<RealizationFailure>(realize(f)), "realize must fail");
}

void comultiplication(Outcome& o, const std::vector<Named>& elements) {
  for (const auto& [name, e] : elements) {
    const auto t = checks::comult_slotwise(e, 4);
    o.detail << " " << name << ": " << t.checked << " composites;";
    o.require(t.ok(), name);
  }
}

void couniversality(Outcome& o, const std::vector<Named>& small, const std::vector<Named>& large) {
  for (const auto& [name, e] : small) {
    const auto l = checks::lift_properties(e, 4);
    const auto t = checks::translate_closure(e, 4);
    o.require(l.ok(), name + " lift");
    o.require(t.ok(), name + " translate");
  }
  for (const auto& [name, e] : large) {
    for (Index j = 0; j < e.state_dims()[e.color]; ++j) {
      const auto r = realize(expand(lift(e.d, e.p, e.color, SparseVec::unit(j)), 6));
      const auto* got = std::get_if<RepresentedElement>(&r);
      o.require(got && got->state_dim() <= e.state_dim(), name + " realize(expand(lift))");
    }
    o.detail << " " << name << " ok;";
  }
}

void intersection_of_tensors(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  int equal = 0;
  for (int t = 0; t < kQuadruples; ++t) {
    const Index n = 1 + rng() % kAmbient, m = 1 + rng() % kAmbient;
    const auto cv = oracle::random_vectors(n, rng() % (n + 1), rng), cw = oracle::random_vectors(m, rng() % (m + 1), rng);
    const auto grow = [&](std::vector<SparseVec> vs, Index ambient) {
      for (const auto& v : oracle::random_vectors(ambient, rng() % 3, rng)) vs.push_back(v);
      return Subspace::span(ambient, vs);
    };
    const Subspace a = grow(cv, n), a2 = grow(cv, n), b = grow(cw, m), b2 = grow(cw, m);
    const Subspace lhs = intersect(tensor_subspace(a, b), tensor_subspace(a2, b2));
    const Subspace ia = intersect(a, a2), ib = intersect(b, b2);
    const Subspace rhs = tensor_subspace(ia, ib);
    // dim(A ∩ A') = dim A + dim A' - dim(A + A'), by dense elimination
    const auto dense_cap = [](const Subspace& x, const Subspace& y) {
      std::vector<SparseVec> all = x.basis_vectors();
      all.insert(all.end(), y.basis_vectors().begin(), y.basis_vectors().end());
      return x.dim() + y.dim() - oracle::dense_rank(oracle::to_dense(all, x.ambient()));
    };
    equal += lhs == rhs && within_tolerance(lhs.basis(), rhs.basis()) && rhs.dim() == dense_cap(a, a2) * dense_cap(b, b2);
  }
  o.detail << " " << equal << "/" << kQuadruples << " quadruples";
  o.require(equal == kQuadruples, "intersection");
}

}  // namespace

int main() {
  const OperadData as4 = build_assoc(4), as6 = build_assoc(6);
  const std::vector<Named> small{{"grouplike", corpus::grouplike(as4, 4)}, {"primitive", corpus::primitive_pair(as4, 4)}, {"3-state", corpus::matrix_coefficients(as4, 4)}};
  const std::vector<Named> large{{"grouplike", corpus::grouplike(as6, 6)}, {"primitive", corpus::primitive_pair(as6, 6)}, {"3-state", corpus::matrix_coefficients(as6, 6)}};

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"operad axioms", operad_axioms},
      {"functor identities", identities},
      {"graded dimensions", dimensions},
      {"lax structure", lax},
      {"tower collapse", tower_collapse},
      {"representative = recursive", [&](Outcome& o) { rep_is_rec(o, large); }},
      {"a^n b^n non-example", non_example},
      {"comultiplication", [&](Outcome& o) { comultiplication(o, small); }},
      {"couniversality", [&](Outcome& o) { couniversality(o, small, large); }},
      {"intersection of tensors", intersection_of_tensors},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ":" << o.detail.str() << " (" << std::fixed
              << std::setprecision(1) << secs << "s)" << std::endl;
  }
  return failed ? 1 : 0;
}

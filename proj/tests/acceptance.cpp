// Acceptance suite: every structural claim the toolkit is expected to verify,
// one line per criterion, exact equality throughout. Exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wqs/curve.hpp"
#include "wqs/graph.hpp"
#include "wqs/group.hpp"
#include "wqs/local.hpp"
#include "wqs/rep.hpp"

namespace {

using wqs::group::GroupTable;

const std::vector<int> kAllQ{2, 3, 4, 5, 7, 8, 9};
const std::vector<int> kRamQ{2, 3, 4, 5};

struct Context {
  std::map<int, GroupTable> groups;
  std::map<int, std::vector<wqs::group::ConjugacyClass>> classes;
  std::map<int, wqs::local::RamificationProfile> profiles;

  GroupTable& group(int q) {
    auto it = groups.find(q);
    if (it == groups.end()) it = groups.emplace(q, GroupTable(q)).first;
    return it->second;
  }
  const std::vector<wqs::group::ConjugacyClass>& cls(int q) {
    auto it = classes.find(q);
    if (it == classes.end()) it = classes.emplace(q, group(q).conjugacy_classes()).first;
    return it->second;
  }
  const wqs::local::RamificationProfile& profile(int q) {
    auto it = profiles.find(q);
    if (it == profiles.end()) it = profiles.emplace(q, wqs::local::filtration(group(q))).first;
    return it->second;
  }
};

Context ctx;

#define REQUIRE_EQ(a, b)                                                 \
  do {                                                                   \
    if (!((a) == (b))) throw wqs::Error("AcceptanceCheck", #a " != " #b); \
  } while (0)

#define REQUIRE_TRUE(a)                                              \
  do {                                                               \
    if (!(a)) throw wqs::Error("AcceptanceCheck", #a " is false");   \
  } while (0)

// 1. Group structure for every q.
void criterion_group_structure() {
  for (int q : kAllQ) {
    GroupTable& G = ctx.group(q);
    REQUIRE_EQ(G.size(), static_cast<size_t>(q) * q * q);
    auto census = G.subgroup_census();  // throws unless center = G' = Frattini = {(t,0)}
    REQUIRE_EQ(census.center.size(), static_cast<size_t>(q));
    if (G.p() == 2) {
      REQUIRE_EQ(G.exponent(), 4);
      for (const auto& a : G.elements())
        if (!G.is_central(a)) REQUIRE_EQ(G.element_order(a), 4);
    } else {
      REQUIRE_EQ(G.exponent(), G.p());
    }
    const auto& classes = ctx.cls(q);
    REQUIRE_EQ(classes.size(), static_cast<size_t>(q) * q + q - 1);
    size_t singletons = 0, fibers = 0;
    for (const auto& c : classes) {
      if (c.members.size() == 1)
        ++singletons;
      else if (c.members.size() == static_cast<size_t>(q))
        ++fibers;
    }
    REQUIRE_EQ(singletons, static_cast<size_t>(q));
    REQUIRE_EQ(fibers, static_cast<size_t>(q) * q - 1);
  }
}

// 2. Ramification filtration and fixed-scheme lengths.
void criterion_ramification() {
  for (int q : kRamQ) {
    GroupTable& G = ctx.group(q);
    const auto& prof = ctx.profile(q);
    std::vector<size_t> expected{static_cast<size_t>(q) * q * q, static_cast<size_t>(q) * q * q};
    for (int i = 2; i <= q + 1; ++i) expected.push_back(static_cast<size_t>(q));
    expected.push_back(1);
    std::vector<size_t> got;
    for (auto [i, n] : prof.filtration) got.push_back(n);
    REQUIRE_TRUE(got == expected);
    for (const auto& sigma : G.elements()) {
      if (sigma == G.identity() || !G.is_central(sigma)) continue;
      REQUIRE_EQ(wqs::local::fixed_scheme_length(G, sigma), q + 2);
    }
  }
}

// 3. Swan conductor via the defining sum and the closed form.
void criterion_swan() {
  for (int q : kAllQ) {
    GroupTable& G = ctx.group(q);
    auto dims = wqs::rep::invariant_dims(G, ctx.cls(q));
    const int dim_m = q * (q - 1);
    const auto& prof = ctx.profile(q);
    std::map<int, int> fixed;
    for (auto [i, n] : prof.filtration) {
      if (i < 1 || n <= 1) continue;
      fixed[i] = n == G.size() ? static_cast<int>(dims.dim_h1_g) : static_cast<int>(dims.dim_h1_z);
    }
    long long by_sum = wqs::local::swan_conductor(prof, dim_m, fixed);  // asserts integrality
    long long closed = wqs::local::swan_conductor_closed_form(q, dim_m, static_cast<int>(dims.dim_h1_g),
                                                              static_cast<int>(dims.dim_h1_z));
    REQUIRE_EQ(by_sum, static_cast<long long>(q) * q - 1);
    REQUIRE_EQ(closed, by_sum);
  }
}

// 4. Point counts match the single-eigenvalue predictions, sign fixed at f=1.
void criterion_point_counts() {
  for (int q : {2, 3, 4}) {
    auto rep = wqs::curve::verify_supersingular(q, 3);
    REQUIRE_EQ(rep.sign, -1);
    REQUIRE_TRUE(rep.ok);
    REQUIRE_EQ(rep.fmax_checked, 3);
    for (size_t i = 0; i < rep.counts.size(); ++i)
      REQUIRE_EQ(rep.counts[i].count, rep.predictions[i]);
  }
}

// 5. Representation census and invariant dimensions.
void criterion_representations() {
  for (int q : kAllQ) {
    GroupTable& G = ctx.group(q);
    const auto& classes = ctx.cls(q);
    for (auto kind : {wqs::rep::FieldKind::NoMuP, wqs::rep::FieldKind::Complex}) {
      REQUIRE_EQ(wqs::rep::irr_count_by_orbits(G, classes, kind), wqs::rep::irr_count(G.q(), kind));
      REQUIRE_TRUE(wqs::rep::wedderburn_audit(wqs::rep::basic_set(q, kind)));
    }
    REQUIRE_TRUE(wqs::rep::dimension_match(q));
    auto dims = wqs::rep::invariant_dims(G, classes);
    REQUIRE_EQ(dims.dim_h1_g, 0);
    REQUIRE_EQ(dims.dim_h1_z, 0);
    REQUIRE_EQ(dims.dim_h1_tensor_g, static_cast<long long>(q) - 1);
  }
}

// 6. Lefschetz consistency for every nontrivial element.
void criterion_lefschetz() {
  for (int q : kRamQ) REQUIRE_TRUE(wqs::rep::trace_vs_lefschetz(ctx.group(q), ctx.cls(q)));
}

// 7. Fiber combinatorics.
void criterion_fiber() {
  for (int q : kAllQ) {
    auto fiber = wqs::graph::solve_self_intersections(wqs::graph::build_fiber_graph(q));
    REQUIRE_EQ(fiber.vertices.size(), static_cast<size_t>(q) * q + 4);
    REQUIRE_EQ(wqs::graph::node_count(fiber), 2);
    REQUIRE_EQ(wqs::graph::tree_euler_number(fiber), static_cast<long long>(q) * q + 5);
    size_t minus_q = 0;
    for (const auto& v : fiber.vertices) {
      long long s = *v.self_intersection;
      REQUIRE_TRUE(s == -2 || s == -q);
      if (s == -q) ++minus_q;
    }
    if (q == 2)
      REQUIRE_EQ(minus_q, fiber.vertices.size());  // -q = -2 coincide
    else
      REQUIRE_EQ(minus_q, 2u);
  }
  auto i3 = wqs::graph::build_fiber_graph(2);
  std::vector<long long> mult;
  for (const auto& v : i3.vertices) mult.push_back(v.multiplicity);
  REQUIRE_TRUE(mult == (std::vector<long long>{1, 1, 2, 2, 2, 2, 1, 1}));
}

// 8. Surface invariants, both routes.
void criterion_surface_invariants() {
  for (int q : kAllQ) {
    GroupTable& G = ctx.group(q);
    auto dims = wqs::rep::invariant_dims(G, ctx.cls(q));
    const auto& prof = ctx.profile(q);
    std::map<int, int> fixed;
    for (auto [i, n] : prof.filtration) {
      if (i < 1 || n <= 1) continue;
      fixed[i] = n == G.size() ? static_cast<int>(dims.dim_h1_g) : static_cast<int>(dims.dim_h1_z);
    }
    long long delta = wqs::local::swan_conductor(prof, q * (q - 1), fixed);
    // surface_invariants cross-checks Dolgachev/Noether against Tate-Shioda
    auto inv = wqs::graph::surface_invariants(q, delta, dims.dim_h1_tensor_g);
    REQUIRE_EQ(inv.e, static_cast<long long>(q) * q + q + 6);
    REQUIRE_EQ(inv.K2, -static_cast<long long>(q) * q - q + 6);
    REQUIRE_EQ(inv.rho, static_cast<long long>(q) * q + q + 4);
  }
}

// 9. Hirzebruch-Jung toolkit over all types with m <= 50.
void criterion_hj_toolkit() {
  for (long long m = 2; m <= 50; ++m) {
    for (long long b = 1; b < m; ++b) {
      if (std::gcd(m, b) != 1) continue;
      auto hj = wqs::graph::cf_expand(m, b);
      REQUIRE_TRUE((wqs::graph::cf_eval(hj.expansion) == std::pair{m, b}));
      auto chain = wqs::graph::chain_graph(hj.expansion);
      auto A = wqs::graph::intersection_matrix(chain);
      REQUIRE_EQ(std::llabs(wqs::graph::determinant(A)), m);
      REQUIRE_TRUE(wqs::graph::is_negative_definite(A));
      std::vector<long long> rev(hj.expansion.rbegin(), hj.expansion.rend());
      auto [m2, b2] = wqs::graph::cf_eval(rev);
      REQUIRE_EQ(m2, m);
      REQUIRE_EQ((b * b2) % m, 1);
      REQUIRE_TRUE(wqs::graph::fundamental_cycle(chain) ==
                   std::vector<long long>(hj.expansion.size(), 1));
      REQUIRE_EQ(wqs::graph::node_count(chain), 0);
      for (long long p : {1LL, 2LL, 3LL, 5LL, 7LL}) {
        long long mm = m;
        if (p > 1)
          while (mm % p == 0) mm /= p;
        REQUIRE_EQ(wqs::graph::local_pi1_order(m, p), mm);
      }
    }
  }
}

// 10. Oracle equivalence: fast vs naive point counts; closed-form vs
// first-principles commutators.
void criterion_oracles() {
  for (int q : kAllQ) {
    for (int f = 1; f <= 6; ++f) {
      uint64_t size = 1;
      for (int i = 0; i < 2 * f; ++i) size *= static_cast<uint64_t>(q);
      if (size > 4096) break;
      int p = 0, m = 0;
      wqs::group::factor_prime_power(q, p, m);
      const auto& F = wqs::gf::FieldSpec::make(p, 2 * f * m);
      std::vector<uint32_t> lhs;
      lhs.reserve(F.order());
      for (uint64_t yi = 0; yi < F.order(); ++yi) {
        auto y = F.element(yi);
        lhs.push_back(F.add(F.pow(y, static_cast<uint64_t>(q)), y).index());
      }
      long long naive = 1;
      for (uint64_t xi = 0; xi < F.order(); ++xi) {
        uint32_t rhs = F.pow(F.element(xi), static_cast<uint64_t>(q) + 1).index();
        for (uint32_t v : lhs)
          if (v == rhs) ++naive;
      }
      REQUIRE_EQ(wqs::curve::count_points(q, f).count, naive);
    }
  }

  for (int q : {2, 3}) {
    GroupTable& G = ctx.group(q);
    for (const auto& a : G.elements())
      for (const auto& b : G.elements())
        REQUIRE_TRUE(G.commutator(a, b) ==
                     G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  }
  for (int q : {4, 5, 7, 8, 9}) {
    GroupTable& G = ctx.group(q);
    std::mt19937 rng(20260810u + static_cast<unsigned>(q));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(G.size()) - 1);
    for (int t = 0; t < 10000; ++t) {
      auto a = G.element(pick(rng)), b = G.element(pick(rng));
      REQUIRE_TRUE(G.commutator(a, b) == G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> fn;
  };
  const std::vector<Criterion> criteria{
      {"1 group-structure (q in 2..9)", criterion_group_structure},
      {"2 ramification-filtration (q in 2..5)", criterion_ramification},
      {"3 swan-conductor (both routes)", criterion_swan},
      {"4 point-counts-supersingularity (q in 2..4, f in 1..3)", criterion_point_counts},
      {"5 representation-census", criterion_representations},
      {"6 lefschetz-consistency (q in 2..5)", criterion_lefschetz},
      {"7 fiber-combinatorics", criterion_fiber},
      {"8 surface-invariants (both routes)", criterion_surface_invariants},
      {"9 hj-toolkit (m <= 50)", criterion_hj_toolkit},
      {"10 oracle-equivalence", criterion_oracles},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      c.fn();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("  [") + e.what() + "]";
      ++failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %-55s %s (%.2fs)%s\n", c.name, verdict.c_str(), secs, detail.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

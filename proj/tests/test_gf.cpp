#include <doctest.h>

#include <random>

#include "wqs/gf.hpp"

using wqs::Error;
using namespace wqs::gf;

namespace {

// Exhaustive-scan oracle for solve_additive, independent of the linear
// algebra path.
std::vector<FieldElement> scan_solutions(const FieldSpec& F, const AdditiveMap& L,
                                         const FieldElement& target) {
  std::vector<FieldElement> out;
  for (uint64_t i = 0; i < F.order(); ++i) {
    FieldElement a = F.element(i);
    FieldElement img = F.zero();
    for (const auto& term : L) img = F.add(img, F.mul(term.coeff, F.frobenius(a, term.frob_power)));
    if (img == target) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("deterministic moduli are the lexicographically smallest irreducibles") {
  CHECK(FieldSpec::make(2, 2).modulus() == std::vector<int>{1, 1, 1});        // x^2+x+1
  CHECK(FieldSpec::make(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});     // x^3+x+1
  CHECK(FieldSpec::make(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1
  CHECK(FieldSpec::make(3, 1).modulus() == std::vector<int>{0, 1});           // x
  CHECK(FieldSpec::make(3, 2).modulus() == std::vector<int>{1, 0, 1});        // x^2+1
  // smallest irreducible octic over F_2: x^8+x^4+x^3+x+1
  CHECK(FieldSpec::make(2, 8).modulus() == std::vector<int>{1, 1, 0, 1, 1, 0, 0, 0, 1});
  // two lookups give the same interned spec
  CHECK(&FieldSpec::make(2, 8) == &FieldSpec::make(2, 8));
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_WITH_AS(FieldSpec::make(4, 2), doctest::Contains("NonPrime"), Error);
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 25), doctest::Contains("DegreeTooLarge"), Error);
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 0), doctest::Contains("DegreeTooLarge"), Error);
}

TEST_CASE("arithmetic in F_4") {
  const FieldSpec& F = FieldSpec::make(2, 2);
  FieldElement w = F.element(2), w2 = F.element(3);
  CHECK(F.mul(w, w2) == F.one());      // w * w^2 = 1
  CHECK(F.add(w, w2) == F.one());      // w + w^2 = 1
  CHECK(F.mul(w, w) == w2);            // w^2
  CHECK(F.pow(w, 3) == F.one());
  CHECK(F.inv(w) == w2);
  CHECK_THROWS_WITH_AS(F.inv(F.zero()), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("field axioms on small fields, exhaustive") {
  for (auto [p, M] : {std::pair{2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
    const FieldSpec& F = FieldSpec::make(p, M);
    for (uint64_t i = 0; i < F.order(); ++i) {
      FieldElement a = F.element(i);
      CHECK(F.add(a, F.zero()) == a);
      CHECK(F.mul(a, F.one()) == a);
      CHECK(F.add(a, F.neg(a)) == F.zero());
      CHECK(F.pow(a, F.order()) == a);  // Frobenius closure a^{p^M} = a
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.element(a.index()) == a);  // index round trip
    }
    // sampled associativity/distributivity
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint64_t> pick(0, F.order() - 1);
    for (int t = 0; t < 200; ++t) {
      FieldElement a = F.element(pick(rng)), b = F.element(pick(rng)), c = F.element(pick(rng));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
  }
}

TEST_CASE("spec mismatch is rejected") {
  const FieldSpec& F4 = FieldSpec::make(2, 2);
  const FieldSpec& F8 = FieldSpec::make(2, 3);
  CHECK_THROWS_WITH_AS(F4.add(F4.one(), F8.one()), doctest::Contains("SpecMismatch"), Error);
}

TEST_CASE("subfield members") {
  const FieldSpec& F16 = FieldSpec::make(2, 4);
  auto sub = F16.subfield_members(2);
  REQUIRE(sub.size() == 4);
  // closed under add, mul, inv
  for (const auto& a : sub)
    for (const auto& b : sub) {
      auto in = [&sub](const FieldElement& x) {
        for (const auto& s : sub)
          if (s == x) return true;
        return false;
      };
      CHECK(in(F16.add(a, b)));
      CHECK(in(F16.mul(a, b)));
      if (!a.is_zero()) CHECK(in(F16.inv(a)));
    }

  const FieldSpec& F81 = FieldSpec::make(3, 4);
  CHECK(F81.subfield_members(2).size() == 9);
  auto prime = F81.subfield_members(1);
  REQUIRE(prime.size() == 3);
  for (size_t k = 0; k < prime.size(); ++k) CHECK(prime[k] == F81.from_int(static_cast<long long>(k)));

  CHECK_THROWS_WITH_AS(F16.subfield_members(3), doctest::Contains("NotASubfieldDegree"), Error);
}

TEST_CASE("solve_additive matches the exhaustive-scan oracle") {
  const FieldSpec& F4 = FieldSpec::make(2, 2);

  // kernel of a^{q^2} + a with q = 2 is all of F_4
  AdditiveMap r_eq{{F4.one(), 2}, {F4.one(), 0}};
  auto sols = solve_additive(F4, r_eq, F4.zero());
  CHECK(sols.size() == 4);
  CHECK(sols == scan_solutions(F4, r_eq, F4.zero()));

  // a^2 + a = 1 over F_4 has solutions {w, w^2}
  AdditiveMap t_eq{{F4.one(), 1}, {F4.one(), 0}};
  auto ts = solve_additive(F4, t_eq, F4.one());
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == F4.element(2));
  CHECK(ts[1] == F4.element(3));

  // identity map: single solution b
  AdditiveMap idm{{F4.one(), 0}};
  for (uint64_t i = 0; i < 4; ++i) {
    auto s = solve_additive(F4, idm, F4.element(i));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == F4.element(i));
  }

  // random additive maps across several fields: full agreement with the scan,
  // and the solution set is a kernel coset
  std::mt19937 rng(11);
  for (auto [p, M] : {std::pair{2, 4}, {3, 2}, {5, 2}, {3, 3}}) {
    const FieldSpec& F = FieldSpec::make(p, M);
    std::uniform_int_distribution<uint64_t> pick(0, F.order() - 1);
    std::uniform_int_distribution<int> fr(0, M);
    for (int t = 0; t < 20; ++t) {
      AdditiveMap L{{F.element(pick(rng)), fr(rng)}, {F.element(pick(rng)), fr(rng)}};
      FieldElement target = F.element(pick(rng));
      auto fast = solve_additive(F, L, target);
      auto slow = scan_solutions(F, L, target);
      std::sort(slow.begin(), slow.end(),
                [](const FieldElement& a, const FieldElement& b) { return a.index() < b.index(); });
      CHECK(fast == slow);
      auto kernel = solve_additive(F, L, F.zero());
      if (fast.size() > 1) {
        auto in_kernel = [&kernel](const FieldElement& x) {
          for (const auto& k : kernel)
            if (k == x) return true;
          return false;
        };
        for (size_t i = 1; i < fast.size(); ++i) CHECK(in_kernel(F.sub(fast[i], fast[0])));
      }
    }
  }
}

TEST_CASE("image_check_matrix certifies membership") {
  const FieldSpec& F = FieldSpec::make(3, 2);
  AdditiveMap L{{F.one(), 1}, {F.one(), 0}};  // t^3 + t on F_9
  auto H = image_check_matrix(F, L);
  for (uint64_t c = 0; c < F.order(); ++c) {
    FieldElement target = F.element(c);
    bool member = !solve_additive(F, L, target).empty();
    bool passes = true;
    for (const auto& row : H) {
      int s = 0;
      for (int j = 0; j < F.degree(); ++j) s += row[static_cast<size_t>(j)] * target.coeff(j);
      if (s % F.p() != 0) passes = false;
    }
    CHECK(member == passes);
  }
}

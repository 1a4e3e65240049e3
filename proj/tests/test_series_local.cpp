#include <doctest.h>

#include <random>

#include "wqs/local.hpp"

using wqs::Error;
using namespace wqs::local;
using wqs::group::GroupElement;
using wqs::group::GroupTable;

TEST_CASE("series ring basics") {
  const auto& F = wqs::gf::FieldSpec::make(2, 2);
  const int N = 8;
  auto one = TruncatedSeries::constant(F, N, F.one());
  auto u = TruncatedSeries::u_power(F, N, 1);
  auto s = one + u;  // 1 + u
  CHECK((s * s.inverse_unit()) == one);
  CHECK((s * s) == one + u * u);  // char 2
  CHECK(u.valuation() == 1);
  CHECK(TruncatedSeries(F, N).valuation() == N);
  // compose (1 + u)^2 with u^2: 1 + u^2 mapsto 1 + u^4
  auto comp = (s * s).compose(u * u);
  CHECK(comp == one + TruncatedSeries::u_power(F, N, 4));
  CHECK_THROWS_AS((one + u).compose(one), Error);  // inner needs valuation >= 1
  CHECK_THROWS_WITH_AS(u.inverse_unit(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("series inversion over odd characteristic") {
  const auto& F = wqs::gf::FieldSpec::make(3, 2);
  const int N = 12;
  std::mt19937 rng(5);
  std::uniform_int_distribution<uint64_t> pick(0, F.order() - 1);
  for (int t = 0; t < 20; ++t) {
    TruncatedSeries s(F, N);
    s.set_coeff(0, F.element(pick(rng) % (F.order() - 1) + 1));  // nonzero constant
    for (int i = 1; i < N; ++i) s.set_coeff(i, F.element(pick(rng)));
    CHECK((s * s.inverse_unit()) == TruncatedSeries::constant(F, N, F.one()));
  }
}

TEST_CASE("expand_w solves w - w^q = u^{q+1}") {
  GroupTable G2(2);
  auto w2 = expand_w(G2.field(), 2, 8);
  // q=2: w = u^3 + u^6 + O(u^7)
  for (int i = 0; i < 8; ++i) {
    bool expect = (i == 3 || i == 6);
    CHECK(w2.coeff(i).is_zero() == !expect);
  }

  GroupTable G3(3);
  auto w3 = expand_w(G3.field(), 3, 10);
  CHECK(w3.valuation() == 4);
  CHECK(w3.coeff(4) == G3.field().one());
  for (int i = 0; i < 4; ++i) CHECK(w3.coeff(i).is_zero());

  // defining equation holds mod u^N for several q
  for (int q : {2, 3, 4}) {
    GroupTable G(q);
    const auto& F = G.field();
    int N = default_precision(q);
    auto w = expand_w(F, q, N);
    auto lhs = w - w.pow(q);
    CHECK(lhs == TruncatedSeries::u_power(F, N, q + 1));
  }

  CHECK_THROWS_WITH_AS(expand_w(G2.field(), 2, 4), doctest::Contains("PrecisionTooSmall"), Error);
}

TEST_CASE("action on the uniformizer") {
  GroupTable G(2);
  const auto& F = G.field();
  const int N = 8;
  CHECK(act_on_uniformizer(G, G.identity(), N) == TruncatedSeries::u_power(F, N, 1));

  for (const auto& sigma : G.elements()) {
    if (sigma == G.identity()) continue;
    auto su = act_on_uniformizer(G, sigma, N);
    auto diff = su - TruncatedSeries::u_power(F, N, 1);
    if (G.is_central(sigma)) {
      // sigma(u) = u - t u^{q+2} + O(u^{q+3})
      CHECK(diff.valuation() == 4);
      CHECK(diff.coeff(4) == F.neg(sigma.t));
    } else {
      CHECK(diff.valuation() == 2);
    }
  }
}

TEST_CASE("ramification jumps and fixed scheme lengths") {
  for (int q : {2, 3, 4, 5}) {
    GroupTable G(q);
    for (const auto& sigma : G.elements()) {
      if (sigma == G.identity()) continue;
      int jump = ramification_jump(G, sigma);
      int len = fixed_scheme_length(G, sigma);
      if (G.is_central(sigma)) {
        CHECK(jump == q + 1);
        CHECK(len == q + 2);
      } else {
        CHECK(jump == 1);
        CHECK(len == 2);
      }
      CHECK(len == jump + 1);
    }
  }
}

TEST_CASE("filtration profiles") {
  {
    GroupTable G(2);
    auto prof = filtration(G);
    std::vector<size_t> orders;
    for (auto [i, n] : prof.filtration) orders.push_back(n);
    CHECK(orders == std::vector<size_t>{8, 8, 2, 2, 1});
  }
  {
    GroupTable G(3);
    auto prof = filtration(G);
    std::vector<size_t> orders;
    for (auto [i, n] : prof.filtration) orders.push_back(n);
    CHECK(orders == std::vector<size_t>{27, 27, 3, 3, 3, 1});
  }
}

TEST_CASE("composition convention: compose(act(a), act(b)) = act(mul(a,b))") {
  {
    GroupTable G(2);
    const int N = default_precision(2);
    std::vector<TruncatedSeries> acts;
    for (const auto& s : G.elements()) acts.push_back(act_on_uniformizer(G, s, N));
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = 0; j < G.size(); ++j) {
        auto prod = act_on_uniformizer(
            G, G.mul(G.element(static_cast<int>(i)), G.element(static_cast<int>(j))), N);
        CHECK(acts[i].compose(acts[j]) == prod);
      }
  }
  {
    GroupTable G(3);
    const int N = default_precision(3);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(G.size()) - 1);
    for (int t = 0; t < 150; ++t) {
      auto a = G.element(pick(rng)), b = G.element(pick(rng));
      auto composed = act_on_uniformizer(G, a, N).compose(act_on_uniformizer(G, b, N));
      CHECK(composed == act_on_uniformizer(G, G.mul(a, b), N));
    }
  }
}

TEST_CASE("jump properties: conjugation invariance and ultrametric bound") {
  GroupTable G(3);
  const int N = default_precision(3);
  auto u = TruncatedSeries::u_power(G.field(), N, 1);
  auto val_of = [&](const GroupElement& s) {
    return (act_on_uniformizer(G, s, N) - u).valuation();
  };
  for (const auto& a : G.elements()) {
    if (a == G.identity()) continue;
    for (const auto& g : G.elements())
      CHECK(ramification_jump(G, G.conjugate(g, a)) == ramification_jump(G, a));
  }
  for (const auto& a : G.elements())
    for (const auto& b : G.elements()) {
      auto ab = G.mul(a, b);
      if (a == G.identity() || b == G.identity() || ab == G.identity()) continue;
      CHECK(val_of(ab) >= std::min(val_of(a), val_of(b)));
    }
}

TEST_CASE("raising precision never changes a jump") {
  for (int q : {2, 3}) {
    GroupTable G(q);
    const auto& F = G.field();
    for (const auto& s : G.elements()) {
      if (s == G.identity()) continue;
      int n1 = (act_on_uniformizer(G, s, default_precision(q)) -
                TruncatedSeries::u_power(F, default_precision(q), 1))
                   .valuation();
      int n2 = (act_on_uniformizer(G, s, 2 * default_precision(q)) -
                TruncatedSeries::u_power(F, 2 * default_precision(q), 1))
                   .valuation();
      CHECK(n1 == n2);
    }
  }
}

TEST_CASE("swan conductor: defining sum, closed form, integrality") {
  {
    GroupTable G(2);
    auto prof = filtration(G);
    long long delta = swan_conductor(prof, 2, {{1, 0}, {2, 0}, {3, 0}});
    CHECK(delta == 3);
    CHECK(swan_conductor_closed_form(2, 2, 0, 0) == 3);
  }
  {
    GroupTable G(3);
    auto prof = filtration(G);
    long long delta = swan_conductor(prof, 6, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(delta == 8);
    CHECK(swan_conductor_closed_form(3, 6, 0, 0) == 8);
  }
  {
    // trivial module
    GroupTable G(2);
    auto prof = filtration(G);
    CHECK(swan_conductor(prof, 0, {{1, 0}, {2, 0}, {3, 0}}) == 0);
    // dim 1 with trivial invariants cannot give an integer at q = 2
    CHECK_THROWS_WITH_AS(swan_conductor(prof, 1, {{1, 0}, {2, 0}, {3, 0}}),
                         doctest::Contains("NonIntegralSwan"), Error);
    CHECK_THROWS_WITH_AS(swan_conductor(prof, 2, {{1, 0}}), doctest::Contains("NonIntegralSwan"),
                         Error);
  }
}

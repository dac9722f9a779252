#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycore/serialize.hpp"
#include "test_util.hpp"

#include <nlohmann/json.hpp>

using namespace polycore;

namespace {

Polynomial x(int nvars, int i) { return Polynomial::variable(nvars, i); }

Polynomial mul_free(const Polynomial& p, const Polynomial& q) {
  return mul_capped(p, q, CapProfile::unbounded(p.nvars()));
}

}  // namespace

TEST_CASE("variable and linear_sum basics") {
  CHECK(x(3, 2) == Polynomial::from_terms(3, {{Monomial::from_exponents({0, 1, 0}), 1}}));
  CHECK(x(1, 1).to_string() == "x1");
  CHECK(x(11, 11).coefficient_of(Monomial::unit(10)) == 1);
  CHECK_THROWS_AS(x(3, 4), std::out_of_range);
  CHECK_THROWS_AS(x(3, 0), std::out_of_range);

  CHECK(Polynomial::linear_sum(3, 1, 3) == x(3, 1) + x(3, 2) + x(3, 3));
  CHECK(Polynomial::linear_sum(5, 2, 2) == x(5, 2));
  CHECK(Polynomial::linear_sum(4, 3, 4) == x(4, 3) + x(4, 4));
  CHECK_THROWS_AS(Polynomial::linear_sum(4, 3, 5), std::out_of_range);
}

TEST_CASE("add: canonical sums") {
  auto p = x(2, 2) - x(2, 1);
  auto q = x(2, 1) - x(2, 2);
  CHECK(add(p, q).is_zero());
  CHECK(add(p, q).term_count() == 0);

  CHECK(add(x(2, 1), x(2, 1)) ==
        Polynomial::from_terms(2, {{Monomial::from_exponents({1, 0}), 2}}));

  auto r = mul_free(x(2, 1), x(2, 1)) + x(2, 2);  // x1^2 + x2
  CHECK(add(r, x(2, 2)).coefficient_of(Monomial::from_exponents({0, 1})) == 2);

  CHECK_THROWS_AS(add(x(2, 1), x(3, 1)), std::invalid_argument);
}

TEST_CASE("cut: exponent caps on one variable") {
  // x1^2 + x1 + 1
  auto p = mul_free(x(1, 1), x(1, 1)) + x(1, 1) + Polynomial::constant(1, 1);
  auto c = cut(p, 1, 1);
  CHECK(c == x(1, 1) + Polynomial::constant(1, 1));

  auto q = mul_free(mul_free(x(2, 2), x(2, 2)), mul_free(x(2, 2), x(2, 1)));
  CHECK(cut(q, 2, 3) == q);  // x2^3*x1 unchanged at cap 3

  auto r = mul_free(x(2, 2), x(2, 2)) - mul_free(x(2, 1), x(2, 1));
  CHECK(cut(r, 1, 0) == mul_free(x(2, 2), x(2, 2)));

  CHECK_THROWS_AS(cut(p, 2, 1), std::out_of_range);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = testutil::random_polynomial(rng, 3, 10, 6, 100);
    auto once = cut(s, 2, 3);
    CHECK(cut(once, 2, 3) == once);  // idempotent
    // truncate by a profile == cut applied on every variable
    auto caps = testutil::random_caps(rng, 3);
    auto by_cuts = s;
    for (int var = 1; var <= 3; ++var)
      if (caps.is_bounded(var - 1)) by_cuts = cut(by_cuts, var, caps.cap(var - 1));
    CHECK(truncate(s, caps) == by_cuts);
  }
}

TEST_CASE("mul_capped: spec examples") {
  auto d = x(2, 2) - x(2, 1);
  auto s = x(2, 1) + x(2, 2);
  auto g2 = mul_capped(d, s, CapProfile::unbounded(2));
  CHECK(g2 == mul_free(x(2, 2), x(2, 2)) - mul_free(x(2, 1), x(2, 1)));

  auto capped = mul_capped(g2, x(2, 2), CapProfile::from_caps({2u, 2u}));
  // x2^3 dies, -x1^2*x2 survives
  CHECK(capped == -Polynomial::from_terms(2, {{Monomial::from_exponents({2, 1}), 1}}));

  CHECK_THROWS_AS(mul_capped(d, x(3, 1), CapProfile::unbounded(2)),
                  std::invalid_argument);
}

TEST_CASE("mul_capped equals the truncated naive product (oracle)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = testutil::random_polynomial(rng, 4, 8, 5, 1000);
    auto q = testutil::random_polynomial(rng, 4, 8, 5, 1000);
    auto caps = testutil::random_caps(rng, 4);
    std::vector<Polynomial> fs{p, q};
    auto naive = truncate(expand_product_naive(fs), caps);
    CHECK(mul_capped(p, q, caps) == naive);
    CHECK(mul_capped_serial(p, q, caps) == naive);
  }
}

TEST_CASE("parallel merge kernel matches the serial reference") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = testutil::random_polynomial(rng, 5, 120, 6, 1000000);
    auto q = testutil::random_polynomial(rng, 5, 40, 6, 1000000);
    auto caps = testutil::random_caps(rng, 5);
    ComputeOptions two_workers;
    two_workers.threads = 2;
    CHECK(mul_capped(p, q, caps, two_workers) == mul_capped_serial(p, q, caps));
  }
}

TEST_CASE("coefficient_of") {
  auto g2 = mul_free(x(2, 2), x(2, 2)) - mul_free(x(2, 1), x(2, 1));
  CHECK(g2.coefficient_of(std::vector<unsigned>{2u, 0u}) == -1);
  CHECK(g2.coefficient_of(std::vector<unsigned>{1u, 1u}) == 0);
  CHECK_THROWS_AS(g2.coefficient_of(std::vector<unsigned>{1u, 1u, 0u}),
                  std::invalid_argument);

  // F3 = (x2-x1)(x1+x2)(x3-x1)(x3-x2)(x2+x3); its (0,2,3) coefficient is 1
  std::vector<Polynomial> f3{x(3, 2) - x(3, 1), x(3, 1) + x(3, 2),
                             x(3, 3) - x(3, 1), x(3, 3) - x(3, 2),
                             x(3, 2) + x(3, 3)};
  auto F3 = expand_product_naive(f3);
  CHECK(F3.coefficient_of(std::vector<unsigned>{0u, 2u, 3u}) == 1);
}

TEST_CASE("expand_product_naive") {
  std::vector<Polynomial> fs{x(2, 2) - x(2, 1), x(2, 1) + x(2, 2)};
  CHECK(expand_product_naive(fs) ==
        mul_free(x(2, 2), x(2, 2)) - mul_free(x(2, 1), x(2, 1)));

  CHECK(expand_product_naive({}) == Polynomial::constant(1, 1));

  // g3 factor list: 3 pairs, each (x_j - x_i)(x_i+...+x_j)
  std::vector<Polynomial> g3{x(3, 2) - x(3, 1), Polynomial::linear_sum(3, 1, 2),
                             x(3, 3) - x(3, 1), Polynomial::linear_sum(3, 1, 3),
                             x(3, 3) - x(3, 2), Polynomial::linear_sum(3, 2, 3)};
  auto g = expand_product_naive(g3);
  CHECK(g.homogeneous_degree() == 6u);
}

TEST_CASE("ring laws under a fixed cap profile") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const int nvars = 1 + static_cast<int>(rng() % 5);
    auto p = testutil::random_polynomial(rng, nvars, 6, 6, 1000000);
    auto q = testutil::random_polynomial(rng, nvars, 6, 6, 1000000);
    auto r = testutil::random_polynomial(rng, nvars, 6, 6, 1000000);
    auto caps = testutil::random_caps(rng, nvars);
    CHECK(mul_capped(p, q, caps) == mul_capped(q, p, caps));
    CHECK(mul_capped(mul_capped(p, q, caps), r, caps) ==
          mul_capped(p, mul_capped(q, r, caps), caps));
    CHECK(mul_capped(p, add(q, r), caps) ==
          add(mul_capped(p, q, caps), mul_capped(p, r, caps)));
  }
}

TEST_CASE("canonical form invariants") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = testutil::random_polynomial(rng, 4, 12, 6, 1000);
    CHECK(add(p, -p).is_zero());
    auto q = testutil::random_polynomial(rng, 4, 12, 6, 1000);
    auto prod = mul_free(p, q);
    for (const Term& t : prod.terms()) CHECK(t.coeff != 0);
    // terms strictly ascending in the canonical order
    auto terms = prod.terms();
    for (std::size_t t = 1; t < terms.size(); ++t)
      CHECK(terms[t - 1].mono < terms[t].mono);
  }
}

TEST_CASE("homogeneous products stay homogeneous") {
  std::mt19937_64 rng(777);
  auto random_homogeneous = [&](int nvars, unsigned degree) {
    std::vector<Term> terms;
    for (int t = 0; t < 6; ++t) {
      std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
      unsigned left = degree;
      for (int r = 0; r + 1 < nvars; ++r) {
        e[static_cast<std::size_t>(r)] = rng() % (left + 1);
        left -= e[static_cast<std::size_t>(r)];
      }
      e[static_cast<std::size_t>(nvars - 1)] = left;
      terms.push_back({Monomial::from_exponents(e),
                       Coeff(static_cast<long long>(rng() % 19) - 9)});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_homogeneous(4, 3);
    auto q = random_homogeneous(4, 4);
    auto prod = mul_free(p, q);
    if (!prod.is_zero()) CHECK(prod.homogeneous_degree() == 7u);
    auto capped = mul_capped(p, q, testutil::random_caps(rng, 4));
    if (!capped.is_zero()) CHECK(capped.homogeneous_degree() == 7u);
  }
}

TEST_CASE("serialization round trip, canonical order") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = testutil::random_polynomial(rng, 5, 15, 9, 1000000000);
    auto j = to_json(p);
    CHECK(polynomial_from_json(j) == p);
  }
  // decimal strings survive values beyond 64 bits
  Coeff big("123456789012345678901234567890");
  auto p = Polynomial::from_terms(2, {{Monomial::from_exponents({1, 2}), big}});
  auto j = to_json(p);
  CHECK(j["terms"][0]["coefficient"] == "123456789012345678901234567890");
  CHECK(polynomial_from_json(j) == p);
}

TEST_CASE("memory guard reports instead of truncating") {
  auto p = Polynomial::linear_sum(8, 1, 8);
  auto q = Polynomial::linear_sum(8, 1, 8);
  ComputeOptions tiny;
  tiny.max_terms = 4;
  CHECK_THROWS_AS(mul_capped(p, q, CapProfile::unbounded(8), tiny),
                  TermBudgetExceeded);
  CHECK_THROWS_AS(mul_capped_serial(p, q, CapProfile::unbounded(8), tiny),
                  TermBudgetExceeded);
  std::vector<Polynomial> fs{p, q, q};
  CHECK_THROWS_AS(expand_product_naive(fs, tiny), TermBudgetExceeded);
}

TEST_CASE("exponent overflow is an error, not wraparound") {
  auto p = Polynomial::from_terms(1, {{Monomial::from_exponents({200u}), 1}});
  CHECK_THROWS_AS(mul_free(p, p), ExponentOverflow);
  CHECK_THROWS_AS(Monomial::from_exponents({300u}), ExponentOverflow);
}

TEST_CASE("zero polynomial has a declared variable count") {
  Polynomial z(3);
  CHECK(z.is_zero());
  CHECK(z.nvars() == 3);
  CHECK(z.total_degree() == 0);
  CHECK(z.homogeneous_degree() == 0u);
  CHECK(to_json(z)["terms"].empty());
}

#ifndef PSUMLAB_TESTS_TEST_UTIL_HPP
#define PSUMLAB_TESTS_TEST_UTIL_HPP

#include <random>

#include "polycore/polynomial.hpp"

namespace testutil {

inline polycore::Polynomial random_polynomial(std::mt19937_64& rng, int nvars,
                                              int max_terms, unsigned max_exp,
                                              long long coeff_bound) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
  std::vector<polycore::Term> terms;
  const int n = term_count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<unsigned> e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = exp(rng);
    long long c = coeff(rng);
    if (c == 0) c = 1;
    terms.push_back({polycore::Monomial::from_exponents(e), polycore::Coeff(c)});
  }
  return polycore::Polynomial::from_terms(nvars, std::move(terms));
}

/// Caps drawn from {unbounded} u [0, 8].
inline polycore::CapProfile random_caps(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> pick(-2, 8);
  std::vector<unsigned> caps(static_cast<std::size_t>(nvars));
  for (auto& c : caps) {
    int v = pick(rng);
    c = v < 0 ? polycore::CapProfile::kUnbounded : static_cast<unsigned>(v);
  }
  return polycore::CapProfile::from_caps(caps);
}

}  // namespace testutil

#endif

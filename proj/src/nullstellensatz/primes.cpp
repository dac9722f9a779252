#include "nullstellensatz/primes.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace nullstellensatz {

bool is_prime(const Coeff& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // 25 rounds on top of the deterministic small-prime screen
  return boost::multiprecision::miller_rabin_test(n, 25);
}

Coeff next_prime_above(const Coeff& n) {
  Coeff c = n < 2 ? Coeff(2) : Coeff(n + 1);
  if (c > 2 && c % 2 == 0) ++c;
  while (!is_prime(c)) c += c == 2 ? 1 : 2;
  return c;
}

std::vector<std::pair<Coeff, int>> factorize(Coeff n) {
  if (n < 0) n = -n;
  if (n == 0)
    throw std::invalid_argument("factorize: zero has no prime factorization");
  std::vector<std::pair<Coeff, int>> out;
  auto strip = [&](const Coeff& p) {
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    if (mult > 0) out.emplace_back(p, mult);
  };
  strip(2);
  constexpr long long kTrialBound = 10'000'000;
  long long p = 3;
  while (n > 1) {
    if (is_prime(n)) {
      out.emplace_back(n, 1);
      break;
    }
    bool found = false;
    for (; p <= kTrialBound && Coeff(p) * p <= n; p += 2) {
      if (n % p == 0) {
        strip(Coeff(p));
        found = true;
        break;
      }
    }
    if (!found)
      throw CannotFactor("factorize: composite cofactor " + n.str() +
                         " beyond the trial-division bound");
  }
  return out;
}

}  // namespace nullstellensatz

#ifndef PSUMLAB_NULLSTELLENSATZ_CERTIFICATE_HPP
#define PSUMLAB_NULLSTELLENSATZ_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "nullstellensatz/extract.hpp"
#include "nullstellensatz/primes.hpp"

namespace nullstellensatz {

enum class Conjecture { alspach, gadms };

std::string conjecture_name(Conjecture c);
Conjecture conjecture_from_name(const std::string& s);

/// Raised when a certificate cannot be assembled because every requested
/// coefficient vanished; conjecture-relevant, reported loudly.
struct NoNonzeroCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A gcd certificate: the listed coefficients of a maximal-degree monomial
/// whose exponents stay below the certified subset size.  Any prime p above
/// the size that does not divide the gcd leaves some coefficient nonzero
/// mod p, so the conjecture holds for subsets of that size in Z_p.
struct Certificate {
  Conjecture conjecture = Conjecture::gadms;
  int k = 0;               // family level parameter
  int certified_size = 0;  // subset size covered: k (alspach/c), k+1 (gadms/e,d)
  Family family = Family::E;
  std::vector<int> js;
  std::vector<polycore::Coeff> values;
  polycore::Coeff gcd;
  std::vector<std::pair<polycore::Coeff, int>> gcd_factorization;
  std::vector<polycore::Coeff> excluded_primes;  // the gcd's prime divisors
  polycore::Coeff min_admissible_prime;

  /// True when p is prime, exceeds the certified size, and fails to divide
  /// the gcd (hence fails to kill every listed value).
  bool admits_prime(const polycore::Coeff& p) const;

  /// Re-derives the defining properties; throws std::logic_error on failure.
  void check_invariants() const;
};

/// Assembles a certificate from freshly extracted (or cached) coefficients.
/// alspach pairs with family c at level k (size k); gadms with family e or d
/// at level k (size k+1).  An empty j-range means "all valid j".
Certificate certify(Conjecture conjecture, int k, Family family,
                    std::vector<int> js = {}, const ExtractOptions& opts = {});

}  // namespace nullstellensatz

#endif

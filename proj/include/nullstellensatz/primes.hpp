#ifndef PSUMLAB_NULLSTELLENSATZ_PRIMES_HPP
#define PSUMLAB_NULLSTELLENSATZ_PRIMES_HPP

#include <utility>
#include <vector>

#include "polycore/polynomial.hpp"

namespace nullstellensatz {

using polycore::Coeff;

bool is_prime(const Coeff& n);

/// Smallest prime strictly greater than n.
Coeff next_prime_above(const Coeff& n);

struct CannotFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prime factorization (prime, multiplicity), ascending.  Trial division plus
/// a primality test on the cofactor; throws CannotFactor when a composite
/// cofactor survives the trial bound (never the case for the gcds this
/// project produces, but reported honestly rather than guessed).
std::vector<std::pair<Coeff, int>> factorize(Coeff n);

}  // namespace nullstellensatz

#endif

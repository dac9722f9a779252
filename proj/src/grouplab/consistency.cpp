#include "grouplab/consistency.hpp"

namespace grouplab {

using nullstellensatz::Certificate;
using nullstellensatz::Conjecture;

ConsistencyReport nullstellensatz_consistency(int k, std::int64_t p,
                                              Variant variant,
                                              const Certificate& cert,
                                              const SearchBudget& budget,
                                              int threads) {
  if (variant == Variant::cmpp)
    throw std::invalid_argument(
        "nullstellensatz_consistency: no certificate family exists for cmpp");
  const Conjecture want = variant == Variant::alspach ? Conjecture::alspach
                                                      : Conjecture::gadms;
  if (cert.conjecture != want)
    throw std::invalid_argument(
        "nullstellensatz_consistency: certificate is for the wrong conjecture");
  if (cert.certified_size != k)
    throw std::invalid_argument(
        "nullstellensatz_consistency: certificate covers size " +
        std::to_string(cert.certified_size) + ", not " + std::to_string(k));

  ConsistencyReport rep;
  rep.k = k;
  rep.p = p;
  rep.variant = variant;
  rep.certificate_applies = cert.admits_prime(p);
  if (!rep.certificate_applies)
    throw std::invalid_argument(
        "nullstellensatz_consistency: prime " + std::to_string(p) +
        " is not admissible for this certificate");

  rep.sweep = sweep(CyclicGroup(p), k, variant, budget, threads);
  rep.agree = rep.certificate_applies && rep.sweep.failures.empty();
  return rep;
}

}  // namespace grouplab

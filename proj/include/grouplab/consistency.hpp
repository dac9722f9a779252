#ifndef PSUMLAB_GROUPLAB_CONSISTENCY_HPP
#define PSUMLAB_GROUPLAB_CONSISTENCY_HPP

#include "grouplab/sweep.hpp"
#include "nullstellensatz/certificate.hpp"

namespace grouplab {

/// Cross-check of a Nullstellensatz gcd certificate against brute force: the
/// certificate asserts that every variant-valid k-subset of Z_p admits a
/// valid ordering, and the exhaustive sweep confirms it.
struct ConsistencyReport {
  int k = 0;
  std::int64_t p = 0;
  Variant variant = Variant::alspach;
  bool certificate_applies = false;
  SweepReport sweep;
  bool agree = false;  // certificate applies and the sweep found no failure
};

ConsistencyReport nullstellensatz_consistency(
    int k, std::int64_t p, Variant variant,
    const nullstellensatz::Certificate& cert, const SearchBudget& budget = {},
    int threads = 0);

}  // namespace grouplab

#endif

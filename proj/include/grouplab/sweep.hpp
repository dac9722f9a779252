#ifndef PSUMLAB_GROUPLAB_SWEEP_HPP
#define PSUMLAB_GROUPLAB_SWEEP_HPP

#include <omp.h>

#include <chrono>
#include <cstdint>

#include "grouplab/search.hpp"

namespace grouplab {

struct SweepReport {
  std::int64_t n = 0;
  int k = 0;
  Variant variant = Variant::alspach;
  std::uint64_t subsets_considered = 0;  // all k-subsets of Z_n \ {0}
  std::uint64_t valid_sets = 0;          // those satisfying the variant's conditions
  std::uint64_t ordered = 0;             // valid sets with an ordering found
  std::vector<std::vector<std::int64_t>> failures;  // counterexamples (expected none)
  double wall_ms = 0.0;
};

/// Exhaustive check of one conjecture over every variant-valid k-subset of
/// Z_n \ {0}.  Subsets are enumerated in lexicographic order; the search over
/// subsets runs on OpenMP workers and the report is merged by subset index,
/// so it is identical for every worker count.
inline SweepReport sweep(const CyclicGroup& group, int k, Variant variant,
                         const SearchBudget& budget = {}, int threads = 0) {
  if (k < 1 || k > group.n - 1)
    throw std::invalid_argument("sweep: need 1 <= k <= n-1");
  const auto t0 = std::chrono::steady_clock::now();

  // materialize the lexicographic subset list: C(n-1, k) stays desk-scale
  std::vector<std::vector<std::int64_t>> subsets;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    subsets.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == group.n - k + t) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u)
      cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }

  SweepReport rep;
  rep.n = group.n;
  rep.k = k;
  rep.variant = variant;
  rep.subsets_considered = subsets.size();

  enum class Outcome : std::uint8_t { skipped, ordered, failed };
  std::vector<Outcome> outcome(subsets.size(), Outcome::skipped);
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    try {
      std::optional<NiceSet<CyclicGroup>> A;
      try {
        A = NiceSet<CyclicGroup>::make(group, variant, subsets[t]);
      } catch (const std::invalid_argument&) {
        continue;  // subset fails the variant's set conditions
      }
      outcome[t] = find_ordering(*A, budget) ? Outcome::ordered : Outcome::failed;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t t = 0; t < subsets.size(); ++t) {
    if (outcome[t] == Outcome::skipped) continue;
    ++rep.valid_sets;
    if (outcome[t] == Outcome::ordered)
      ++rep.ordered;
    else
      rep.failures.push_back(subsets[t]);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace grouplab

#endif

#ifndef PSUMLAB_NULLSTELLENSATZ_EXTRACT_HPP
#define PSUMLAB_NULLSTELLENSATZ_EXTRACT_HPP

#include <optional>
#include <vector>

#include "nullstellensatz/builders.hpp"
#include "nullstellensatz/target.hpp"

namespace nullstellensatz {

/// Version tag of the extraction pipeline semantics; cached records carry it
/// and are only reused when it matches.
inline constexpr const char* kPipelineSemantics = "fk-capped-1";

/// Lookup/store interface for the persistent coefficient cache.  The library
/// consults it before computing and stores every fresh record.
/// Implementations must be safe to call from parallel extraction jobs.
class RecordStore {
public:
  virtual ~RecordStore() = default;
  virtual std::optional<CoefficientRecord> lookup(const TargetSpec& t) = 0;
  virtual void store(const CoefficientRecord& r) = 0;
};

struct ExtractOptions {
  std::optional<Method> method;  // nullopt = per-family default policy
  BuildConfig build;
  RecordStore* cache = nullptr;
};

/// The coefficient named by the target, computed per the family policy:
/// a and c by the capped pipeline; e as the sum of its k-1 independent
/// a-jobs (run in parallel); d via the sign relation to e (j >= 2) or the
/// naive oracle (j == 1).  A Method in the options forces one route.
CoefficientRecord extract(const TargetSpec& target, const ExtractOptions& opts = {});

/// All of row j's a-coefficients plus their sum e_{k,j}; the parallel
/// building block of extract(E) and of the k=11 headline computation.
std::vector<CoefficientRecord> extract_row(int k, int j, const ExtractOptions& opts = {});

/// The full a-matrix (k*(k-1) off-diagonal entries) and e-column for one k.
struct CoefficientTable {
  int k = 0;
  std::vector<CoefficientRecord> a;  // ordered by (j, i)
  std::vector<CoefficientRecord> e;  // ordered by j
};
CoefficientTable build_table(int k, const ExtractOptions& opts = {});

/// Numeric check of e_{k,j} = (-1)^floor((k-1)/2) * c_{k,j} for all j.
struct SignRelationReport {
  int k = 0;
  int sign = 1;
  std::vector<polycore::Coeff> e_values;
  std::vector<polycore::Coeff> c_values;
  std::vector<bool> holds;  // per j
  bool all_hold = false;
};
SignRelationReport sign_relation_check(int k, const ExtractOptions& opts = {});

}  // namespace nullstellensatz

#endif

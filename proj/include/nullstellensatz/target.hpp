#ifndef PSUMLAB_NULLSTELLENSATZ_TARGET_HPP
#define PSUMLAB_NULLSTELLENSATZ_TARGET_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "polycore/polynomial.hpp"

namespace nullstellensatz {

// The four coefficient families.  With level parameter k:
//   A: a^(k)_{i,j}  = coeff of x_i^{k-1} * prod_{r != i,j} x_r^k   in F_k
//   C: c_{k,j}      = coeff of x_j^{k-2} * prod_{r != j}  x_r^{k-1} in F_k
//   E: e_{k,j}      = coeff of            prod_{r != j}  x_r^k     in g_k
//   D: d_{k+1,j}    = coeff of            prod_{r != j}  x_r^k     in f_{k+1}
// A, C, E live in k variables; D lives in k+1.
enum class Family { A, C, E, D };

std::string family_name(Family f);          // "a", "c", "e", "d"
Family family_from_name(const std::string&);

struct InvalidTarget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TargetSpec {
  Family family;
  int k = 0;             // level parameter (>= 2)
  int j = 0;             // 1-based index
  std::optional<int> i;  // required iff family == A

  /// Throws InvalidTarget unless the index combination is valid.
  void validate() const;

  /// Number of ambient variables of the family's polynomial.
  int ambient_vars() const { return family == Family::D ? k + 1 : k; }

  /// Exponent vector of the target monomial.
  polycore::Monomial target_monomial() const;

  unsigned target_degree() const;

  std::string describe() const;  // e.g. "a(k=6,i=2,j=1)"

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

/// The tightest cap profile whose monomial ideal excludes no divisor of the
/// target monomial: caps equal to the target's exponents.  Dropping over-cap
/// monomials at every step cannot disturb the target's coefficient, because
/// exponents only grow under multiplication.
polycore::CapProfile cap_profile_for(const TargetSpec& target);

enum class Method { capped_pipeline, naive_oracle, relation };

std::string method_name(Method m);

/// One extracted coefficient with provenance and cost metadata.  The value is
/// determined by the target alone; two records with equal targets and
/// different values signal a bug.
struct CoefficientRecord {
  TargetSpec target;
  polycore::Coeff value;
  Method method = Method::capped_pipeline;
  double wall_ms = 0.0;
  std::size_t peak_terms = 0;
};

}  // namespace nullstellensatz

#endif

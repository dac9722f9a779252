#include "nullstellensatz/target.hpp"

#include <sstream>

namespace nullstellensatz {

using polycore::CapProfile;
using polycore::Monomial;

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::C: return "c";
    case Family::E: return "e";
    case Family::D: return "d";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "a" || s == "A") return Family::A;
  if (s == "c" || s == "C") return Family::C;
  if (s == "e" || s == "E") return Family::E;
  if (s == "d" || s == "D") return Family::D;
  throw InvalidTarget("unknown coefficient family '" + s + "'");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::capped_pipeline: return "capped-pipeline";
    case Method::naive_oracle: return "naive-oracle";
    case Method::relation: return "relation";
  }
  return "?";
}

void TargetSpec::validate() const {
  if (k < 2) throw InvalidTarget(describe() + ": level k must be >= 2");
  const int jmax = family == Family::D ? k + 1 : k;
  if (j < 1 || j > jmax)
    throw InvalidTarget(describe() + ": j out of range [1," +
                        std::to_string(jmax) + "]");
  if (family == Family::A) {
    if (!i) throw InvalidTarget(describe() + ": family a requires an index i");
    if (*i < 1 || *i > k)
      throw InvalidTarget(describe() + ": i out of range [1," +
                          std::to_string(k) + "]");
    if (*i == j) throw InvalidTarget(describe() + ": requires i != j");
  } else if (i) {
    throw InvalidTarget(describe() + ": index i only applies to family a");
  }
  if (ambient_vars() > polycore::kMaxVars)
    throw InvalidTarget(describe() + ": needs more than " +
                        std::to_string(polycore::kMaxVars) + " variables");
}

Monomial TargetSpec::target_monomial() const {
  validate();
  const int n = ambient_vars();
  std::vector<unsigned> e(static_cast<std::size_t>(n), 0);
  const unsigned ku = static_cast<unsigned>(k);
  switch (family) {
    case Family::A:
      for (int r = 1; r <= n; ++r) e[r - 1] = ku;
      e[*i - 1] = ku - 1;
      e[j - 1] = 0;
      break;
    case Family::C:
      for (int r = 1; r <= n; ++r) e[r - 1] = ku - 1;
      e[j - 1] = ku - 2;
      break;
    case Family::E:
    case Family::D:
      for (int r = 1; r <= n; ++r) e[r - 1] = ku;
      e[j - 1] = 0;
      break;
  }
  return Monomial::from_exponents(e);
}

unsigned TargetSpec::target_degree() const {
  const unsigned ku = static_cast<unsigned>(k);
  switch (family) {
    case Family::A:
    case Family::C: return ku * ku - ku - 1;
    case Family::E: return ku * ku - ku;
    case Family::D: return ku * ku;
  }
  return 0;
}

std::string TargetSpec::describe() const {
  std::ostringstream os;
  os << family_name(family) << "(k=" << k;
  if (i) os << ",i=" << *i;
  os << ",j=" << j << ")";
  return os.str();
}

CapProfile cap_profile_for(const TargetSpec& target) {
  Monomial m = target.target_monomial();
  return CapProfile::from_caps(m.exponents(target.ambient_vars()));
}

}  // namespace nullstellensatz

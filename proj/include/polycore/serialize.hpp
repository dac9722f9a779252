#ifndef PSUMLAB_POLYCORE_SERIALIZE_HPP
#define PSUMLAB_POLYCORE_SERIALIZE_HPP

#include <nlohmann/json_fwd.hpp>

#include "polycore/polynomial.hpp"

// Wire format for a polynomial: an ordered list of records
//   {"exponents": [e1, ..., en], "coefficient": "<decimal>"}
// in the canonical (lexicographic) term order.  Coefficients travel as
// decimal strings so arbitrary precision survives every platform.

namespace polycore {

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace polycore

#endif

#ifndef PSUMLAB_GROUPLAB_PARSE_HPP
#define PSUMLAB_GROUPLAB_PARSE_HPP

#include <variant>

#include "grouplab/group.hpp"

namespace grouplab {

using AnyGroup = std::variant<CyclicGroup, IntegerGroup, FreeGroup>;

/// "Z5"/"Z_5" -> Z_5, "Z" -> the integers, "Z^3" -> Z^3.
AnyGroup parse_group(const std::string& spec);

/// Cyclic/integer sets: comma-separated values ("1,2,3").
/// Free-group sets: semicolon-separated parenthesized vectors
/// ("(1,0);(0,1);(2,3)").
std::vector<CyclicGroup::Elem> parse_cyclic_set(const CyclicGroup& g,
                                                const std::string& spec);
std::vector<IntegerGroup::Elem> parse_integer_set(const std::string& spec);
std::vector<FreeGroup::Elem> parse_free_set(const FreeGroup& g,
                                            const std::string& spec);

}  // namespace grouplab

#endif

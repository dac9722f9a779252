#include "grouplab/parse.hpp"

#include <cctype>
#include <sstream>

#include "grouplab/niceset.hpp"

namespace grouplab {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::alspach: return "alspach";
    case Variant::gadms: return "gadms";
    case Variant::cmpp: return "cmpp";
  }
  return "?";
}

Variant variant_from_name(const std::string& s) {
  if (s == "alspach") return Variant::alspach;
  if (s == "gadms" || s == "g-adms") return Variant::gadms;
  if (s == "cmpp") return Variant::cmpp;
  throw std::invalid_argument("unknown variant '" + s +
                              "' (expected alspach, gadms or cmpp)");
}

std::string element_string(const CyclicGroup&, const CyclicGroup::Elem& e) {
  return std::to_string(e);
}

std::string element_string(const IntegerGroup&, const IntegerGroup::Elem& e) {
  return e.str();
}

std::string element_string(const FreeGroup&, const FreeGroup::Elem& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t r = 0; r < e.size(); ++r) {
    if (r) os << ",";
    os << e[r];
  }
  os << ")";
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("set syntax: empty entry");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("set syntax: '" + s + "' is not an integer");
  }
}

}  // namespace

AnyGroup parse_group(const std::string& spec) {
  if (spec.empty() || (spec[0] != 'Z' && spec[0] != 'z'))
    throw std::invalid_argument("group syntax: expected Z, Z<n> or Z^<m>");
  std::string rest = spec.substr(1);
  if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
  if (rest.empty()) return IntegerGroup{};
  if (rest[0] == '^') {
    const std::string m = rest.substr(1);
    if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("group syntax: bad rank in '" + spec + "'");
    return FreeGroup(std::stoi(m));
  }
  if (rest.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("group syntax: bad modulus in '" + spec + "'");
  return CyclicGroup(std::stoll(rest));
}

std::vector<CyclicGroup::Elem> parse_cyclic_set(const CyclicGroup& g,
                                                const std::string& spec) {
  std::vector<CyclicGroup::Elem> out;
  for (const std::string& part : split(spec, ','))
    out.push_back(g.canonical(parse_int(part)));
  return out;
}

std::vector<IntegerGroup::Elem> parse_integer_set(const std::string& spec) {
  std::vector<IntegerGroup::Elem> out;
  for (const std::string& part : split(spec, ',')) out.push_back(parse_int(part));
  return out;
}

std::vector<FreeGroup::Elem> parse_free_set(const FreeGroup& g,
                                            const std::string& spec) {
  std::vector<FreeGroup::Elem> out;
  for (std::string part : split(spec, ';')) {
    if (part.size() < 2 || part.front() != '(' || part.back() != ')')
      throw std::invalid_argument(
          "set syntax: expected parenthesized vectors like (1,0);(0,1)");
    FreeGroup::Elem v;
    for (const std::string& comp : split(part.substr(1, part.size() - 2), ','))
      v.push_back(parse_int(comp));
    if (static_cast<int>(v.size()) != g.rank)
      throw std::invalid_argument("set syntax: vector " + part +
                                  " does not have rank " +
                                  std::to_string(g.rank));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace grouplab

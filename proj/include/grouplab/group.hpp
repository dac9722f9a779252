#ifndef PSUMLAB_GROUPLAB_GROUP_HPP
#define PSUMLAB_GROUPLAB_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grouplab {

using Int = boost::multiprecision::cpp_int;

// The three ambient groups of the reduction chain Z^m -> Z -> Z_p.  Element
// types are plain regular values ordered by operator< (the canonical order
// used for deterministic enumeration everywhere).

template <class G>
concept AbelianGroup = requires(const G& g, const typename G::Elem& a,
                                const typename G::Elem& b) {
  { g.add(a, b) } -> std::same_as<typename G::Elem>;
  { g.neg(a) } -> std::same_as<typename G::Elem>;
  { g.zero() } -> std::same_as<typename G::Elem>;
  { g.is_zero(a) } -> std::same_as<bool>;
  { g.describe() } -> std::same_as<std::string>;
  { g.element_ok(a) } -> std::same_as<bool>;
};

/// Z_n with canonical residues in [0, n-1].
struct CyclicGroup {
  using Elem = std::int64_t;
  std::int64_t n;

  explicit CyclicGroup(std::int64_t modulus) : n(modulus) {
    if (n < 2) throw std::invalid_argument("CyclicGroup: modulus must be >= 2");
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    return s >= n ? s - n : s;
  }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : n - a; }
  Elem zero() const { return 0; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool element_ok(const Elem& a) const { return a >= 0 && a < n; }
  Elem canonical(const Int& x) const {
    Int r = x % n;
    if (r < 0) r += n;
    return static_cast<Elem>(r);
  }
  std::string describe() const { return "Z" + std::to_string(n); }
};

/// The integers.
struct IntegerGroup {
  using Elem = Int;

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem zero() const { return Elem(0); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool element_ok(const Elem&) const { return true; }
  std::string describe() const { return "Z"; }
};

/// Z^m, elements as integer vectors of length m.
struct FreeGroup {
  using Elem = std::vector<Int>;
  int rank;

  explicit FreeGroup(int m) : rank(m) {
    if (m < 1) throw std::invalid_argument("FreeGroup: rank must be >= 1");
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem s(a);
    for (std::size_t r = 0; r < s.size(); ++r) s[r] += b[r];
    return s;
  }
  Elem neg(const Elem& a) const {
    Elem s(a);
    for (auto& x : s) x = -x;
    return s;
  }
  Elem zero() const { return Elem(static_cast<std::size_t>(rank), Int(0)); }
  bool is_zero(const Elem& a) const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
  bool element_ok(const Elem& a) const {
    return a.size() == static_cast<std::size_t>(rank);
  }
  std::string describe() const { return "Z^" + std::to_string(rank); }
};

static_assert(AbelianGroup<CyclicGroup>);
static_assert(AbelianGroup<IntegerGroup>);
static_assert(AbelianGroup<FreeGroup>);

std::string element_string(const CyclicGroup&, const CyclicGroup::Elem&);
std::string element_string(const IntegerGroup&, const IntegerGroup::Elem&);
std::string element_string(const FreeGroup&, const FreeGroup::Elem&);

}  // namespace grouplab

#endif

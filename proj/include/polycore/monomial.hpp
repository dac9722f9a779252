#ifndef PSUMLAB_POLYCORE_MONOMIAL_HPP
#define PSUMLAB_POLYCORE_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycore {

// Hard limits of the packed exponent encoding. One byte per variable keeps
// the key at 16 bytes (two machine words), so comparison and hashing stay
// O(1) and a term stays small enough for the multi-million-term workloads.
inline constexpr int kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

struct ExponentOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as a fixed 16-byte exponent
/// vector (entries past the ambient variable count are zero).  Comparison is
/// lexicographic on the exponent vector, which is the canonical term order.
class Monomial {
public:
  Monomial() = default;  // the constant monomial 1

  static Monomial from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
      throw std::invalid_argument("Monomial: more than " +
                                  std::to_string(kMaxVars) + " variables");
    Monomial m;
    for (std::size_t r = 0; r < exps.size(); ++r) {
      if (exps[r] > kMaxExponent)
        throw ExponentOverflow("Monomial: exponent " + std::to_string(exps[r]) +
                               " exceeds " + std::to_string(kMaxExponent));
      m.e_[r] = static_cast<std::uint8_t>(exps[r]);
    }
    return m;
  }

  static Monomial from_exponents(std::initializer_list<unsigned> exps) {
    return from_exponents(std::span<const unsigned>(exps.begin(), exps.size()));
  }

  /// The monomial x_i (0-based variable index).
  static Monomial unit(int var) {
    Monomial m;
    m.e_[check_var(var)] = 1;
    return m;
  }

  unsigned exponent(int var) const { return e_[check_var(var)]; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  std::vector<unsigned> exponents(int nvars) const {
    std::vector<unsigned> out(static_cast<std::size_t>(nvars));
    for (int r = 0; r < nvars; ++r) out[static_cast<std::size_t>(r)] = e_[r];
    return out;
  }

  /// True when every exponent with index >= nvars is zero.
  bool fits_in(int nvars) const {
    for (int r = nvars; r < kMaxVars; ++r)
      if (e_[r] != 0) return false;
    return true;
  }

  /// Product of monomials (exponent-wise sum).  Throws on byte overflow.
  Monomial times(const Monomial& o) const {
    Monomial m;
    for (int r = 0; r < kMaxVars; ++r) {
      unsigned s = unsigned(e_[r]) + unsigned(o.e_[r]);
      if (s > kMaxExponent)
        throw ExponentOverflow("Monomial: exponent sum exceeds " +
                               std::to_string(kMaxExponent));
      m.e_[r] = static_cast<std::uint8_t>(s);
    }
    return m;
  }

  /// x_var * this, or nullopt on overflow (hot path of the merge kernel).
  Monomial bumped(int var) const {
    if (e_[var] == kMaxExponent)
      throw ExponentOverflow("Monomial: exponent sum exceeds 255");
    Monomial m = *this;
    ++m.e_[var];
    return m;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  const std::array<std::uint8_t, kMaxVars>& raw() const { return e_; }

private:
  static int check_var(int var) {
    if (var < 0 || var >= kMaxVars)
      throw std::out_of_range("Monomial: variable index out of range");
    return var;
  }

  std::array<std::uint8_t, kMaxVars> e_{};
};

/// Per-variable degree caps.  Truncating a polynomial by a CapProfile drops
/// every term with some exponent above its cap; the dropped monomials form a
/// monomial ideal, so repeated truncation and truncated multiplication agree
/// with arithmetic in the quotient ring.
class CapProfile {
public:
  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

  CapProfile() : nvars_(0) { caps_.fill(0xFFFF); }

  static CapProfile unbounded(int nvars) {
    CapProfile c;
    c.nvars_ = check_nvars(nvars);
    return c;
  }

  /// caps[r] == kUnbounded means no cap on variable r+1.
  static CapProfile from_caps(std::span<const unsigned> caps) {
    CapProfile c;
    c.nvars_ = check_nvars(static_cast<int>(caps.size()));
    for (std::size_t r = 0; r < caps.size(); ++r)
      c.caps_[r] = caps[r] >= 0xFFFF ? std::uint16_t(0xFFFF)
                                     : static_cast<std::uint16_t>(caps[r]);
    return c;
  }

  static CapProfile from_caps(std::initializer_list<unsigned> caps) {
    return from_caps(std::span<const unsigned>(caps.begin(), caps.size()));
  }

  int nvars() const { return nvars_; }

  unsigned cap(int var) const {
    if (var < 0 || var >= nvars_)
      throw std::out_of_range("CapProfile: variable index out of range");
    return caps_[var] == 0xFFFF ? kUnbounded : caps_[var];
  }

  bool is_bounded(int var) const { return cap(var) != kUnbounded; }

  bool admits(const Monomial& m) const {
    const auto& e = m.raw();
    for (int r = 0; r < kMaxVars; ++r)
      if (unsigned(e[r]) > caps_[r]) return false;
    return true;
  }

  /// Sum of the bounded caps within the first nvars variables; used to spot
  /// the "single admissible top-degree monomial" situations.
  unsigned bounded_sum() const {
    unsigned s = 0;
    for (int r = 0; r < nvars_; ++r)
      if (caps_[r] != 0xFFFF) s += caps_[r];
    return s;
  }

  friend bool operator==(const CapProfile&, const CapProfile&) = default;

private:
  static int check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxVars)
      throw std::invalid_argument("CapProfile: variable count out of range");
    return nvars;
  }

  std::array<std::uint16_t, kMaxVars> caps_;  // 0xFFFF = unbounded
  int nvars_;
};

}  // namespace polycore

#endif

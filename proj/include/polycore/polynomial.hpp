#ifndef PSUMLAB_POLYCORE_POLYNOMIAL_HPP
#define PSUMLAB_POLYCORE_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycore/monomial.hpp"

namespace polycore {

using Coeff = boost::multiprecision::cpp_int;

struct Term {
  Monomial mono;
  Coeff coeff;
};

struct TermBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Memory guard and worker settings for the arithmetic kernels.
/// max_terms bounds the size of any single term container built by an
/// operation; hitting it raises TermBudgetExceeded (a "workload too large"
/// report, never a silent truncation).  threads == 0 means "library default".
struct ComputeOptions {
  std::size_t max_terms = 0;  // 0 = default_term_budget()
  int threads = 0;

  std::size_t term_budget() const;
  int worker_count() const;
};

/// Default guard: half of physical memory divided by the in-memory term size.
std::size_t default_term_budget();

/// Sparse multivariate polynomial over arbitrary-precision integers.
/// Canonical form: terms sorted by lexicographic exponent order, no stored
/// zero coefficient.  Values are immutable once built; every operation
/// returns a fresh polynomial in canonical form, so equality is term-vector
/// equality and results are independent of any internal parallel schedule.
class Polynomial {
public:
  explicit Polynomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static Polynomial constant(int nvars, Coeff c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }

  /// x_i as a polynomial; i is 1-based like the paper's indexing.
  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    if (i < 1 || i > nvars)
      throw std::out_of_range("variable: index " + std::to_string(i) +
                              " not in [1," + std::to_string(nvars) + "]");
    p.terms_.push_back({Monomial::unit(i - 1), 1});
    return p;
  }

  /// x_a + x_{a+1} + ... + x_b (1-based, a <= b).
  static Polynomial linear_sum(int nvars, int a, int b) {
    if (a < 1 || b > nvars || a > b)
      throw std::out_of_range("linear_sum: range [" + std::to_string(a) + "," +
                              std::to_string(b) + "] invalid for nvars=" +
                              std::to_string(nvars));
    Polynomial p(nvars);
    p.terms_.reserve(static_cast<std::size_t>(b - a + 1));
    // unit monomials ascend lexicographically as the variable index descends
    for (int i = b; i >= a; --i) p.terms_.push_back({Monomial::unit(i - 1), 1});
    return p;
  }

  /// Canonicalizes an arbitrary term list: sorts, combines equal monomials,
  /// drops zeros.  Every monomial must fit in nvars variables.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }

  Coeff coefficient_of(const Monomial& m) const;
  Coeff coefficient_of(std::span<const unsigned> exps) const;

  /// Largest total degree among terms (0 for the zero polynomial).
  unsigned total_degree() const;

  /// The common total degree of all terms, or nullopt if the polynomial is
  /// not homogeneous.  The zero polynomial counts as homogeneous of degree 0.
  std::optional<unsigned> homogeneous_degree() const;

  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t t = 0; t < a.terms_.size(); ++t)
      if (a.terms_[t].mono != b.terms_[t].mono ||
          a.terms_[t].coeff != b.terms_[t].coeff)
        return false;
    return true;
  }

  std::string to_string() const;  // human-readable, canonical order

private:
  static int check_nvars(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Polynomial: nvars must be in [1," +
                                  std::to_string(kMaxVars) + "]");
    return nvars;
  }

  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial cut(const Polynomial&, int, unsigned);
  friend Polynomial truncate(const Polynomial&, const CapProfile&);
  friend Polynomial mul_capped(const Polynomial&, const Polynomial&,
                               const CapProfile&, const ComputeOptions&);
  friend Polynomial mul_capped_serial(const Polynomial&, const Polynomial&,
                                      const CapProfile&, const ComputeOptions&);
  friend Polynomial expand_product_naive(std::span<const Polynomial>,
                                         const ComputeOptions&);

  int nvars_;
  std::vector<Term> terms_;
};

/// Termwise sum in canonical form.
Polynomial add(const Polynomial& p, const Polynomial& q);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  return add(p, q);
}
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return add(p, -q);
}

/// Drops every term whose exponent in x_var (1-based) exceeds cap.
Polynomial cut(const Polynomial& p, int var, unsigned cap);

/// cut applied on every variable of the profile.
Polynomial truncate(const Polynomial& p, const CapProfile& caps);

/// Product in the quotient ring Z[x]/I, I the monomial ideal generated by
/// {x_r^{caps_r + 1}}.  Every pairwise term product is tested against the
/// caps before it is accumulated, which keeps peak memory at the size of the
/// truncated result.  OpenMP-parallel over blocks of the larger operand; the
/// result is canonical and identical for every worker count.
Polynomial mul_capped(const Polynomial& p, const Polynomial& q,
                      const CapProfile& caps, const ComputeOptions& opts = {});

/// Serial reference implementation of mul_capped (ordered-map accumulation).
/// Kept independent of the merge kernel; used by tests and the benchmark.
Polynomial mul_capped_serial(const Polynomial& p, const Polynomial& q,
                             const CapProfile& caps,
                             const ComputeOptions& opts = {});

/// Full product of the factors with no truncation; the independent oracle
/// for the capped pipeline.  Deliberately naive (ordered-map accumulation,
/// single-threaded).  The empty product is 1 (in 1 variable).
Polynomial expand_product_naive(std::span<const Polynomial> factors,
                                const ComputeOptions& opts = {});

}  // namespace polycore

#endif

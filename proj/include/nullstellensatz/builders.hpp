#ifndef PSUMLAB_NULLSTELLENSATZ_BUILDERS_HPP
#define PSUMLAB_NULLSTELLENSATZ_BUILDERS_HPP

#include <vector>

#include "polycore/polynomial.hpp"

namespace nullstellensatz {

// The polynomial families behind the partial-sum certificates:
//   g_k = prod_{1<=i<j<=k} (x_j - x_i)(x_i + ... + x_j)
//   F_k = g_k / (x_1 + ... + x_k), built recursively as
//         F_2 = x_2 - x_1,  F_{l+1} = F_l * G_l,
//   G_l = (x_1+...+x_l)(x_{l+1}-x_1) * prod_{a=2..l} (x_{l+1}-x_a)(x_a+...+x_{l+1})
//   f_{k+1} = g_k(x_2,...,x_{k+1}) * prod_{j=2..k+1} (x_j - x_1)

struct BuildConfig {
  int naive_g_bound = 6;  // largest k accepted by the full-expansion builders
  int naive_f_bound = 6;  // largest k+1 accepted by build_f
  polycore::ComputeOptions compute;
};

/// Linear factors of g_k in ambient dimension nvars (canonical pair order).
std::vector<polycore::Polynomial> g_factor_list(int k, int nvars);

/// Linear factors of G_l (canonical order: prefix pair, then a = 2..l).
std::vector<polycore::Polynomial> G_factor_list(int ell, int nvars);

/// Linear factors of F_k: (x_2 - x_1) followed by the G_2..G_{k-1} factors.
std::vector<polycore::Polynomial> F_factor_list(int k, int nvars);

/// Linear factors of f_m = f_{k+1} with m = k+1.
std::vector<polycore::Polynomial> f_factor_list(int m, int nvars);

/// Full expansion of g_k (homogeneous of degree k(k-1)).  Feasible only at
/// desk scale; guarded by cfg.naive_g_bound.
polycore::Polynomial build_g(int k, const BuildConfig& cfg = {});

/// Full expansion of G_l in the given ambient dimension (degree 2*l).
polycore::Polynomial build_G(int ell, int ambient, const BuildConfig& cfg = {});

/// Full expansion of f_m, m = k+1 (homogeneous of degree (m-1)^2).
polycore::Polynomial build_f(int m, const BuildConfig& cfg = {});

/// F_k reduced modulo the cap ideal: the recursion applied factor by factor
/// with truncation after every step.  The coefficient of any monomial within
/// the caps equals its coefficient in the untruncated F_k.  Homogeneity
/// (degree l(l-1)-1 after each stage) is asserted as the stages complete.
/// peak_terms, when given, receives the largest intermediate term count.
polycore::Polynomial build_F_capped(int k, const polycore::CapProfile& caps,
                                    const polycore::ComputeOptions& opts = {},
                                    std::size_t* peak_terms = nullptr);

}  // namespace nullstellensatz

#endif

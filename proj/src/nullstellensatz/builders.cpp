#include "nullstellensatz/builders.hpp"

#include <stdexcept>
#include <string>

namespace nullstellensatz {

using polycore::CapProfile;
using polycore::ComputeOptions;
using polycore::Polynomial;

namespace {

Polynomial difference(int nvars, int hi, int lo) {  // x_hi - x_lo
  return Polynomial::variable(nvars, hi) - Polynomial::variable(nvars, lo);
}

void check_level(int k, int bound, const char* what) {
  if (k < 2)
    throw std::invalid_argument(std::string(what) + ": level must be >= 2");
  if (k > bound)
    throw std::invalid_argument(
        std::string(what) + ": level " + std::to_string(k) +
        " exceeds the configured full-expansion bound " + std::to_string(bound));
}

void assert_homogeneous(const Polynomial& p, unsigned degree, const char* what) {
  auto d = p.homogeneous_degree();
  if (!p.is_zero() && (!d || *d != degree))
    throw std::logic_error(std::string(what) +
                           ": expected homogeneous of degree " +
                           std::to_string(degree));
}

}  // namespace

std::vector<Polynomial> g_factor_list(int k, int nvars) {
  if (k < 2 || k > nvars)
    throw std::invalid_argument("g_factor_list: need 2 <= k <= nvars");
  std::vector<Polynomial> fs;
  fs.reserve(static_cast<std::size_t>(k) * (k - 1));
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      fs.push_back(difference(nvars, j, i));
      fs.push_back(Polynomial::linear_sum(nvars, i, j));
    }
  }
  return fs;
}

std::vector<Polynomial> G_factor_list(int ell, int nvars) {
  if (ell < 2 || ell + 1 > nvars)
    throw std::invalid_argument("G_factor_list: need ell >= 2, ell+1 <= nvars");
  std::vector<Polynomial> fs;
  fs.reserve(static_cast<std::size_t>(2 * ell));
  fs.push_back(Polynomial::linear_sum(nvars, 1, ell));
  fs.push_back(difference(nvars, ell + 1, 1));
  for (int a = 2; a <= ell; ++a) {
    fs.push_back(difference(nvars, ell + 1, a));
    fs.push_back(Polynomial::linear_sum(nvars, a, ell + 1));
  }
  return fs;
}

std::vector<Polynomial> F_factor_list(int k, int nvars) {
  if (k < 2 || k > nvars)
    throw std::invalid_argument("F_factor_list: need 2 <= k <= nvars");
  std::vector<Polynomial> fs;
  fs.push_back(difference(nvars, 2, 1));
  for (int ell = 2; ell < k; ++ell)
    for (Polynomial& f : G_factor_list(ell, nvars)) fs.push_back(std::move(f));
  return fs;
}

std::vector<Polynomial> f_factor_list(int m, int nvars) {
  if (m < 3 || m > nvars)
    throw std::invalid_argument("f_factor_list: need 3 <= m <= nvars");
  // g_{m-1} over the shifted variables x_2..x_m
  std::vector<Polynomial> fs;
  for (int i = 2; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      fs.push_back(difference(nvars, j, i));
      fs.push_back(Polynomial::linear_sum(nvars, i, j));
    }
  }
  for (int j = 2; j <= m; ++j) fs.push_back(difference(nvars, j, 1));
  return fs;
}

Polynomial build_g(int k, const BuildConfig& cfg) {
  check_level(k, cfg.naive_g_bound, "build_g");
  auto fs = g_factor_list(k, k);
  Polynomial g = expand_product_naive(fs, cfg.compute);
  assert_homogeneous(g, static_cast<unsigned>(k * (k - 1)), "build_g");
  return g;
}

Polynomial build_G(int ell, int ambient, const BuildConfig& cfg) {
  if (ell > cfg.naive_g_bound)
    throw std::invalid_argument("build_G: level exceeds the full-expansion bound");
  auto fs = G_factor_list(ell, ambient);
  Polynomial G = expand_product_naive(fs, cfg.compute);
  assert_homogeneous(G, static_cast<unsigned>(2 * ell), "build_G");
  return G;
}

Polynomial build_f(int m, const BuildConfig& cfg) {
  if (m < 3)
    throw std::invalid_argument("build_f: need m = k+1 >= 3");
  if (m > cfg.naive_f_bound)
    throw std::invalid_argument(
        "build_f: m = " + std::to_string(m) +
        " exceeds the configured full-expansion bound " +
        std::to_string(cfg.naive_f_bound));
  auto fs = f_factor_list(m, m);
  Polynomial f = expand_product_naive(fs, cfg.compute);
  const unsigned km1 = static_cast<unsigned>(m - 1);
  assert_homogeneous(f, km1 * km1, "build_f");
  return f;
}

Polynomial build_F_capped(int k, const CapProfile& caps,
                          const ComputeOptions& opts, std::size_t* peak_terms) {
  if (k < 2) throw std::invalid_argument("build_F_capped: need k >= 2");
  if (caps.nvars() != k)
    throw std::invalid_argument("build_F_capped: cap profile must have k variables");

  std::size_t peak = 0;
  Polynomial F = truncate(difference(k, 2, 1), caps);
  for (int ell = 2; ell < k; ++ell) {
    for (const Polynomial& factor : G_factor_list(ell, k)) {
      F = mul_capped(F, factor, caps, opts);
      peak = std::max(peak, F.term_count());
    }
    assert_homogeneous(F, static_cast<unsigned>((ell + 1) * ell - 1),
                       "build_F_capped");
  }
  if (peak_terms) *peak_terms = std::max(peak, F.term_count());
  return F;
}

}  // namespace nullstellensatz

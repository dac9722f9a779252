// Kernel benchmark: the OpenMP merge kernel against the serial ordered-map
// reference, on the capped pipeline stages that dominate the coefficient
// extractions.  Results are checked for equality, not only timed.

#include <omp.h>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include "nullstellensatz/builders.hpp"
#include "nullstellensatz/target.hpp"

using namespace polycore;
namespace nsz = nullstellensatz;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Polynomial random_poly(std::mt19937_64& rng, int nvars, int terms,
                       unsigned max_exp) {
  std::vector<Term> ts;
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long long> coeff(-1000000, 1000000);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = exp(rng);
    ts.push_back({Monomial::from_exponents(e), Coeff(coeff(rng) | 1)});
  }
  return Polynomial::from_terms(nvars, std::move(ts));
}

void row(const std::string& name, double serial_ms, double omp1_ms,
         double ompN_ms, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(12) << serial_ms
            << std::setw(12) << omp1_ms << std::setw(12) << ompN_ms
            << std::setw(10) << std::setprecision(2)
            << (ompN_ms > 0 ? serial_ms / ompN_ms : 0.0)
            << (equal ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main() {
  const int hw = omp_get_max_threads();
  std::cout << "psumlab kernel benchmark (" << hw << " hardware threads)\n\n";
  std::cout << std::left << std::setw(34) << "workload" << std::right
            << std::setw(12) << "serial ms" << std::setw(12) << "omp 1T ms"
            << std::setw(12) << ("omp " + std::to_string(hw) + "T ms")
            << std::setw(10) << "speedup" << "\n";

  // raw capped products, random operands
  std::mt19937_64 rng(42);
  for (int terms : {20000, 100000}) {
    auto p = random_poly(rng, 5, terms, 8);
    auto q = random_poly(rng, 5, 12, 2);
    auto caps = CapProfile::from_caps({8u, 8u, 8u, 8u, 8u});
    Polynomial ref(5), one(5), many(5);
    double t_serial = time_ms([&] { ref = mul_capped_serial(p, q, caps); });
    ComputeOptions o1;
    o1.threads = 1;
    double t_omp1 = time_ms([&] { one = mul_capped(p, q, caps, o1); });
    ComputeOptions oN;
    oN.threads = hw;
    double t_ompN = time_ms([&] { many = mul_capped(p, q, caps, oN); });
    row("mul_capped " + std::to_string(terms) + "x12", t_serial, t_omp1,
        t_ompN, ref == one && ref == many);
  }

  // the real workload: capped F_k pipeline behind e(k,1), a-job i = 2
  for (int k : {7, 8, 9}) {
    auto caps = nsz::cap_profile_for({nsz::Family::A, k, 1, 2});
    Polynomial f1(k), fN(k);
    ComputeOptions o1;
    o1.threads = 1;
    double t_omp1 = time_ms([&] { f1 = nsz::build_F_capped(k, caps, o1); });
    ComputeOptions oN;
    oN.threads = hw;
    double t_ompN = time_ms([&] { fN = nsz::build_F_capped(k, caps, oN); });
    double t_serial = 0;
    bool equal = f1 == fN;
    if (k <= 7) {
      // serial reference pipeline (ordered-map kernel at every stage)
      Polynomial F = truncate(
          Polynomial::variable(k, 2) - Polynomial::variable(k, 1), caps);
      t_serial = time_ms([&] {
        for (int ell = 2; ell < k; ++ell)
          for (const auto& factor : nsz::G_factor_list(ell, k))
            F = mul_capped_serial(F, factor, caps);
      });
      equal = equal && F == f1;
    }
    row("build_F_capped k=" + std::to_string(k), t_serial, t_omp1, t_ompN,
        equal);
  }

  std::cout << "\n(serial ms = ordered-map reference; blank = skipped)\n";
  return 0;
}

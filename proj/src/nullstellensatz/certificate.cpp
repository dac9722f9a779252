#include "nullstellensatz/certificate.hpp"

#include <boost/multiprecision/integer.hpp>

namespace nullstellensatz {

using polycore::Coeff;

std::string conjecture_name(Conjecture c) {
  return c == Conjecture::alspach ? "alspach" : "gadms";
}

Conjecture conjecture_from_name(const std::string& s) {
  if (s == "alspach") return Conjecture::alspach;
  if (s == "gadms" || s == "g-adms") return Conjecture::gadms;
  throw std::invalid_argument("unknown conjecture '" + s +
                              "' (expected alspach or gadms)");
}

bool Certificate::admits_prime(const Coeff& p) const {
  return p > certified_size && is_prime(p) && gcd % p != 0;
}

void Certificate::check_invariants() const {
  for (const Coeff& v : values)
    if (gcd == 0 || v % gcd != 0)
      throw std::logic_error("certificate: gcd does not divide every value");
  for (const auto& [p, mult] : gcd_factorization)
    if (!is_prime(p) || mult < 1)
      throw std::logic_error("certificate: bad gcd factorization entry");
  Coeff rebuilt = 1;
  for (const auto& [p, mult] : gcd_factorization)
    for (int t = 0; t < mult; ++t) rebuilt *= p;
  if (rebuilt != gcd)
    throw std::logic_error("certificate: factorization does not rebuild gcd");
  if (!admits_prime(min_admissible_prime))
    throw std::logic_error("certificate: min admissible prime is not admissible");
}

Certificate certify(Conjecture conjecture, int k, Family family,
                    std::vector<int> js, const ExtractOptions& opts) {
  if (conjecture == Conjecture::alspach && family != Family::C)
    throw InvalidTarget(
        "certify: the alspach certificate uses family c (F_k coefficients)");
  if (conjecture == Conjecture::gadms &&
      (family == Family::C || family == Family::A))
    throw InvalidTarget("certify: the gadms certificate uses family e or d");

  const int jmax = family == Family::D ? k + 1 : k;
  if (js.empty())
    for (int j = 1; j <= jmax; ++j) js.push_back(j);

  Certificate cert;
  cert.conjecture = conjecture;
  cert.k = k;
  cert.family = family;
  cert.certified_size = conjecture == Conjecture::alspach ? k : k + 1;
  cert.js = js;

  Coeff g = 0;
  for (int j : js) {
    CoefficientRecord rec = extract(TargetSpec{family, k, j, std::nullopt}, opts);
    g = boost::multiprecision::gcd(g, rec.value);
    cert.values.push_back(std::move(rec.value));
  }
  if (g == 0)
    throw NoNonzeroCoefficient(
        "certify: no nonzero coefficient among the requested records; "
        "this j-range yields no certificate");
  cert.gcd = g;
  cert.gcd_factorization = g == 1 ? decltype(cert.gcd_factorization){}
                                  : factorize(g);
  for (const auto& [p, mult] : cert.gcd_factorization)
    cert.excluded_primes.push_back(p);

  Coeff p = next_prime_above(cert.certified_size);
  while (cert.gcd % p == 0) p = next_prime_above(p);
  cert.min_admissible_prime = p;

  cert.check_invariants();
  return cert;
}

}  // namespace nullstellensatz

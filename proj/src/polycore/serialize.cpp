#include "polycore/serialize.hpp"

#include <nlohmann/json.hpp>

namespace polycore {

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json rec;
    rec["exponents"] = t.mono.exponents(p.nvars());
    rec["coefficient"] = t.coeff.str();
    terms.push_back(std::move(rec));
  }
  return nlohmann::json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  const int nvars = j.at("nvars").get<int>();
  std::vector<Term> terms;
  for (const auto& rec : j.at("terms")) {
    auto exps = rec.at("exponents").get<std::vector<unsigned>>();
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("polynomial_from_json: exponent list length "
                                  "does not match nvars");
    Coeff c(rec.at("coefficient").get<std::string>());
    terms.push_back({Monomial::from_exponents(exps), std::move(c)});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace polycore

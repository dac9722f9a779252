#include "psumcli/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace psumcli {

namespace nsz = nullstellensatz;
using grouplab::ReductionTrace;
using grouplab::SweepReport;

json make_report(const std::string& command, json params, json result,
                 double wall_ms, int workers) {
  json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["result"] = std::move(result);
  doc["meta"] = json{{"version", kToolVersion},
                     {"schema", kReportSchemaVersion},
                     {"semantics", nsz::kPipelineSemantics},
                     {"wall_ms", wall_ms},
                     {"workers", workers}};
  return doc;
}

void emit(const json& report, std::ostream& os) {
  os << report.dump(2) << "\n";
}

json record_json(const nsz::CoefficientRecord& r) {
  json doc;
  doc["family"] = nsz::family_name(r.target.family);
  doc["k"] = r.target.k;
  if (r.target.i) doc["i"] = *r.target.i;
  doc["j"] = r.target.j;
  doc["value"] = r.value.str();
  doc["method"] = nsz::method_name(r.method);
  return doc;
}

json table_json(const nsz::CoefficientTable& t) {
  json a = json::array(), e = json::array();
  for (const auto& r : t.a) a.push_back(record_json(r));
  for (const auto& r : t.e) e.push_back(record_json(r));
  return json{{"k", t.k}, {"a", std::move(a)}, {"e", std::move(e)}};
}

std::string table_text(const nsz::CoefficientTable& t) {
  // same layout as the a^(k) table: rows j, columns i, e-column on the right
  std::vector<std::vector<std::string>> cell(
      static_cast<std::size_t>(t.k),
      std::vector<std::string>(static_cast<std::size_t>(t.k), ""));
  for (const auto& r : t.a)
    cell[static_cast<std::size_t>(r.target.j - 1)]
        [static_cast<std::size_t>(*r.target.i - 1)] = r.value.str();
  std::size_t width = 6;
  for (const auto& row : cell)
    for (const auto& s : row) width = std::max(width, s.size() + 2);

  std::ostringstream os;
  os << "j\\i";
  for (int i = 1; i <= t.k; ++i)
    os << std::setw(static_cast<int>(width)) << i;
  os << std::setw(static_cast<int>(width + 4)) << ("e_" + std::to_string(t.k));
  os << "\n";
  for (int j = 1; j <= t.k; ++j) {
    os << std::setw(3) << j;
    for (int i = 1; i <= t.k; ++i) {
      const auto& s = cell[static_cast<std::size_t>(j - 1)]
                          [static_cast<std::size_t>(i - 1)];
      os << std::setw(static_cast<int>(width)) << (s.empty() ? "." : s);
    }
    os << std::setw(static_cast<int>(width + 4))
       << t.e[static_cast<std::size_t>(j - 1)].value.str() << "\n";
  }
  return os.str();
}

void write_table_csv(const nsz::CoefficientTable& t, std::ostream& os) {
  os << "family,k,i,j,value\n";
  for (const auto& r : t.a)
    os << "a," << r.target.k << "," << *r.target.i << "," << r.target.j << ","
       << r.value.str() << "\n";
  for (const auto& r : t.e)
    os << "e," << r.target.k << ",," << r.target.j << "," << r.value.str()
       << "\n";
}

json certificate_json(const nsz::Certificate& c) {
  json values = json::array();
  for (std::size_t t = 0; t < c.values.size(); ++t)
    values.push_back(json{{"j", c.js[t]}, {"value", c.values[t].str()}});
  json factorization = json::array();
  for (const auto& [p, mult] : c.gcd_factorization)
    factorization.push_back(json{{"prime", p.str()}, {"multiplicity", mult}});
  json excluded = json::array();
  for (const auto& p : c.excluded_primes) excluded.push_back(p.str());
  return json{{"conjecture", nsz::conjecture_name(c.conjecture)},
              {"k", c.k},
              {"certified_size", c.certified_size},
              {"family", nsz::family_name(c.family)},
              {"values", std::move(values)},
              {"gcd", c.gcd.str()},
              {"gcd_factorization", std::move(factorization)},
              {"excluded_primes", std::move(excluded)},
              {"min_admissible_prime", c.min_admissible_prime.str()},
              {"admissible_primes",
               "all primes p > " + std::to_string(c.certified_size) +
                   " not dividing the gcd"}};
}

json sign_relation_json(const nsz::SignRelationReport& r) {
  json rows = json::array();
  for (std::size_t t = 0; t < r.holds.size(); ++t)
    rows.push_back(json{{"j", t + 1},
                        {"e", r.e_values[t].str()},
                        {"c", r.c_values[t].str()},
                        {"holds", static_cast<bool>(r.holds[t])}});
  return json{{"k", r.k}, {"sign", r.sign}, {"rows", std::move(rows)},
              {"all_hold", r.all_hold}};
}

json sweep_json(const SweepReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(f);
  return json{{"group", "Z" + std::to_string(r.n)},
              {"k", r.k},
              {"variant", grouplab::variant_name(r.variant)},
              {"subsets_considered", r.subsets_considered},
              {"valid_sets", r.valid_sets},
              {"ordered", r.ordered},
              {"counterexamples", std::move(failures)}};
}

json consistency_json(const grouplab::ConsistencyReport& r) {
  return json{{"k", r.k},
              {"p", r.p},
              {"variant", grouplab::variant_name(r.variant)},
              {"certificate_applies", r.certificate_applies},
              {"sweep", sweep_json(r.sweep)},
              {"agree", r.agree}};
}

json trace_json(const ReductionTrace& t) {
  const auto& free_group = t.source.group;
  json source = json::array();
  for (const auto& e : t.source.elements)
    source.push_back(element_json(free_group, e));
  json embedded = json::array();
  for (const auto& e : t.embedding.embedded.elements)
    embedded.push_back(element_json(grouplab::IntegerGroup{}, e));
  json projected = json::array();
  for (const auto& e : t.projection.projected.elements)
    projected.push_back(element_json(t.projection.projected.group, e));

  return json{
      {"group", free_group.describe()},
      {"source", std::move(source)},
      {"M", t.embedding.M.str()},
      {"embedding_bound", t.embedding.bound.str()},
      {"embedded", std::move(embedded)},
      {"p", t.projection.p},
      {"projected", std::move(projected)},
      {"ordering_mod_p", ordering_json(t.projection.projected.group,
                                       t.ordering_mod_p)},
      {"ordering_in_Z", ordering_json(grouplab::IntegerGroup{}, t.ordering_in_Z)},
      {"ordering", ordering_json(free_group, t.ordering_in_source)},
      {"kernel_checks", "Upsilon disjointness verified at both levels"}};
}

}  // namespace psumcli

#ifndef PSUMLAB_PSUMCLI_REPORT_HPP
#define PSUMLAB_PSUMCLI_REPORT_HPP

#include <nlohmann/json.hpp>

#include <iosfwd>

#include "grouplab/consistency.hpp"
#include "grouplab/reduction.hpp"
#include "nullstellensatz/certificate.hpp"

namespace psumcli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

// Reports are ordered JSON documents; everything that can vary between
// identical runs (timings, worker counts) lives under "meta", so a report
// with "meta" removed is byte-identical across runs and worker counts.
using json = nlohmann::ordered_json;

json make_report(const std::string& command, json params, json result,
                 double wall_ms, int workers);

void emit(const json& report, std::ostream& os);

json record_json(const nullstellensatz::CoefficientRecord& r);
json table_json(const nullstellensatz::CoefficientTable& t);
std::string table_text(const nullstellensatz::CoefficientTable& t);
void write_table_csv(const nullstellensatz::CoefficientTable& t,
                     std::ostream& os);  // header: family,k,i,j,value
json certificate_json(const nullstellensatz::Certificate& c);
json sign_relation_json(const nullstellensatz::SignRelationReport& r);
json sweep_json(const grouplab::SweepReport& r);
json consistency_json(const grouplab::ConsistencyReport& r);
json trace_json(const grouplab::ReductionTrace& t);

// Element wire format: Z_n residues as numbers, Z elements as decimal
// strings (arbitrary precision), Z^m elements as integer arrays.
inline json element_json(const grouplab::CyclicGroup&,
                         const grouplab::CyclicGroup::Elem& e) {
  return e;
}
inline json element_json(const grouplab::IntegerGroup&,
                         const grouplab::IntegerGroup::Elem& e) {
  return e.str();
}
inline json element_json(const grouplab::FreeGroup&,
                         const grouplab::FreeGroup::Elem& e) {
  json arr = json::array();
  for (const auto& comp : e) {
    if (comp >= std::numeric_limits<std::int64_t>::min() &&
        comp <= std::numeric_limits<std::int64_t>::max())
      arr.push_back(static_cast<std::int64_t>(comp));
    else
      arr.push_back(comp.str());
  }
  return arr;
}

template <grouplab::AbelianGroup G>
json ordering_json(const G& g, const grouplab::Ordering<G>& w) {
  json seq = json::array(), sums = json::array();
  for (const auto& e : w.sequence) seq.push_back(element_json(g, e));
  for (const auto& s : w.partial_sums) sums.push_back(element_json(g, s));
  return json{{"ordering", std::move(seq)}, {"partial_sums", std::move(sums)}};
}

}  // namespace psumcli

#endif

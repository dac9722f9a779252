#include "psumcli/cache.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace psumcli {

using nullstellensatz::CoefficientRecord;
using nullstellensatz::Family;
using nullstellensatz::TargetSpec;
namespace nsz = nullstellensatz;
using json = nlohmann::ordered_json;

std::string config_hash(const TargetSpec& t) {
  std::ostringstream os;
  os << nsz::kPipelineSemantics << "|" << t.describe() << "|caps=";
  if (t.family != Family::D) {
    auto caps = nsz::cap_profile_for(t);
    for (int r = 0; r < caps.nvars(); ++r) os << caps.cap(r) << ",";
  } else {
    os << "naive-or-relation";
  }
  const std::string s = os.str();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

namespace {

json record_to_line(const CoefficientRecord& r) {
  json doc;
  doc["schema"] = kCacheSchemaVersion;
  doc["semantics"] = nsz::kPipelineSemantics;
  doc["family"] = nsz::family_name(r.target.family);
  doc["k"] = r.target.k;
  if (r.target.i) doc["i"] = *r.target.i;
  doc["j"] = r.target.j;
  doc["value"] = r.value.str();
  doc["method"] = nsz::method_name(r.method);
  doc["config"] = config_hash(r.target);
  doc["wall_ms"] = r.wall_ms;
  doc["peak_terms"] = r.peak_terms;
  return doc;
}

CoefficientRecord line_to_record(const json& doc) {
  if (doc.at("schema").get<int>() != kCacheSchemaVersion)
    throw CorruptRecord("schema version " +
                        doc.at("schema").dump() + " != " +
                        std::to_string(kCacheSchemaVersion));
  CoefficientRecord r;
  r.target.family = nsz::family_from_name(doc.at("family").get<std::string>());
  r.target.k = doc.at("k").get<int>();
  if (doc.contains("i")) r.target.i = doc.at("i").get<int>();
  r.target.j = doc.at("j").get<int>();
  r.target.validate();
  r.value = polycore::Coeff(doc.at("value").get<std::string>());
  const std::string m = doc.at("method").get<std::string>();
  if (m == "capped-pipeline")
    r.method = nsz::Method::capped_pipeline;
  else if (m == "naive-oracle")
    r.method = nsz::Method::naive_oracle;
  else if (m == "relation")
    r.method = nsz::Method::relation;
  else
    throw CorruptRecord("unknown method '" + m + "'");
  r.wall_ms = doc.value("wall_ms", 0.0);
  r.peak_terms = doc.value("peak_terms", std::size_t{0});
  return r;
}

}  // namespace

FileCache::Key FileCache::key_of(const TargetSpec& t) {
  return Key{nsz::family_name(t.family), t.k, t.i.value_or(0), t.j};
}

FileCache::FileCache(std::filesystem::path path) : path_(std::move(path)) {
  load();
}

void FileCache::load() {
  std::ifstream in(path_);
  if (!in) return;  // nonexistent cache = empty cache
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    CoefficientRecord rec;
    try {
      json doc = json::parse(line);
      if (doc.at("schema").get<int>() != kCacheSchemaVersion)
        throw CorruptRecord("schema version " + doc.at("schema").dump() +
                            " != " + std::to_string(kCacheSchemaVersion));
      if (doc.value("semantics", "") != nsz::kPipelineSemantics)
        continue;  // records from other pipeline semantics are never hits
      rec = line_to_record(doc);
    } catch (const std::exception& e) {
      throw CorruptRecord(path_.string() + ":" + std::to_string(lineno) +
                          ": corrupt cache record (" + e.what() + ")");
    }
    auto [it, inserted] = records_.emplace(key_of(rec.target), rec);
    if (!inserted && it->second.value != rec.value)
      throw CorruptRecord(path_.string() + ":" + std::to_string(lineno) +
                          ": conflicting values for " + rec.target.describe() +
                          " (cache corruption or pipeline bug)");
  }
}

std::optional<CoefficientRecord> FileCache::lookup(const TargetSpec& t) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = records_.find(key_of(t));
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void FileCache::store(const CoefficientRecord& r) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = records_.emplace(key_of(r.target), r);
  if (!inserted) {
    if (it->second.value != r.value)
      throw std::logic_error(
          "cache: recomputed value differs from the stored one for " +
          r.target.describe() + " (pipeline bug)");
    return;  // already persisted
  }
  append_line(r);
}

void FileCache::append_line(const CoefficientRecord& r) {
  if (path_.has_parent_path())
    std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out)
    throw std::runtime_error("cache: cannot open " + path_.string() +
                             " for appending");
  out << record_to_line(r).dump() << "\n";
}

std::size_t FileCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return records_.size();
}

std::vector<CoefficientRecord> FileCache::records() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<CoefficientRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, rec] : records_) out.push_back(rec);
  return out;
}

void FileCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  records_.clear();
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

std::size_t FileCache::export_to(const std::filesystem::path& dst) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(dst, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cache export: cannot open " + dst.string());
  for (const auto& [key, rec] : records_) out << record_to_line(rec).dump() << "\n";
  return records_.size();
}

std::size_t FileCache::import_from(const std::filesystem::path& src) {
  FileCache incoming(src);  // reuses the strict line validation
  std::size_t added = 0;
  for (const auto& rec : incoming.records()) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = records_.emplace(key_of(rec.target), rec);
    if (!inserted) {
      if (it->second.value != rec.value)
        throw CorruptRecord("cache import: conflicting values for " +
                            rec.target.describe());
      continue;
    }
    append_line(rec);
    ++added;
  }
  return added;
}

}  // namespace psumcli

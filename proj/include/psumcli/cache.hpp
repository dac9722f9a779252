#ifndef PSUMLAB_PSUMCLI_CACHE_HPP
#define PSUMLAB_PSUMCLI_CACHE_HPP

#include <filesystem>
#include <map>
#include <mutex>

#include "nullstellensatz/extract.hpp"

namespace psumcli {

inline constexpr int kCacheSchemaVersion = 1;

struct CorruptRecord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Append-only line-delimited coefficient cache.  One JSON record per line,
/// coefficients as decimal strings, so records survive any platform and a
/// crash can lose at most the line being written.  Hits are returned only
/// when family, k, indices, schema version and pipeline-semantics version
/// all match.  Writes are serialized through one writer mutex.
class FileCache : public nullstellensatz::RecordStore {
public:
  /// Loads the file if it exists; a corrupt line is an error naming the
  /// offending line, never a silent skip.
  explicit FileCache(std::filesystem::path path);

  std::optional<nullstellensatz::CoefficientRecord> lookup(
      const nullstellensatz::TargetSpec& t) override;
  void store(const nullstellensatz::CoefficientRecord& r) override;

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const;
  std::vector<nullstellensatz::CoefficientRecord> records() const;

  void clear();

  /// Copies every record into dst (fresh canonical serialization).
  std::size_t export_to(const std::filesystem::path& dst) const;

  /// Validates and appends the records of src; rejects schema mismatches and
  /// corrupt lines with the line number.
  std::size_t import_from(const std::filesystem::path& src);

private:
  struct Key {
    std::string family;
    int k;
    int i;  // 0 = absent
    int j;
    auto operator<=>(const Key&) const = default;
  };
  static Key key_of(const nullstellensatz::TargetSpec& t);

  void load();
  void append_line(const nullstellensatz::CoefficientRecord& r);

  std::filesystem::path path_;
  std::map<Key, nullstellensatz::CoefficientRecord> records_;
  mutable std::mutex mutex_;
};

/// FNV-1a hash of the pipeline configuration behind a record: semantics
/// version, target and its cap profile.  Stored with each cache line.
std::string config_hash(const nullstellensatz::TargetSpec& t);

}  // namespace psumcli

#endif

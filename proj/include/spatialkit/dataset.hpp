#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "spatialkit/records.hpp"

namespace spatialkit {

inline constexpr std::string_view kManifestName = "manifest.jsonl";

// One manifest line. Keys come out sorted, so equal records give equal bytes.
nlohmann::json to_json(const ManifestRecord& record);
// Throws Error(ParseFailure) on malformed records.
ManifestRecord record_from_json(const nlohmann::json& j);

std::string to_jsonl(std::span<const ManifestRecord> records);
std::vector<ManifestRecord> read_manifest(const std::filesystem::path& path);

// Writes `content` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

struct WriteOptions {
  bool images = true;
  unsigned jobs = 1;
};

/// Writes out_dir/manifest.jsonl and, with `images`, one PNG + SVG per
/// distinct image_ref. Output bytes do not depend on `jobs`. Throws
/// Error(IoFailure) naming the offending path.
std::filesystem::path write_dataset(std::span<const ManifestRecord> records,
                                    const std::filesystem::path& out_dir,
                                    const WriteOptions& options = {});

// Recomputes the record's answer (and solution) from its scene or instance;
// returns a description of the first mismatch.
std::optional<std::string> validate_record(const ManifestRecord& record);

struct DatasetCheck {
  std::size_t records = 0;
  std::vector<std::string> problems;
};

DatasetCheck validate_dataset(const std::filesystem::path& dataset_dir,
                              bool require_images = true);

// Numeric keys order numerically ("2" < "10"), everything else lexically.
struct NaturalLess {
  bool operator()(const std::string& l, const std::string& r) const;
};

struct FrequencyTable {
  std::map<std::string, std::size_t, NaturalLess> counts;
  std::size_t total = 0;

  void add(const std::string& key) {
    ++counts[key];
    ++total;
  }
  double frequency(const std::string& key) const;
};

struct StatsReport {
  std::map<std::string, FrequencyTable> tables;

  const FrequencyTable* find(const std::string& name) const;
};

/// Label frequency tables recomputed from the records:
///   train/direction, train/distance-compare, train/localization-region,
///   train/object-region (every object of every distinct scene),
///   eval/direction, eval/distance-compare, eval/localization-region,
///   eval/object-region, eval/answer-key,
///   spp/<n>Grid/optimal-length, tsp/<n>Obj/tour-length (250-unit bins).
StatsReport stats(std::span<const ManifestRecord> records);

nlohmann::json to_json(const StatsReport& report);
std::string to_text(const StatsReport& report);

}  // namespace spatialkit

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "spatialkit/composite.hpp"
#include "spatialkit/geometry.hpp"
#include "spatialkit/instruct.hpp"

namespace spatialkit {

// Dataset records pair each question with the scene or instance it was
// generated from; seed lineage lives in Scene::seed/index and
// SppInstance/TspInstance::seed/index.

struct TrainRecord {
  InstructionItem item;
  Scene scene;

  friend bool operator==(const TrainRecord&, const TrainRecord&) = default;
};

struct McqRecord {
  McqItem mcq;
  Scene scene;

  friend bool operator==(const McqRecord&, const McqRecord&) = default;
};

struct SppRecord {
  std::string item_id;
  std::string prompt;
  std::string image_ref;
  SppInstance instance;
  SppSolution solution;

  friend bool operator==(const SppRecord&, const SppRecord&) = default;
};

struct TspRecord {
  std::string item_id;
  std::string prompt;
  std::string image_ref;
  TspInstance instance;
  TspSolution solution;

  friend bool operator==(const TspRecord&, const TspRecord&) = default;
};

using EvalItem = std::variant<McqRecord, SppRecord, TspRecord>;
using ManifestRecord = std::variant<TrainRecord, McqRecord, SppRecord, TspRecord>;

const std::string& item_id_of(const EvalItem& item);
const std::string& prompt_of(const EvalItem& item);
const std::string& image_of(const EvalItem& item);

const std::string& item_id_of(const ManifestRecord& record);
const std::string& image_of(const ManifestRecord& record);

// Eval items are the non-training alternatives; nullopt for training records.
std::optional<EvalItem> as_eval_item(const ManifestRecord& record);

}  // namespace spatialkit

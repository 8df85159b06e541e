#include "spatialkit/records.hpp"

namespace spatialkit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

const std::string& item_id_of(const EvalItem& item) {
  return std::visit(overloaded{
                        [](const McqRecord& r) -> const std::string& { return r.mcq.item.item_id; },
                        [](const auto& r) -> const std::string& { return r.item_id; },
                    },
                    item);
}

const std::string& prompt_of(const EvalItem& item) {
  return std::visit(overloaded{
                        [](const McqRecord& r) -> const std::string& { return r.mcq.item.prompt; },
                        [](const auto& r) -> const std::string& { return r.prompt; },
                    },
                    item);
}

const std::string& image_of(const EvalItem& item) {
  return std::visit(overloaded{
                        [](const McqRecord& r) -> const std::string& { return r.mcq.item.image_ref; },
                        [](const auto& r) -> const std::string& { return r.image_ref; },
                    },
                    item);
}

const std::string& item_id_of(const ManifestRecord& record) {
  return std::visit(
      overloaded{
          [](const TrainRecord& r) -> const std::string& { return r.item.item_id; },
          [](const McqRecord& r) -> const std::string& { return r.mcq.item.item_id; },
          [](const auto& r) -> const std::string& { return r.item_id; },
      },
      record);
}

const std::string& image_of(const ManifestRecord& record) {
  return std::visit(
      overloaded{
          [](const TrainRecord& r) -> const std::string& { return r.item.image_ref; },
          [](const McqRecord& r) -> const std::string& { return r.mcq.item.image_ref; },
          [](const auto& r) -> const std::string& { return r.image_ref; },
      },
      record);
}

std::optional<EvalItem> as_eval_item(const ManifestRecord& record) {
  return std::visit(overloaded{
                        [](const TrainRecord&) -> std::optional<EvalItem> { return std::nullopt; },
                        [](const auto& r) -> std::optional<EvalItem> { return EvalItem{r}; },
                    },
                    record);
}

}  // namespace spatialkit

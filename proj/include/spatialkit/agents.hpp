#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "spatialkit/records.hpp"

namespace spatialkit {

/// Anything that turns an evaluation item into free text. Real model
/// clients only need prompt_of(item) and image_of(item); the reference
/// agents below also read the ground truth stored in the item.
class Responder {
 public:
  virtual ~Responder() = default;
  virtual std::string respond(const EvalItem& item) = 0;
};

enum class AgentKind { Oracle, Random, Adversarial };

std::string_view to_string(AgentKind kind);
std::optional<AgentKind> parse_agent_kind(std::string_view text);

inline constexpr int kPhrasingStyles = 3;

struct AgentSpec {
  AgentKind kind = AgentKind::Oracle;
  std::uint64_t seed = 0;
  // 0: prose, 1: arrow / bare list, 2: bracketed / labelled. Negative picks
  // a style per item from the seed.
  int phrasing_style = -1;
};

/// Deterministic in (spec, item).
///   oracle      - the ground-truth answer in one of the phrasing styles
///   random      - a uniformly drawn answer of the right shape
///   adversarial - malformed output: diagonal steps, off-grid cells, missing
///                 labels, wrong start, empty strings
std::string respond(const AgentSpec& spec, const EvalItem& item);

class ReferenceAgent final : public Responder {
 public:
  explicit ReferenceAgent(AgentSpec spec) : spec_(spec) {}
  std::string respond(const EvalItem& item) override {
    return spatialkit::respond(spec_, item);
  }

 private:
  AgentSpec spec_;
};

}  // namespace spatialkit

#include "spatialkit/rng.hpp"

#include <stdexcept>

#include "spatialkit/errors.hpp"

namespace spatialkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::AmbiguousAxis: return "AmbiguousAxis";
    case ErrorCode::TieDetected: return "TieDetected";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TaskMismatch: return "TaskMismatch";
    case ErrorCode::EmptyRun: return "EmptyRun";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseFailure: return "ParseFailure";
  }
  return "Unknown";
}

std::uint64_t mix64(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index,
                          std::uint64_t salt) {
  return mix64(mix64(mix64(master_seed) ^ index) ^ salt);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index: empty range");
  // Rejection sampling on the top of the 64-bit range avoids modulo bias.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<std::size_t>(draw % bound);
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform_int: hi < lo");
  const auto span = static_cast<std::size_t>(static_cast<long long>(hi) - lo + 1);
  return lo + static_cast<int>(index(span));
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace spatialkit

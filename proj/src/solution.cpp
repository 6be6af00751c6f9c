#include "diophant/solution.hpp"

#include <string>

#include "diophant/error.hpp"

namespace diophant {

std::string_view to_string(SolveMode mode) noexcept {
  switch (mode) {
    case SolveMode::kRaw: return "raw";
    case SolveMode::kCanonical: return "canonical";
    case SolveMode::kFormA: return "form-a";
    case SolveMode::kFormB: return "form-b";
    case SolveMode::kOracle: return "oracle";
  }
  return "unknown";
}

Integer dot(std::span<const Integer> lhs, std::span<const Integer> rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "length " + std::to_string(lhs.size()) + " vs " +
                    std::to_string(rhs.size()));
  }
  Integer acc = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) acc += lhs[i] * rhs[i];
  return acc;
}

}  // namespace diophant

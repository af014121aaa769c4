#pragma once

#include <string>

#include "lieder/errors.hpp"

namespace lieder {

// Solver modes for maps on a Z2-graded space: Even preserves the grading,
// Odd flips it, Full is the direct sum of both solution spaces.
enum class ParityMode { Even, Odd, Full };

inline std::string to_string(ParityMode m) {
  switch (m) {
    case ParityMode::Even: return "even";
    case ParityMode::Odd: return "odd";
    case ParityMode::Full: return "full";
  }
  return "?";
}

inline ParityMode parse_parity_mode(const std::string& s) {
  if (s == "even") return ParityMode::Even;
  if (s == "odd") return ParityMode::Odd;
  if (s == "full") return ParityMode::Full;
  throw FormatError("unknown parity mode '" + s + "'");
}

}  // namespace lieder

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace steinred {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Cost = double;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

/// Absolute tolerance for comparing costs. Inputs are expected to be scaled
/// to O(1)..O(1e6).
inline constexpr Cost kEpsilon = 1e-9;

inline bool is_finite(Cost c) { return c < kInfinity && c > -kInfinity; }
inline bool cost_less(Cost a, Cost b) { return a < b - kEpsilon; }
inline bool cost_equal(Cost a, Cost b) {
  if (!is_finite(a) || !is_finite(b)) return a == b;
  return a - b <= kEpsilon && b - a <= kEpsilon;
}

/// Shortest decimal rendering that round-trips, never in exponent notation.
std::string format_cost(Cost c);

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace steinred

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace symhilb::circle {

/// Circle weights a_1..a_n; entries must be nonzero.
using WeightVector = std::vector<long>;

/// Sorted distinct absolute weights with multiplicities.
struct WeightProfile {
  std::vector<std::pair<std::size_t, std::size_t>> distinct;  // (a, p), a strictly increasing
  std::size_t effective_gcd = 1;

  std::size_t size() const;
  bool is_generic() const;
  /// Expanded weights, ascending.
  std::vector<std::size_t> weights() const;
  /// Profile of A / gcd(A).
  WeightProfile effective() const;
  /// Everything except the distinct weight at `index`.
  WeightProfile without(std::size_t index) const;

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

/// Throws ZeroWeight for a zero entry and InputError for an empty vector.
WeightProfile normalize(const WeightVector& a);

WeightVector parse_weights(const std::string& text);
std::string to_string(const WeightVector& a);

}  // namespace symhilb::circle

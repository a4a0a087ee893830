#include "symhilb/circle/weights.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "symhilb/errors.hpp"

namespace symhilb::circle {

std::size_t WeightProfile::size() const {
  std::size_t n = 0;
  for (const auto& [a, p] : distinct) n += p;
  return n;
}

bool WeightProfile::is_generic() const {
  return std::all_of(distinct.begin(), distinct.end(), [](const auto& d) { return d.second == 1; });
}

std::vector<std::size_t> WeightProfile::weights() const {
  std::vector<std::size_t> out;
  for (const auto& [a, p] : distinct) out.insert(out.end(), p, a);
  return out;
}

WeightProfile WeightProfile::effective() const {
  WeightProfile out;
  for (const auto& [a, p] : distinct) out.distinct.emplace_back(a / effective_gcd, p);
  return out;
}

WeightProfile WeightProfile::without(std::size_t index) const {
  WeightProfile out;
  for (std::size_t k = 0; k < distinct.size(); ++k)
    if (k != index) out.distinct.push_back(distinct[k]);
  std::size_t g = 0;
  for (const auto& [a, p] : out.distinct) g = std::gcd(g, a);
  out.effective_gcd = g == 0 ? 1 : g;
  return out;
}

WeightProfile normalize(const WeightVector& a) {
  if (a.empty()) throw InputError("weight vector is empty");
  std::map<std::size_t, std::size_t> counts;
  std::size_t g = 0;
  for (long w : a) {
    if (w == 0) throw ZeroWeight("zero weights are not supported");
    const auto m = static_cast<std::size_t>(std::labs(w));
    ++counts[m];
    g = std::gcd(g, m);
  }
  WeightProfile out;
  out.distinct.assign(counts.begin(), counts.end());
  out.effective_gcd = g;
  return out;
}

WeightVector parse_weights(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  WeightVector out;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || errno != 0) throw InputError("invalid weight '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("weight vector is empty");
  return out;
}

std::string to_string(const WeightVector& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out + ")";
}

}  // namespace symhilb::circle

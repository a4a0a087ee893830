#include "symhilb/cli/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "symhilb/errors.hpp"

namespace symhilb::cli {

using exact::FactoredDenominator;
using exact::Polynomial;

namespace {

std::vector<std::string> tokens(std::string line) {
  std::replace(line.begin(), line.end(), ',', ' ');
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::size_t positive(const std::string& s, const std::string& context) {
  const BigRational v = exact::parse_rational(s);
  if (!exact::is_integer(v) || v < 1) throw InputError("expected a positive integer in '" + context + "'");
  return v.get_num().get_ui();
}

}  // namespace

exact::RationalFunction parse_fixture(const std::string& numerator_line, const std::string& denominator_line) {
  std::vector<BigRational> num;
  for (const auto& t : tokens(numerator_line)) num.push_back(exact::parse_rational(t));
  if (num.empty()) throw InputError("fixture numerator line is empty");
  FactoredDenominator::FactorMap factors;
  for (const auto& t : tokens(denominator_line)) {
    if (t == "1") continue;  // empty product
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw InputError("denominator factor '" + t + "' must look like m:e");
    factors[positive(t.substr(0, colon), t)] += positive(t.substr(colon + 1), t);
  }
  return exact::RationalFunction(Polynomial(std::move(num)), FactoredDenominator(std::move(factors)));
}

std::vector<std::string> content_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

exact::RationalFunction read_fixture(const std::vector<std::string>& paths) {
  if (paths.size() == 1) {
    const auto lines = content_lines(paths[0]);
    if (lines.size() != 2) throw InputError("fixture '" + paths[0] + "' must have exactly two content lines");
    return parse_fixture(lines[0], lines[1]);
  }
  if (paths.size() == 2) {
    const auto num = content_lines(paths[0]);
    const auto den = content_lines(paths[1]);
    if (num.size() != 1 || den.size() != 1) throw InputError("numerator and denominator files need one content line each");
    return parse_fixture(num[0], den[0]);
  }
  throw InputError("--series takes one two-line file or a numerator file and a denominator file");
}

}  // namespace symhilb::cli

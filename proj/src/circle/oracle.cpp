#include "symhilb/circle/oracle.hpp"

#include <cstdlib>

#include "symhilb/errors.hpp"

namespace symhilb::circle {

namespace {

// dp[d][c + offset] counts monomials of degree d and charge c. Each variable
// contributes a factor 1 / (1 - x t^w); multiplying by it is a running sum
// along degree with stride w in charge.
struct Table {
  std::size_t degrees, width, offset;
  std::vector<BigInt> cells;
  BigInt& at(std::size_t d, std::size_t c) { return cells[d * width + c]; }
};

Table make_table(const WeightVector& a, std::size_t max_degree) {
  std::size_t amax = 0;
  for (long w : a) {
    if (w == 0) throw ZeroWeight("zero weights are not supported");
    amax = std::max(amax, static_cast<std::size_t>(std::labs(w)));
  }
  Table t{max_degree + 1, 2 * amax * max_degree + 1, amax * max_degree, {}};
  t.cells.assign(t.degrees * t.width, 0);
  t.at(0, t.offset) = 1;
  return t;
}

std::vector<long> charges(const WeightVector& a) {
  std::vector<long> out;
  for (long w : a) {
    out.push_back(w);
    out.push_back(-w);
  }
  return out;
}

std::vector<BigInt> extract(Table& t) {
  std::vector<BigInt> out(t.degrees);
  for (std::size_t d = 0; d < t.degrees; ++d) out[d] = t.at(d, t.offset);
  return out;
}

}  // namespace

std::vector<BigInt> oracle_series_serial(const WeightVector& a, std::size_t max_degree) {
  Table t = make_table(a, max_degree);
  const long width = static_cast<long>(t.width);
  for (long w : charges(a))
    for (std::size_t d = 1; d < t.degrees; ++d)
      for (long c = 0; c < width; ++c) {
        const long src = c - w;
        if (src < 0 || src >= width) continue;
        t.at(d, static_cast<std::size_t>(c)) += t.at(d - 1, static_cast<std::size_t>(src));
      }
  return extract(t);
}

std::vector<BigInt> oracle_series_parallel(const WeightVector& a, std::size_t max_degree) {
  Table t = make_table(a, max_degree);
  const long width = static_cast<long>(t.width);
  for (long w : charges(a))
    for (std::size_t d = 1; d < t.degrees; ++d) {
#pragma omp parallel for schedule(static)
      for (long c = 0; c < width; ++c) {
        const long src = c - w;
        if (src < 0 || src >= width) continue;
        t.at(d, static_cast<std::size_t>(c)) += t.at(d - 1, static_cast<std::size_t>(src));
      }
    }
  return extract(t);
}

std::vector<BigInt> oracle_series(const WeightVector& a, std::size_t max_degree) {
  std::size_t amax = 0;
  for (long w : a) amax = std::max(amax, static_cast<std::size_t>(std::labs(w)));
  if (amax * max_degree * max_degree >= (1u << 14)) return oracle_series_parallel(a, max_degree);
  return oracle_series_serial(a, max_degree);
}

BigInt oracle_count(const WeightVector& a, std::size_t k) { return oracle_series(a, k).back(); }

}  // namespace symhilb::circle

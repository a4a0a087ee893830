#include "symhilb/diophantine/scan.hpp"

#include <exception>
#include <functional>
#include <numeric>
#include <string>

#include "symhilb/analysis/laurent_analysis.hpp"
#include "symhilb/analysis/schur.hpp"
#include "symhilb/errors.hpp"

namespace symhilb::diophantine {

IntegralityResult gamma0_integrality(const circle::WeightVector& a) {
  IntegralityResult r;
  r.value = 1 / analysis::gamma0_closed(circle::normalize(a));
  r.is_integer = exact::is_integer(r.value);
  return r;
}

IntegralityResult gamma2_condition(const circle::WeightVector& a) {
  const auto c = analysis::gamma2_closed(circle::normalize(a));
  IntegralityResult r;
  r.value = 12 * c.gamma2 / c.gamma0;
  r.is_integer = exact::is_integer(r.value);
  return r;
}

bool representable(const BigInt& target, const BigInt& modulus) {
  if (target < 0) return false;
  if (target == 0) return true;
  if (!target.fits_ulong_p()) throw InputError("representable: target too large");
  const unsigned long t = target.get_ui();
  std::vector<unsigned long> parts;
  for (BigInt m = 2; m * m - 1 <= target; ++m)
    if (modulus % m == 0) parts.push_back(BigInt(m * m - 1).get_ui());
  std::vector<char> reach(t + 1, 0);
  reach[0] = 1;
  for (unsigned long v = 1; v <= t; ++v)
    for (unsigned long p : parts)
      if (p <= v && reach[v - p]) {
        reach[v] = 1;
        break;
      }
  return reach[t] != 0;
}

bool pseudoreflection_obstruction(const circle::WeightVector& a) {
  const auto g0 = gamma0_integrality(a);
  if (!g0.is_integer)
    throw NotApplicable("1/gamma0 = " + exact::to_string(g0.value) + " is not an integer");
  const auto g2 = gamma2_condition(a);
  if (!g2.is_integer) return false;
  return representable(g2.value.get_num(), g0.value.get_num());
}

BigRational gamma0_inverse_raw(const circle::WeightVector& a) {
  std::vector<BigRational> pts;
  for (long w : a) {
    if (w == 0) throw ZeroWeight("zero weights are not supported");
    pts.emplace_back(std::labs(w));
  }
  const long n = static_cast<long>(pts.size());
  if (n < 2) throw UnsupportedDimension("1/gamma0 needs n >= 2");
  analysis::Partition lambda;
  for (long k = 0; k < n; ++k) lambda.push_back(k < 2 ? n - 2 : n - 1 - k);
  return analysis::schur_eval(analysis::staircase(n), pts) / analysis::schur_eval(lambda, pts);
}

bool triple_hit(long a1, long a2, long a3) {
  // fits in 64 bits while a1 + a2 + a3 <= kMaxScanLevel
  const long long p = static_cast<long long>(a1 + a2) * (a1 + a3) * (a2 + a3);
  const long long e2 = static_cast<long long>(a1) * a2 + static_cast<long long>(a1) * a3 + static_cast<long long>(a2) * a3;
  return p % e2 == 0;
}

namespace {

// Hits among ordered positive n-tuples with sum exactly s.
std::vector<circle::WeightVector> hits_at(std::size_t n, std::size_t s, std::size_t& count, bool keep) {
  std::vector<circle::WeightVector> out;
  count = 0;
  const long ls = static_cast<long>(s);
  if (n == 3) {
    for (long a1 = 1; a1 <= ls - 2; ++a1)
      for (long a2 = 1; a1 + a2 <= ls - 1; ++a2) {
        const long a3 = ls - a1 - a2;
        if (triple_hit(a1, a2, a3)) {
          ++count;
          if (keep) out.push_back({a1, a2, a3});
        }
      }
    return out;
  }
  circle::WeightVector cur(n, 1);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      cur[i] = left;
      if (exact::is_integer(gamma0_inverse_raw(cur))) {
        ++count;
        if (keep) out.push_back(cur);
      }
      return;
    }
    for (long v = 1; v <= left - static_cast<long>(n - 1 - i); ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, ls);
  return out;
}

std::vector<ScanResult> assemble(std::size_t n, std::size_t max_level, std::vector<std::size_t>& counts,
                                 std::vector<std::vector<circle::WeightVector>>& hits) {
  std::vector<ScanResult> out;
  BigInt running = 0;
  for (std::size_t level = n; level <= max_level; ++level) {
    running += static_cast<unsigned long>(counts[level]);
    ScanResult r;
    r.level = level;
    r.hit_count = running;
    r.total = exact::binomial(level, n);
    r.probability = exact::make_rational(running, r.total);
    r.new_hits = std::move(hits[level]);
    out.push_back(std::move(r));
  }
  return out;
}

void check_args(std::size_t n, std::size_t max_level) {
  if (n < 2) throw UnsupportedDimension("probability_scan needs n >= 2");
  if (max_level < n) throw InputError("probability_scan: max level must be at least n");
  if (max_level > kMaxScanLevel) throw InputError("probability_scan: max level exceeds " + std::to_string(kMaxScanLevel));
}

}  // namespace

std::vector<ScanResult> probability_scan_serial(std::size_t n, std::size_t max_level, bool keep_hits) {
  check_args(n, max_level);
  std::vector<std::size_t> counts(max_level + 1, 0);
  std::vector<std::vector<circle::WeightVector>> hits(max_level + 1);
  for (std::size_t s = n; s <= max_level; ++s) hits[s] = hits_at(n, s, counts[s], keep_hits);
  return assemble(n, max_level, counts, hits);
}

std::vector<ScanResult> probability_scan_parallel(std::size_t n, std::size_t max_level, bool keep_hits) {
  check_args(n, max_level);
  std::vector<std::size_t> counts(max_level + 1, 0);
  std::vector<std::vector<circle::WeightVector>> hits(max_level + 1);
  std::vector<std::exception_ptr> errors(max_level + 1);
  const long top = static_cast<long>(max_level);
#pragma omp parallel for schedule(dynamic, 4)
  for (long s = static_cast<long>(n); s <= top; ++s) {
    const auto us = static_cast<std::size_t>(s);
    try {
      hits[us] = hits_at(n, us, counts[us], keep_hits);
    } catch (...) {
      errors[us] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return assemble(n, max_level, counts, hits);
}

std::vector<ScanResult> probability_scan(std::size_t n, std::size_t max_level, bool keep_hits) {
  return probability_scan_parallel(n, max_level, keep_hits);
}

ImplicationReport gamma2_implication_scan(std::size_t max_level) {
  ImplicationReport rep;
  const long top = static_cast<long>(max_level);
  for (long a1 = 1; 3 * a1 <= top; ++a1)
    for (long a2 = a1; a1 + 2 * a2 <= top; ++a2)
      for (long a3 = a2; a1 + a2 + a3 <= top; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1 || !triple_hit(a1, a2, a3)) continue;
        ++rep.checked;
        if (!gamma2_condition({a1, a2, a3}).is_integer) rep.failures.push_back({a1, a2, a3});
      }
  return rep;
}

}  // namespace symhilb::diophantine

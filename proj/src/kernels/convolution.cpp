#include "symhilb/kernels/convolution.hpp"

#include <algorithm>

namespace symhilb::kernels {

namespace {

std::size_t output_length(std::size_t na, std::size_t nb, std::size_t limit) {
  if (na == 0 || nb == 0) return 0;
  const std::size_t full = na + nb - 1;
  return limit == 0 ? full : std::min(full, limit);
}

void accumulate(std::span<const BigRational> a, std::span<const BigRational> b, std::size_t k, BigRational& out,
                BigRational& tmp) {
  const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  out = 0;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (sgn(a[i]) == 0 || sgn(b[k - i]) == 0) continue;
    tmp = a[i] * b[k - i];
    out += tmp;
  }
}

}  // namespace

std::vector<BigRational> convolve_serial(std::span<const BigRational> a, std::span<const BigRational> b,
                                         std::size_t limit) {
  const std::size_t n = output_length(a.size(), b.size(), limit);
  std::vector<BigRational> c(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<BigRational> convolve_parallel(std::span<const BigRational> a, std::span<const BigRational> b,
                                           std::size_t limit) {
  const std::size_t n = output_length(a.size(), b.size(), limit);
  std::vector<BigRational> c(n);
  const long count = static_cast<long>(n);
#pragma omp parallel
  {
    BigRational tmp;
#pragma omp for schedule(dynamic, 16)
    for (long k = 0; k < count; ++k) accumulate(a, b, static_cast<std::size_t>(k), c[static_cast<std::size_t>(k)], tmp);
  }
  return c;
}

std::vector<BigRational> convolve(std::span<const BigRational> a, std::span<const BigRational> b, std::size_t limit) {
  constexpr std::size_t kParallelWork = 1u << 16;
  if (a.size() * b.size() < kParallelWork) return convolve_serial(a, b, limit);
  return convolve_parallel(a, b, limit);
}

}  // namespace symhilb::kernels

#include "symhilb/analysis/schur.hpp"

#include <string>

#include "symhilb/errors.hpp"

namespace symhilb::analysis {

void validate(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw InputError("partition has a negative part");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
}

std::vector<BigRational> complete_homogeneous(const std::vector<BigRational>& points, long k) {
  std::vector<BigRational> h(static_cast<std::size_t>(std::max(k, 0L)) + 1);
  h[0] = 1;
  // Adding one variable x: h_k <- h_k + x h_{k-1}, ascending in k.
  for (const auto& x : points)
    for (std::size_t d = 1; d < h.size(); ++d) h[d] += x * h[d - 1];
  return h;
}

BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const BigRational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

BigRational schur_eval(const Partition& lambda, const std::vector<BigRational>& points) {
  validate(lambda);
  if (lambda.size() != points.size())
    throw PartitionPointsMismatch("schur_eval: " + std::to_string(lambda.size()) + " parts but " +
                                  std::to_string(points.size()) + " points");
  const std::size_t n = lambda.size();
  if (n == 0) return 1;
  const auto h = complete_homogeneous(points, lambda[0] + static_cast<long>(n));
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long k = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
      if (k >= 0) m[i][j] = h[static_cast<std::size_t>(k)];
    }
  return determinant(std::move(m));
}

BigRational schur_bialternant(const Partition& lambda, const std::vector<BigRational>& points) {
  validate(lambda);
  if (lambda.size() != points.size()) throw PartitionPointsMismatch("schur_bialternant: size mismatch");
  const std::size_t n = lambda.size();
  auto alternant = [&](const std::vector<long>& exps) {
    std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigRational v = 1;
        for (long e = 0; e < exps[j]; ++e) v *= points[i];
        m[i][j] = v;
      }
    return determinant(std::move(m));
  };
  std::vector<long> top(n), bottom(n);
  for (std::size_t j = 0; j < n; ++j) {
    bottom[j] = static_cast<long>(n - 1 - j);
    top[j] = lambda[j] + bottom[j];
  }
  const BigRational v = alternant(bottom);
  if (sgn(v) == 0) throw InputError("schur_bialternant: points must be pairwise distinct");
  return alternant(top) / v;
}

Partition staircase(long n) {
  Partition p;
  for (long k = n - 1; k >= 0; --k) p.push_back(k);
  return p;
}

}  // namespace symhilb::analysis

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "symhilb/circle/averaging.hpp"
#include "symhilb/circle/hilbert.hpp"
#include "symhilb/circle/oracle.hpp"
#include "symhilb/circle/weights.hpp"
#include "symhilb/errors.hpp"
#include "symhilb/exact/laurent.hpp"

using namespace symhilb;
using namespace symhilb::circle;
using exact::FactoredDenominator;
using exact::Polynomial;
using exact::RationalFunction;

namespace {

const Polynomial kNum123{1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1};
const FactoredDenominator kDen123({{2, 1}, {3, 1}, {4, 1}, {5, 1}});

HilbertOptions serial_options() {
  HilbertOptions o;
  o.parallel = false;
  return o;
}

// All weight vectors with entries in [1, max] and length n, ascending.
void ascending_vectors(std::size_t n, long max, long lo, WeightVector& cur, std::vector<WeightVector>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (long a = lo; a <= max; ++a) {
    cur.push_back(a);
    ascending_vectors(n, max, a, cur, out);
    cur.pop_back();
  }
}

std::vector<WeightVector> all_vectors(std::size_t max_n, long max_w) {
  std::vector<WeightVector> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    WeightVector cur;
    ascending_vectors(n, max_w, 1, cur, out);
  }
  return out;
}

bool coprime(const WeightVector& a) {
  long g = 0;
  for (long w : a) g = std::gcd(g, w);
  return g == 1;
}

}  // namespace

TEST(Normalize, Examples) {
  const auto p = normalize({1, -2, 3});
  EXPECT_EQ(p.distinct, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(p.effective_gcd, 1u);
  const auto q = normalize({-1, 2, 2});
  EXPECT_EQ(q.distinct, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}}));
  EXPECT_FALSE(q.is_generic());
  const auto r = normalize({2, 4, 6});
  EXPECT_EQ(r.effective_gcd, 2u);
  EXPECT_EQ(r.effective(), normalize({1, 2, 3}));
  EXPECT_THROW(normalize({1, 0}), ZeroWeight);
  EXPECT_EQ(parse_weights("1, -2,3"), (WeightVector{1, -2, 3}));
  EXPECT_THROW(parse_weights("1,x"), InputError);
}

TEST(PhiTilde, WorkedExample) {
  const auto a = normalize({1, 2, 3});
  EXPECT_TRUE(phi_tilde(0, a).equals(
      RationalFunction(Polynomial::monomial(1, 3), FactoredDenominator({{1, 1}, {2, 1}, {3, 1}, {4, 1}}))));
  EXPECT_TRUE(phi_tilde(1, a).equals(
      RationalFunction(Polynomial::monomial(-1, 1), FactoredDenominator({{1, 2}, {3, 1}, {5, 1}}))));
  EXPECT_TRUE(phi_tilde(2, a).equals(RationalFunction(Polynomial{1}, FactoredDenominator({{1, 1}, {2, 1}, {4, 1}, {5, 1}}))));
  EXPECT_THROW(phi_tilde(0, normalize({1, 2, 2})), DegenerateWeights);
}

TEST(UAverage, Identity) {
  const auto f = phi_tilde(1, normalize({1, 2, 3}));
  EXPECT_EQ(u_average(f, 1).numerator(), f.numerator());
}

TEST(UAverage, WorkedExample) {
  const auto a = normalize({1, 2, 3});
  const auto u2 = u_average(phi_tilde(1, a), 2);
  EXPECT_TRUE(u2.equals(RationalFunction(Polynomial{0, -2, -1, -2, -1, -2}, FactoredDenominator({{1, 2}, {3, 1}, {5, 1}}))));
  EXPECT_EQ(u2.denominator(), FactoredDenominator({{1, 2}, {3, 1}, {5, 1}}));
  const auto u3 = u_average(phi_tilde(2, a), 3);
  EXPECT_EQ(u3.numerator(), (Polynomial{1, 1, 4, 5, 5, 5, 4, 1, 1}));
  EXPECT_EQ(u3.denominator(), FactoredDenominator({{1, 1}, {2, 1}, {4, 1}, {5, 1}}));
}

TEST(UAverage, MatchesCoefficientSampling) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> c(-5, 5);
  for (std::size_t a = 1; a <= 6; ++a) {
    const RationalFunction f(Polynomial{c(rng), c(rng), 1 + c(rng) * c(rng), c(rng)},
                             FactoredDenominator({{1, 1}, {2, 1}, {3, 2}}, 0,
                                                 Polynomial{1, 1, 2}));
    const auto g = u_average(f, a);
    const auto sf = exact::series_of_rational(f, 20 * a);
    const auto sg = exact::series_of_rational(g, 20);
    for (std::size_t i = 0; i <= 20; ++i) EXPECT_EQ(sg[i], sf[i * a]) << a << " " << i;
  }
}

TEST(UAverage, LaurentInput) {
  // x^{-3} / (1 - x): coefficients 1 at every exponent >= -3.
  const RationalFunction f(Polynomial{1}, FactoredDenominator({{1, 1}}, 3));
  const auto g = u_average(f, 2);  // x^{-1} + 1 + x + ... = x^{-1} / (1 - x)
  EXPECT_TRUE(g.equals(RationalFunction(Polynomial{1}, FactoredDenominator({{1, 1}}, 1))));
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_count({1}, 2), 1);
  EXPECT_EQ(oracle_count({1}, 1), 0);
  EXPECT_EQ(oracle_count({1, 1}, 2), 4);
  EXPECT_EQ(oracle_count({1, 1}, 4), 9);
}

TEST(Oracle, SerialMatchesParallel) {
  for (const WeightVector& a : {WeightVector{1, 2, 3}, WeightVector{1, -2, 2, 5}, WeightVector{4, 5, 20}})
    EXPECT_EQ(oracle_series_serial(a, 24), oracle_series_parallel(a, 24));
}

TEST(Oracle, BruteForceEnumeration) {
  // Independent enumeration of all exponent vectors of degree k.
  const WeightVector a{1, 2, 3};
  for (std::size_t k = 0; k <= 8; ++k) {
    long count = 0;
    std::vector<std::size_t> e(6, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
      if (i == 5) {
        e[5] = left;
        long charge = 0;
        for (std::size_t j = 0; j < 3; ++j) charge += a[j] * (static_cast<long>(e[2 * j]) - static_cast<long>(e[2 * j + 1]));
        if (charge == 0) ++count;
        return;
      }
      for (std::size_t v = 0; v <= left; ++v) {
        e[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, k);
    EXPECT_EQ(oracle_count(a, k), count) << k;
  }
}

TEST(HilbertGeneric, WorkedExample) {
  const auto r = hilbert_on_generic(normalize({1, 2, 3}));
  EXPECT_EQ(r.on_shell.numerator(), kNum123);
  EXPECT_EQ(r.on_shell.denominator(), kDen123);
  EXPECT_EQ(r.method, Method::Generic);
  EXPECT_TRUE(r.palindromic);
  const auto counts = oracle_series({1, 2, 3}, 14);
  const auto s = exact::series_of_rational(r.off_shell, 14);
  for (std::size_t k = 0; k <= 14; ++k) EXPECT_EQ(s[k], BigRational(counts[k])) << k;
}

TEST(HilbertGeneric, SingleWeight) {
  const auto r = hilbert_on_generic(normalize({1}));
  EXPECT_EQ(r.on_shell.numerator(), Polynomial{1});
  EXPECT_EQ(r.on_shell.denominator(), FactoredDenominator());
  EXPECT_EQ(r.off_shell.denominator(), FactoredDenominator({{2, 1}}));
}

TEST(HilbertGeneric, SerialAndParallelAgree) {
  const auto p = hilbert_on_generic(normalize({2, 3, 7, 9}));
  const auto s = hilbert_on_generic(normalize({2, 3, 7, 9}), serial_options());
  EXPECT_EQ(p.on_shell.numerator(), s.on_shell.numerator());
  EXPECT_EQ(p.on_shell.denominator(), s.on_shell.denominator());
}

TEST(HilbertDegenerate, TwoOnes) {
  const auto r = hilbert_on_degenerate(normalize({1, 1}));
  EXPECT_TRUE(r.on_shell.equals(RationalFunction(Polynomial{1, 0, 1}, FactoredDenominator({{2, 2}}))));
  EXPECT_EQ(r.on_shell.denominator(), FactoredDenominator({{2, 2}}));
}

TEST(HilbertDegenerate, ThreeOnes) {
  const auto r = hilbert_on_degenerate(normalize({1, 1, 1}));
  EXPECT_EQ(r.on_shell.numerator(), (Polynomial{1, 0, 4, 0, 1}));
  EXPECT_EQ(r.on_shell.denominator(), FactoredDenominator({{2, 4}}));
}

TEST(HilbertDegenerate, OneTwoTwoAgainstOracle) {
  HilbertOptions o;
  o.verify_degree = 40;
  const auto r = hilbert_on_degenerate(normalize({1, 2, 2}), o);
  const auto counts = oracle_series({1, 2, 2}, 40);
  const auto s = exact::series_of_rational(r.off_shell, 40);
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_EQ(s[k], BigRational(counts[k])) << k;
}

TEST(ResidueCluster, SimpleClusterIsPhiTildeOverQuadric) {
  // a * R(u) = phi_tilde_i(u) / (1 - u^{2a}) for a cluster of multiplicity 1
  for (const auto& w : all_vectors(4, 8)) {
    const auto prof = normalize(w);
    if (!prof.is_generic()) continue;
    const auto ws = prof.weights();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const auto r = residue_cluster(ws[i], 1, prof.without(i)) * BigRational(static_cast<long>(ws[i]));
      const auto expected = phi_tilde(i, prof).over_one_minus_x_pow(2 * ws[i]);
      ASSERT_TRUE(r.equals(expected)) << to_string(w) << " i=" << i;
    }
  }
}

TEST(CompletelyDegenerate, ClosedForm) {
  EXPECT_EQ(hilbert_completely_degenerate(1).on_shell.numerator(), Polynomial{1});
  EXPECT_EQ(hilbert_completely_degenerate(1).on_shell.denominator(), FactoredDenominator());
  const auto two = hilbert_completely_degenerate(2);
  EXPECT_EQ(two.on_shell.numerator(), (Polynomial{1, 0, 1}));
  EXPECT_EQ(two.on_shell.denominator(), FactoredDenominator({{2, 2}}));
  EXPECT_EQ(two.method, Method::CompletelyDegenerate);
}

TEST(CompletelyDegenerate, MatchesResiduePath) {
  for (std::size_t n = 1; n <= 10; ++n) {
    HilbertOptions o;
    o.verify_degree = n <= 6 ? 30 : 12;
    const auto closed = hilbert_completely_degenerate(n);
    const auto residue = hilbert_on_degenerate(normalize(WeightVector(n, 1)), o);
    EXPECT_EQ(residue.on_shell.numerator(), closed.on_shell.numerator()) << n;
    EXPECT_EQ(residue.on_shell.denominator(), closed.on_shell.denominator()) << n;
  }
}

TEST(HilbertProperties, OracleEquivalenceAndPathAgreement) {
  std::size_t checked = 0;
  for (const auto& w : all_vectors(4, 8)) {
    if (!coprime(w)) continue;
    const auto prof = normalize(w);
    HilbertOptions o;
    o.verify_degree = 0;
    const auto deg = hilbert_on_degenerate(prof, o);
    const auto counts = oracle_series(w, 30);
    const auto s = exact::series_of_rational(deg.off_shell, 30);
    for (std::size_t k = 0; k <= 30; ++k) ASSERT_EQ(s[k], BigRational(counts[k])) << to_string(w) << " k=" << k;
    // on = (1 - x^2) off
    ASSERT_TRUE(deg.on_shell.equals(deg.off_shell.times_polynomial(Polynomial::one_minus_x_pow(2))));
    // Kempf bound on the off-shell series
    ASSERT_LE(deg.off_shell.numerator().degree(), static_cast<long>(deg.off_shell.denominator().degree())) << to_string(w);
    // dimensions are nonnegative
    for (std::size_t k = 0; k <= 30; ++k) ASSERT_GE(sgn(s[k]), 0);
    if (prof.is_generic()) {
      const auto gen = hilbert_on_generic(prof);
      ASSERT_EQ(gen.on_shell.numerator(), deg.on_shell.numerator()) << to_string(w);
      ASSERT_EQ(gen.on_shell.denominator(), deg.on_shell.denominator()) << to_string(w);
    }
    ++checked;
  }
  EXPECT_GT(checked, 300u);
}

TEST(HilbertProperties, SignsPermutationsAndScaling) {
  std::mt19937 rng(9);
  for (const auto& w : all_vectors(3, 6)) {
    if (!coprime(w)) continue;
    const auto base = hilbert_series(w);
    WeightVector v = w;
    std::shuffle(v.begin(), v.end(), rng);
    for (auto& x : v)
      if (rng() % 2) x = -x;
    const auto flipped = hilbert_series(v);
    ASSERT_EQ(base.on_shell.numerator(), flipped.on_shell.numerator()) << to_string(v);
    ASSERT_EQ(base.on_shell.denominator(), flipped.on_shell.denominator()) << to_string(v);
    if (!normalize(w).is_generic()) continue;
    for (long c : {2L, 3L}) {
      WeightVector s = w;
      for (auto& x : s) x *= c;
      const auto scaled = hilbert_series(s);
      ASSERT_EQ(base.on_shell.numerator(), scaled.on_shell.numerator()) << to_string(s);
    }
  }
}

TEST(HilbertViaOracle, RecoversWorkedExample) {
  const FactoredDenominator off({{2, 2}, {3, 1}, {4, 1}, {5, 1}});
  const auto r = hilbert_via_oracle({1, 2, 3}, off);
  EXPECT_EQ(r.on_shell.numerator(), kNum123);
  EXPECT_EQ(r.method, Method::Oracle);
}

TEST(HilbertSeries, Dispatch) {
  EXPECT_EQ(hilbert_series({1, 2, 3}).method, Method::Generic);
  EXPECT_EQ(hilbert_series({2, 2, 2}).method, Method::CompletelyDegenerate);
  EXPECT_EQ(hilbert_series({1, 2, 2}).method, Method::DegenerateResidue);
  EXPECT_EQ(hilbert_series({2, 4, 6}).on_shell.numerator(), kNum123);
}

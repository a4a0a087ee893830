#include <gtest/gtest.h>

#include <numeric>

#include "symhilb/diophantine/scan.hpp"
#include "symhilb/errors.hpp"
#include "symhilb/exact/laurent.hpp"
#include "symhilb/circle/hilbert.hpp"

using namespace symhilb;
using namespace symhilb::diophantine;

namespace {

BigRational q(long p, long r = 1) { return exact::make_rational(p, r); }

bool egyptian(long a1, long a2, long a3) {
  const BigRational s = q(1, a1) + q(1, a2) + q(1, a3);
  return s.get_num() == 1;
}

}  // namespace

TEST(Gamma0Integrality, Examples) {
  const auto a = gamma0_integrality({4, 5, 20});
  EXPECT_EQ(a.value, 27);
  EXPECT_TRUE(a.is_integer);
  const auto b = gamma0_integrality({1, 2, 3});
  EXPECT_EQ(b.value, q(60, 11));
  EXPECT_FALSE(b.is_integer);
  for (long c = 1; c <= 30; ++c) EXPECT_FALSE(gamma0_integrality({1, 1, c}).is_integer) << c;
}

TEST(Gamma2Condition, Examples) {
  const auto a = gamma2_condition({4, 5, 20});
  EXPECT_EQ(a.value, 46);
  EXPECT_TRUE(a.is_integer);
  const auto e = exact::laurent_at_one(circle::hilbert_series({1, 2, 3}).on_shell, 2);
  EXPECT_EQ(gamma2_condition({1, 2, 3}).value, 12 * e[2] / e[0]);
}

TEST(Obstruction, Examples) {
  EXPECT_FALSE(pseudoreflection_obstruction({4, 5, 20}));
  EXPECT_TRUE(representable(0, 7));
  EXPECT_TRUE(representable(8, 3));
  EXPECT_FALSE(representable(46, 27));
  EXPECT_TRUE(representable(16, 3));
  EXPECT_FALSE(representable(9, 3));
  EXPECT_THROW(pseudoreflection_obstruction({1, 2, 3}), NotApplicable);
}

TEST(Scan, LevelThreeHasNoHits) {
  const auto r = probability_scan(3, 3);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].hit_count, 0);
  EXPECT_EQ(r[0].total, 1);
  EXPECT_FALSE(egyptian(1, 1, 1));
}

TEST(Scan, AgreesWithEgyptianSearch) {
  const auto results = probability_scan(3, 12);
  long running = 0;
  for (const auto& r : results) {
    std::vector<circle::WeightVector> direct;
    const long s = static_cast<long>(r.level);
    for (long a1 = 1; a1 < s; ++a1)
      for (long a2 = 1; a1 + a2 < s; ++a2)
        if (egyptian(a1, a2, s - a1 - a2)) direct.push_back({a1, a2, s - a1 - a2});
    EXPECT_EQ(r.new_hits, direct) << r.level;
    running += static_cast<long>(direct.size());
    EXPECT_EQ(r.hit_count, running);
    EXPECT_EQ(r.total, exact::binomial(r.level, 3));
    EXPECT_EQ(r.probability, exact::make_rational(r.hit_count, r.total));
  }
  EXPECT_GT(running, 0);
}

TEST(Scan, EgyptianEquivalenceToLevel100) {
  for (long a1 = 1; a1 <= 98; ++a1)
    for (long a2 = 1; a1 + a2 <= 99; ++a2)
      for (long a3 = 1; a1 + a2 + a3 <= 100; ++a3)
        ASSERT_EQ(triple_hit(a1, a2, a3), egyptian(a1, a2, a3)) << a1 << "," << a2 << "," << a3;
}

TEST(Scan, HitProperties) {
  const auto results = probability_scan(3, 60);
  bool saw_scaled = false;
  for (const auto& r : results)
    for (const auto& h : r.new_hits) {
      const bool pairwise_coprime = std::gcd(h[0], h[1]) == 1 && std::gcd(h[0], h[2]) == 1 && std::gcd(h[1], h[2]) == 1;
      EXPECT_FALSE(pairwise_coprime);
      const BigRational inv = gamma0_inverse_raw(h);
      EXPECT_TRUE(exact::is_integer(inv));
      EXPECT_LT(inv, h[0] + h[1] + h[2]);
      if (h == circle::WeightVector{8, 10, 40}) saw_scaled = true;
    }
  EXPECT_TRUE(saw_scaled);
}

TEST(Scan, InverseBelowWeightSum) {
  for (long a1 = 1; a1 <= 15; ++a1)
    for (long a2 = a1; a2 <= 15; ++a2)
      for (long a3 = a2; a3 <= 15; ++a3) EXPECT_LT(gamma0_inverse_raw({a1, a2, a3}), a1 + a2 + a3);
}

TEST(Scan, SerialAndParallelAgree) {
  for (std::size_t n : {3u, 4u}) {
    const auto a = probability_scan_serial(n, n == 3 ? 80 : 14);
    const auto b = probability_scan_parallel(n, n == 3 ? 80 : 14);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].hit_count, b[i].hit_count);
      EXPECT_EQ(a[i].new_hits, b[i].new_hits);
    }
  }
}

TEST(Scan, RawClosedFormMatchesTripleTest) {
  for (long a1 = 1; a1 <= 12; ++a1)
    for (long a2 = 1; a2 <= 12; ++a2)
      for (long a3 = 1; a3 <= 12; ++a3)
        EXPECT_EQ(exact::is_integer(gamma0_inverse_raw({a1, a2, a3})), triple_hit(a1, a2, a3));
}

TEST(Scan, RejectsBadArguments) {
  EXPECT_THROW(probability_scan(3, 2), InputError);
  EXPECT_THROW(probability_scan(1, 5), UnsupportedDimension);
}

TEST(Implication, ReportedOverSmallLevels) {
  const auto rep = gamma2_implication_scan(120);
  EXPECT_GT(rep.checked, 0u);
  RecordProperty("checked", static_cast<int>(rep.checked));
  RecordProperty("failures", static_cast<int>(rep.failures.size()));
}

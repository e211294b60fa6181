#include "seifert_lspace/twist.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace {

using namespace seifert_lspace;

Rational q(long n, long d) { return make_rational(n, d); }

SeiferterData trefoil() {
  SeiferterData d;
  d.b = 3;
  d.r1 = q(2, 3);
  d.r2 = q(1, 2);
  d.alpha = 1;
  d.beta = 0;
  d.alpha3 = 0;
  d.beta3 = 1;
  d.m = 6;
  d.l = 5;
  d.realizable = true;
  return d;
}

SeiferterData tunnel_a() {
  SeiferterData d;
  d.b = -1;
  d.r1 = q(5, 7);
  d.r2 = q(1, 2);
  d.alpha = 14;
  d.beta = 11;
  d.alpha3 = 5;
  d.beta3 = 4;
  d.m = 71;
  d.l = 14;
  d.realizable = true;
  return d;
}

SeiferterData case_one(long b, Rational r1, Rational r2, long beta3) {
  SeiferterData d;
  d.b = b;
  d.r1 = r1;
  d.r2 = r2;
  d.alpha = 0;
  d.beta = -1;
  d.alpha3 = 1;
  d.beta3 = beta3;
  return d;
}

TEST(FiberSlope, Substitution) {
  SeiferterData t = tunnel_a();
  EXPECT_EQ(fiber_slope(t, 0), ExtRational(q(4, 5)));
  EXPECT_EQ(fiber_slope(t, 2), ExtRational(q(26, 33)));
  EXPECT_EQ(fiber_slope(trefoil(), 0), ExtRational::infinity());
  EXPECT_EQ(fiber_slope(trefoil(), 4), ExtRational(q(1, 4)));
  SeiferterData c1 = case_one(0, q(1, 3), q(1, 2), 5);
  for (long n = -5; n <= 5; ++n) EXPECT_EQ(fiber_slope(c1, n), ExtRational(Rational(5 - n)));
}

TEST(FiberSlope, DegenerateEncodingGivesOneOverN) {
  SeiferterData d = trefoil();
  d.beta = 2;
  d.b = 1;
  for (long n = -10; n <= 10; ++n) {
    if (n == 0) continue;
    EXPECT_EQ(surgered_space(d, n), normalize(d.b + d.beta, {d.r1, d.r2, q(1, n)}));
  }
}

TEST(SurgeredSpace, Examples) {
  EXPECT_EQ(surgered_space(trefoil(), 1), normalize(4, {q(1, 2), q(2, 3)}));
  SeifertForm pole_form = surgered_space(trefoil(), 0);
  EXPECT_EQ(pole_form.degenerate_count, 1);
  EXPECT_EQ(classify(pole_form).tag, Tag::ConnectedSumOfLensSpaces);
  SeiferterData t = tunnel_a();
  EXPECT_EQ(surgered_space(t, 0), normalize(-1, {q(5, 7), q(1, 2), q(4, 5)}));
}

TEST(SurgerySlope, Values) {
  EXPECT_EQ(surgery_slope(trefoil(), 1), 31);
  SeiferterData cable = trefoil();
  cable.m = 7;
  EXPECT_EQ(surgery_slope(cable, 1), 32);
  for (long n = -20; n <= 20; ++n) EXPECT_EQ(surgery_slope(tunnel_a(), n), 196 * n + 71);
}

TEST(LimitSpace, Examples) {
  EXPECT_EQ(limit_space(trefoil()), normalize(3, {q(2, 3), q(1, 2)}));
  EXPECT_EQ(limit_space(case_one(0, q(1, 3), q(1, 2), 0)).degenerate_count, 1);
  EXPECT_EQ(classify(limit_space(case_one(0, q(1, 3), q(1, 2), 0))).tag, Tag::ConnectedSumOfLensSpaces);
  EXPECT_EQ(limit_space(tunnel_a()), normalize(-1, {q(5, 7), q(1, 2), q(11, 14)}));
}

TEST(H1Consistency, KnownFamilies) {
  EXPECT_TRUE(h1_consistency(trefoil(), 1));
  EXPECT_EQ(h1_order(surgered_space(tunnel_a(), 2)), H1Order(463));
  for (long n = -100; n <= 100; ++n) {
    EXPECT_TRUE(h1_consistency(trefoil(), n)) << n;
    EXPECT_TRUE(h1_consistency(tunnel_a(), n)) << n;
  }
  SeiferterData bad = trefoil();
  bad.m = 7;
  EXPECT_FALSE(h1_consistency(bad, 1));
}

TEST(Validate, RejectsBadMatrices) {
  SeiferterData d = tunnel_a();
  d.beta3 = 5;
  try {
    validate(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSeiferter);
  }
  d = tunnel_a();
  d.alpha = -14;
  d.beta = -11;
  d.alpha3 = -5;
  d.beta3 = -4;
  EXPECT_THROW(validate(d), Error);  // alpha3 must be positive
  d = tunnel_a();
  d.r1 = q(6, 5);
  EXPECT_THROW(validate(d), Error);
  EXPECT_NO_THROW(validate(trefoil()));
  EXPECT_THROW(classify_family(d, {-3, 3}), Error);
}

TEST(Twist, TwistedPairStaysUnimodular) {
  for (const SeiferterData& d : {trefoil(), tunnel_a(), case_one(1, q(1, 5), q(2, 3), 3)}) {
    for (long n = -50; n <= 50; ++n) {
      const Integer a_n = n * d.alpha + d.alpha3, b_n = n * d.beta + d.beta3;
      EXPECT_EQ(a_n * d.beta - b_n * d.alpha, -1);
    }
  }
}

TEST(Twist, MonotoneConvergenceOnEachSide) {
  SeiferterData d = tunnel_a();
  const Rational r_c = limit_slope(d).value();
  for (long n = 0; n < 200; ++n) {
    const Rational f0 = fiber_slope(d, n).value(), f1 = fiber_slope(d, n + 1).value();
    EXPECT_GT(f0, f1);
    EXPECT_GT(f1, r_c);
    const Rational g0 = fiber_slope(d, -n - 1).value(), g1 = fiber_slope(d, -n - 2).value();
    EXPECT_LT(g0, g1);
    EXPECT_LT(g1, r_c);
  }
}

TEST(ClassifyFamily, Trefoil) {
  FamilyReport rep = classify_family(trefoil());
  ASSERT_EQ(rep.records.size(), 101u);
  for (const auto& r : rep.records) EXPECT_TRUE(r.verdict.is_lspace) << r.n;
  EXPECT_EQ(rep.exceptional_n, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(rep.pole, Integer(0));
  EXPECT_TRUE(rep.tail_pos.lspace);
  EXPECT_TRUE(rep.tail_neg.lspace);
  ASSERT_TRUE(rep.non_lspace_n());
  EXPECT_TRUE(rep.non_lspace_n()->empty());
  EXPECT_EQ(rep.regime, Regime::IntegralLimit);
}

TEST(ClassifyFamily, CaseOneSingleException) {
  // b + beta3 + r1 + r2 = 0 + 2 + 1/3 + 2/3 = 3
  FamilyReport rep = classify_family(case_one(0, q(1, 3), q(2, 3), 2), {-10, 10});
  EXPECT_EQ(rep.regime, Regime::DegenerateLimit);
  for (const auto& r : rep.records) {
    EXPECT_EQ(r.verdict.is_lspace, r.n != 3) << r.n;
    EXPECT_NE(r.classification.tag, Tag::SmallSFS);
  }
  EXPECT_EQ(rep.non_lspace_n(), (std::vector<Integer>{3}));
  FamilyReport none = classify_family(case_one(0, q(1, 3), q(1, 2), 2), {-10, 10});
  EXPECT_EQ(none.non_lspace_n(), std::vector<Integer>{});
}

// alpha * beta3 - beta * alpha3 = 1 with alpha3 > 0 (or the degenerate pair).
std::optional<SeiferterData> random_data(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ab(-12, 12), bb(-4, 2);
  const long alpha = ab(rng), beta = ab(rng);
  if (std::gcd(alpha, beta) != 1) return std::nullopt;
  // extended Euclid on (alpha, -beta)
  long old_r = alpha, r = -beta, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long k = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - k * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - k * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - k * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  long beta3 = old_s, alpha3 = old_t;  // alpha*beta3 + (-beta)*alpha3 = 1
  if (alpha == 0) {
    if (alpha3 < 0) return std::nullopt;
  } else {
    const long step = std::abs(alpha);
    while (alpha3 <= 0) {
      alpha3 += step;
      beta3 += (alpha > 0 ? beta : -beta);
    }
    while (alpha3 > step) {
      alpha3 -= step;
      beta3 -= (alpha > 0 ? beta : -beta);
    }
  }
  SeiferterData d;
  d.alpha = alpha;
  d.beta = beta;
  d.alpha3 = alpha3;
  d.beta3 = beta3;
  if (d.det() != 1) return std::nullopt;
  auto u1 = oracle::random_unit(rng, 9), u2 = oracle::random_unit(rng, 9);
  d.r1 = q(u1.n, u1.d);
  d.r2 = q(u2.n, u2.d);
  // bias b so the limit region often lands on b' in {-1, -2}
  const Integer p = alpha ? Rational(Integer(beta), Integer(alpha)).floor() : Integer(0);
  d.b = Integer(bb(rng)) - p;
  return d;
}

TEST(ClassifyFamily, TailsMatchPointwiseOnRandomData) {
  std::mt19937_64 rng(131);
  std::uniform_int_distribution<long> far(-10000, 10000);
  int families = 0, non_l_tails = 0;
  while (families < 250) {
    auto d = random_data(rng);
    if (!d) continue;
    ++families;
    FamilyReport rep = classify_family(*d, {-30, 30});
    for (const auto& rec : rep.records) {
      auto tv = tail_verdict(rep, rec.n);
      if (tv) ASSERT_EQ(*tv, rec.verdict.is_lspace) << "n=" << rec.n;
    }
    for (long i = 0; i < 10; ++i) {
      ASSERT_EQ(decide(surgered_space(*d, rep.tail_pos.start + i)).is_lspace, rep.tail_pos.lspace);
      ASSERT_EQ(decide(surgered_space(*d, rep.tail_neg.start - i)).is_lspace, rep.tail_neg.lspace);
    }
    for (int i = 0; i < 20; ++i) {
      const Integer n = far(rng);
      auto tv = tail_verdict(rep, n);
      const bool actual = decide(surgered_space(*d, n)).is_lspace;
      if (tv) {
        ASSERT_EQ(*tv, actual) << "n=" << n;
      } else if (rep.middle_decided) {
        const auto& mid = rep.middle_non_lspace;
        ASSERT_EQ(std::find(mid.begin(), mid.end(), n) == mid.end(), actual);
      }
    }
    if (rep.middle_decided)
      for (const auto& rec : rep.records) {
        if (tail_verdict(rep, rec.n)) continue;
        const auto& mid = rep.middle_non_lspace;
        ASSERT_EQ(std::find(mid.begin(), mid.end(), Integer(rec.n)) == mid.end(), rec.verdict.is_lspace) << rec.n;
      }
    if (rep.regime == Regime::FractionalLimit) {
      EXPECT_EQ(rep.tail_pos.lspace || rep.tail_neg.lspace, rep.limit_verdict.is_lspace);
    }
    non_l_tails += !rep.tail_pos.lspace + !rep.tail_neg.lspace;
    for (long n = -30; n <= 30; ++n) EXPECT_EQ(fiber_slope(*d, n) == ExtRational::infinity(), rep.pole == Integer(n));
  }
  EXPECT_GT(non_l_tails, 10);
}

}  // namespace

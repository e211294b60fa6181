#include "seifert_lspace/lspace.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace {

using namespace seifert_lspace;

Rational q(long n, long d) { return make_rational(n, d); }
ExtRational e(long n, long d) { return ExtRational::from_pair(n, d); }

SeifertForm sfs(long b, Rational r1, Rational r2, Rational r3) { return normalize(b, {r1, r2, r3}); }

Rational to_q(oracle::Frac f) { return q(f.n, f.d); }

TEST(Decide, DualWitnessOnEulerZeroSpace) {
  LSpaceVerdict v = decide(sfs(-2, q(2, 3), q(2, 3), q(2, 3)));
  EXPECT_FALSE(v.is_lspace);
  EXPECT_EQ(v.reason, Reason::InfiniteH1);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(v.witness_on_dual);
  EXPECT_EQ(v.witness->k, 2);
  EXPECT_EQ(v.witness->a, 1);
}

TEST(Decide, Examples) {
  LSpaceVerdict big = decide(sfs(-1, q(1, 2), q(2, 3), q(4, 5)));
  EXPECT_TRUE(big.is_lspace);
  EXPECT_EQ(big.reason, Reason::NoWitnessExhaustive);

  LSpaceVerdict w = decide(sfs(-1, q(1, 7), q(1, 3), q(1, 2)));
  EXPECT_FALSE(w.is_lspace);
  EXPECT_EQ(w.reason, Reason::Witness);
  EXPECT_EQ(*w.witness, (FoliationWitness{5, 2}));
  EXPECT_EQ(*w.search_bound, 6);

  LSpaceVerdict bl = decide(sfs(1, q(1, 2), q(1, 3), q(1, 7)));
  EXPECT_TRUE(bl.is_lspace);
  EXPECT_EQ(bl.reason, Reason::BLarge);
  EXPECT_TRUE(decide(sfs(-3, q(1, 2), q(1, 3), q(1, 7))).is_lspace);

  LSpaceVerdict dual = decide(mirror(sfs(-1, q(1, 7), q(1, 3), q(1, 2))));
  EXPECT_EQ(dual.reason, Reason::DualWitness);
  EXPECT_EQ(*dual.witness, (FoliationWitness{5, 2}));
}

TEST(Decide, LowFiberCounts) {
  EXPECT_EQ(decide(normalize(-1, {e(1, 2), e(1, 2)})).reason, Reason::InfiniteH1);
  EXPECT_FALSE(decide(normalize(-1, {e(1, 2), e(1, 2)})).is_lspace);
  EXPECT_EQ(decide(normalize(0, {e(2, 3)})).reason, Reason::LensNotS2xS1);
  EXPECT_TRUE(decide(normalize(1, {})).is_lspace);
  EXPECT_FALSE(decide(normalize(0, {})).is_lspace);  // S^2 x S^1
  LSpaceVerdict cs = decide(normalize(0, {e(1, 2), e(2, 3), ExtRational::infinity()}));
  EXPECT_TRUE(cs.is_lspace);
  EXPECT_EQ(cs.reason, Reason::ConnectedSumOfLSpaces);
  EXPECT_FALSE(decide(normalize(0, {ExtRational::infinity(), ExtRational::infinity()})).is_lspace);
  EXPECT_EQ(decide(SeifertForm::rp2()).reason, Reason::RP2Base);
  try {
    decide(normalize(0, {e(1, 2), e(1, 3), e(1, 5), e(1, 7)}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::UnsupportedFiberCount);
  }
}

TEST(WitnessSearch, Examples) {
  EXPECT_EQ(*witness_search(sorted_triple(q(1, 3), q(1, 3), q(1, 3))), (FoliationWitness{2, 1}));
  EXPECT_EQ(*witness_search(sorted_triple(q(1, 7), q(1, 3), q(1, 2))), (FoliationWitness{5, 2}));
  EXPECT_FALSE(witness_search(sorted_triple(q(1, 3), q(1, 2), q(3, 5))));
  EXPECT_FALSE(witness_search(sorted_triple(q(1, 10), q(1, 2), q(1, 2))));
  EXPECT_THROW(witness_search(sorted_triple(q(0, 1), q(1, 2), q(1, 2))), Error);
}

TEST(WitnessSearch, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(101);
  int found = 0;
  for (int i = 0; i < 3000; ++i) {
    std::array<oracle::Frac, 3> r{oracle::random_unit(rng, 60), oracle::random_unit(rng, 60),
                                  oracle::random_unit(rng, 60)};
    auto want = oracle::naive_witness(r, 200);
    SortedTriple t(to_q(r[0]), to_q(r[1]), to_q(r[2]));
    auto got = witness_search(t);
    ASSERT_EQ(got.has_value(), want.has_value()) << t.str();
    if (got) {
      ++found;
      EXPECT_EQ(got->k, want->k) << t.str();
      EXPECT_EQ(got->a, want->a) << t.str();
      EXPECT_LT(Rational(got->k) * t.s1(), Rational(1));
      EXPECT_LE(got->k, witness_search_bound(t.s1()));
    }
  }
  EXPECT_GT(found, 100);
}

TEST(Decide, AgreesWithNaiveDecision) {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<long> bd(-4, 1);
  for (int i = 0; i < 3000; ++i) {
    std::array<oracle::Frac, 3> r{oracle::random_unit(rng, 30), oracle::random_unit(rng, 30),
                                  oracle::random_unit(rng, 30)};
    const long b = bd(rng);
    SeifertForm f = sfs(b, to_q(r[0]), to_q(r[1]), to_q(r[2]));
    EXPECT_EQ(decide(f).is_lspace, oracle::naive_is_lspace(b, r)) << to_string(f);
  }
}

TEST(Decide, Duality) {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 5000; ++i) {
    Rational a = to_q(oracle::random_unit(rng, 60)), b = to_q(oracle::random_unit(rng, 60)),
             c = to_q(oracle::random_unit(rng, 60));
    const Rational one(1);
    EXPECT_EQ(decide(sfs(-1, a, b, c)).is_lspace, decide(sfs(-2, one - a, one - b, one - c)).is_lspace);
  }
}

TEST(Decide, VerdictInvariants) {
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<long> bd(-3, 0);
  for (int i = 0; i < 3000; ++i) {
    LSpaceVerdict v = decide(sfs(bd(rng), to_q(oracle::random_unit(rng, 12)), to_q(oracle::random_unit(rng, 12)),
                                 to_q(oracle::random_unit(rng, 12))));
    if (v.reason == Reason::Witness || v.reason == Reason::DualWitness || v.reason == Reason::InfiniteH1)
      EXPECT_FALSE(v.is_lspace);
    else
      EXPECT_TRUE(v.is_lspace);
    if (v.reason == Reason::Witness || v.reason == Reason::DualWitness) EXPECT_TRUE(v.witness);
  }
}

TEST(SufficientConditions, Examples) {
  EXPECT_EQ(sufficient_conditions(sfs(-1, q(1, 2), q(2, 3), q(1, 5))), std::optional<bool>(true));
  EXPECT_EQ(sufficient_conditions(sfs(-2, q(1, 3), q(1, 2), q(9, 10))), std::optional<bool>(true));
  EXPECT_EQ(sufficient_conditions(sfs(-1, q(1, 3), q(1, 3), q(1, 3))), std::nullopt);
  EXPECT_EQ(sufficient_conditions(sfs(4, q(1, 3), q(1, 3), q(1, 3))), std::optional<bool>(true));
}

TEST(SufficientConditions, NeverContradictSearch) {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<long> bd(-3, 0);
  int shortcuts = 0;
  for (int i = 0; i < 5000; ++i) {
    SeifertForm f = sfs(bd(rng), to_q(oracle::random_unit(rng, 40)), to_q(oracle::random_unit(rng, 40)),
                        to_q(oracle::random_unit(rng, 40)));
    auto s = sufficient_conditions(f);
    ASSERT_NE(s, std::optional<bool>(false));
    if (s) {
      ++shortcuts;
      EXPECT_TRUE(decide(f).is_lspace) << to_string(f);
    }
  }
  EXPECT_GT(shortcuts, 0);
}

TEST(Threshold, Examples) {
  ThirdSlotThreshold d = third_slot_threshold(-2, q(2, 3), q(2, 3));
  EXPECT_EQ(d.kind, SetKind::DownClosed);
  EXPECT_EQ(d.t, q(1, 2));
  EXPECT_TRUE(d.attained);
  EXPECT_FALSE(d.contains(q(2, 3)));

  ThirdSlotThreshold all = third_slot_threshold(-1, q(1, 2), q(2, 3));
  EXPECT_EQ(all.kind, SetKind::UpClosed);
  EXPECT_EQ(all.t, Rational(0));
  EXPECT_FALSE(all.attained);
  EXPECT_TRUE(all.contains(q(1, 1000)));

  EXPECT_EQ(third_slot_threshold(0, q(1, 3), q(1, 5)).kind, SetKind::All);
  EXPECT_EQ(third_slot_threshold(-7, q(1, 3), q(1, 5)).kind, SetKind::All);
}

// Every rational of denominator <= maxden in (0, 1).
std::vector<Rational> farey(long maxden) {
  std::vector<Rational> out;
  for (long d = 2; d <= maxden; ++d)
    for (long n = 1; n < d; ++n)
      if (std::gcd(n, d) == 1) out.push_back(q(n, d));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Threshold, MatchesPointwiseSweep) {
  const auto grid = farey(40);
  std::mt19937_64 rng(127);
  for (int i = 0; i < 150; ++i) {
    const long b = (i % 2) ? -1 : -2;
    Rational r1 = to_q(oracle::random_unit(rng, 20)), r2 = to_q(oracle::random_unit(rng, 20));
    ThirdSlotThreshold th = third_slot_threshold(b, r1, r2);
    for (const auto& r : grid)
      ASSERT_EQ(th.contains(r), decide(sfs(b, r1, r2, r)).is_lspace)
          << "b=" << b << " r1=" << r1 << " r2=" << r2 << " r=" << r << " t=" << th.t;
    if (th.t > Rational(0) && th.t < Rational(1))
      EXPECT_EQ(th.contains(th.t), decide(sfs(b, r1, r2, th.t)).is_lspace);
  }
}

}  // namespace

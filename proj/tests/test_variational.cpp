#include <gtest/gtest.h>

#include <cmath>

#include "ratebound/variational.hpp"

using namespace ratebound;

TEST(SecantTransform, HammingOneAnchor) {
  const QContext c(5);
  const BoundCurve ham(BoundName::hamming, c);
  const Extremum small = secant_transform(ham, 0.1, Anchor::one);
  EXPECT_NEAR(small.arg, 0.1, 1e-9);
  EXPECT_NEAR(small.value, hybrid_bound(BoundName::hs, c, 0.1), 1e-12);
  const Extremum big = secant_transform(ham, 0.9, Anchor::one);
  EXPECT_NEAR(big.arg, 0.4, 1e-4);
  EXPECT_NEAR(big.value, hybrid_bound(BoundName::hs, c, 0.9), 1e-6);
}

TEST(SecantTransform, VanishesAtTheta) {
  const QContext c(3);
  const Extremum e = secant_transform(BoundCurve(BoundName::elias, c), c.theta(), Anchor::theta);
  EXPECT_EQ(e.value, 0.0);
}

TEST(ChordTransform, ArgmaxIsMaxOfDeltaAndJunction) {
  const QContext c(4);
  const BoundCurve m(BoundName::mrrw1, c);
  EXPECT_NEAR(chord_transform_origin(m, 0.2).arg, 0.25, 1e-4);
  EXPECT_NEAR(chord_transform_origin(m, 0.3).arg, 0.3, 1e-4);
  EXPECT_NEAR(chord_transform_origin(m, 0.5).arg, 0.5, 1e-4);
  EXPECT_NEAR(chord_transform_origin(m, 0.2).value, hybrid_bound(BoundName::aaltonen, c, 0.2), 1e-9);
}

TEST(ChordTransform, DegenerateIntervalAtTheta) {
  const QContext c(3);
  const BoundCurve s(BoundName::singleton, c);
  const Extremum e = chord_transform_origin(s, c.theta());
  EXPECT_NEAR(e.arg, c.theta(), 1e-15);
  EXPECT_NEAR(e.value, s(c.theta()), 1e-15);
  EXPECT_THROW(chord_transform_origin(s, 0.0), DomainError);
}

TEST(MinCharacterization, ClosedFormsMatchNumericTransforms) {
  EXPECT_TRUE(verify_min_characterization(MinCharacterization::ep, QContext(16), 512).passed());
  EXPECT_TRUE(verify_min_characterization(MinCharacterization::hs, QContext(2), 512).passed());
  EXPECT_TRUE(verify_min_characterization(MinCharacterization::aaltonen, QContext(3), 512).passed());
}

TEST(MinCharacterization, TightToleranceFails) {
  Tolerances t;
  t.transform_agreement = -1.0;
  EXPECT_FALSE(verify_min_characterization(MinCharacterization::hs, QContext(3), 64, t).passed());
}

TEST(OmegaMaxScan, AgreesWithClosedForm) {
  EXPECT_NEAR(omega_max_scan(QContext(3), 0.5, 100000), 2.0 / 3.0, 1e-5);
  EXPECT_NEAR(omega_max_scan(QContext(16), 0.0, 100000), 0.0, 1e-5);
  const QContext c8(8);
  EXPECT_NEAR(omega_max_scan(c8, c8.theta(), 100000), 1.0, 1e-5);
}

TEST(LocateRoot, FrozenRoots) {
  EXPECT_EQ(locate_root(RootKind::b, QContext(2)).root, 1.0);
  struct Row {
    int q;
    double b, z_e, delta_e, delta_mrrw;
  };
  const Row rows[] = {
      {3, 0.91711844448661203, 0.41519958182037316, 0.5718131245250272, 0.064243935070245657},
      {4, 0.80537020718711841, 0.36965566321128373, 0.55711758063033543, 0.15016332233098562},
      {8, 0.51601305652689941, 0.28998116752765929, 0.48386053217451355, 0.37662660286668477},
      {16, 0.29476290329852915, 0.23669297984875183, 0.41362748854050991, 0.56844430658204744},
      {64, 0.08190093668372454, 0.17160472126032353, 0.31329383072754653, 0.81057875487459561},
  };
  for (const Row& r : rows) {
    const QContext c(r.q);
    EXPECT_NEAR(locate_root(RootKind::b, c).root, r.b, 1e-11) << r.q;
    EXPECT_NEAR(locate_root(RootKind::z_E, c).root, r.z_e, 1e-11) << r.q;
    EXPECT_NEAR(locate_root(RootKind::delta_E, c).root, r.delta_e, 1e-10) << r.q;
    EXPECT_NEAR(locate_root(RootKind::delta_MRRW, c).root, r.delta_mrrw, 1e-10) << r.q;
  }
}

TEST(LocateRoot, BracketsForEveryAlphabet) {
  for (int q = 3; q <= 64; ++q) {
    const QContext c(q);
    for (RootKind k : {RootKind::delta_E, RootKind::delta_MRRW, RootKind::z_E}) {
      const double r = locate_root(k, c).root;
      const Interval iv = proven_root_interval(k, c);
      EXPECT_GT(r, iv.lo) << to_string(k) << " q=" << q;
      EXPECT_LT(r, iv.hi) << to_string(k) << " q=" << q;
    }
  }
  EXPECT_THROW(locate_root(RootKind::delta_E, QContext(2)), DomainError);
}

TEST(Smoothness, JunctionsAreC1) {
  EXPECT_TRUE(smoothness_check(BoundCurve(BoundName::hs, QContext(7)), 2.0 / 7.0).passed());
  EXPECT_TRUE(smoothness_check(BoundCurve(BoundName::ep, QContext(3)), 0.5).passed());
  EXPECT_TRUE(smoothness_check(BoundCurve(BoundName::aaltonen, QContext(5)), 0.36).passed());
}

TEST(Smoothness, DetectsAKink) {
  // hs at a point that is not its junction compares two unrelated formulas.
  const ScanReport r = smoothness_check(BoundCurve(BoundName::hs, QContext(7)), 0.5);
  EXPECT_FALSE(r.passed());
}

TEST(Convexity, Verdicts) {
  const QContext c3(3);
  const double de = locate_root(RootKind::delta_E, c3).root;
  const ScanReport el =
      convexity_scan(BoundCurve(BoundName::elias, c3), {0.0, c3.theta()}, {Shape::convex_then_concave, de});
  EXPECT_TRUE(el.passed());
  EXPECT_EQ(el.sign_changes.size(), 1u);
  EXPECT_TRUE(convexity_scan(BoundCurve(BoundName::mrrw1, QContext(2)), {0.0, 0.5}, {Shape::convex}).passed());
  EXPECT_TRUE(convexity_scan(BoundCurve(BoundName::beta, QContext(4)), {0.0, 1.0}, {Shape::concave}).passed());
}

TEST(Convexity, WrongExpectationFails) {
  EXPECT_FALSE(convexity_scan(BoundCurve(BoundName::beta, QContext(4)), {0.0, 1.0}, {Shape::convex}).passed());
  const QContext c8(8);
  EXPECT_FALSE(convexity_scan(BoundCurve(BoundName::mrrw1, c8), {0.0, c8.theta()}, {Shape::convex}).passed());
}

TEST(SignScan, CrossingsWithinOneGridStep) {
  const ScanReport g = sign_scan(SignFunction::g_prime, QContext(4), 4096);
  ASSERT_TRUE(g.passed());
  EXPECT_NEAR(g.metrics.front().second, 0.5, 2.5e-4);
  const ScanReport big = sign_scan(SignFunction::G, QContext(8), 4096);
  ASSERT_TRUE(big.passed());
  EXPECT_NEAR(big.metrics.front().second, 0.125, 2.5e-4);
  const ScanReport p = sign_scan(SignFunction::phi, QContext(3), 4096);
  ASSERT_TRUE(p.passed());
  ASSERT_EQ(p.sign_changes.size(), 1u);
  EXPECT_GT(p.sign_changes.front().lo, 1.0 / 3.0);
  EXPECT_LT(p.sign_changes.front().hi, 0.5);
}

TEST(SignScan, BinaryGPrimeHasNoInteriorCrossing) {
  const ScanReport g = sign_scan(SignFunction::g_prime, QContext(2), 1024);
  EXPECT_TRUE(g.passed());
  EXPECT_TRUE(g.sign_changes.empty());
}

TEST(SignScan, AllLawsHoldForSeveralAlphabets) {
  for (int q : {3, 5, 8, 16, 64})
    for (SignFunction f : {SignFunction::g_prime, SignFunction::G, SignFunction::G2, SignFunction::phi,
                           SignFunction::h_prime, SignFunction::hA_prime})
      EXPECT_TRUE(sign_scan(f, QContext(q), 2048).passed()) << to_string(f) << " q=" << q;
}

TEST(MonotoneRatio, EliasOverThetaGap) {
  for (int q : {3, 8, 16}) EXPECT_TRUE(monotone_ratio_check(QContext(q), 2048).passed()) << q;
}

TEST(Idempotence, ThetaAnchoredTransformFixesEp) {
  EXPECT_TRUE(transform_idempotence(QContext(8), 256).passed());
}

TEST(DerivativeCrosscheck, ClosedFormsMatch) {
  for (int q : {2, 3, 8, 64}) EXPECT_TRUE(derivative_crosscheck(QContext(q), 256).passed()) << q;
}

#include <gtest/gtest.h>

#include <cmath>

#include "longmap/errors.hpp"
#include "longmap/quaternion.hpp"
#include "support.hpp"

using namespace longmap;

namespace {

const UnitQuaternion kI = UnitQuaternion::pure(SpherePoint::i());
const UnitQuaternion kJ = UnitQuaternion::pure(SpherePoint::j());
const UnitQuaternion kK = UnitQuaternion::pure(SpherePoint::k());

}  // namespace

TEST(Quaternion, HamiltonTable) {
  EXPECT_LT(chordal_distance(kI * kJ, kK), 1e-15);
  EXPECT_LT(chordal_distance(kJ * kK, kI), 1e-15);
  EXPECT_LT(chordal_distance(kK * kI, kJ), 1e-15);
  EXPECT_LT(chordal_distance(kJ * kI, -kK), 1e-15);
  EXPECT_LT(chordal_distance(kI * kI, UnitQuaternion::minus_one()), 1e-15);
}

TEST(Quaternion, ProductMatchesOracle) {
  oracle::Rng rng(3);
  for (int s = 0; s < 200; ++s) {
    const auto p = rng.quat();
    const auto q = rng.quat();
    EXPECT_LT(oracle::dist(oracle::of(p * q), oracle::mul(oracle::of(p), oracle::of(q))), 1e-14);
    EXPECT_LT(chordal_distance(p * UnitQuaternion::identity(), p), 1e-15);
    EXPECT_NEAR((p * q).norm(), 1.0, 1e-12);
  }
}

TEST(Quaternion, SameAxisExponentsAdd) {
  const auto u = SpherePoint::from_vector(1, 2, -2);
  EXPECT_LT(chordal_distance(qexp(0.7, u) * qexp(1.9, u), qexp(2.6, u)), 1e-14);
}

TEST(Quaternion, Exp) {
  oracle::Rng rng(5);
  const auto u = rng.point();
  EXPECT_LT(chordal_distance(qexp(0.0, u), UnitQuaternion::identity()), 1e-15);
  EXPECT_LT(chordal_distance(qexp(M_PI, u), UnitQuaternion::minus_one()), 1e-15);
  EXPECT_LT(chordal_distance(qexp(M_PI / 2, SpherePoint::i()), kI), 1e-15);
}

TEST(Quaternion, Log) {
  const AxisAngle k = qlog(kK);
  EXPECT_NEAR(k.theta, M_PI / 2, 1e-15);
  EXPECT_TRUE(k.axis_defined);
  EXPECT_LT(geodesic_distance(k.axis, SpherePoint::k()), 1e-15);

  const AxisAngle m = qlog(UnitQuaternion::minus_one());
  EXPECT_NEAR(m.theta, M_PI, 1e-15);
  EXPECT_FALSE(m.axis_defined);
  EXPECT_FALSE(qlog(UnitQuaternion::identity()).axis_defined);

  const AxisAngle y = qlog(qexp(1.2, SpherePoint::j()));
  EXPECT_NEAR(y.theta, 1.2, 1e-14);
  EXPECT_LT(geodesic_distance(y.axis, SpherePoint::j()), 1e-14);
}

TEST(Quaternion, LogExpRoundTrip) {
  oracle::Rng rng(9);
  for (int s = 0; s < 500; ++s) {
    const double t = rng.uniform(1e-3, M_PI - 1e-3);
    const auto u = rng.point();
    const AxisAngle back = qlog(qexp(t, u));
    ASSERT_TRUE(back.axis_defined);
    EXPECT_NEAR(back.theta, t, 1e-10);
    EXPECT_LT(geodesic_distance(back.axis, u), 1e-10);
  }
}

TEST(Quaternion, Powers) {
  EXPECT_LT(chordal_distance(qpow(kI, -2), UnitQuaternion::minus_one()), 1e-15);
  oracle::Rng rng(11);
  const auto q = rng.quat();
  EXPECT_LT(chordal_distance(qpow(q, 0), UnitQuaternion::identity()), 1e-15);
  EXPECT_LT(chordal_distance(qpow(q, -1), q.inverse()), 1e-14);
  const auto u = rng.point();
  for (long n : {-7L, -3L, 2L, 5L, 13L}) {
    EXPECT_LT(chordal_distance(qpow(qexp(0.37, u), n), qexp(0.37 * static_cast<double>(n), u)), 1e-13);
    oracle::Q acc{1, 0, 0, 0};
    const oracle::Q base = n > 0 ? oracle::of(q) : oracle::inv(oracle::of(q));
    for (long r = 0; r < std::abs(n); ++r) acc = oracle::mul(acc, base);
    EXPECT_LT(oracle::dist(oracle::of(qpow(q, n)), acc), 1e-13);
  }
  EXPECT_LT(chordal_distance(qpow(UnitQuaternion::minus_one(), 3), UnitQuaternion::minus_one()), 1e-15);
}

TEST(Quaternion, RotateExamples) {
  const auto v = SpherePoint::from_vector(0.3, -0.4, 0.5);
  EXPECT_LT(geodesic_distance(rotate(v, 1.234, v), v), 1e-15);
  EXPECT_LT(geodesic_distance(rotate(SpherePoint::i(), M_PI / 2, SpherePoint::k()), SpherePoint::j()), 1e-15);
  for (double b : {0.1, 0.8, 2.0}) {
    const auto expect = SpherePoint::from_vector(std::cos(2 * b), -std::sin(2 * b), 0.0);
    EXPECT_LT(geodesic_distance(rotate(SpherePoint::i(), -2 * b, SpherePoint::k()), expect), 1e-14);
  }
}

TEST(Quaternion, RotateMatchesMatrixAndPreservesGeometry) {
  oracle::Rng rng(13);
  for (int s = 0; s < 500; ++s) {
    const auto u = rng.point();
    const auto w = rng.point();
    const auto v = rng.point();
    const double a = rng.uniform(-7.0, 7.0);
    const auto ru = rotate(u, a, v);
    const auto rw = rotate(w, a, v);
    EXPECT_LT(oracle::dist(oracle::of(ru), oracle::rot(oracle::of(u), a, oracle::of(v))), 1e-14);
    EXPECT_NEAR(ru.norm(), 1.0, 1e-12);
    EXPECT_NEAR(ru.dot(rw), u.dot(w), 1e-12);
  }
}

TEST(Quaternion, ConjExamples) {
  oracle::Rng rng(17);
  const auto p = rng.quat();
  EXPECT_LT(chordal_distance(conj(p, UnitQuaternion::identity()), p), 1e-15);
  EXPECT_LT(chordal_distance(conj(kI, kJ), -kI), 1e-15);
}

TEST(Quaternion, ConjugationIdentity) {
  oracle::Rng rng(19);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const double beta = rng.uniform(-M_PI, M_PI);
    const double theta = rng.uniform(0.0, M_PI);
    const auto v = rng.unit3();
    const auto u = rng.unit3();
    // e^{-beta v} e^{theta u} e^{beta v} by the oracle product.
    const oracle::Q lhs = oracle::mul(oracle::mul(oracle::expq(-beta, v), oracle::expq(theta, u)), oracle::expq(beta, v));
    const auto rhs = qexp(theta, rotate(SpherePoint::from_vector(u), -2 * beta, SpherePoint::from_vector(v)));
    worst = std::max(worst, oracle::dist(lhs, oracle::of(rhs)));
    // The library's own conj agrees as well.
    const auto lib = conj(qexp(theta, SpherePoint::from_vector(u)), qexp(beta, SpherePoint::from_vector(v)));
    worst = std::max(worst, chordal_distance(lib, rhs));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Quaternion, DoubleCoverConsistency) {
  oracle::Rng rng(23);
  for (int s = 0; s < 300; ++s) {
    const auto u = rng.point();
    const auto axis = rng.point();
    const double t = rng.uniform(0.01, M_PI - 0.01);
    const auto q = qexp(t, axis);
    const auto image = as_sphere_point(conj(UnitQuaternion::pure(u), q));
    EXPECT_LT(geodesic_distance(image, rotate(u, -2 * t, axis)), 1e-12);
  }
}

TEST(Quaternion, Errors) {
  EXPECT_THROW(SpherePoint::from_vector(0, 0, 0), BadParameter);
  EXPECT_THROW(UnitQuaternion::from_components(0, 0, 0, 0), BadParameter);
  EXPECT_THROW(as_sphere_point(qexp(0.3, SpherePoint::i())), BadParameter);
}

TEST(Quaternion, GeodesicDistanceNearZero) {
  const auto u = SpherePoint::i();
  const auto v = SpherePoint::from_vector(1.0, 1e-9, 0.0);
  EXPECT_NEAR(geodesic_distance(u, v), 1e-9, 1e-20);
}

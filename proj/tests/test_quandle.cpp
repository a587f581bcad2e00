#include <gtest/gtest.h>

#include <cmath>

#include "longmap/errors.hpp"
#include "longmap/quandle.hpp"
#include "support.hpp"

using namespace longmap;

namespace {

QElement sp(const QuandleInstance& q, const SpherePoint& u) { return QElement::make(q, u); }

}  // namespace

TEST(Quandle, FactoriesValidate) {
  EXPECT_THROW(QuandleInstance::sphere(0.0), BadParameter);
  EXPECT_THROW(QuandleInstance::sphere(2 * M_PI), BadParameter);
  EXPECT_THROW(QuandleInstance::conj_class(0.0), BadParameter);
  EXPECT_THROW(QuandleInstance::conj_class(M_PI), BadParameter);
  EXPECT_THROW(QuandleInstance::dihedral(0), BadParameter);
  EXPECT_THROW(QuandleInstance::eis(UnitQuaternion::minus_one()), BadParameter);
  EXPECT_NO_THROW(QuandleInstance::galex(UnitQuaternion::identity()));
}

TEST(Quandle, ElementValidation) {
  const auto c = QuandleInstance::conj_class(0.9);
  EXPECT_NO_THROW(QElement::make(c, qexp(0.9, SpherePoint::j())));
  EXPECT_THROW(QElement::make(c, qexp(1.0, SpherePoint::j())), ValidationError);
  EXPECT_THROW(QElement::make(QuandleInstance::dihedral(5), 5), ValidationError);
  EXPECT_THROW(QElement::make(c, SpherePoint::i()), ValidationError);
  const auto x = qexp(0.8, SpherePoint::k());
  const auto e = QuandleInstance::eis(x);
  const auto g = qexp(0.4, SpherePoint::i());
  EXPECT_NO_THROW(QElement::make(e, EisPair{conj(x, g), g}));
  EXPECT_THROW(QElement::make(e, EisPair{x, g}), ValidationError);
}

TEST(Quandle, MixedQuandleRejected) {
  const auto a = QuandleInstance::sphere(1.0);
  const auto b = QuandleInstance::sphere(1.5);
  EXPECT_THROW(op(a, sp(a, SpherePoint::i()), sp(b, SpherePoint::j())), MixedQuandle);
}

TEST(Quandle, Examples) {
  const auto s = QuandleInstance::sphere(1.3);
  const auto v = sp(s, SpherePoint::from_vector(1, -1, 2));
  EXPECT_LT(element_distance(op(s, v, v), v), 1e-15);

  const auto d5 = QuandleInstance::dihedral(5);
  EXPECT_EQ(op(d5, QElement::make(d5, 1), QElement::make(d5, 3)).residue(), 0);

  const double theta = 1.1;
  const auto c = QuandleInstance::conj_class(theta);
  oracle::Rng rng(2);
  const auto p = qexp(theta, rng.point());
  const auto q = qexp(theta, rng.point());
  const auto pq = op(c, QElement::make(c, p), QElement::make(c, q)).quaternion();
  EXPECT_LT(oracle::dist(oracle::of(pq), oracle::mul(oracle::mul(oracle::inv(oracle::of(q)), oracle::of(p)), oracle::of(q))),
            1e-14);
  EXPECT_NEAR(qlog(pq).theta, theta, 1e-12);
  const auto back = op_inv(c, QElement::make(c, p), QElement::make(c, q)).quaternion();
  EXPECT_LT(oracle::dist(oracle::of(back), oracle::mul(oracle::mul(oracle::of(q), oracle::of(p)), oracle::inv(oracle::of(q)))),
            1e-14);

  const auto u = rng.point();
  const auto w = rng.point();
  EXPECT_LT(geodesic_distance(op_inv(s, sp(s, u), sp(s, w)).sphere_point(), rotate(u, -1.3, w)), 1e-15);
  EXPECT_LT(element_distance(op_inv(s, op(s, sp(s, u), sp(s, w)), sp(s, w)), sp(s, u)), 1e-14);
}

TEST(Quandle, AxiomsFiveInstances) {
  oracle::Rng rng(31);
  const std::vector<QuandleInstance> instances{
      QuandleInstance::sphere(1.234),
      QuandleInstance::conj_class(2.2),
      QuandleInstance::dihedral(11),
      QuandleInstance::galex(qexp(0.7, SpherePoint::i())),
      QuandleInstance::eis(rng.quat()),
  };
  for (const auto& q : instances) {
    const AxiomReport r = axiom_check(q, 500, 4);
    EXPECT_EQ(r.triples, 500) << q.name();
    EXPECT_LT(r.max_violation(), 1e-10) << q.name();
  }
}

TEST(Quandle, DihedralExhaustive) {
  for (int m = 1; m <= 13; ++m) {
    EXPECT_EQ(axiom_check_exhaustive(QuandleInstance::dihedral(m)).max_violation(), 0.0) << m;
  }
}

// Independent check of right self-distributivity on the sphere quandle using the matrix oracle.
TEST(Quandle, SphereDistributivityOracle) {
  oracle::Rng rng(37);
  const double psi = 2.5;
  for (int s = 0; s < 200; ++s) {
    const auto a = rng.unit3();
    const auto b = rng.unit3();
    const auto c = rng.unit3();
    auto star = [&](const oracle::V& x, const oracle::V& y) { return oracle::rot(x, psi, y); };
    EXPECT_LT(oracle::dist(star(star(a, b), c), star(star(a, c), star(b, c))), 1e-13);
    const auto q = QuandleInstance::sphere(psi);
    const auto lib = op(q, sp(q, SpherePoint::from_vector(a)), sp(q, SpherePoint::from_vector(b))).sphere_point();
    EXPECT_LT(oracle::dist(oracle::of(lib), star(a, b)), 1e-14);
  }
}

TEST(Quandle, IsoExamples) {
  EXPECT_LT(chordal_distance(iso_sphere_to_conj(SpherePoint::i(), M_PI / 2).quaternion(),
                             UnitQuaternion::pure(SpherePoint::i())),
            1e-15);
  const auto q = iso_sphere_to_conj(SpherePoint::j(), M_PI / 3).quaternion();
  EXPECT_NEAR(q.a(), 0.5, 1e-15);
  EXPECT_NEAR(q.c(), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_EQ(iso_sphere_to_conj(SpherePoint::j(), M_PI / 3).quandle(), QuandleInstance::conj_class(M_PI / 3));
}

TEST(Quandle, SphereToConjIsomorphism) {
  oracle::Rng rng(41);
  double worst = 0.0;
  for (int s = 0; s < 500; ++s) {
    const double theta = rng.uniform(0.01, M_PI - 0.01);
    const auto u = rng.point();
    const auto v = rng.point();
    const auto S = QuandleInstance::sphere(2 * M_PI - 2 * theta);
    const auto C = QuandleInstance::conj_class(theta);
    const auto lhs = iso_sphere_to_conj(op(S, sp(S, u), sp(S, v)).sphere_point(), theta);
    const auto rhs = op(C, iso_sphere_to_conj(u, theta), iso_sphere_to_conj(v, theta));
    worst = std::max(worst, element_distance(lhs, rhs));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Quandle, EisToGAlex) {
  oracle::Rng rng(43);
  const auto x = rng.quat();
  const auto E = QuandleInstance::eis(x);
  const auto G = QuandleInstance::galex(x);
  const auto base = eis_to_galex(QElement::make(E, EisPair{x, UnitQuaternion::identity()}));
  EXPECT_LT(chordal_distance(base.quaternion(), UnitQuaternion::identity()), 1e-15);
  EXPECT_EQ(base.quandle(), G);
  double worst = 0.0;
  for (int s = 0; s < 500; ++s) {
    const auto g = rng.quat();
    const auto h = rng.quat();
    const auto a = QElement::make(E, EisPair{conj(x, g), g});
    const auto b = QElement::make(E, EisPair{conj(x, h), h});
    worst = std::max(worst, chordal_distance(eis_to_galex(a).quaternion(), g));
    for (int sign : {+1, -1}) {
      const auto lhs = eis_to_galex(op_signed(E, a, b, sign));
      const auto rhs = op_signed(G, eis_to_galex(a), eis_to_galex(b), sign);
      worst = std::max(worst, element_distance(lhs, rhs));
    }
    // Independent formula: x^{-1} g h^{-1} x h.
    const oracle::Q expect = oracle::mul(
        oracle::mul(oracle::mul(oracle::mul(oracle::inv(oracle::of(x)), oracle::of(g)), oracle::inv(oracle::of(h))),
                    oracle::of(x)),
        oracle::of(h));
    worst = std::max(worst, oracle::dist(oracle::of(op(G, eis_to_galex(a), eis_to_galex(b)).quaternion()), expect));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Quandle, EisPairsStayValid) {
  oracle::Rng rng(47);
  const auto x = qexp(1.0, rng.point());
  const auto E = QuandleInstance::eis(x);
  ElementSampler sampler(5);
  for (int s = 0; s < 100; ++s) {
    const auto a = sampler.element(E);
    const auto b = sampler.element(E);
    const EisPair p = op(E, a, b).eis_pair();
    EXPECT_LT(chordal_distance(p.a, conj(x, p.g)), 1e-12);
  }
}

TEST(Quandle, AntipodalDuality) {
  // u -> -u takes S^2_psi to S^2_{2pi - psi}: (-u) * (-v) over 2pi - psi is -(u * v) over psi.
  oracle::Rng rng(53);
  for (int s = 0; s < 200; ++s) {
    const double psi = rng.uniform(0.1, 2 * M_PI - 0.1);
    const auto A = QuandleInstance::sphere(psi);
    const auto B = QuandleInstance::sphere(2 * M_PI - psi);
    const auto u = rng.point();
    const auto v = rng.point();
    const auto lhs = op(B, sp(B, -u), sp(B, -v)).sphere_point();
    const auto rhs = -op(A, sp(A, u), sp(A, v)).sphere_point();
    EXPECT_LT(geodesic_distance(lhs, rhs), 1e-12);
    // Rotation by psi about v equals rotation by 2pi - psi about -v.
    EXPECT_LT(geodesic_distance(op(A, sp(A, u), sp(A, v)).sphere_point(),
                                op(B, sp(B, u), sp(B, -v)).sphere_point()),
              1e-12);
  }
}

TEST(Quandle, CentralizerCheck) {
  for (double t : {0.3, 1.0, 2.5}) {
    const auto x = qexp(t, SpherePoint::i());
    EXPECT_TRUE(centralizer_angle_check(qexp(0.4, SpherePoint::i()), x));
    EXPECT_FALSE(centralizer_angle_check(UnitQuaternion::pure(SpherePoint::j()), x));
    EXPECT_TRUE(centralizer_angle_check(UnitQuaternion::minus_one(), x));
  }
  EXPECT_THROW(centralizer_angle_check(UnitQuaternion::identity(), UnitQuaternion::identity()), BadParameter);
}

TEST(Quandle, SamplerIsReproducible) {
  ElementSampler a(99);
  ElementSampler b(99);
  for (int s = 0; s < 10; ++s) EXPECT_EQ(a.unit_quaternion(), b.unit_quaternion());
}

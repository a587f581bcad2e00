#include "longmap/quandle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "longmap/errors.hpp"
#include "longmap/tolerances.hpp"

namespace longmap {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int mod(long v, int m) {
  const long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_member(const QuandleInstance& q, const QElement& e, const char* where) {
  if (!(e.quandle() == q)) {
    throw MixedQuandle(std::string(where) + ": element of " + e.quandle().name() + " used with " + q.name());
  }
}

bool is_pole(const UnitQuaternion& x) { return x.vector_norm() <= tol::kPole; }

}  // namespace

QuandleInstance QuandleInstance::sphere(double psi) {
  if (!(psi > 0.0 && psi < 2.0 * M_PI)) {
    throw BadParameter("Sphere quandle requires psi in (0, 2pi)");
  }
  return QuandleInstance(SphereQuandle{psi});
}

QuandleInstance QuandleInstance::conj_class(double theta) {
  if (!(theta > 0.0 && theta < M_PI)) {
    throw BadParameter("ConjClass quandle requires theta in (0, pi)");
  }
  return QuandleInstance(ConjClassQuandle{theta});
}

QuandleInstance QuandleInstance::dihedral(int m) {
  if (m < 1) {
    throw BadParameter("Dihedral quandle requires m >= 1");
  }
  return QuandleInstance(DihedralQuandle{m});
}

QuandleInstance QuandleInstance::galex(const UnitQuaternion& x) { return QuandleInstance(GAlexQuandle{x}); }

QuandleInstance QuandleInstance::eis(const UnitQuaternion& x) {
  if (is_pole(x)) {
    throw BadParameter("Eis quandle requires x != +-1 so that its class generates SU(2)");
  }
  return QuandleInstance(EisQuandle{x});
}

std::string QuandleInstance::name() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const SphereQuandle& s) { os << "Sphere(psi=" << s.psi << ")"; },
                 [&](const ConjClassQuandle& c) { os << "ConjClass(theta=" << c.theta << ")"; },
                 [&](const DihedralQuandle& d) { os << "Dihedral(" << d.m << ")"; },
                 [&](const GAlexQuandle& g) { os << "GAlex(x=" << g.x << ")"; },
                 [&](const EisQuandle& e) { os << "Eis(x=" << e.x << ")"; },
             },
             kind_);
  return os.str();
}

QElement QElement::make(const QuandleInstance& q, Payload value) {
  auto fail = [&](const std::string& why) { throw ValidationError(q.name() + ": " + why); };
  std::visit(Overloaded{
                 [&](const SphereQuandle&) {
                   if (!std::holds_alternative<SpherePoint>(value)) fail("expected a sphere point");
                 },
                 [&](const ConjClassQuandle& c) {
                   if (!std::holds_alternative<UnitQuaternion>(value)) fail("expected a quaternion");
                   const auto& p = std::get<UnitQuaternion>(value);
                   const double angle = std::atan2(p.vector_norm(), p.a());
                   if (std::abs(angle - c.theta) > tol::kClassMembership) fail("quaternion is not in the class");
                 },
                 [&](const DihedralQuandle& d) {
                   if (!std::holds_alternative<int>(value)) fail("expected a residue");
                   const int r = std::get<int>(value);
                   if (r < 0 || r >= d.m) fail("residue out of range");
                 },
                 [&](const GAlexQuandle&) {
                   if (!std::holds_alternative<UnitQuaternion>(value)) fail("expected a quaternion");
                 },
                 [&](const EisQuandle& e) {
                   if (!std::holds_alternative<EisPair>(value)) fail("expected a pair (a, g)");
                   const auto& pr = std::get<EisPair>(value);
                   if (chordal_distance(pr.a, conj(e.x, pr.g)) > tol::kClassMembership) fail("pair violates a = g^-1 x g");
                 },
             },
             q.kind());
  return QElement(q, std::move(value));
}

QElement op(const QuandleInstance& q, const QElement& a, const QElement& b) {
  require_member(q, a, "op");
  require_member(q, b, "op");
  QElement::Payload out = std::visit(
      Overloaded{
          [&](const SphereQuandle& s) -> QElement::Payload { return rotate(a.sphere_point(), s.psi, b.sphere_point()); },
          [&](const ConjClassQuandle&) -> QElement::Payload { return conj(a.quaternion(), b.quaternion()); },
          [&](const DihedralQuandle& d) -> QElement::Payload {
            return mod(2L * b.residue() - a.residue(), d.m);
          },
          [&](const GAlexQuandle& g) -> QElement::Payload {
            // f(a b^{-1}) b
            return conj(a.quaternion() * b.quaternion().inverse(), g.x) * b.quaternion();
          },
          [&](const EisQuandle& e) -> QElement::Payload {
            const auto& pa = a.eis_pair();
            const auto& pb = b.eis_pair();
            return EisPair{conj(pa.a, pb.a), e.x.inverse() * pa.g * pb.a};
          },
      },
      q.kind());
  return QElement::unchecked(q, std::move(out));
}

QElement op_inv(const QuandleInstance& q, const QElement& a, const QElement& b) {
  require_member(q, a, "op_inv");
  require_member(q, b, "op_inv");
  QElement::Payload out = std::visit(
      Overloaded{
          [&](const SphereQuandle& s) -> QElement::Payload { return rotate(a.sphere_point(), -s.psi, b.sphere_point()); },
          [&](const ConjClassQuandle&) -> QElement::Payload { return conj(a.quaternion(), b.quaternion().inverse()); },
          [&](const DihedralQuandle& d) -> QElement::Payload {
            return mod(2L * b.residue() - a.residue(), d.m);
          },
          [&](const GAlexQuandle& g) -> QElement::Payload {
            // f^{-1}(a b^{-1}) b
            return conj(a.quaternion() * b.quaternion().inverse(), g.x.inverse()) * b.quaternion();
          },
          [&](const EisQuandle& e) -> QElement::Payload {
            const auto& pa = a.eis_pair();
            const auto& pb = b.eis_pair();
            return EisPair{conj(pa.a, pb.a.inverse()), e.x * pa.g * pb.a.inverse()};
          },
      },
      q.kind());
  return QElement::unchecked(q, std::move(out));
}

QElement op_signed(const QuandleInstance& q, const QElement& a, const QElement& b, int sign) {
  return sign >= 0 ? op(q, a, b) : op_inv(q, a, b);
}

double element_distance(const QElement& a, const QElement& b) {
  if (!(a.quandle() == b.quandle())) {
    throw MixedQuandle("element_distance: elements from " + a.quandle().name() + " and " + b.quandle().name());
  }
  return std::visit(Overloaded{
                        [&](const SpherePoint& u) { return geodesic_distance(u, b.sphere_point()); },
                        [&](const UnitQuaternion& p) { return chordal_distance(p, b.quaternion()); },
                        [&](int r) { return r == b.residue() ? 0.0 : 1.0; },
                        [&](const EisPair& p) {
                          const auto& o = b.eis_pair();
                          return std::max(chordal_distance(p.a, o.a), chordal_distance(p.g, o.g));
                        },
                    },
                    a.value());
}

QElement iso_sphere_to_conj(const SpherePoint& u, double theta) {
  return QElement::unchecked(QuandleInstance::conj_class(theta), qexp(theta, u));
}

QElement eis_to_galex(const QElement& e) {
  const auto& eq = e.quandle().as<EisQuandle>();
  return QElement::unchecked(QuandleInstance::galex(eq.x), e.eis_pair().g);
}

bool centralizer_angle_check(const UnitQuaternion& L, const UnitQuaternion& x, double tolerance) {
  if (is_pole(x)) {
    throw BadParameter("centralizer_angle_check: x = +-1 has all of SU(2) as centralizer");
  }
  return chordal_distance(L * x, x * L) <= tolerance;
}

SpherePoint ElementSampler::sphere_point() {
  for (;;) {
    const double x = normal_(rng_);
    const double y = normal_(rng_);
    const double z = normal_(rng_);
    if (x * x + y * y + z * z > 1e-12) {
      return SpherePoint::from_vector(x, y, z);
    }
  }
}

UnitQuaternion ElementSampler::unit_quaternion() {
  for (;;) {
    const double a = normal_(rng_);
    const double b = normal_(rng_);
    const double c = normal_(rng_);
    const double d = normal_(rng_);
    if (a * a + b * b + c * c + d * d > 1e-12) {
      return UnitQuaternion::from_components(a, b, c, d);
    }
  }
}

double ElementSampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

int ElementSampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

QElement ElementSampler::element(const QuandleInstance& q) {
  return std::visit(Overloaded{
                        [&](const SphereQuandle&) { return QElement::unchecked(q, sphere_point()); },
                        [&](const ConjClassQuandle& c) { return QElement::unchecked(q, qexp(c.theta, sphere_point())); },
                        [&](const DihedralQuandle& d) { return QElement::unchecked(q, uniform_int(0, d.m - 1)); },
                        [&](const GAlexQuandle&) { return QElement::unchecked(q, unit_quaternion()); },
                        [&](const EisQuandle& e) {
                          const UnitQuaternion g = unit_quaternion();
                          return QElement::unchecked(q, EisPair{conj(e.x, g), g});
                        },
                    },
                    q.kind());
}

double AxiomReport::max_violation() const { return std::max({idempotence, distributivity, cancellation}); }

namespace {

void accumulate(AxiomReport& r, const QuandleInstance& q, const QElement& x, const QElement& y, const QElement& z) {
  r.idempotence = std::max(r.idempotence, element_distance(op(q, x, x), x));
  const QElement lhs = op(q, op(q, x, y), z);
  const QElement rhs = op(q, op(q, x, z), op(q, y, z));
  r.distributivity = std::max(r.distributivity, element_distance(lhs, rhs));
  r.cancellation = std::max({r.cancellation, element_distance(op(q, op_inv(q, x, y), y), x),
                             element_distance(op_inv(q, op(q, x, y), y), x)});
  ++r.triples;
}

}  // namespace

AxiomReport axiom_check(const QuandleInstance& q, int samples, std::uint64_t seed) {
  ElementSampler sampler(seed);
  AxiomReport r;
  for (int s = 0; s < samples; ++s) {
    const QElement x = sampler.element(q);
    const QElement y = sampler.element(q);
    const QElement z = sampler.element(q);
    accumulate(r, q, x, y, z);
  }
  return r;
}

AxiomReport axiom_check_exhaustive(const QuandleInstance& dihedral) {
  const int m = dihedral.as<DihedralQuandle>().m;
  AxiomReport r;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        accumulate(r, dihedral, QElement::unchecked(dihedral, a), QElement::unchecked(dihedral, b),
                   QElement::unchecked(dihedral, c));
      }
    }
  }
  return r;
}

}  // namespace longmap

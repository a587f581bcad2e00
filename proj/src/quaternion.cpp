#include "longmap/quaternion.hpp"

#include <cmath>
#include <ostream>

#include "longmap/errors.hpp"
#include "longmap/tolerances.hpp"

namespace longmap {

namespace {

constexpr double kDegenerate = 1e-300;

}  // namespace

SpherePoint SpherePoint::from_vector(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > kDegenerate) || !std::isfinite(n)) {
    throw BadParameter("SpherePoint: cannot normalize a zero or non-finite vector");
  }
  return SpherePoint(x / n, y / n, z / n);
}

double SpherePoint::norm() const noexcept { return std::sqrt(x_ * x_ + y_ * y_ + z_ * z_); }

UnitQuaternion UnitQuaternion::from_components(double a, double b, double c, double d) {
  const double n = std::sqrt(a * a + b * b + c * c + d * d);
  if (!(n > kDegenerate) || !std::isfinite(n)) {
    throw BadParameter("UnitQuaternion: cannot normalize a zero or non-finite quaternion");
  }
  return UnitQuaternion(a / n, b / n, c / n, d / n);
}

double UnitQuaternion::norm() const noexcept { return std::sqrt(a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_); }

double UnitQuaternion::vector_norm() const noexcept { return std::sqrt(b_ * b_ + c_ * c_ + d_ * d_); }

SpherePoint Rotation::apply(const SpherePoint& u) const { return rotate(u, angle, axis); }

UnitQuaternion qmul(const UnitQuaternion& p, const UnitQuaternion& q) {
  const double a = p.a_ * q.a_ - p.b_ * q.b_ - p.c_ * q.c_ - p.d_ * q.d_;
  const double b = p.a_ * q.b_ + p.b_ * q.a_ + p.c_ * q.d_ - p.d_ * q.c_;
  const double c = p.a_ * q.c_ - p.b_ * q.d_ + p.c_ * q.a_ + p.d_ * q.b_;
  const double d = p.a_ * q.d_ + p.b_ * q.c_ - p.c_ * q.b_ + p.d_ * q.a_;
  const double n = std::sqrt(a * a + b * b + c * c + d * d);
  return UnitQuaternion(a / n, b / n, c / n, d / n);
}

UnitQuaternion qexp(double theta, const SpherePoint& u) {
  const double s = std::sin(theta);
  return UnitQuaternion(std::cos(theta), s * u.x(), s * u.y(), s * u.z());
}

AxisAngle qlog(const UnitQuaternion& q) {
  const double s = q.vector_norm();
  AxisAngle out;
  out.theta = std::atan2(s, q.a());
  if (s <= tol::kPole) {
    out.theta = q.a() >= 0.0 ? 0.0 : M_PI;
    out.axis = SpherePoint::i();
    out.axis_defined = false;
    return out;
  }
  out.axis = SpherePoint::from_vector(q.b() / s, q.c() / s, q.d() / s);
  return out;
}

UnitQuaternion qpow(const UnitQuaternion& q, long k) {
  if (k == 0) {
    return UnitQuaternion();
  }
  const double s = q.vector_norm();
  const double theta = std::atan2(s, q.a());
  const double kt = static_cast<double>(k) * theta;
  if (s == 0.0) {
    // q = +-1 exactly.
    return UnitQuaternion(std::cos(kt), 0.0, 0.0, 0.0);
  }
  const double f = std::sin(kt) / s;
  return UnitQuaternion::from_components(std::cos(kt), f * q.b(), f * q.c(), f * q.d());
}

SpherePoint rotate(const SpherePoint& u, double angle, const SpherePoint& v) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double vu = v.dot(u);
  // v x u
  const double cx = v.y() * u.z() - v.z() * u.y();
  const double cy = v.z() * u.x() - v.x() * u.z();
  const double cz = v.x() * u.y() - v.y() * u.x();
  return SpherePoint::from_vector(u.x() * c + cx * s + v.x() * vu * (1.0 - c),
                                  u.y() * c + cy * s + v.y() * vu * (1.0 - c),
                                  u.z() * c + cz * s + v.z() * vu * (1.0 - c));
}

UnitQuaternion conj(const UnitQuaternion& p, const UnitQuaternion& q) { return qmul(qmul(q.inverse(), p), q); }

SpherePoint as_sphere_point(const UnitQuaternion& q, double tolerance) {
  if (std::abs(q.a()) > tolerance) {
    throw BadParameter("as_sphere_point: quaternion has a nonzero real part");
  }
  return SpherePoint::from_vector(q.b(), q.c(), q.d());
}

double chordal_distance(const UnitQuaternion& p, const UnitQuaternion& q) {
  const double da = p.a() - q.a();
  const double db = p.b() - q.b();
  const double dc = p.c() - q.c();
  const double dd = p.d() - q.d();
  return std::sqrt(da * da + db * db + dc * dc + dd * dd);
}

double geodesic_distance(const SpherePoint& u, const SpherePoint& v) {
  const double cx = u.y() * v.z() - u.z() * v.y();
  const double cy = u.z() * v.x() - u.x() * v.z();
  const double cz = u.x() * v.y() - u.y() * v.x();
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), u.dot(v));
}

std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q) {
  return os << "(" << q.a() << ", " << q.b() << ", " << q.c() << ", " << q.d() << ")";
}

std::ostream& operator<<(std::ostream& os, const SpherePoint& u) {
  return os << "(" << u.x() << ", " << u.y() << ", " << u.z() << ")";
}

}  // namespace longmap

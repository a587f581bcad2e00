#pragma once

#include <array>
#include <iosfwd>

namespace longmap {

/// Unit vector in R^3, read as the pure quaternion x*i + y*j + z*k.
class SpherePoint {
 public:
  /// Defaults to i = (1, 0, 0).
  constexpr SpherePoint() = default;

  /// Normalizes (x, y, z); throws BadParameter on a (near) zero vector.
  static SpherePoint from_vector(double x, double y, double z);
  static SpherePoint from_vector(const std::array<double, 3>& v) { return from_vector(v[0], v[1], v[2]); }

  static constexpr SpherePoint i() { return SpherePoint(1.0, 0.0, 0.0); }
  static constexpr SpherePoint j() { return SpherePoint(0.0, 1.0, 0.0); }
  static constexpr SpherePoint k() { return SpherePoint(0.0, 0.0, 1.0); }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }
  constexpr double z() const noexcept { return z_; }
  constexpr std::array<double, 3> vec() const noexcept { return {x_, y_, z_}; }

  constexpr SpherePoint operator-() const noexcept { return SpherePoint(-x_, -y_, -z_); }

  double dot(const SpherePoint& o) const noexcept { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }
  double norm() const noexcept;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  constexpr SpherePoint(double x, double y, double z) : x_(x), y_(y), z_(z) {}

  double x_ = 1.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

/// Element of SU(2) as a unit quaternion a + b*i + c*j + d*k.
class UnitQuaternion {
 public:
  constexpr UnitQuaternion() = default;

  /// Normalizes; throws BadParameter on a (near) zero quaternion.
  static UnitQuaternion from_components(double a, double b, double c, double d);
  static constexpr UnitQuaternion identity() { return UnitQuaternion(); }
  static constexpr UnitQuaternion minus_one() { return UnitQuaternion(-1.0, 0.0, 0.0, 0.0); }
  /// The pure quaternion u, which squares to -1.
  static constexpr UnitQuaternion pure(const SpherePoint& u) { return UnitQuaternion(0.0, u.x(), u.y(), u.z()); }

  constexpr double a() const noexcept { return a_; }
  constexpr double b() const noexcept { return b_; }
  constexpr double c() const noexcept { return c_; }
  constexpr double d() const noexcept { return d_; }
  constexpr std::array<double, 4> components() const noexcept { return {a_, b_, c_, d_}; }

  /// Inverse of a unit quaternion is its conjugate.
  constexpr UnitQuaternion inverse() const noexcept { return UnitQuaternion(a_, -b_, -c_, -d_); }
  constexpr UnitQuaternion operator-() const noexcept { return UnitQuaternion(-a_, -b_, -c_, -d_); }

  double norm() const noexcept;
  /// Length of the imaginary part, |sin(theta)|.
  double vector_norm() const noexcept;

  friend bool operator==(const UnitQuaternion&, const UnitQuaternion&) = default;

 private:
  friend UnitQuaternion qmul(const UnitQuaternion&, const UnitQuaternion&);
  friend UnitQuaternion qexp(double, const SpherePoint&);
  friend UnitQuaternion qpow(const UnitQuaternion&, long);
  constexpr UnitQuaternion(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}

  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

/// (theta, axis) with q = cos(theta) + sin(theta) * axis.
struct AxisAngle {
  double theta = 0.0;
  SpherePoint axis;
  /// False when q = +-1: theta is 0 or pi and `axis` is the arbitrary i.
  bool axis_defined = true;
};

/// Right-hand rotation by `angle` about `axis`, acting on the right of its argument.
struct Rotation {
  double angle = 0.0;
  SpherePoint axis;

  SpherePoint apply(const SpherePoint& u) const;
};

/// Hamilton product, renormalized.
UnitQuaternion qmul(const UnitQuaternion& p, const UnitQuaternion& q);
inline UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) { return qmul(p, q); }

/// cos(theta) + sin(theta) u.
UnitQuaternion qexp(double theta, const SpherePoint& u);

/// Canonical axis-angle with theta in [0, pi]. At the poles +-1 the axis is flagged undefined.
AxisAngle qlog(const UnitQuaternion& q);

/// Integer power e^{k theta u}; q^0 = 1.
UnitQuaternion qpow(const UnitQuaternion& q, long k);

/// Rodrigues rotation of u about v by angle (right-hand rule).
SpherePoint rotate(const SpherePoint& u, double angle, const SpherePoint& v);

/// q^{-1} p q.
UnitQuaternion conj(const UnitQuaternion& p, const UnitQuaternion& q);

/// Imaginary part of a quaternion known to be pure; throws BadParameter otherwise.
SpherePoint as_sphere_point(const UnitQuaternion& q, double tolerance = 1e-9);

/// Euclidean distance in R^4.
double chordal_distance(const UnitQuaternion& p, const UnitQuaternion& q);
/// Great-circle distance on S^2, accurate near zero.
double geodesic_distance(const SpherePoint& u, const SpherePoint& v);

std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q);
std::ostream& operator<<(std::ostream& os, const SpherePoint& u);

}  // namespace longmap

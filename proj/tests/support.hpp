#pragma once

// Independent oracles for the tests: plain 4-vectors with a textbook Hamilton
// product and a 3x3 rotation matrix, no shared code with the library.

#include <array>
#include <cmath>
#include <random>

#include "longmap/quaternion.hpp"

namespace oracle {

using Q = std::array<double, 4>;
using V = std::array<double, 3>;

inline Q mul(const Q& p, const Q& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline Q inv(const Q& q) { return {q[0], -q[1], -q[2], -q[3]}; }

inline Q expq(double t, const V& u) {
  return {std::cos(t), std::sin(t) * u[0], std::sin(t) * u[1], std::sin(t) * u[2]};
}

inline Q of(const longmap::UnitQuaternion& q) { return {q.a(), q.b(), q.c(), q.d()}; }
inline V of(const longmap::SpherePoint& u) { return {u.x(), u.y(), u.z()}; }

inline double dist(const Q& p, const Q& q) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

inline double dist(const V& p, const V& q) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

// Rotation of u by angle a about v as a matrix product (right-hand rule).
inline V rot(const V& u, double a, const V& v) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  const double t = 1.0 - c;
  const double x = v[0], y = v[1], z = v[2];
  const double m[3][3] = {{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
                          {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
                          {t * x * z - s * y, t * y * z + s * x, t * z * z + c}};
  V out{};
  for (int r = 0; r < 3; ++r) out[r] = m[r][0] * u[0] + m[r][1] * u[1] + m[r][2] * u[2];
  return out;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::mt19937_64 g;
  std::normal_distribution<double> n{0.0, 1.0};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }
  V unit3() {
    V v{n(g), n(g), n(g)};
    const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / r, v[1] / r, v[2] / r};
  }
  Q unit4() {
    Q q{n(g), n(g), n(g), n(g)};
    const double r = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    return {q[0] / r, q[1] / r, q[2] / r, q[3] / r};
  }
  longmap::SpherePoint point() { return longmap::SpherePoint::from_vector(unit3()); }
  longmap::UnitQuaternion quat() {
    const Q q = unit4();
    return longmap::UnitQuaternion::from_components(q[0], q[1], q[2], q[3]);
  }
};

}  // namespace oracle

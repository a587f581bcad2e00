#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "longmap/quaternion.hpp"

namespace longmap {

/// S^2 with u * v = u rotated about v by psi.
struct SphereQuandle {
  double psi;
  friend bool operator==(const SphereQuandle&, const SphereQuandle&) = default;
};

/// The conjugacy class {e^{theta u}} of SU(2) under a * b = b^{-1} a b.
struct ConjClassQuandle {
  double theta;
  friend bool operator==(const ConjClassQuandle&, const ConjClassQuandle&) = default;
};

/// Z/m with i * j = 2j - i.
struct DihedralQuandle {
  int m;
  friend bool operator==(const DihedralQuandle&, const DihedralQuandle&) = default;
};

/// SU(2) with g * h = f(g h^{-1}) h, f(g) = x^{-1} g x.
struct GAlexQuandle {
  UnitQuaternion x;
  friend bool operator==(const GAlexQuandle&, const GAlexQuandle&) = default;
};

/// Pairs (a, g) with a = g^{-1} x g.
struct EisQuandle {
  UnitQuaternion x;
  friend bool operator==(const EisQuandle&, const EisQuandle&) = default;
};

struct EisPair {
  UnitQuaternion a;
  UnitQuaternion g;
  friend bool operator==(const EisPair&, const EisPair&) = default;
};

/// One of the five concrete quandles. Parameters are validated by the factories.
class QuandleInstance {
 public:
  using Kind = std::variant<SphereQuandle, ConjClassQuandle, DihedralQuandle, GAlexQuandle, EisQuandle>;

  static QuandleInstance sphere(double psi);
  static QuandleInstance conj_class(double theta);
  static QuandleInstance dihedral(int m);
  static QuandleInstance galex(const UnitQuaternion& x);
  static QuandleInstance eis(const UnitQuaternion& x);

  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(kind_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(kind_);
  }

  friend bool operator==(const QuandleInstance&, const QuandleInstance&) = default;

 private:
  explicit QuandleInstance(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// An element together with the quandle it belongs to.
class QElement {
 public:
  using Payload = std::variant<SpherePoint, UnitQuaternion, int, EisPair>;

  /// Validates membership: ConjClass angle, Eis pair relation, residue range.
  static QElement make(const QuandleInstance& q, Payload value);
  /// Skips validation; used for results of quandle operations.
  static QElement unchecked(const QuandleInstance& q, Payload value) { return QElement(q, std::move(value)); }

  const QuandleInstance& quandle() const noexcept { return quandle_; }
  const Payload& value() const noexcept { return value_; }

  const SpherePoint& sphere_point() const { return std::get<SpherePoint>(value_); }
  const UnitQuaternion& quaternion() const { return std::get<UnitQuaternion>(value_); }
  int residue() const { return std::get<int>(value_); }
  const EisPair& eis_pair() const { return std::get<EisPair>(value_); }

 private:
  QElement(QuandleInstance q, Payload v) : quandle_(std::move(q)), value_(std::move(v)) {}
  QuandleInstance quandle_;
  Payload value_;
};

/// a * b. Throws MixedQuandle when a or b is not an element of q.
QElement op(const QuandleInstance& q, const QElement& a, const QElement& b);
/// a *bar b, the inverse right translation: op(op_inv(a, b), b) = a.
QElement op_inv(const QuandleInstance& q, const QElement& a, const QElement& b);
/// op for sign +1, op_inv for sign -1.
QElement op_signed(const QuandleInstance& q, const QElement& a, const QElement& b, int sign);

/// Distance between two elements of the same quandle: great-circle angle on S^2,
/// Euclidean distance in R^4 for quaternions, 0/1 for residues, max of both coordinates for Eis.
double element_distance(const QElement& a, const QElement& b);

/// u -> e^{theta u}, an isomorphism S^2_{2pi - 2theta} -> C_theta.
QElement iso_sphere_to_conj(const SpherePoint& u, double theta);
/// (a, g) -> g, an isomorphism Eis(SU(2), x) -> GAlex(SU(2), f_x).
QElement eis_to_galex(const QElement& e);

/// Whether L commutes with x, i.e. lies in the circle {e^{beta axis(x)}}. Requires x != +-1.
bool centralizer_angle_check(const UnitQuaternion& L, const UnitQuaternion& x, double tolerance = 1e-9);

/// Seeded sampler for carriers. Quaternions are uniform on S^3 and sphere points uniform on S^2.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}

  SpherePoint sphere_point();
  UnitQuaternion unit_quaternion();
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);
  QElement element(const QuandleInstance& q);

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

struct AxiomReport {
  double idempotence = 0.0;
  double distributivity = 0.0;
  double cancellation = 0.0;
  std::size_t triples = 0;

  double max_violation() const;
};

/// Max violation of x*x = x, (x*y)*z = (x*z)*(y*z) and op/op_inv cancellation over sampled triples.
AxiomReport axiom_check(const QuandleInstance& q, int samples, std::uint64_t seed = 1);
/// Same checks over every triple of a dihedral quandle.
AxiomReport axiom_check_exhaustive(const QuandleInstance& dihedral);

}  // namespace longmap

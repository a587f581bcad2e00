#pragma once

namespace longmap::tol {

// Unit-length drift allowed after renormalization.
inline constexpr double kNorm = 1e-12;
// |sin(theta)| below which a quaternion is treated as +-1 and its axis is undefined.
inline constexpr double kPole = 1e-12;
// Derived equalities accumulated over O(n) products.
inline constexpr double kCompare = 1e-9;
// Coloring residual acceptance.
inline constexpr double kColoring = 1e-8;
// Two solver seeds closer than this are the same seed.
inline constexpr double kSeedDedup = 1e-6;
// Golden-section refinement width for solver seeds.
inline constexpr double kSeedRefine = 1e-10;
// Conjugacy-class membership check on element construction.
inline constexpr double kClassMembership = 1e-9;
// Minimum pairwise spread separating a nontrivial coloring from a constant one.
inline constexpr double kMinSpread = 1e-6;
// Slack on closed interval endpoints computed in floating point.
inline constexpr double kEndpoint = 1e-12;

inline constexpr int kDefaultGrid = 2000;

}  // namespace longmap::tol

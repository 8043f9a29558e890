#pragma once

// Exact convex geometry in dimensions 1 to 3: Minkowski sums, hull volumes and
// mixed volumes by inclusion-exclusion.

#include <cstdint>
#include <span>
#include <vector>

#include "mixmult/polyring.hpp"

namespace mixmult {

using LatticePoint = std::vector<std::int64_t>;

/// Finite point set in Z^n; the polytope is its convex hull.
struct LatticePolytope {
  std::vector<LatticePoint> points;

  std::size_t dimension() const noexcept { return points.empty() ? 0 : points.front().size(); }
  /// Throws EmptyPolytope or DimensionMismatch.
  void validate() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
};

/// All pairwise sums, sorted and deduplicated.
LatticePolytope minkowskiSum(const LatticePolytope& P, const LatticePolytope& Q);

/// Euclidean volume of the convex hull for n <= 3. Lower-dimensional hulls
/// have volume 0.
Rational hullVolume(const LatticePolytope& P);

/// Vertices of the convex hull of a planar point set, counter-clockwise from
/// the lexicographically smallest.
std::vector<LatticePoint> convexHull2D(std::span<const LatticePoint> points);

/// MV(Q_1..Q_n) = sum over nonempty J of (-1)^(n-|J|) V(sum_{j in J} Q_j).
BigInt mixedVolumeGeometric(std::span<const LatticePolytope> polys);

}  // namespace mixmult

#include "mixmult/polytope.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

using Wide = __int128;
using Vec3 = std::array<std::int64_t, 3>;

Wide cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<Wide>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<Wide>(a[1] - o[1]) * (b[0] - o[0]);
}

Vec3 sub(const LatticePoint& a, const LatticePoint& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 crossProduct(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Wide dot(const Vec3& a, const Vec3& b) {
  return static_cast<Wide>(a[0]) * b[0] + static_cast<Wide>(a[1]) * b[1] + static_cast<Wide>(a[2]) * b[2];
}

BigInt toBig(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

std::vector<LatticePoint> distinct(std::span<const LatticePoint> pts) {
  std::vector<LatticePoint> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational volume2(std::span<const LatticePoint> pts) {
  const auto hull = convexHull2D(pts);
  if (hull.size() < 3) return 0;
  Wide twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += static_cast<Wide>(a[0]) * b[1] - static_cast<Wide>(a[1]) * b[0];
  }
  Rational v(toBig(twice < 0 ? -twice : twice), 2);
  v.canonicalize();
  return v;
}

// Enumerates supporting planes through point triples. Each facet polygon is
// fanned into triangles which are coned to a reference input point.
Rational volume3(std::span<const LatticePoint> input) {
  const auto pts = distinct(input);
  const std::size_t N = pts.size();
  if (N < 4) return 0;
  std::set<std::vector<std::size_t>> facets;
  Wide sixTimes = 0;
  const LatticePoint& ref = pts.front();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      for (std::size_t k = j + 1; k < N; ++k) {
        const Vec3 normal = crossProduct(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (normal == Vec3{0, 0, 0}) continue;
        bool above = false, below = false;
        std::vector<std::size_t> onPlane;
        for (std::size_t m = 0; m < N; ++m) {
          const Wide s = dot(normal, sub(pts[m], pts[i]));
          if (s > 0) above = true;
          if (s < 0) below = true;
          if (s == 0) onPlane.push_back(m);
        }
        if (above && below) continue;
        if (!above && !below) return 0;  // everything is coplanar
        if (!facets.insert(onPlane).second) continue;
        // Project away the coordinate where the normal is largest.
        std::size_t drop = 0;
        for (std::size_t c = 1; c < 3; ++c) {
          if ((normal[c] < 0 ? -normal[c] : normal[c]) > (normal[drop] < 0 ? -normal[drop] : normal[drop])) drop = c;
        }
        std::vector<LatticePoint> flat;
        std::vector<std::pair<LatticePoint, std::size_t>> back;
        for (auto m : onPlane) {
          LatticePoint q;
          for (std::size_t c = 0; c < 3; ++c) {
            if (c != drop) q.push_back(pts[m][c]);
          }
          flat.push_back(q);
          back.emplace_back(q, m);
        }
        std::sort(back.begin(), back.end());
        const auto poly = convexHull2D(flat);
        auto lift = [&](const LatticePoint& q) -> const LatticePoint& {
          auto it = std::lower_bound(back.begin(), back.end(), std::make_pair(q, std::size_t{0}));
          return pts[it->second];
        };
        for (std::size_t t = 1; t + 1 < poly.size(); ++t) {
          const Vec3 a = sub(lift(poly[0]), ref);
          const Vec3 b = sub(lift(poly[t]), ref);
          const Vec3 c = sub(lift(poly[t + 1]), ref);
          const Wide det = dot(a, crossProduct(b, c));
          sixTimes += det < 0 ? -det : det;
        }
      }
    }
  }
  Rational v(toBig(sixTimes), 6);
  v.canonicalize();
  return v;
}

}  // namespace

void LatticePolytope::validate() const {
  if (points.empty()) fail(ErrorCode::EmptyPolytope, "polytope has no points");
  const auto n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) fail(ErrorCode::DimensionMismatch, "polytope points have differing dimensions");
  }
}

LatticePolytope minkowskiSum(const LatticePolytope& P, const LatticePolytope& Q) {
  P.validate();
  Q.validate();
  if (P.dimension() != Q.dimension()) fail(ErrorCode::DimensionMismatch, "Minkowski sum of polytopes in different dimensions");
  LatticePolytope out;
  for (const auto& a : P.points) {
    for (const auto& b : Q.points) {
      LatticePoint s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      out.points.push_back(std::move(s));
    }
  }
  out.points = distinct(out.points);
  return out;
}

std::vector<LatticePoint> convexHull2D(std::span<const LatticePoint> input) {
  auto pts = distinct(input);
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rational hullVolume(const LatticePolytope& P) {
  P.validate();
  switch (P.dimension()) {
    case 1: {
      auto [lo, hi] = std::minmax_element(P.points.begin(), P.points.end());
      return Rational(BigInt(static_cast<long>((*hi)[0] - (*lo)[0])));
    }
    case 2:
      return volume2(P.points);
    case 3:
      return volume3(P.points);
    default:
      fail(ErrorCode::DimensionUnsupported, "hull volumes are available in dimensions 1 to 3");
  }
}

BigInt mixedVolumeGeometric(std::span<const LatticePolytope> polys) {
  if (polys.empty()) fail(ErrorCode::CountMismatch, "no polytopes given");
  const std::size_t n = polys.front().dimension();
  for (const auto& P : polys) {
    P.validate();
    if (P.dimension() != n) fail(ErrorCode::DimensionMismatch, "polytopes live in different dimensions");
  }
  if (n < 1 || n > 3) fail(ErrorCode::DimensionUnsupported, "geometric mixed volume supports dimensions 1 to 3");
  if (polys.size() != n) fail(ErrorCode::CountMismatch, "need exactly as many polytopes as the dimension");
  Rational total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::optional<LatticePolytope> sum;
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) {
        sum = sum ? minkowskiSum(*sum, polys[j]) : polys[j];
        ++count;
      }
    }
    const Rational v = hullVolume(*sum);
    if ((n - count) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  if (total.get_den() != 1 || total < 0) {
    fail(ErrorCode::AssertionFailed, "mixed volume is not a nonnegative integer: " + total.get_str());
  }
  return total.get_num();
}

}  // namespace mixmult

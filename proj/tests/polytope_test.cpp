#include <doctest.h>

#include <algorithm>

#include "mixmult/error.hpp"
#include "mixmult/multiplicity.hpp"
#include "mixmult/polytope.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ErrorCode codeOf(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::AssertionFailed;
}

const LatticePolytope kTetrahedron{{{1, 1, 0}, {2, 1, 0}, {1, 3, 0}, {1, 1, 3}}};

LatticePolytope randomPolytope(std::mt19937& rng, std::size_t dim, int size, int maxPoints) {
  std::uniform_int_distribution<std::int64_t> c(0, size);
  LatticePolytope P;
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxPoints));
  for (int i = 0; i < n; ++i) {
    LatticePoint p(dim);
    for (auto& x : p) x = c(rng);
    P.points.push_back(p);
  }
  return P;
}

LatticePolytope translate(LatticePolytope P, const LatticePoint& v) {
  for (auto& p : P.points)
    for (std::size_t k = 0; k < v.size(); ++k) p[k] += v[k];
  return P;
}

BigInt factorial(std::size_t n) { return n <= 1 ? BigInt(1) : BigInt(static_cast<long>(n)) * factorial(n - 1); }

}  // namespace

TEST_CASE("Minkowski sums of point sets") {
  const LatticePolytope seg{{{0}, {1}}};
  CHECK(minkowskiSum(seg, seg).points == std::vector<LatticePoint>{{0}, {1}, {2}});
  const LatticePolytope a{{{0, 0}, {1, 0}}}, b{{{0, 0}, {0, 1}}};
  CHECK(minkowskiSum(a, b).points == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("volumes of the tetrahedron and its dilates") {
  CHECK(hullVolume(kTetrahedron) == Rational(1));
  const auto twice = minkowskiSum(kTetrahedron, kTetrahedron);
  CHECK(hullVolume(twice) == Rational(8));
  CHECK(hullVolume(minkowskiSum(twice, kTetrahedron)) == Rational(27));
}

TEST_CASE("low-dimensional hulls") {
  CHECK(hullVolume({{{3}, {-2}, {1}}}) == Rational(5));
  CHECK(hullVolume({{{0, 0}, {2, 0}, {0, 2}, {1, 1}}}) == Rational(2));
  CHECK(hullVolume({{{0, 0}, {1, 1}, {2, 2}}}) == Rational(0));
  CHECK(hullVolume({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}) == Rational(0));
  CHECK(hullVolume({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == Rational(1, 6));
}

TEST_CASE("planar convex hull") {
  const std::vector<LatticePoint> pts{{1, 1}, {0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}};
  CHECK(convexHull2D(pts) == std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("geometric mixed volumes of the worked examples") {
  const std::vector<LatticePolytope> tet{kTetrahedron, kTetrahedron, kTetrahedron};
  CHECK(mixedVolumeGeometric(tet) == 6);
  const std::vector<LatticePolytope> parabolas{{{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}, {{{0, 0}, {1, 0}, {0, 1}, {0, 2}}}};
  CHECK(mixedVolumeGeometric(parabolas) == 4);
  const std::vector<LatticePolytope> octagons{{{{1, 1}, {3, 0}, {4, 0}, {4, 1}, {3, 3}, {1, 4}, {0, 4}, {0, 3}}},
                                             {{{0, 1}, {0, 0}, {3, 0}, {4, 1}, {4, 4}, {3, 4}}}};
  CHECK(mixedVolumeGeometric(octagons) == 32);
  const std::vector<LatticePolytope> squareTriangle{{{{0, 0}, {0, 2}, {2, 0}, {2, 2}}}, {{{0, 0}, {1, 2}, {2, 1}}}};
  CHECK(mixedVolumeGeometric(squareTriangle) == 8);
}

TEST_CASE("polytope validation") {
  CHECK(codeOf([] { LatticePolytope{}.validate(); }) == ErrorCode::EmptyPolytope);
  CHECK(codeOf([] { LatticePolytope{{{0, 0}, {1}}}.validate(); }) == ErrorCode::DimensionMismatch);
  const std::vector<LatticePolytope> four{{{{0, 0, 0, 0}}}, {{{0, 0, 0, 0}}}, {{{0, 0, 0, 0}}}, {{{0, 0, 0, 0}}}};
  CHECK(codeOf([&] { mixedVolumeGeometric(four); }) == ErrorCode::DimensionUnsupported);
}

TEST_CASE("mixed volume is symmetric, translation invariant and diagonal") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 2 + (i % 2);
    std::vector<LatticePolytope> ps;
    for (std::size_t k = 0; k < dim; ++k) ps.push_back(randomPolytope(rng, dim, 3, 5));
    const auto mv = mixedVolumeGeometric(ps);
    auto perm = ps;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mixedVolumeGeometric(perm) == mv);
    LatticePoint shift(dim);
    for (auto& x : shift) x = static_cast<std::int64_t>(rng() % 4);
    perm.front() = translate(perm.front(), shift);
    CHECK(mixedVolumeGeometric(perm) == mv);
    const std::vector<LatticePolytope> diag(dim, ps.front());
    const Rational expected = hullVolume(ps.front()) * Rational(factorial(dim));
    CHECK(Rational(mixedVolumeGeometric(diag)) == expected);
  }
}

TEST_CASE("the algebraic mixed volume is symmetric and translation invariant") {
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::vector<LatticePolytope> ps{randomPolytope(rng, 2, 2, 4), randomPolytope(rng, 2, 2, 4)};
    const auto mv = mMixedVolume(ps);
    std::swap(ps[0], ps[1]);
    CHECK(mMixedVolume(ps) == mv);
    ps[1] = translate(ps[1], {1, 0});
    CHECK(mMixedVolume(ps) == mv);
  }
}

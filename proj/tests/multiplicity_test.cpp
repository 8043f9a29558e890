#include <doctest.h>

#include <algorithm>

#include "mixmult/error.hpp"
#include "mixmult/multiplicity.hpp"
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

RingPtr wxyz() { return ring({"w", "x", "y", "z"}); }

const LatticePolytope kTriangle{{{0, 0}, {1, 0}, {0, 1}}};

LatticePolytope randomPolygon(std::mt19937& rng, int size) {
  std::uniform_int_distribution<std::int64_t> c(0, size);
  LatticePolytope P;
  const int n = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) P.points.push_back({c(rng), c(rng)});
  return P;
}

}  // namespace

TEST_CASE("mixed multiplicities of the maximal ideal and a twisted quartic ideal") {
  auto R = wxyz();
  const auto data = fiberSeries({Ideal::maximal(R), ideal(R, {"x^2 - y*w", "x^3 - z*w^2"})});
  CHECK(mixedMultiplicityFromSeries(data.reduced, {3, 0}) == 1);
  CHECK(mixedMultiplicityFromSeries(data.reduced, {2, 1}) == 2);
  CHECK(mixedMultiplicityFromSeries(data.reduced, {1, 2}) == 0);
  CHECK(mixedMultiplicityFromSeries(data.reduced, {0, 3}) == 0);
}

TEST_CASE("an m-primary second ideal gives the same low mixed multiplicities") {
  auto R = wxyz();
  const Ideal J = idealSum(idealPower(Ideal::maximal(R), 4), ideal(R, {"x^2 - y*w", "x^3 - z*w^2"}));
  const std::vector<Ideal> family{Ideal::maximal(R), J};
  CHECK(mixedMultiplicity({family, {3, 0}}) == 1);
  CHECK(mixedMultiplicity({family, {2, 1}}) == 2);
}

TEST_CASE("grade-zero ideal handled by passing to a saturated quotient") {
  auto Q = quotientRing({"w", "x", "y", "z"}, {"w*x", "y*z"});
  const Ideal sat = saturate(Ideal(Q, {}), ideal(Q, {"w", "y"}));
  RingContext ctx = *Q;
  ctx.quotientGens = sat.groebnerBasis();
  auto L = makeRing(std::move(ctx));
  CHECK(krullDimension(Ideal(L, {})) == 2);
  CHECK(mixedMultiplicity({{Ideal::maximal(L), Ideal::maximal(L)}, {1, 0}}) == 3);
}

TEST_CASE("sectional Milnor numbers of a Fermat quartic") {
  auto R = ring({"x", "y", "z"});
  const MilnorResult expected{{0, 1}, {1, 3}, {2, 9}, {3, 27}};
  CHECK(secMilnorNumbers(poly(R, "x^4 + y^4 + z^4")) == expected);
}

TEST_CASE("sectional Milnor numbers agree with mixed volumes for a smooth cubic") {
  auto R = ring({"a", "b", "c"});
  const auto h = poly(R, "a^3 + b^3 + c^3 + a*b*c");
  const MilnorResult expected{{0, 1}, {1, 2}, {2, 4}, {3, 8}};
  const auto mu = secMilnorNumbers(h);
  CHECK(mu == expected);
  const auto Dh = supportPolytopeOfPartials(h);
  const std::vector<std::vector<LatticePolytope>> pairs{{kTriangle, kTriangle}, {kTriangle, Dh}, {Dh, Dh}};
  for (std::size_t i = 0; i < 3; ++i) CHECK(mMixedVolume(pairs[i]) == mu.at(i));
}

TEST_CASE("a singular cubic separates mixed multiplicity from mixed volume") {
  auto R = ring({"a", "b", "c"});
  const auto h = poly(R, "b*(a*b - c^2)");
  const Ideal J(R, {partialDerivative(h, 0), partialDerivative(h, 1), partialDerivative(h, 2)});
  const std::vector<Ideal> family{Ideal::maximal(R), J};
  const auto Dh = supportPolytopeOfPartials(h);
  const std::vector<std::vector<std::int64_t>> indices{{2, 0}, {1, 1}, {0, 2}};
  const std::vector<std::vector<LatticePolytope>> pairs{{kTriangle, kTriangle}, {kTriangle, Dh}, {Dh, Dh}};
  const std::vector<BigInt> mult{1, 2, 1}, vol{1, 2, 2};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(mixedMultiplicity({family, indices[i]}) == mult[i]);
    CHECK(mMixedVolume(pairs[i]) == vol[i]);
  }
  CHECK(mixedMultiplicity({family, indices[2]}) < mMixedVolume(pairs[2]));
  CHECK(codeOf([&] { secMilnorNumbers(h); }) == ErrorCode::NotPrimaryToMaximal);
}

TEST_CASE("the Briancon-Speder family keeps the Milnor number but not the plane section") {
  auto R = ring({"x", "y", "z"});
  const MilnorResult one{{0, 1}, {1, 4}, {2, 26}, {3, 364}};
  const MilnorResult zero{{0, 1}, {1, 4}, {2, 28}, {3, 364}};
  CHECK(secMilnorNumbers(poly(R, "z^5 + y^6*z + x*y^7 + x^15")) == one);
  CHECK(secMilnorNumbers(poly(R, "z^5 + x*y^7 + x^15")) == zero);
}

TEST_CASE("local Milnor number of a quadric with a cubic term") {
  auto R = ring({"x", "y", "z"});
  const auto f = poly(R, "x^2 + y^2 + z^2 + x*y*z");
  CHECK(milnorNumberLocal(f) == 1);
  CHECK(codeOf([&] { milnorNumberLocal(poly(R, "x*y")); }) == ErrorCode::NotIsolated);
}

TEST_CASE("small mixed volumes") {
  const std::vector<LatticePolytope> a{{{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}, {{{0, 0}, {1, 0}, {0, 1}, {0, 2}}}};
  CHECK(mMixedVolume(a) == 4);
  CHECK(mixedVolumeGeometric(a) == 4);
  const std::vector<LatticePolytope> b{{{{0, 0}, {0, 2}, {2, 0}, {2, 2}}}, {{{0, 0}, {1, 2}, {2, 1}}}};
  CHECK(mMixedVolume(b) == 8);
  CHECK(mixedVolumeGeometric(b) == 8);
}

TEST_CASE("homogenized ideals of point sets") {
  const auto I = homIdealPolytope({{{1}, {2}}});
  CHECK(idealEquality(I, ideal(I.ring(), {"x_1*x_2", "x_1^2"})));
  const auto U = homIdealPolytope({{{0, 0}}});
  CHECK(idealEquality(U, ideal(U.ring(), {"1"})));
  const auto T = homIdealPolytope(kTriangle);
  CHECK(idealEquality(T, Ideal::maximal(T.ring())));
}

TEST_CASE("support polytope of the partial derivatives") {
  auto R = ring({"a", "b", "c"});
  CHECK(supportPolytopeOfPartials(poly(R, "a^2")).points == std::vector<LatticePoint>{{0, 0}});
  CHECK(supportPolytopeOfPartials(poly(R, "a^3 + b^3 + c^3")).points ==
        std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}});
  auto hullOf = [&](const std::string& h) {
    const auto pts = supportPolytopeOfPartials(poly(R, h)).points;
    auto hull = convexHull2D(pts);
    std::sort(hull.begin(), hull.end());
    return hull;
  };
  CHECK(hullOf("a^3 + b^3 + c^3 + a*b*c") == std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}});
  CHECK(hullOf("b*(a*b - c^2)") == std::vector<LatticePoint>{{0, 2}, {1, 0}, {2, 0}});
}

TEST_CASE("Euler characteristics of projective hypersurface complements") {
  auto R2 = ring({"x", "y"});
  CHECK(eulerCharacteristicComplement(poly(R2, "x^2 + y^2")) == 1);
  auto R3 = ring({"a", "b", "c"});
  CHECK(eulerCharacteristicComplement(poly(R3, "a^2 + b^2 + c^2")) == 0);
  CHECK(eulerCharacteristicComplement(poly(R3, "a^3 + b^3 + c^3 + a*b*c")) == -5);
}

TEST_CASE("Rees algebra multiplicities") {
  auto R = ring({"x", "y"});
  CHECK(reesAlgebraMultiplicity({ideal(R, {"x", "y"})}) == 2);
  CHECK(reesAlgebraMultiplicity({ideal(R, {"x"})}) == 1);
}

TEST_CASE("mixed Ehrhart leading coefficient") {
  const std::vector<LatticePolytope> simplices{kTriangle, kTriangle};
  CHECK(mixedEhrhartLeadingCoeff(simplices) == 2);
}

TEST_CASE("mixed multiplicity errors") {
  auto R = wxyz();
  const auto m = Ideal::maximal(R);
  const auto I = ideal(R, {"x^2 - y*w", "x^3 - z*w^2"});
  CHECK(codeOf([&] { mixedMultiplicity({{m, I}, {3}}); }) == ErrorCode::IndexLengthMismatch);
  CHECK(codeOf([&] { mixedMultiplicity({{m, I}, {4, -1}}); }) == ErrorCode::BadArgument);
  CHECK(codeOf([&] { mixedMultiplicity({{m, I}, {2, 0}}); }) == ErrorCode::IndexDegreeMismatch);
  CHECK(codeOf([&] { mixedMultiplicity({{I, m}, {3, 0}}); }) == ErrorCode::NotPrimaryToMaximal);
  auto Q = quotientRing({"w", "x", "y", "z"}, {"w*x", "y*z"});
  CHECK(codeOf([&] { mixedMultiplicity({{Ideal::maximal(Q), ideal(Q, {"w", "y"})}, {1, 0}}); }) ==
        ErrorCode::GradeZero);
  std::vector<LatticePolytope> one{kTriangle};
  CHECK(codeOf([&] { mMixedVolume(one); }) == ErrorCode::CountMismatch);
}

TEST_CASE("mixed multiplicities are symmetric in the non-primary ideals") {
  auto R = ring({"x", "y", "z"});
  std::mt19937 rng(7);
  for (int i = 0; i < 6; ++i) {
    const Ideal A(R, {randomHomogeneous(rng, 3, 2, 1), randomHomogeneous(rng, 3, 2, 1)});
    const Ideal B(R, {randomHomogeneous(rng, 3, 2, 2), randomHomogeneous(rng, 3, 2, 2)});
    if (cleanGenerators(A).empty() || cleanGenerators(B).empty()) continue;
    const auto m = Ideal::maximal(R);
    const auto ab = fiberSeries({m, A, B});
    const auto ba = fiberSeries({m, B, A});
    for (std::int64_t a1 = 0; a1 <= 2; ++a1) {
      for (std::int64_t a2 = 0; a1 + a2 <= 2; ++a2) {
        const std::int64_t a0 = 2 - a1 - a2;
        CHECK(mixedMultiplicityFromSeries(ab.reduced, {a0, a1, a2}) ==
              mixedMultiplicityFromSeries(ba.reduced, {a0, a2, a1}));
      }
    }
  }
}

TEST_CASE("normalization: e_(d-1, 0) of an m-primary family is the multiplicity of the ring") {
  auto R = ring({"x", "y", "z"});
  CHECK(mixedMultiplicity({{Ideal::maximal(R), ideal(R, {"x^2", "y"})}, {2, 0}}) == 1);
  auto Q = quotientRing({"x", "y", "z"}, {"x^3 + y^3 + z^3"});
  CHECK(mixedMultiplicity({{Ideal::maximal(Q), Ideal::maximal(Q)}, {1, 0}}) == 3);
}

TEST_CASE("algebraic and geometric mixed volumes agree on random plane pairs") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const std::vector<LatticePolytope> pair{randomPolygon(rng, 4), randomPolygon(rng, 4)};
    CHECK(mMixedVolume(pair) == mixedVolumeGeometric(pair));
  }
}

TEST_CASE("Teissier identity, Huh inequality and Milnor consistency on diagonal forms") {
  auto R = ring({"x", "y", "z"});
  for (int a = 2; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) {
      const auto f = poly(R, "x^" + std::to_string(a) + " + y^" + std::to_string(b) + " + z^" + std::to_string(b));
      const auto mu = secMilnorNumbers(f);
      const Ideal J(R, {partialDerivative(f, 0), partialDerivative(f, 1), partialDerivative(f, 2)});
      for (std::int64_t i = 0; i < 3; ++i) {
        CHECK(mu.at(static_cast<std::size_t>(i)) == mixedMultiplicity({{Ideal::maximal(R), J}, {2 - i, i}}));
      }
      CHECK(mu.at(3) == BigInt((a - 1) * (b - 1) * (b - 1)));
      CHECK(mu.at(3) == milnorNumberLocal(f));
      if (a != b) continue;
      const auto Dh = supportPolytopeOfPartials(f);
      const std::vector<std::vector<LatticePolytope>> pairs{{kTriangle, kTriangle}, {kTriangle, Dh}, {Dh, Dh}};
      for (std::size_t i = 0; i < 3; ++i) CHECK(mu.at(i) <= mMixedVolume(pairs[i]));
    }
  }
}

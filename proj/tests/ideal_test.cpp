#include <doctest.h>

#include "mixmult/error.hpp"
#include "mixmult/groebner.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool sameIdeal(const Ideal& I, const Ideal& J) { return isSubideal(I, J) && isSubideal(J, I); }

}  // namespace

TEST_CASE("normal form by a single division step") {
  auto R = ring({"x", "y"});
  const Ideal I = ideal(R, {"x^2 - y"});
  const auto r = normalForm(poly(R, "x^2*y"), I);
  CHECK(r == poly(R, "y^2"));
  CHECK(poly(R, "x^2*y") - r == poly(R, "y") * poly(R, "x^2 - y"));
  for (const auto& g : I.groebnerBasis()) CHECK(normalForm(g, I).isZero());
  CHECK(normalForm(poly(R, "1"), ideal(R, {"x", "y"})) == poly(R, "1"));
}

TEST_CASE("lex basis of the twisted cubic") {
  auto R = ring({"x", "y", "z"});
  const Ideal I = ideal(R, {"x^2 - y", "x^3 - z"});
  const auto& G = I.groebnerBasis(MonomialOrder::lex());
  const std::vector<Polynomial> expected{poly(R, "x^2 - y"), poly(R, "x*y - z"), poly(R, "x*z - y^2"),
                                         poly(R, "y^3 - z^2")};
  REQUIRE(G.size() == expected.size());
  for (const auto& e : expected) CHECK(std::find(G.begin(), G.end(), e) != G.end());
  // Membership both ways.
  for (const auto& e : expected) CHECK(idealMembership(e, I));
  CHECK(sameIdeal(Ideal(R, expected), I));
  CHECK(ideal(R, {"x", "y"}).groebnerBasis(MonomialOrder::lex()).size() == 2);
  CHECK(Ideal::zero(R).groebnerBasis().empty());
}

TEST_CASE("membership and equality") {
  auto R = ring({"x", "y", "z"});
  CHECK(idealMembership(poly(R, "y^3 - z^2"), ideal(R, {"x^2 - y", "x^3 - z"})));
  CHECK_FALSE(idealMembership(poly(R, "x"), ideal(R, {"x^2"})));
  CHECK(idealEquality(ideal(R, {"x", "y"}), ideal(R, {"y", "x + y"})));
}

TEST_CASE("elimination") {
  auto R = ring({"x", "y", "z"});
  const std::vector<std::size_t> x{0};
  const Ideal E = eliminate(ideal(R, {"y - x^2", "z - x^3"}), x);
  std::vector<Polynomial> param{poly(R, "x"), poly(R, "x^2"), poly(R, "x^3")};
  for (const auto& g : E.gens()) {
    CHECK(g.degreeIn(0) == 0);
    CHECK(substitute(g, param).isZero());
  }
  CHECK(idealMembership(poly(R, "z^2 - y^3"), E));
  CHECK(idealEquality(eliminate(ideal(R, {"x", "y"}), x), ideal(R, {"y"})));
  CHECK(eliminate(ideal(R, {"x - 1"}), x).groebnerBasis().empty());
}

TEST_CASE("colon ideals") {
  auto R = ring({"x", "y"});
  const Ideal I = ideal(R, {"x^2", "x*y"});
  const Ideal C = colon(I, ideal(R, {"x"}));
  CHECK(idealEquality(C, ideal(R, {"x", "y"})));
  CHECK(idealMembership(poly(R, "x") * poly(R, "x"), I));
  CHECK(idealMembership(poly(R, "y") * poly(R, "x"), I));
  CHECK(idealEquality(colon(I, Ideal::unit(R)), I));
  CHECK(colon(I, Ideal::zero(R)).isUnit());
}

TEST_CASE("colon by the saturation isolates the singular point at the origin") {
  auto R = ring({"x", "y", "z"});
  const auto f = poly(R, "x^2 + y^2 + z^2 + x*y*z");
  const Ideal J(R, {partialDerivative(f, 0), partialDerivative(f, 1), partialDerivative(f, 2)});
  const Ideal S = saturate(J, Ideal::maximal(R));
  CHECK_FALSE(S.isUnit());
  const Ideal Q = colon(J, S);
  CHECK(isPrimaryToMaxIdeal(Q));
  CHECK(kDimension(Q) == 1);
}

TEST_CASE("saturation") {
  auto R = ring({"x", "y"});
  const Ideal S = saturate(ideal(R, {"x^2*y", "x*y^2"}), poly(R, "x"));
  CHECK(idealEquality(S, ideal(R, {"y"})));
  CHECK(idealEquality(colon(S, poly(R, "x")), S));
  const Ideal I = ideal(R, {"x^2 - y", "x*y"});
  CHECK(idealEquality(saturate(I, poly(R, "1")), I));
}

TEST_CASE("saturating zero by a grade-zero ideal of a quotient ring") {
  auto R = quotientRing({"w", "x", "y", "z"}, {"w*x", "y*z"});
  const Ideal L = saturate(Ideal::zero(R), ideal(R, {"w", "y"}));
  CHECK(krullDimension(L) == 2);
  auto S = ring({"w", "x", "y", "z"});
  CHECK(idealEquality(Ideal(S, L.groebnerBasis()), ideal(S, {"w*x", "x*z", "y*z"})));
}

TEST_CASE("powers, products and sums") {
  auto R = ring({"x", "y"});
  CHECK(idealEquality(idealPower(ideal(R, {"x", "y"}), 2), ideal(R, {"x^2", "x*y", "y^2"})));
  CHECK(idealPower(ideal(R, {"x", "y"}), 2).gens().size() == 3);
  CHECK(idealEquality(idealProduct(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  CHECK_THROWS_AS(idealPower(ideal(R, {"x"}), -1), Error);
  auto S = ring({"w", "x", "y", "z"});
  const Ideal J = idealSum(idealPower(Ideal::maximal(S), 4), ideal(S, {"x^2 - y*w", "x^3 - z*w^2"}));
  CHECK(idealMembership(poly(S, "x^2 - y*w"), J));
  CHECK(idealMembership(poly(S, "w*x*y*z"), J));
  CHECK_FALSE(idealMembership(poly(S, "w*x*y"), J));
  CHECK(isPrimaryToMaxIdeal(J));
}

TEST_CASE("initial ideals") {
  auto R = ring({"x", "y", "z"});
  CHECK(initialIdeal(ideal(R, {"x^2 - y"})) == MonomialIdeal(3, {Monomial{2, 0, 0}}));
  const auto M = initialIdeal(ideal(R, {"x^2 - y", "x^3 - z"}), MonomialOrder::lex());
  CHECK(M == MonomialIdeal(3, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 3, 0}}));
  CHECK(initialIdeal(Ideal::zero(R)).empty());
}

TEST_CASE("Krull dimension") {
  auto R = ring({"x", "y", "z"});
  CHECK(krullDimension(Ideal::zero(R)) == 3);
  auto S = ring({"x", "y"});
  CHECK(krullDimension(ideal(S, {"x"})) == 1);
  CHECK(krullDimension(Ideal::unit(S)) == -1);
}

TEST_CASE("vector-space dimension") {
  auto R = ring({"x", "y", "z"});
  CHECK(kDimension(ideal(R, {"4*x^3", "4*y^3", "4*z^3"})) == 27);
  auto S = ring({"x", "y"});
  CHECK(kDimension(ideal(S, {"x^2", "y^3"})) == 6);
  try {
    (void)kDimension(ideal(S, {"x"}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotZeroDimensional);
  }
}

TEST_CASE("primary to the maximal ideal") {
  auto R = ring({"x", "y", "z"});
  const auto f = poly(R, "z^5 + y^6*z + x*y^7 + x^15");
  const Ideal J(R, {partialDerivative(f, 0), partialDerivative(f, 1), partialDerivative(f, 2)});
  CHECK(isPrimaryToMaxIdeal(J));
  const auto M = initialIdeal(J);
  for (std::size_t v = 0; v < 3; ++v) {
    bool pure = false;
    for (const auto& g : M.gens()) pure = pure || (g.support() == std::vector<std::size_t>{v});
    CHECK(pure);
  }
  auto S = ring({"x", "y"});
  CHECK_FALSE(isPrimaryToMaxIdeal(ideal(S, {"x"})));
  // Finite-dimensional but supported away from the origin.
  CHECK_FALSE(isPrimaryToMaxIdeal(ideal(S, {"x - 1", "y"})));
}

TEST_CASE("positive grade") {
  auto Q = quotientRing({"w", "x", "y", "z"}, {"w*x", "y*z"});
  CHECK_FALSE(hasPositiveGrade(ideal(Q, {"w", "y"})));
  CHECK(hasPositiveGrade(ideal(Q, {"w + x"})));
  auto R = ring({"w", "x", "y", "z"});
  CHECK(hasPositiveGrade(ideal(R, {"x^2 - y*w"})));
  CHECK_FALSE(hasPositiveGrade(Ideal::zero(R)));
}

TEST_CASE("normal form is idempotent") {
  std::mt19937 rng(21);
  auto R = ring({"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    const Ideal I(R, {randomPoly(rng, 3, 3, 3), randomPoly(rng, 3, 3, 3)});
    const auto p = randomPoly(rng, 3, 5, 4);
    const auto r = normalForm(p, I);
    CHECK(normalForm(r, I) == r);
    CHECK(idealMembership(p - r, I));
  }
}

TEST_CASE("saturation contains the ideal and is saturated") {
  std::mt19937 rng(22);
  auto R = ring({"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    const Ideal I(R, {randomPoly(rng, 3, 3, 3), randomPoly(rng, 3, 2, 3)});
    const auto h = randomPoly(rng, 3, 2, 2);
    if (h.isZero()) continue;
    const Ideal S = saturate(I, h);
    CHECK(isSubideal(I, S));
    CHECK(idealEquality(colon(S, h), S));
  }
}

TEST_CASE("Krull dimension does not depend on the order") {
  std::mt19937 rng(23);
  auto R = ring({"a", "b", "c", "d"});
  for (int i = 0; i < 200; ++i) {
    const Ideal I(R, {randomPoly(rng, 4, 2, 3), randomPoly(rng, 4, 2, 2)});
    CHECK(krullDimension(initialIdeal(I)) == krullDimension(initialIdeal(I, MonomialOrder::lex())));
  }
}

TEST_CASE("vector-space dimension of pure powers is their product") {
  std::mt19937 rng(24);
  auto R = ring({"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    std::vector<Polynomial> gens;
    long product = 1;
    for (std::size_t v = 0; v < 3; ++v) {
      const unsigned e = 1 + rng() % 5;
      product *= e;
      Monomial m(3);
      m.set(v, e);
      gens.push_back(Polynomial::monomial(m));
    }
    CHECK(kDimension(Ideal(R, gens)) == product);
  }
}

TEST_CASE("modular bases share leading monomials with rational bases for a lucky prime") {
  std::mt19937 rng(25);
  for (int i = 0; i < 50; ++i) {
    const std::vector<Polynomial> gens{randomPoly(rng, 3, 3, 3), randomPoly(rng, 3, 3, 3), randomPoly(rng, 3, 2, 2)};
    const auto overQ = reducedGroebnerBasis(3, gens, MonomialOrder::grevlex());
    const auto overP = reducedGroebnerBasisModular(3, gens, MonomialOrder::grevlex(), 2147483629u);
    REQUIRE(overQ.size() == overP.size());
    for (std::size_t k = 0; k < overQ.size(); ++k) {
      CHECK(leadingTerm(overQ[k], MonomialOrder::grevlex()).mono == leadingTerm(overP[k], MonomialOrder::grevlex()).mono);
    }
  }
}

TEST_CASE("a prime dividing a denominator is rejected") {
  auto R = ring({"x", "y"});
  const std::vector<Polynomial> gens{poly(R, "1/7*x + y")};
  try {
    (void)reducedGroebnerBasisModular(2, gens, MonomialOrder::grevlex(), 7);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnluckyPrime);
  }
}

TEST_CASE("ideal guards carry their error codes") {
  auto codeOf = [](const auto& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::AssertionFailed;
  };
  auto R = ring({"x", "y"});
  auto S = ring({"x", "y", "z"});
  CHECK(codeOf([&] { idealPower(ideal(R, {"x"}), -1); }) == ErrorCode::NegativePower);
  CHECK(codeOf([&] { idealSum(ideal(R, {"x"}), ideal(S, {"z"})); }) == ErrorCode::RingMismatch);
  CHECK(codeOf([&] { Ideal(R, {poly(S, "z")}); }) == ErrorCode::RingMismatch);
}

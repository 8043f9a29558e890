#include <doctest.h>

#include "mixmult/error.hpp"
#include "mixmult/hilbert.hpp"
#include "mixmult/multiplicity.hpp"
#include "support.hpp"

using namespace testing;

namespace {

SeriesPolynomial univariate(std::initializer_list<long> coeffs) {
  SeriesPolynomial out;
  long k = 0;
  for (long c : coeffs) {
    if (c != 0) out[{k}] = c;
    ++k;
  }
  return out;
}

GradingMatrix standard(std::size_t numVars) { return GradingMatrix(numVars, std::vector<std::int64_t>{1}); }

// Number of monomials of multidegree u outside M, by enumeration.
BigInt countStandard(const MonomialIdeal& M, const GradingMatrix& grading, const std::vector<std::int64_t>& u) {
  const std::size_t n = M.numVars();
  BigInt count = 0;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      std::vector<std::int64_t> d(u.size(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < u.size(); ++i) d[i] += grading[k][i] * m[k];
      }
      if (d == u && !M.contains(m)) ++count;
      return;
    }
    std::int64_t bound = 0;
    for (std::size_t i = 0; i < u.size(); ++i) bound += grading[v][i] * u[i];
    for (std::int64_t e = 0; e <= bound; ++e) {
      m.set(v, static_cast<Exponent>(e));
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  rec(rec, 0);
  return count;
}

// k-th derivative of N at 1, straight from the power rule.
BigInt derivativeAtOne(const SeriesPolynomial& N, std::int64_t k) {
  BigInt total = 0;
  for (const auto& [e, c] : N) {
    BigInt falling = 1;
    for (std::int64_t j = 0; j < k; ++j) falling *= (e[0] - j);
    total += c * falling;
  }
  return total;
}

}  // namespace

TEST_CASE("K-polynomials of small monomial ideals") {
  CHECK(kPolynomial(MonomialIdeal(1, {Monomial{1}}), standard(1)).numerator == univariate({1, -1}));
  const MonomialIdeal M(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  const auto S = kPolynomial(M, standard(2));
  CHECK(S.numerator == univariate({1, 0, -3, 2}));
  CHECK(S.denomExponents == std::vector<std::int64_t>{2});
  // Inclusion-exclusion over the three generators gives the same numerator.
  CHECK(reduceSeries(S).numerator == univariate({1, 2}));
  CHECK(kPolynomial(MonomialIdeal(2, {}), standard(2)).numerator == univariate({1}));
}

TEST_CASE("a variable of degree zero is rejected") {
  try {
    (void)kPolynomial(MonomialIdeal(2, {Monomial{1, 0}}), GradingMatrix{{1}, {0}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDegreeVariable);
  }
}

TEST_CASE("exact division by 1 - t") {
  MultigradedSeries S{univariate({1, 0, -1}), {2}};
  auto D = divideOutExact(S, 0);
  REQUIRE(D);
  CHECK(D->numerator == univariate({1, 1}));
  CHECK(D->denomExponents == std::vector<std::int64_t>{1});
  CHECK_FALSE(divideOutExact(*D, 0).has_value());
  MultigradedSeries T{univariate({1, 0, -3, 2}), {2}};
  auto once = divideOutExact(T, 0);
  REQUIRE(once);
  auto twice = divideOutExact(*once, 0);
  REQUIRE(twice);
  CHECK(twice->numerator == univariate({1, 2}));
  CHECK(twice->denomExponents == std::vector<std::int64_t>{0});
}

TEST_CASE("reduction cancels common factors and is idempotent") {
  MultigradedSeries S{univariate({1, 0, -1}), {2}};
  const auto R = reduceSeries(S);
  CHECK(R.numerator == univariate({1, 1}));
  CHECK(R.denomExponents == std::vector<std::int64_t>{1});
  CHECK(reduceSeries(R) == R);
}

TEST_CASE("reduced fiber series of m and the twisted quartic ideal") {
  auto R = ring({"w", "x", "y", "z"});
  const auto data = fiberSeries({Ideal::maximal(R), ideal(R, {"x^2 - y*w", "x^3 - z*w^2"})});
  // s = (3, 1): the exponents are s_i + 1.
  CHECK(data.reduced.denomExponents == std::vector<std::int64_t>{4, 2});
  CHECK(thmCoefficient(data.reduced, {3, 0}) == BigInt(1));
  CHECK(thmCoefficient(data.reduced, {2, 1}) == BigInt(2));
}

TEST_CASE("top coefficients") {
  CHECK(thmCoefficient({univariate({1, 1}), {1}}, {0}) == BigInt(2));
  CHECK(thmCoefficient({{{{0, 0}, BigInt(1)}}, {3, 2}}, {2, 1}) == BigInt(1));
  CHECK_FALSE(thmCoefficient({univariate({1, 1}), {1}}, {1}).has_value());
}

TEST_CASE("slice counts along a ray follow a cubic with leading coefficient 1/3!") {
  auto R = ring({"w", "x", "y", "z"});
  const auto data = fiberSeries({Ideal::maximal(R), ideal(R, {"x^2 - y*w", "x^3 - z*w^2"})});
  std::vector<BigInt> values;
  for (std::int64_t u = 10; u <= 14; ++u) values.push_back(hilbertFunctionValue(data.fiberIdeal, data.tGrading, {u, 0}));
  // Third differences of a cubic a*u^3 + ... are constant, equal to 6a = 1.
  std::vector<BigInt> d = values;
  for (int round = 0; round < 3; ++round) {
    for (std::size_t k = 0; k + 1 < d.size(); ++k) d[k] = d[k + 1] - d[k];
    d.pop_back();
  }
  CHECK(d[0] == 1);
  CHECK(d[1] == 1);
}

TEST_CASE("slice counts in trivial cases") {
  auto R = ring({"x"});
  CHECK(hilbertFunctionValue(Ideal::zero(R), GradingMatrix{{1}}, {5}) == 1);
  auto S = ring({"x", "y"});
  CHECK(hilbertFunctionValue(Ideal::zero(S), GradingMatrix{{1, 0}, {1, 0}}, {2, 3}) == 0);
}

TEST_CASE("K-polynomial coefficients match direct standard-monomial counts") {
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
      auto m = randomMonomial(rng, n, 3);
      if (!m.isOne()) gens.push_back(m);
    }
    const MonomialIdeal M(n, gens);
    GradingMatrix grading(n, std::vector<std::int64_t>(2, 0));
    for (std::size_t v = 0; v < n; ++v) grading[v][v % 2] = 1;
    const auto S = kPolynomial(M, grading);
    for (std::int64_t a = 0; a <= 4; ++a) {
      for (std::int64_t b = 0; a + b <= 8 && b <= 4; ++b) {
        CHECK(seriesCoefficient(S, {a, b}) == countStandard(M, grading, {a, b}));
      }
    }
  }
}

TEST_CASE("the binomial shift computes derivatives at one") {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    SeriesPolynomial N;
    for (std::int64_t e = 0; e <= 6; ++e) {
      const int a = c(rng);
      if (a != 0) N[{e}] = a;
    }
    for (std::int64_t k = 0; k <= 3; ++k) {
      // thmCoefficient with s = k, alpha = 0 reads (-1)^k [u^k] N(1 + u).
      const auto shifted = thmCoefficient({N, {k + 1}}, {0});
      REQUIRE(shifted.has_value());
      BigInt factorial = 1;
      for (std::int64_t j = 2; j <= k; ++j) factorial *= j;
      const BigInt signedValue = k % 2 == 0 ? *shifted : BigInt(-*shifted);
      CHECK(signedValue * factorial == derivativeAtOne(N, k));
    }
  }
}

TEST_CASE("reduction preserves the series") {
  std::mt19937 rng(33);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) {
      auto m = randomMonomial(rng, n, 2);
      if (!m.isOne()) gens.push_back(m);
    }
    GradingMatrix grading(n, std::vector<std::int64_t>(2, 0));
    for (std::size_t v = 0; v < n; ++v) grading[v][v % 2] = 1;
    const auto S = kPolynomial(MonomialIdeal(n, gens), grading);
    const auto R = reduceSeries(S);
    for (std::int64_t a = 0; a <= 5; ++a) {
      for (std::int64_t b = 0; b <= 5; ++b) CHECK(seriesCoefficient(S, {a, b}) == seriesCoefficient(R, {a, b}));
    }
  }
}

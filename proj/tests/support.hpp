#pragma once

#include <random>
#include <string>
#include <vector>

#include "mixmult/ideal.hpp"
#include "mixmult/polyring.hpp"
#include "mixmult/session.hpp"

namespace testing {

using namespace mixmult;

inline RingPtr ring(std::vector<std::string> names) {
  return makeRing(RingContext::polynomialRing(std::move(names)));
}

inline RingPtr quotientRing(std::vector<std::string> names, const std::vector<std::string>& rels) {
  RingContext ctx = RingContext::polynomialRing(std::move(names));
  std::vector<Polynomial> gens;
  for (const auto& r : rels) gens.push_back(parsePolynomial(r, ctx));
  ctx.quotientGens = std::move(gens);
  return makeRing(std::move(ctx));
}

inline Polynomial poly(const RingPtr& R, const std::string& text) { return parsePolynomial(text, *R); }

inline Ideal ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(poly(R, g));
  return Ideal(R, std::move(out));
}

inline std::string show(const RingPtr& R, const Polynomial& p) { return toString(p, R->varNames); }

/// Random polynomial with up to `terms` terms, small integer coefficients and
/// total degree at most `maxDeg`.
inline Polynomial randomPoly(std::mt19937& rng, std::size_t numVars, int terms, int maxDeg, int coeff = 3) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> deg(0, maxDeg);
  std::uniform_int_distribution<std::size_t> var(0, numVars - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(numVars);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      const auto v = var(rng);
      m.set(v, m[v] + 1);
    }
    const int a = c(rng);
    if (a != 0) out.push_back({Rational(a), std::move(m)});
  }
  return Polynomial::fromTerms(numVars, std::move(out));
}

inline Polynomial randomHomogeneous(std::mt19937& rng, std::size_t numVars, int terms, int degree, int coeff = 3) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<std::size_t> var(0, numVars - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(numVars);
    for (int k = 0; k < degree; ++k) {
      const auto v = var(rng);
      m.set(v, m[v] + 1);
    }
    const int a = c(rng);
    if (a != 0) out.push_back({Rational(a), std::move(m)});
  }
  return Polynomial::fromTerms(numVars, std::move(out));
}

inline Monomial randomMonomial(std::mt19937& rng, std::size_t numVars, int maxExp) {
  std::uniform_int_distribution<int> e(0, maxExp);
  Monomial m(numVars);
  for (std::size_t v = 0; v < numVars; ++v) m.set(v, static_cast<Exponent>(e(rng)));
  return m;
}

}  // namespace testing

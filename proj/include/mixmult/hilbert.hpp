#pragma once

// Multigraded Hilbert series of monomial quotients in the rational form
// N(t) / prod_i (1 - t_i)^{k_i}.

#include <map>
#include <optional>
#include <vector>

#include "mixmult/ideal.hpp"

namespace mixmult {

/// Integer polynomial in the series variables, keyed by exponent vector.
using SeriesPolynomial = std::map<std::vector<std::int64_t>, BigInt>;

struct MultigradedSeries {
  SeriesPolynomial numerator;
  std::vector<std::int64_t> denomExponents;

  std::size_t rank() const noexcept { return denomExponents.size(); }
  friend bool operator==(const MultigradedSeries&, const MultigradedSeries&) = default;
};

using GradingMatrix = std::vector<std::vector<std::int64_t>>;

/// Numerator over prod_v (1 - t^{deg v}) for k[vars]/M. Every grading row
/// must be a unit vector; the denominator exponent of t_i is the number of
/// variables of degree e_i.
MultigradedSeries kPolynomial(const MonomialIdeal& M, const GradingMatrix& grading);

/// Removes one factor (1 - t_i) if it divides the numerator; nullopt otherwise.
std::optional<MultigradedSeries> divideOutExact(const MultigradedSeries& S, std::size_t i);

/// Cancels (1 - t_i) factors for every i until none divides the numerator.
MultigradedSeries reduceSeries(const MultigradedSeries& S);

/// Substitutes t_i = 1 in a series whose denominator no longer involves t_i,
/// and drops that variable.
MultigradedSeries evaluateAtOne(const MultigradedSeries& S, std::size_t i);

/// Coefficient c_alpha of prod_i binom(u_i + alpha_i, alpha_i) in the Hilbert
/// polynomial, read off as (-1)^{|s-alpha|} [u^{s-alpha}] N(1 + u) with
/// s_i = k_i - 1. Nullopt when some alpha_i > s_i: the polynomial has no such
/// term.
std::optional<BigInt> thmCoefficient(const MultigradedSeries& S, const std::vector<std::int64_t>& alpha);

/// Hilbert polynomial value sum_{alpha <= s} c_alpha prod binom(u_i + alpha_i, alpha_i).
BigInt hilbertPolynomialValue(const MultigradedSeries& S, const std::vector<std::int64_t>& u);

/// Coefficient of t^u in the power series expansion of S.
BigInt seriesCoefficient(const MultigradedSeries& S, const std::vector<std::int64_t>& u);

/// Number of standard monomials of in(J) whose degree under `tGrading` is u.
/// Rows of `tGrading` are zero or unit vectors; the variables with a zero row
/// are counted inside each slice, which must be finite.
BigInt hilbertFunctionValue(const Ideal& J, const GradingMatrix& tGrading, const std::vector<std::int64_t>& u);

/// Exact binomial coefficient C(n, k) for n >= 0 (0 when k < 0 or k > n).
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace mixmult

#pragma once

// Mixed multiplicities e_a(I_0 | I_1, ..., I_r) read off the Hilbert series
// of the special fiber of a multi-Rees algebra, and the invariants built on
// them: mixed volumes, sectional Milnor numbers, Euler characteristics of
// hypersurface complements and Rees-algebra multiplicities.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mixmult/hilbert.hpp"
#include "mixmult/ideal.hpp"
#include "mixmult/polytope.hpp"
#include "mixmult/rees.hpp"

namespace mixmult {

struct MixedMultQuery {
  /// I_0, I_1, ..., I_r in one ring; I_0 primary to the maximal ideal.
  std::vector<Ideal> ideals;
  /// a_0, ..., a_r with a_0 + ... + a_r = dim R - 1.
  std::vector<std::int64_t> index;
};

/// Everything the Hilbert-series route produces for a family of ideals.
struct FiberData {
  ReesResult rees;
  /// L + I_0 S + K S in the extended ring.
  Ideal fiberIdeal;
  MonomialIdeal initial;
  /// Y_ij -> e_i and base variables -> 0, one row per extended variable.
  GradingMatrix tGrading;
  /// Series in t_0..t_r after the base variables are summed out.
  MultigradedSeries tSeries;
  MultigradedSeries reduced;
};

/// Runs the fiber pipeline for (I_0, ..., I_r). Generating sets are trimmed
/// first; over a quotient ring a nonzerodivisor is located in each ideal.
/// Throws GradeZero, MissingNonzerodivisor or NotPrimaryToMaximal.
FiberData fiberSeries(const std::vector<Ideal>& ideals);

/// Coefficient for `index` in the reduced fiber series (0 when absent).
BigInt mixedMultiplicityFromSeries(const MultigradedSeries& reduced, const std::vector<std::int64_t>& index);

/// e_a(I_0 | I_1, ..., I_r). Checks, in order: index length, positive grade,
/// |a| = d - 1, and I_0 primary to the maximal ideal.
BigInt mixedMultiplicity(const MixedMultQuery& q);

/// Homogenization of the point set with respect to a new last variable:
/// x^p * x_{n+1}^(D - |p|) for every point p, D the largest |p|. Variables
/// are named x_1, ..., x_{n+1}.
Ideal homIdealPolytope(const LatticePolytope& P);

/// MV_n(Q_1..Q_n) = e_(0,1,...,1)(m | I_1, ..., I_n) with I_j the
/// homogenized ideal of Q_j.
BigInt mMixedVolume(std::span<const LatticePolytope> polys);
/// The same for ideals already in Q[x_1..x_{n+1}]; exactly n are required.
BigInt mMixedVolume(std::span<const Ideal> ideals);

using MilnorResult = std::map<std::size_t, BigInt>;

/// mu^(i) = e_i(m | J(f)) for i < n from one fiber series, and mu^(n) =
/// dim Q[x]/J(f). Requires J(f) primary to (x_1..x_n).
MilnorResult secMilnorNumbers(const Polynomial& f);

/// dim Q[x]/(J : (J : m^inf)) with J = J(f); requires (f) + J(f) primary to m.
BigInt milnorNumberLocal(const Polynomial& f);

/// Exponents, with the first variable dropped, of every monomial of every
/// partial derivative of the homogeneous h. Sorted and deduplicated.
LatticePolytope supportPolytopeOfPartials(const Polynomial& h);

/// sum_i (-1)^i e_i(m | J(h)) for homogeneous h.
BigInt eulerCharacteristicComplement(const Polynomial& h);

/// Sum of e_a(m | I_1, ..., I_r) over all a with |a| = d - 1.
BigInt reesAlgebraMultiplicity(const std::vector<Ideal>& ideals);

/// n! * MV_n(P_1, ..., P_n).
BigInt mixedEhrhartLeadingCoeff(std::span<const LatticePolytope> polys);

}  // namespace mixmult

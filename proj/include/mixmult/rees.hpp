#pragma once

// Defining ideals of multi-Rees algebras R[I_1 t_1, ..., I_s t_s].

#include <optional>
#include <vector>

#include "mixmult/ideal.hpp"

namespace mixmult {

struct ReesSpec {
  std::vector<Ideal> ideals;
  /// One nonzerodivisor per ideal, each lying in that ideal (usually one of
  /// its generators). Optional over a polynomial ring, where the first
  /// generator is used.
  std::optional<std::vector<Polynomial>> nzds;
};

struct ReesResult {
  /// Base variables followed by Y_i_j (1-based), graded by
  /// x -> (0,...,0; 1) and Y_i_j -> (e_i; deg f_ij).
  RingPtr extendedRing;
  Ideal definingIdeal;
  std::size_t baseVars = 0;
  /// Generators f_ij after dropping zeros and duplicates.
  std::vector<std::vector<Polynomial>> generators;
  /// Index of Y_i_j in the extended ring.
  std::vector<std::vector<std::size_t>> yVars;
  std::vector<Polynomial> nzds;
  /// False when some f_ij is inhomogeneous, so the last grading coordinate
  /// is only a bookkeeping total degree.
  bool internalDegreeMeaningful = true;
  /// Positive weights on the extended ring making the defining ideal
  /// homogeneous, when the f_ij and K admit common base weights.
  std::optional<std::vector<std::size_t>> weights;
};

/// Zero and duplicate generators removed, order otherwise kept.
std::vector<Polynomial> cleanGenerators(const Ideal& I);

/// (K : a) = K in the ring of `ctx`.
bool validateNonzerodivisor(const RingPtr& ring, const Polynomial& a);

/// A nonzerodivisor of the ring lying in I: the first generator that is one,
/// else the sum of the generators, else a few small integer combinations.
std::optional<Polynomial> findNonzerodivisor(const Ideal& I);

/// <Y_ij f_ij' - Y_ij' f_ij> : h^infinity with h the product of the
/// nonzerodivisors, computed in the extended ring with K adjoined.
ReesResult multiReesIdeal(const ReesSpec& spec);

/// The same construction carried out modulo `prime`. Generators are residues
/// in [0, prime) and are meaningful only modulo the prime.
ReesResult multiReesIdealModular(const ReesSpec& spec, std::uint32_t prime);

/// Kernel of Y_ij -> f_ij T_i by eliminating the T variables. Polynomial base
/// rings only.
ReesResult reesIdealByElimination(const ReesSpec& spec);

/// Image of `g` (in the extended ring) under Y_ij -> f_ij T_i, reduced modulo
/// K. The result lives in the base variables followed by T_1..T_s.
Polynomial reesImage(const ReesResult& rees, const Polynomial& g);

/// Multidegree of every generator of the defining ideal, in stored order.
std::vector<std::optional<Multidegree>> generatorDegrees(const ReesResult& rees);

}  // namespace mixmult

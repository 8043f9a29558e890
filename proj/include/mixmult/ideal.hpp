#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixmult/groebner.hpp"
#include "mixmult/polyring.hpp"

namespace mixmult {

/// Ideal of Q[x...]/K given by generators. Every basis computation adjoins
/// the quotient generators K of the ring, so bases describe the preimage of
/// the ideal in the polynomial ring. Reduced bases are cached per order;
/// copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal generated by all variables.
  static Ideal maximal(RingPtr ring);
  /// Wraps a basis that is already the reduced grevlex basis of itself plus
  /// K, seeding the cache instead of recomputing it.
  static Ideal fromGrevlexBasis(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const RingContext& ctx() const noexcept { return *ring_; }
  std::size_t numVars() const noexcept { return ring_->numVars(); }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }

  /// Reduced Groebner basis of gens + K.
  const std::vector<Polynomial>& groebnerBasis(
      const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  /// Generators followed by the quotient generators.
  std::vector<Polynomial> liftedGens() const;

  bool isUnit() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Positive integer weights under which every polynomial in `polys` is
/// homogeneous (all ones when that works), or nullopt if none is found.
std::optional<std::vector<std::size_t>> homogenizingWeights(std::size_t numVars,
                                                            std::span<const Polynomial> polys);

/// Monomial ideal with a minimal generating set (no generator divides
/// another), sorted for deterministic output.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t numVars, std::vector<Monomial> gens);

  std::size_t numVars() const noexcept { return numVars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  bool isUnit() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t numVars_ = 0;
  std::vector<Monomial> gens_;
};

Polynomial normalForm(const Polynomial& p, const Ideal& I,
                      const MonomialOrder& ord = MonomialOrder::grevlex());

bool idealMembership(const Polynomial& p, const Ideal& I);
/// I ⊆ J.
bool isSubideal(const Ideal& I, const Ideal& J);
bool idealEquality(const Ideal& I, const Ideal& J);

/// I ∩ Q[other variables], via an elimination order. The result lives in the
/// same ring.
Ideal eliminate(const Ideal& I, std::span<const std::size_t> vars);

Ideal intersect(const Ideal& I, const Ideal& J);
/// (I : g) = (I ∩ (g)) / g.
Ideal colon(const Ideal& I, const Polynomial& g);
/// (I : J) as the intersection of the colons by the generators of J.
Ideal colon(const Ideal& I, const Ideal& J);

/// I : h^∞. When I + K and h are homogeneous for some positive weights this
/// is saturateHomogeneous, otherwise saturateByElimination.
Ideal saturate(const Ideal& I, const Polynomial& h);
/// I : h^∞ by eliminating an auxiliary variable u from <I, 1 - u*h>.
Ideal saturateByElimination(const Ideal& I, const Polynomial& h);
/// I : h^∞ for I + K and h homogeneous under `weights`: adjoin v = h as the
/// last variable of a weighted revlex order, strip powers of v from the
/// basis, then substitute h back for v.
Ideal saturateHomogeneous(const Ideal& I, const Polynomial& h, const std::vector<std::size_t>& weights);
/// Generators of (gens) : h^∞ over Q, or over F_p when `prime` is nonzero,
/// for gens and h homogeneous under `weights`.
std::vector<Polynomial> saturateHomogeneousGens(std::size_t numVars, std::span<const Polynomial> gens,
                                                const Polynomial& h, const std::vector<std::size_t>& weights,
                                                std::uint32_t prime = 0);
/// Generators of (gens) : h^∞ over Q or F_p by eliminating u from
/// <gens, 1 - u*h>.
std::vector<Polynomial> saturateByEliminationGens(std::size_t numVars, std::span<const Polynomial> gens,
                                                  const Polynomial& h, std::uint32_t prime = 0);
/// Reduced basis over Q (prime 0) or over F_p.
std::vector<Polynomial> groebnerBasisOver(std::size_t numVars, std::span<const Polynomial> gens,
                                          const MonomialOrder& ord, std::uint32_t prime);
/// I : J^∞ as the intersection of the saturations by the generators of J.
Ideal saturate(const Ideal& I, const Ideal& J);
/// I : h^∞ by repeated colons until the chain stabilises.
Ideal saturateByIteratedColon(const Ideal& I, const Polynomial& h);

/// Removes zero and duplicate generators, then drops (in order) every
/// generator that lies in the ideal generated by the remaining ones.
Ideal trim(const Ideal& I);
Ideal idealPower(const Ideal& I, std::int64_t k);
Ideal idealProduct(const Ideal& I, const Ideal& J);
Ideal idealSum(const Ideal& I, const Ideal& J);

MonomialIdeal initialIdeal(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex());

/// Krull dimension of the ambient polynomial ring modulo I + K. The unit ideal
/// reports -1.
std::int64_t krullDimension(const Ideal& I);
std::int64_t krullDimension(const MonomialIdeal& M);

/// Vector-space dimension of Q[x]/(I + K); throws NotZeroDimensional if it is
/// infinite.
BigInt kDimension(const Ideal& I);
BigInt standardMonomialCount(const MonomialIdeal& M);
bool isZeroDimensional(const MonomialIdeal& M);

/// I + K is primary to the ideal generated by the variables: the quotient is
/// finite-dimensional and every variable is nilpotent in it.
bool isPrimaryToMaxIdeal(const Ideal& I);

/// (K : I) = K, i.e. I contains a nonzerodivisor of Q[x]/K.
bool hasPositiveGrade(const Ideal& I);

}  // namespace mixmult

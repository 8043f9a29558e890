#pragma once

// Buchberger's algorithm over Q and over prime fields. Callers normally go through Ideal, which
// caches bases and adjoins the quotient generators of the ring.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixmult/polyring.hpp"

namespace mixmult {

struct GroebnerStats {
  std::size_t pairsConsidered = 0;
  std::size_t pairsReduced = 0;
  std::size_t zeroReductions = 0;
};

/// Reduced Groebner basis (monic, self-reduced) of the ideal generated by
/// `gens` in a ring with `numVars` variables. Output is sorted by leading
/// monomial, largest first. The zero ideal yields an empty basis and the unit
/// ideal yields {1}.
std::vector<Polynomial> reducedGroebnerBasis(std::size_t numVars,
                                             std::span<const Polynomial> gens,
                                             const MonomialOrder& ord,
                                             GroebnerStats* stats = nullptr);

/// The same basis computed modulo an odd prime p < 2^31. Input coefficients
/// are reduced mod p (UnluckyPrime if p divides a denominator); output
/// coefficients are the residues in [0, p).
std::vector<Polynomial> reducedGroebnerBasisModular(std::size_t numVars,
                                                    std::span<const Polynomial> gens,
                                                    const MonomialOrder& ord, std::uint32_t prime,
                                                    GroebnerStats* stats = nullptr);

/// Remainder of `p` on division by `basis`: no term of the result is
/// divisible by a leading monomial of `basis`.
Polynomial normalForm(const Polynomial& p, std::span<const Polynomial> basis,
                      const MonomialOrder& ord);

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace mixmult

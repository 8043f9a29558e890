#pragma once

// Exact sparse multivariate polynomials over Q, monomial orders and
// multigradings. Everything above this layer is built from these types.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mixmult {

using BigInt = mpz_class;
using Rational = mpq_class;
using Exponent = std::uint32_t;

/// Exponent vector with one slot per ring variable. Arithmetic is checked:
/// overflowing an exponent throws ExponentOverflow instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t numVars) : exps_(numVars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  void set(std::size_t i, Exponent e) { exps_[i] = e; }

  std::uint64_t totalDegree() const noexcept;
  bool isOne() const noexcept;
  bool divides(const Monomial& other) const noexcept;
  bool coprimeTo(const Monomial& other) const noexcept;

  /// Variables with a positive exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors, used for hashing and
  /// deterministic containers; not a monomial order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A monomial order. Elimination orders compare the eliminated block first
/// (grevlex inside the block) and break ties by grevlex on the remaining
/// variables. Weighted grevlex compares the weighted degree first, then
/// reverse lexicographically.
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, Elimination, WeightedGRevLex };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, {}); }
  static MonomialOrder elimination(std::vector<std::size_t> eliminated);
  /// Weights must be positive, one per variable.
  static MonomialOrder weightedGrevlex(std::vector<std::size_t> weights);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& eliminated() const noexcept { return block_; }
  const std::vector<std::size_t>& weights() const noexcept { return block_; }

  /// Three-way comparison; `greater` means `a` is the larger monomial.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  /// Stable textual key, e.g. "grevlex", "elim{3,4}" or "wgrevlex{1,2,3}".
  std::string key() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> block)
      : kind_(kind), block_(std::move(block)) {}

  Kind kind_;
  std::vector<std::size_t> block_;
};

/// Sparse polynomial over Q in a fixed number of variables. Terms are kept
/// strictly decreasing in grevlex with no zero coefficients; the zero
/// polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t numVars) : numVars_(numVars) {}

  static Polynomial constant(std::size_t numVars, const Rational& c);
  static Polynomial variable(std::size_t numVars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial fromTerms(std::size_t numVars, std::vector<Term> terms);

  std::size_t numVars() const noexcept { return numVars_; }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Coefficient of `m` (zero if absent).
  Rational coefficient(const Monomial& m) const;
  std::uint64_t totalDegree() const;
  /// Largest exponent of variable `var` over all terms.
  Exponent degreeIn(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  Polynomial pow(std::uint64_t k) const;
  Polynomial mulMonomial(const Monomial& m) const;

  /// Divides every coefficient by the leading (grevlex) coefficient.
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t numVars_ = 0;
  std::vector<Term> terms_;
};

using Multidegree = std::vector<std::int64_t>;

/// Variable names, a multigrading (one row per variable) and the generators
/// of K when the ring is a quotient Q[x...]/K.
struct RingContext {
  std::vector<std::string> varNames;
  std::vector<std::vector<std::int64_t>> grading;
  std::vector<Polynomial> quotientGens;

  /// Polynomial ring with the standard Z-grading (every variable degree 1).
  static RingContext polynomialRing(std::vector<std::string> names);

  std::size_t numVars() const noexcept { return varNames.size(); }
  std::size_t gradingRank() const noexcept {
    return grading.empty() ? 0 : grading.front().size();
  }
  bool isQuotient() const noexcept { return !quotientGens.empty(); }
  std::optional<std::size_t> indexOf(const std::string& name) const;

  /// Throws on duplicate names, ragged grading rows or foreign quotient
  /// generators.
  void validate() const;

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr makeRing(RingContext ctx) {
  ctx.validate();
  return std::make_shared<const RingContext>(std::move(ctx));
}

enum class ArithOp { Add, Sub, Mul };

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp which);

/// Maximal term of `p` under `ord`; throws ZeroPolynomial for p = 0.
Term leadingTerm(const Polynomial& p, const MonomialOrder& ord);

Multidegree degreeOf(const Monomial& m, const RingContext& ctx);

/// Common multidegree of all terms, or nullopt when `p` is inhomogeneous.
/// The zero polynomial reports the zero multidegree.
std::optional<Multidegree> multidegree(const Polynomial& p, const RingContext& ctx);

/// Deletes every term that involves one of `vars`.
Polynomial substituteZero(const Polynomial& p, std::span<const std::size_t> vars);

/// Multiplies each term by var^(targetDegree - its degree in the other
/// variables).
Polynomial homogenize(const Polynomial& p, std::size_t var, std::uint64_t targetDegree);

Polynomial partialDerivative(const Polynomial& p, std::size_t var);

/// Ring map: variable i of `p` is sent to images[i]; all images share a
/// variable count.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Embeds `p` into a ring with `numVars` variables, sending variable i to
/// variable varMap[i].
Polynomial embed(const Polynomial& p, std::size_t numVars,
                 std::span<const std::size_t> varMap);

/// Divides by the monomial `m`; requires every term to be divisible.
Polynomial divideByMonomial(const Polynomial& p, const Monomial& m);

/// Exact polynomial division p / d. Returns nullopt if `d` does not divide `p`.
std::optional<Polynomial> exactQuotient(const Polynomial& p, const Polynomial& d);

std::string toString(const Rational& q);
std::string toString(const Monomial& m, std::span<const std::string> names);
/// Human-readable form, e.g. "x^2*y - 3/2*z + 1".
std::string toString(const Polynomial& p, std::span<const std::string> names);

}  // namespace mixmult

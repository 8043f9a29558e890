#include "mixmult/polyring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

Exponent checkedAdd(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorCode::ExponentOverflow, "exponent overflow in monomial product");
  }
  return r;
}

void requireSameVars(const Polynomial& p, const Polynomial& q) {
  if (p.numVars() != q.numVars()) {
    fail(ErrorCode::RingMismatch, "polynomials live in rings with different variable counts");
  }
}

std::strong_ordering grevlexCompare(const Monomial& a, const Monomial& b) {
  const auto da = a.totalDegree();
  const auto db = b.totalDegree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

// Grevlex restricted to the variables with inBlock[i] == want.
std::strong_ordering grevlexCompareMasked(const Monomial& a, const Monomial& b,
                                          const std::vector<bool>& inBlock, bool want) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (inBlock[i] == want) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (inBlock[i] == want && a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

bool grevlexGreater(const Term& a, const Term& b) {
  return grevlexCompare(a.mono, b.mono) == std::strong_ordering::greater;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::totalDegree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::isOne() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprimeTo(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s.push_back(i);
  }
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checkedAdd(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) fail(ErrorCode::NotDivisible, "monomial quotient is not exact");
    r.exps_[i] = exps_[i] - other.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = static_cast<std::uint64_t>(exps_[i]) * k;
    if (k != 0 && (e / k != exps_[i] || e > std::numeric_limits<Exponent>::max())) {
      fail(ErrorCode::ExponentOverflow, "exponent overflow in monomial power");
    }
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> eliminated) {
  std::sort(eliminated.begin(), eliminated.end());
  eliminated.erase(std::unique(eliminated.begin(), eliminated.end()), eliminated.end());
  return MonomialOrder(Kind::Elimination, std::move(eliminated));
}

MonomialOrder MonomialOrder::weightedGrevlex(std::vector<std::size_t> weights) {
  for (auto w : weights) {
    if (w == 0) fail(ErrorCode::BadArgument, "order weights must be positive");
  }
  return MonomialOrder(Kind::WeightedGRevLex, std::move(weights));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::GRevLex:
      return grevlexCompare(a, b);
    case Kind::Elimination: {
      std::vector<bool> inBlock(a.size(), false);
      for (auto v : block_) {
        if (v < inBlock.size()) inBlock[v] = true;
      }
      auto c = grevlexCompareMasked(a, b, inBlock, true);
      if (c != std::strong_ordering::equal) return c;
      return grevlexCompareMasked(a, b, inBlock, false);
    }
    case Kind::WeightedGRevLex: {
      if (block_.size() != a.size()) fail(ErrorCode::RingMismatch, "order weights do not match the variables");
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += block_[i] * a[i];
        db += block_[i] * b[i];
      }
      if (da != db) return da <=> db;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GRevLex: return "grevlex";
    case Kind::Elimination:
    case Kind::WeightedGRevLex: {
      std::string s = kind_ == Kind::Elimination ? "elim{" : "wgrevlex{";
      for (std::size_t i = 0; i < block_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(block_[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t numVars, const Rational& c) {
  Polynomial p(numVars);
  if (c != 0) p.terms_.push_back({c, Monomial(numVars)});
  return p;
}

Polynomial Polynomial::variable(std::size_t numVars, std::size_t index) {
  Monomial m(numVars);
  m.set(index, 1);
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::fromTerms(std::size_t numVars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.size() != numVars) {
      fail(ErrorCode::RingMismatch, "term has the wrong number of exponents");
    }
  }
  std::sort(terms.begin(), terms.end(), grevlexGreater);
  Polynomial p(numVars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::isConstant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

std::uint64_t Polynomial::totalDegree() const {
  // Grevlex sorts by total degree first.
  return terms_.empty() ? 0 : terms_.front().mono.totalDegree();
}

Exponent Polynomial::degreeIn(std::size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  requireSameVars(*this, q);
  Polynomial r(numVars_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < q.terms_.size()) {
    const auto c = grevlexCompare(terms_[i].mono, q.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(q.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + q.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  requireSameVars(*this, q);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * q.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : q.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
  }
  return fromTerms(numVars_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(numVars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(numVars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mulMonomial(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / terms_.front().coeff);
}

// ------------------------------------------------------------- RingContext

RingContext RingContext::polynomialRing(std::vector<std::string> names) {
  RingContext ctx;
  ctx.grading.assign(names.size(), std::vector<std::int64_t>{1});
  ctx.varNames = std::move(names);
  return ctx;
}

std::optional<std::size_t> RingContext::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < varNames.size(); ++i) {
    if (varNames[i] == name) return i;
  }
  return std::nullopt;
}

void RingContext::validate() const {
  std::set<std::string> seen;
  for (const auto& n : varNames) {
    if (!seen.insert(n).second) fail(ErrorCode::DuplicateName, "duplicate variable name '" + n + "'");
  }
  if (grading.size() != varNames.size()) {
    fail(ErrorCode::BadArgument, "grading must have one row per variable");
  }
  for (const auto& row : grading) {
    if (row.size() != gradingRank()) fail(ErrorCode::BadArgument, "grading rows have different lengths");
    for (auto v : row) {
      if (v < 0) fail(ErrorCode::BadArgument, "grading entries must be nonnegative");
    }
  }
  for (const auto& g : quotientGens) {
    if (g.numVars() != varNames.size()) {
      fail(ErrorCode::RingMismatch, "quotient generator lives in a different ring");
    }
  }
}

// -------------------------------------------------------------- operations

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp which) {
  switch (which) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
  }
  return p;
}

Term leadingTerm(const Polynomial& p, const MonomialOrder& ord) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  if (ord.kind() == MonomialOrder::Kind::GRevLex) return p.terms().front();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (ord.compare(t.mono, best->mono) == std::strong_ordering::greater) best = &t;
  }
  return *best;
}

Multidegree degreeOf(const Monomial& m, const RingContext& ctx) {
  Multidegree d(ctx.gradingRank(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += static_cast<std::int64_t>(m[i]) * ctx.grading[i][k];
  }
  return d;
}

std::optional<Multidegree> multidegree(const Polynomial& p, const RingContext& ctx) {
  if (p.isZero()) return Multidegree(ctx.gradingRank(), 0);
  Multidegree first = degreeOf(p.terms().front().mono, ctx);
  for (const auto& t : p.terms().subspan(1)) {
    if (degreeOf(t.mono, ctx) != first) return std::nullopt;
  }
  return first;
}

Polynomial substituteZero(const Polynomial& p, std::span<const std::size_t> vars) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    bool hit = false;
    for (auto v : vars) {
      if (v < t.mono.size() && t.mono[v] != 0) {
        hit = true;
        break;
      }
    }
    if (!hit) kept.push_back(t);
  }
  return Polynomial::fromTerms(p.numVars(), std::move(kept));
}

Polynomial homogenize(const Polynomial& p, std::size_t var, std::uint64_t targetDegree) {
  if (var >= p.numVars()) fail(ErrorCode::BadArgument, "homogenizing variable out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const std::uint64_t d = t.mono.totalDegree() - t.mono[var];
    if (d > targetDegree) {
      fail(ErrorCode::DegreeTooLarge, "a term exceeds the homogenization degree");
    }
    Monomial m = t.mono;
    m.set(var, 0);
    const std::uint64_t e = targetDegree - d;
    if (e > std::numeric_limits<Exponent>::max()) fail(ErrorCode::ExponentOverflow, "homogenization degree too large");
    m.set(var, static_cast<Exponent>(e));
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial::fromTerms(p.numVars(), std::move(out));
}

Polynomial partialDerivative(const Polynomial& p, std::size_t var) {
  if (var >= p.numVars()) fail(ErrorCode::BadArgument, "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const Exponent e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({t.coeff * e, std::move(m)});
  }
  return Polynomial::fromTerms(p.numVars(), std::move(out));
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.numVars()) fail(ErrorCode::RingMismatch, "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().numVars();
  Polynomial result(target);
  // Cache powers per variable; exponents in practice stay small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] != 0) term = term * power(v, t.mono[v]);
    }
    result += term;
  }
  return result;
}

Polynomial embed(const Polynomial& p, std::size_t numVars, std::span<const std::size_t> varMap) {
  if (varMap.size() != p.numVars()) fail(ErrorCode::RingMismatch, "embedding needs one target per variable");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(numVars);
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] != 0) m.set(varMap[v], m[varMap[v]] + t.mono[v]);
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial::fromTerms(numVars, std::move(out));
}

Polynomial divideByMonomial(const Polynomial& p, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.coeff, t.mono / m});
  return Polynomial::fromTerms(p.numVars(), std::move(out));
}

std::optional<Polynomial> exactQuotient(const Polynomial& p, const Polynomial& d) {
  requireSameVars(p, d);
  if (d.isZero()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const Term& lead = d.terms().front();
  Polynomial rest = p;
  std::vector<Term> quotient;
  while (!rest.isZero()) {
    const Term& lt = rest.terms().front();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Term q{lt.coeff / lead.coeff, lt.mono / lead.mono};
    rest -= d.mulMonomial(q.mono) * q.coeff;
    quotient.push_back(std::move(q));
  }
  return Polynomial::fromTerms(p.numVars(), std::move(quotient));
}

std::string toString(const Rational& q) { return q.get_str(); }

std::string toString(const Monomial& m, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string toString(const Polynomial& p, std::span<const std::string> names) {
  if (p.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const bool unitMono = t.mono.isOne();
    if (unitMono) {
      s += toString(c);
    } else {
      if (c != 1) s += toString(c) + "*";
      s += toString(t.mono, names);
    }
  }
  return s;
}

}  // namespace mixmult

#include "mixmult/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

// Monomials are packed into int32 "keys" so that comparing two monomials in
// the active order is a plain lexicographic comparison of the keys and
// multiplying them is entrywise addition. Each grevlex block contributes a
// degree header followed by its exponents in reverse variable order, negated;
// a block with one variable contributes just that exponent.
class Layout {
 public:
  Layout(std::size_t numVars, const MonomialOrder& ord) : numVars_(numVars) {
    std::vector<std::vector<std::size_t>> blocks;
    switch (ord.kind()) {
      case MonomialOrder::Kind::Lex:
        for (std::size_t v = 0; v < numVars; ++v) blocks.push_back({v});
        break;
      case MonomialOrder::Kind::WeightedGRevLex:
        if (ord.weights().size() != numVars) fail(ErrorCode::RingMismatch, "order weights do not match the variables");
        weight_.assign(ord.weights().begin(), ord.weights().end());
        [[fallthrough]];
      case MonomialOrder::Kind::GRevLex: {
        std::vector<std::size_t> all(numVars);
        std::iota(all.begin(), all.end(), 0);
        blocks.push_back(all);
        break;
      }
      case MonomialOrder::Kind::Elimination: {
        std::vector<bool> in(numVars, false);
        for (auto v : ord.eliminated()) {
          if (v < numVars) in[v] = true;
        }
        std::vector<std::size_t> first, rest;
        for (std::size_t v = 0; v < numVars; ++v) (in[v] ? first : rest).push_back(v);
        if (!first.empty()) blocks.push_back(first);
        if (!rest.empty()) blocks.push_back(rest);
        break;
      }
    }
    if (weight_.empty()) weight_.assign(numVars, 1);
    pos_.assign(numVars, 0);
    sign_.assign(numVars, 1);
    header_.assign(numVars, -1);
    for (const auto& block : blocks) {
      if (block.size() == 1) {
        pos_[block[0]] = static_cast<std::int32_t>(kind_.size());
        kind_.push_back(1);
        continue;
      }
      const auto h = static_cast<std::int32_t>(kind_.size());
      kind_.push_back(0);
      for (auto it = block.rbegin(); it != block.rend(); ++it) {
        pos_[*it] = static_cast<std::int32_t>(kind_.size());
        sign_[*it] = -1;
        header_[*it] = h;
        kind_.push_back(-1);
      }
    }
    width_ = kind_.size();
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t numVars() const noexcept { return numVars_; }

  void encode(const Monomial& m, std::int32_t* out) const {
    std::fill(out, out + width_, 0);
    for (std::size_t v = 0; v < numVars_; ++v) {
      const Exponent e = m[v];
      if (e > static_cast<Exponent>(std::numeric_limits<std::int32_t>::max() / 2)) {
        fail(ErrorCode::ExponentOverflow, "exponent too large for the Groebner engine");
      }
      const auto se = static_cast<std::int32_t>(e);
      out[pos_[v]] = sign_[v] * se;
      if (header_[v] >= 0) out[header_[v]] += weight_[v] * se;
    }
  }

  Monomial decode(const std::int32_t* key) const {
    Monomial m(numVars_);
    for (std::size_t v = 0; v < numVars_; ++v) {
      m.set(v, static_cast<Exponent>(sign_[v] * key[pos_[v]]));
    }
    return m;
  }

  std::int32_t exponent(const std::int32_t* key, std::size_t v) const {
    return sign_[v] * key[pos_[v]];
  }

  /// Weighted degree; the plain total degree unless the order is weighted.
  std::uint64_t degree(const std::int32_t* key) const {
    std::uint64_t d = 0;
    for (std::size_t v = 0; v < numVars_; ++v) {
      d += static_cast<std::uint64_t>(weight_[v]) * static_cast<std::uint64_t>(sign_[v] * key[pos_[v]]);
    }
    return d;
  }

  std::uint64_t sev(const std::int32_t* key) const {
    std::uint64_t s = 0;
    for (std::size_t v = 0; v < numVars_; ++v) {
      if (key[pos_[v]] != 0) s |= std::uint64_t{1} << (v & 63);
    }
    return s;
  }

  int compare(const std::int32_t* a, const std::int32_t* b) const {
    for (std::size_t i = 0; i < width_; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  bool divides(const std::int32_t* a, const std::int32_t* b) const {
    for (std::size_t i = 0; i < width_; ++i) {
      const auto k = kind_[i];
      if (k == 1) {
        if (a[i] > b[i]) return false;
      } else if (k == -1) {
        if (a[i] < b[i]) return false;
      }
    }
    return true;
  }

  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const {
    for (std::size_t i = 0; i < width_; ++i) {
      if (__builtin_add_overflow(a[i], b[i], &out[i])) {
        fail(ErrorCode::ExponentOverflow, "exponent overflow during reduction");
      }
    }
  }

  void quotient(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const {
    for (std::size_t i = 0; i < width_; ++i) out[i] = a[i] - b[i];
  }

  void lcm(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const {
    std::fill(out, out + width_, 0);
    for (std::size_t v = 0; v < numVars_; ++v) {
      const auto e = std::max(exponent(a, v), exponent(b, v));
      out[pos_[v]] = sign_[v] * e;
      if (header_[v] >= 0) out[header_[v]] += weight_[v] * e;
    }
  }

  bool coprime(const std::int32_t* a, const std::int32_t* b) const {
    for (std::size_t v = 0; v < numVars_; ++v) {
      if (a[pos_[v]] != 0 && b[pos_[v]] != 0) return false;
    }
    return true;
  }

  bool isOne(const std::int32_t* key) const {
    for (std::size_t i = 0; i < width_; ++i) {
      if (key[i] != 0) return false;
    }
    return true;
  }

 private:
  std::size_t numVars_;
  std::size_t width_ = 0;
  std::vector<std::int32_t> pos_;
  std::vector<std::int32_t> sign_;
  std::vector<std::int32_t> header_;
  std::vector<std::int32_t> weight_;
  std::vector<std::int8_t> kind_;
};

// Polynomial over a coefficient domain, terms strictly decreasing in the
// layout's order.
template <class C>
struct KeyPoly {
  std::vector<C> coef;
  std::vector<std::int32_t> keys;
  std::uint64_t sugar = 0;

  std::size_t size() const noexcept { return coef.size(); }
  bool empty() const noexcept { return coef.empty(); }
  const std::int32_t* mono(std::size_t i, std::size_t w) const { return keys.data() + i * w; }
  void clear() {
    coef.clear();
    keys.clear();
  }
  void push(C c, const std::int32_t* key, std::size_t w) {
    coef.push_back(std::move(c));
    keys.insert(keys.end(), key, key + w);
  }
};

template <class C>
struct Element {
  KeyPoly<C> poly;
  std::vector<std::int32_t> lead;
  std::uint64_t sev = 0;
  std::uint64_t leadDegree = 0;
  bool active = true;
};

constexpr std::size_t kNoPartner = std::numeric_limits<std::size_t>::max();

template <class C>
class Reducers {
 public:
  explicit Reducers(const Layout& layout) : layout_(layout) {}

  std::vector<Element<C>>& elements() noexcept { return elements_; }
  const std::vector<Element<C>>& elements() const noexcept { return elements_; }

  void add(KeyPoly<C> p) {
    const std::size_t w = layout_.width();
    Element<C> e;
    e.lead.assign(p.mono(0, w), p.mono(0, w) + w);
    e.sev = layout_.sev(e.lead.data());
    e.leadDegree = layout_.degree(e.lead.data());
    e.poly = std::move(p);
    elements_.push_back(std::move(e));
  }

  /// Shortest active element whose leading monomial divides `lt`.
  std::size_t find(const std::int32_t* lt, std::size_t skip) const {
    const std::uint64_t s = layout_.sev(lt);
    std::size_t best = kNoPartner;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const Element<C>& e = elements_[k];
      if (!e.active || k == skip) continue;
      if ((e.sev & ~s) != 0) continue;
      if (!layout_.divides(e.lead.data(), lt)) continue;
      if (best == kNoPartner || e.poly.size() < elements_[best].poly.size()) best = k;
    }
    return best;
  }

 private:
  const Layout& layout_;
  std::vector<Element<C>> elements_;
};

BigInt gcdOf(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcmOf(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Fraction-free arithmetic over Z: elements are kept primitive and every
// reduction step cross-multiplies by the leading coefficients.
class IntegerDomain {
 public:
  using Coef = BigInt;
  using Poly = KeyPoly<BigInt>;

  explicit IntegerDomain(const Layout& layout) : layout_(layout) {}

  Poly fromPolynomial(const Polynomial& p, Rational* scale = nullptr) const {
    BigInt den = 1;
    for (const auto& t : p.terms()) den = lcmOf(den, BigInt(t.coeff.get_den()));
    Poly r = encode(p, [&](const Rational& c) { return BigInt(c.get_num() * (den / c.get_den())); });
    if (scale) *scale = Rational(den);
    return r;
  }

  Polynomial toPolynomial(const Poly& p, const Rational& divisor) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rational c(p.coef[i]);
      c /= divisor;
      terms.push_back({std::move(c), layout_.decode(p.mono(i, layout_.width()))});
    }
    return Polynomial::fromTerms(layout_.numVars(), std::move(terms));
  }

  Polynomial toMonic(const Poly& p) const {
    if (p.empty()) return Polynomial(layout_.numVars());
    return toPolynomial(p, Rational(p.coef[0]));
  }

  void normalize(Poly& p) const {
    if (p.empty()) return;
    BigInt g = contentOf(p, Poly{}, 0);
    if (p.coef[0] < 0) g = -g;
    if (g != 1) {
      for (auto& c : p.coef) c /= g;
    }
  }

  // Reduces `p`; returns the factor c with result = c * (true remainder).
  BigInt reduce(Poly& p, const Reducers<BigInt>& by, bool full, std::size_t skip = kNoPartner,
                bool keepContent = false) const {
    const std::size_t w = layout_.width();
    BigInt factor = 1;
    Poly done;
    std::size_t start = 0;
    std::size_t steps = 0;
    std::vector<std::int32_t> m(w);
    Poly scratch;
    while (start < p.size()) {
      const std::int32_t* lt = p.mono(start, w);
      const std::size_t r = by.find(lt, skip);
      if (r == kNoPartner) {
        if (!full) break;
        done.push(std::move(p.coef[start]), lt, w);
        ++start;
        continue;
      }
      const auto& g = by.elements()[r];
      layout_.quotient(lt, g.lead.data(), m.data());
      BigInt gg = gcdOf(p.coef[start], g.poly.coef[0]);
      BigInt a = g.poly.coef[0] / gg;
      BigInt b = p.coef[start] / gg;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      combine(p, start + 1, a, nullptr, g.poly, 1, b, m.data(), scratch);
      std::swap(p, scratch);
      p.sugar = std::max(scratch.sugar, layout_.degree(m.data()) + g.poly.sugar);
      start = 0;
      if (a != 1) {
        for (auto& c : done.coef) c *= a;
        factor *= a;
      }
      if (!keepContent && (++steps & 15) == 0) {
        BigInt content = contentOf(done, p, start);
        if (content > 1) {
          for (auto& c : done.coef) c /= content;
          for (std::size_t i = start; i < p.size(); ++i) p.coef[i] /= content;
        }
      }
    }
    if (!done.empty() || start != 0) {
      for (std::size_t i = start; i < p.size(); ++i) done.push(std::move(p.coef[i]), p.mono(i, w), w);
      done.sugar = p.sugar;
      p = std::move(done);
    }
    return factor;
  }

  Poly sPoly(const Element<BigInt>& f, const Element<BigInt>& g, const std::int32_t* lcm) const {
    const std::size_t w = layout_.width();
    std::vector<std::int32_t> mf(w), mg(w);
    layout_.quotient(lcm, f.lead.data(), mf.data());
    layout_.quotient(lcm, g.lead.data(), mg.data());
    BigInt gg = gcdOf(f.poly.coef[0], g.poly.coef[0]);
    Poly out;
    combine(f.poly, 1, g.poly.coef[0] / gg, mf.data(), g.poly, 1, f.poly.coef[0] / gg, mg.data(), out);
    return out;
  }

  // The element with its tail fully reduced by the others.
  Poly reduceTail(const Poly& p, const Reducers<BigInt>& by, std::size_t self) const {
    const std::size_t w = layout_.width();
    Poly tail;
    tail.coef.assign(p.coef.begin() + 1, p.coef.end());
    tail.keys.assign(p.keys.begin() + static_cast<std::ptrdiff_t>(w), p.keys.end());
    const BigInt factor = reduce(tail, by, true, self, true);
    Poly out;
    out.push(p.coef[0] * factor, p.mono(0, w), w);
    for (std::size_t i = 0; i < tail.size(); ++i) out.push(std::move(tail.coef[i]), tail.mono(i, w), w);
    return out;
  }

 private:
  template <class F>
  Poly encode(const Polynomial& p, F coefficient) const {
    const std::size_t w = layout_.width();
    std::vector<std::pair<std::vector<std::int32_t>, BigInt>> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
      std::vector<std::int32_t> key(w);
      layout_.encode(t.mono, key.data());
      terms.emplace_back(std::move(key), coefficient(t.coeff));
    }
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return layout_.compare(a.first.data(), b.first.data()) > 0;
    });
    Poly r;
    for (auto& [key, c] : terms) {
      r.push(std::move(c), key.data(), w);
      r.sugar = std::max(r.sugar, layout_.degree(key.data()));
    }
    return r;
  }

  static BigInt contentOf(const Poly& a, const Poly& b, std::size_t from) {
    BigInt g = 0;
    for (const auto& c : a.coef) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return g;
    }
    for (std::size_t i = from; i < b.size(); ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.coef[i].get_mpz_t());
      if (g == 1) return g;
    }
    return g;
  }

  // out = a * (mf * f[fromF..]) - b * (mg * g[fromG..]); null multipliers mean 1.
  void combine(const Poly& f, std::size_t fromF, const BigInt& a, const std::int32_t* mf, const Poly& g,
               std::size_t fromG, const BigInt& b, const std::int32_t* mg, Poly& out) const {
    const std::size_t w = layout_.width();
    out.clear();
    out.coef.reserve((f.size() - fromF) + (g.size() - fromG));
    out.keys.reserve(out.coef.capacity() * w);
    std::vector<std::int32_t> kf(w), kg(w);
    std::size_t i = fromF, j = fromG;
    auto loadF = [&] {
      if (i >= f.size()) return;
      if (mf) layout_.multiply(f.mono(i, w), mf, kf.data());
      else std::copy(f.mono(i, w), f.mono(i, w) + w, kf.begin());
    };
    auto loadG = [&] {
      if (j >= g.size()) return;
      if (mg) layout_.multiply(g.mono(j, w), mg, kg.data());
      else std::copy(g.mono(j, w), g.mono(j, w) + w, kg.begin());
    };
    loadF();
    loadG();
    const bool aOne = a == 1;
    BigInt tmp;
    while (i < f.size() || j < g.size()) {
      int c;
      if (i >= f.size()) c = -1;
      else if (j >= g.size()) c = 1;
      else c = layout_.compare(kf.data(), kg.data());
      if (c > 0) {
        out.push(aOne ? f.coef[i] : BigInt(a * f.coef[i]), kf.data(), w);
        ++i;
        loadF();
      } else if (c < 0) {
        tmp = b * g.coef[j];
        out.push(-tmp, kg.data(), w);
        ++j;
        loadG();
      } else {
        if (aOne) tmp = f.coef[i];
        else tmp = a * f.coef[i];
        mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g.coef[j].get_mpz_t());
        if (tmp != 0) out.push(tmp, kf.data(), w);
        ++i;
        ++j;
        loadF();
        loadG();
      }
    }
    out.sugar = f.sugar;
  }

  const Layout& layout_;
};

// Arithmetic modulo a prime below 2^31 with monic elements. Reduction
// accumulates into a geometric bucket so each step costs about the length of
// the reducer rather than of the whole remainder.
class ModularDomain {
 public:
  using Coef = std::uint32_t;
  using Poly = KeyPoly<std::uint32_t>;

  ModularDomain(const Layout& layout, std::uint32_t prime) : layout_(layout), p_(prime) {}

  std::uint32_t prime() const noexcept { return p_; }

  Poly fromPolynomial(const Polynomial& p) const {
    const std::size_t w = layout_.width();
    std::vector<std::pair<std::vector<std::int32_t>, std::uint32_t>> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
      const auto den = static_cast<std::uint32_t>(mpz_fdiv_ui(t.coeff.get_den_mpz_t(), p_));
      if (den == 0) fail(ErrorCode::UnluckyPrime, "the prime divides a coefficient denominator");
      const auto num = static_cast<std::uint32_t>(mpz_fdiv_ui(t.coeff.get_num_mpz_t(), p_));
      if (num == 0) continue;
      std::vector<std::int32_t> key(w);
      layout_.encode(t.mono, key.data());
      terms.emplace_back(std::move(key), mul(num, inverse(den)));
    }
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return layout_.compare(a.first.data(), b.first.data()) > 0;
    });
    Poly r;
    for (auto& [key, c] : terms) {
      r.push(c, key.data(), w);
      r.sugar = std::max(r.sugar, layout_.degree(key.data()));
    }
    return r;
  }

  Polynomial toMonic(const Poly& p) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      terms.push_back({Rational(p.coef[i]), layout_.decode(p.mono(i, layout_.width()))});
    }
    return Polynomial::fromTerms(layout_.numVars(), std::move(terms));
  }

  void normalize(Poly& p) const {
    if (p.empty() || p.coef[0] == 1) return;
    const std::uint32_t inv = inverse(p.coef[0]);
    for (auto& c : p.coef) c = mul(c, inv);
  }

  void reduce(Poly& p, const Reducers<std::uint32_t>& by, bool full, std::size_t skip = kNoPartner) const {
    const std::size_t w = layout_.width();
    Bucket bucket(*this);
    bucket.add(p, 0, 1, nullptr);
    Poly out;
    out.sugar = p.sugar;
    std::vector<std::int32_t> key(w), m(w);
    std::uint32_t c = 0;
    while (bucket.pop(key.data(), c)) {
      const std::size_t r = by.find(key.data(), skip);
      if (r == kNoPartner) {
        out.push(c, key.data(), w);
        if (full) continue;
        while (bucket.pop(key.data(), c)) out.push(c, key.data(), w);
        break;
      }
      const auto& g = by.elements()[r];
      layout_.quotient(key.data(), g.lead.data(), m.data());
      bucket.add(g.poly, 1, p_ - c, m.data());
      out.sugar = std::max(out.sugar, layout_.degree(m.data()) + g.poly.sugar);
    }
    p = std::move(out);
  }

  Poly sPoly(const Element<std::uint32_t>& f, const Element<std::uint32_t>& g, const std::int32_t* lcm) const {
    const std::size_t w = layout_.width();
    std::vector<std::int32_t> mf(w), mg(w);
    layout_.quotient(lcm, f.lead.data(), mf.data());
    layout_.quotient(lcm, g.lead.data(), mg.data());
    Poly a, b, out;
    scaled(f.poly, 1, 1, mf.data(), a);
    scaled(g.poly, 1, p_ - 1, mg.data(), b);
    merge(a, 0, b, out);
    return out;
  }

  Poly reduceTail(const Poly& p, const Reducers<std::uint32_t>& by, std::size_t self) const {
    const std::size_t w = layout_.width();
    Poly tail;
    tail.coef.assign(p.coef.begin() + 1, p.coef.end());
    tail.keys.assign(p.keys.begin() + static_cast<std::ptrdiff_t>(w), p.keys.end());
    reduce(tail, by, true, self);
    Poly out;
    out.push(p.coef[0], p.mono(0, w), w);
    for (std::size_t i = 0; i < tail.size(); ++i) out.push(tail.coef[i], tail.mono(i, w), w);
    return out;
  }

 private:
  class Bucket {
   public:
    explicit Bucket(const ModularDomain& dom) : dom_(dom) {}

    // Adds c * m * f[from..].
    void add(const Poly& f, std::size_t from, std::uint32_t c, const std::int32_t* m) {
      if (from >= f.size()) return;
      dom_.scaled(f, from, c, m, incoming_);
      std::size_t k = 0;
      while (capacity(k) < incoming_.size()) ++k;
      for (;;) {
        if (levels_.size() <= k) levels_.resize(k + 1);
        Level& level = levels_[k];
        dom_.merge(level.poly, level.start, incoming_, merged_);
        level.poly.clear();
        level.start = 0;
        if (merged_.size() <= capacity(k)) {
          std::swap(level.poly, merged_);
          return;
        }
        std::swap(incoming_, merged_);
        ++k;
      }
    }

    // Removes the leading term; false once the bucket is empty.
    bool pop(std::int32_t* key, std::uint32_t& c) {
      const Layout& layout = dom_.layout_;
      const std::size_t w = layout.width();
      for (;;) {
        std::size_t best = kNoPartner;
        for (std::size_t k = 0; k < levels_.size(); ++k) {
          const Level& l = levels_[k];
          if (l.start >= l.poly.size()) continue;
          if (best == kNoPartner ||
              layout.compare(l.poly.mono(l.start, w), levels_[best].poly.mono(levels_[best].start, w)) > 0) {
            best = k;
          }
        }
        if (best == kNoPartner) return false;
        std::copy_n(levels_[best].poly.mono(levels_[best].start, w), w, key);
        std::uint64_t sum = 0;
        for (auto& l : levels_) {
          if (l.start >= l.poly.size() || layout.compare(l.poly.mono(l.start, w), key) != 0) continue;
          sum += l.poly.coef[l.start++];
        }
        c = static_cast<std::uint32_t>(sum % dom_.p_);
        if (c != 0) return true;
      }
    }

   private:
    struct Level {
      Poly poly;
      std::size_t start = 0;
    };
    static std::size_t capacity(std::size_t k) { return std::size_t{4} << (2 * k); }

    const ModularDomain& dom_;
    std::vector<Level> levels_;
    Poly incoming_, merged_;
  };

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  std::uint32_t inverse(std::uint32_t a) const {
    std::int64_t t = 0, newT = 1, r = p_, newR = a;
    while (newR != 0) {
      const std::int64_t q = r / newR;
      t = std::exchange(newT, t - q * newT);
      r = std::exchange(newR, r - q * newR);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
  }

  // out = c * m * f[from..]
  void scaled(const Poly& f, std::size_t from, std::uint32_t c, const std::int32_t* m, Poly& out) const {
    const std::size_t w = layout_.width();
    out.clear();
    out.coef.reserve(f.size() - from);
    out.keys.resize((f.size() - from) * w);
    for (std::size_t i = from; i < f.size(); ++i) {
      std::int32_t* dst = out.keys.data() + (i - from) * w;
      if (m) layout_.multiply(f.mono(i, w), m, dst);
      else std::copy_n(f.mono(i, w), w, dst);
      out.coef.push_back(c == 1 ? f.coef[i] : mul(c, f.coef[i]));
    }
  }

  // out = a[fromA..] + b
  void merge(const Poly& a, std::size_t fromA, const Poly& b, Poly& out) const {
    const std::size_t w = layout_.width();
    out.clear();
    out.coef.reserve(a.size() - fromA + b.size());
    out.keys.reserve(out.coef.capacity() * w);
    std::size_t i = fromA, j = 0;
    while (i < a.size() && j < b.size()) {
      const int c = layout_.compare(a.mono(i, w), b.mono(j, w));
      if (c > 0) {
        out.push(a.coef[i], a.mono(i, w), w);
        ++i;
      } else if (c < 0) {
        out.push(b.coef[j], b.mono(j, w), w);
        ++j;
      } else {
        const std::uint32_t s = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.coef[i]) + b.coef[j]) % p_);
        if (s != 0) out.push(s, a.mono(i, w), w);
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push(a.coef[i], a.mono(i, w), w);
    for (; j < b.size(); ++j) out.push(b.coef[j], b.mono(j, w), w);
  }

  const Layout& layout_;
  std::uint32_t p_;
};

struct Pair {
  std::size_t i = 0;
  std::size_t j = 0;  // kNoPartner marks a pending input polynomial
  std::vector<std::int32_t> lcm;
  std::uint64_t sugar = 0;
  std::size_t serial = 0;
  std::uint64_t sev = 0;
  bool alive = true;
};

// Buchberger's algorithm with the sugar strategy and the Gebauer-Moeller
// criteria, generic in the coefficient domain.
template <class Domain>
class Engine {
 public:
  using Coef = typename Domain::Coef;
  using Poly = typename Domain::Poly;

  template <class... Args>
  Engine(std::size_t numVars, const MonomialOrder& ord, Args... args)
      : layout_(numVars, ord), dom_(layout_, args...), basis_(layout_) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens, GroebnerStats* stats) {
    const std::size_t w = layout_.width();
    std::vector<Poly> inputs;
    for (const auto& g : gens) {
      if (g.isZero()) continue;
      if (g.numVars() != layout_.numVars()) fail(ErrorCode::RingMismatch, "generator in a different ring");
      Poly p = dom_.fromPolynomial(g);
      if (p.empty()) continue;
      dom_.normalize(p);
      inputs.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      Pair pr;
      pr.i = k;
      pr.j = kNoPartner;
      pr.lcm.assign(inputs[k].mono(0, w), inputs[k].mono(0, w) + w);
      pr.sugar = inputs[k].sugar;
      pr.serial = serial_++;
      push(std::move(pr));
    }
    GroebnerStats local;
    while (!queue_.empty()) {
      const std::size_t pick = queue_.top();
      queue_.pop();
      if (!pairs_[pick].alive) continue;
      Pair pr = std::move(pairs_[pick]);
      pairs_[pick].alive = false;
      --alive_;
      ++local.pairsConsidered;
      Poly h;
      if (pr.j == kNoPartner) {
        h = std::move(inputs[pr.i]);
      } else {
        h = dom_.sPoly(basis_.elements()[pr.i], basis_.elements()[pr.j], pr.lcm.data());
        h.sugar = pr.sugar;
        ++local.pairsReduced;
      }
      dom_.reduce(h, basis_, true);
      if (h.empty()) {
        ++local.zeroReductions;
        continue;
      }
      dom_.normalize(h);
      if (layout_.isOne(h.mono(0, w))) {
        if (stats) *stats = local;
        return {Polynomial::constant(layout_.numVars(), 1)};
      }
      update(std::move(h));
    }
    if (stats) *stats = local;
    return interreduce();
  }

 private:
  // Heap order: smallest sugar, then smallest lcm, then oldest.
  struct Later {
    const Engine* self;
    bool operator()(std::size_t x, std::size_t y) const {
      const Pair& a = self->pairs_[x];
      const Pair& b = self->pairs_[y];
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      const int c = self->layout_.compare(a.lcm.data(), b.lcm.data());
      if (c != 0) return c > 0;
      return a.serial > b.serial;
    }
  };

  void push(Pair pr) {
    pairs_.push_back(std::move(pr));
    ++alive_;
    queue_.push(pairs_.size() - 1);
  }

  // Drops dead pairs from storage once they dominate it.
  void compact() {
    if (alive_ * 2 + 1024 > pairs_.size()) return;
    std::vector<Pair> kept;
    kept.reserve(alive_);
    for (auto& pr : pairs_) {
      if (pr.alive) kept.push_back(std::move(pr));
    }
    pairs_ = std::move(kept);
    queue_ = Queue(Later{this});
    for (std::size_t k = 0; k < pairs_.size(); ++k) queue_.push(k);
  }

  void update(Poly h) {
    const std::size_t w = layout_.width();
    auto& elements = basis_.elements();
    const std::size_t t = elements.size();
    h.sugar = std::max(h.sugar, layout_.degree(h.mono(0, w)));
    basis_.add(std::move(h));
    const auto& eh = elements[t];

    struct Candidate {
      std::size_t i;
      std::vector<std::int32_t> lcm;
      std::uint64_t sev;
      std::uint64_t degree;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::size_t k = 0; k < t; ++k) {
      if (!elements[k].active) continue;
      Candidate c;
      c.i = k;
      c.lcm.resize(w);
      layout_.lcm(elements[k].lead.data(), eh.lead.data(), c.lcm.data());
      c.sev = elements[k].sev | eh.sev;
      c.degree = layout_.degree(c.lcm.data());
      c.coprime = (elements[k].sev & eh.sev) == 0 && layout_.coprime(elements[k].lead.data(), eh.lead.data());
      cands.push_back(std::move(c));
    }
    // Chain criterion among the new pairs: in order of increasing lcm, with
    // coprime pairs first among equal lcms, drop (k,t) when an earlier kept
    // pair has an lcm dividing lcm(k,t). Kept coprime pairs are then dropped
    // by the product criterion.
    std::sort(cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
      if (x.degree != y.degree) return x.degree < y.degree;
      const int c = layout_.compare(x.lcm.data(), y.lcm.data());
      if (c != 0) return c < 0;
      if (x.coprime != y.coprime) return x.coprime;
      return x.i < y.i;
    });
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Candidate& ca = cands[a];
      const bool covered = std::any_of(kept.begin(), kept.end(), [&](std::size_t b) {
        return (cands[b].sev & ~ca.sev) == 0 && layout_.divides(cands[b].lcm.data(), ca.lcm.data());
      });
      if (!covered) kept.push_back(a);
    }
    // Old pairs made redundant by the new leading monomial.
    std::vector<std::int32_t> tmp(w);
    for (auto& pr : pairs_) {
      if (!pr.alive || pr.j == kNoPartner || (eh.sev & ~pr.sev) != 0) continue;
      if (!layout_.divides(eh.lead.data(), pr.lcm.data())) continue;
      layout_.lcm(elements[pr.i].lead.data(), eh.lead.data(), tmp.data());
      if (layout_.compare(tmp.data(), pr.lcm.data()) == 0) continue;
      layout_.lcm(elements[pr.j].lead.data(), eh.lead.data(), tmp.data());
      if (layout_.compare(tmp.data(), pr.lcm.data()) == 0) continue;
      pr.alive = false;
      --alive_;
    }
    compact();
    for (auto a : kept) {
      if (cands[a].coprime) continue;
      const auto& ek = elements[cands[a].i];
      Pair pr;
      pr.i = cands[a].i;
      pr.j = t;
      pr.lcm = std::move(cands[a].lcm);
      pr.sev = cands[a].sev;
      const std::uint64_t dl = cands[a].degree;
      pr.sugar = std::max(ek.poly.sugar + (dl - ek.leadDegree), eh.poly.sugar + (dl - eh.leadDegree));
      pr.serial = serial_++;
      push(std::move(pr));
    }
    for (std::size_t k = 0; k < t; ++k) {
      if (elements[k].active && layout_.divides(eh.lead.data(), elements[k].lead.data())) {
        elements[k].active = false;
      }
    }
  }

  std::vector<Polynomial> interreduce() {
    const std::size_t w = layout_.width();
    const auto& elements = basis_.elements();
    std::vector<Poly> reduced;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (elements[k].active) reduced.push_back(dom_.reduceTail(elements[k].poly, basis_, k));
    }
    std::vector<std::size_t> idx(reduced.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return layout_.compare(reduced[a].mono(0, w), reduced[b].mono(0, w)) > 0;
    });
    std::vector<Polynomial> out;
    out.reserve(idx.size());
    for (auto k : idx) out.push_back(dom_.toMonic(reduced[k]));
    return out;
  }

  Layout layout_;
  Domain dom_;
  Reducers<Coef> basis_;
  using Queue = std::priority_queue<std::size_t, std::vector<std::size_t>, Later>;
  std::vector<Pair> pairs_;
  Queue queue_{Later{this}};
  std::size_t alive_ = 0;
  std::size_t serial_ = 0;
};

}  // namespace

std::vector<Polynomial> reducedGroebnerBasis(std::size_t numVars, std::span<const Polynomial> gens,
                                             const MonomialOrder& ord, GroebnerStats* stats) {
  Engine<IntegerDomain> engine(numVars, ord);
  return engine.run(gens, stats);
}

std::vector<Polynomial> reducedGroebnerBasisModular(std::size_t numVars, std::span<const Polynomial> gens,
                                                    const MonomialOrder& ord, std::uint32_t prime,
                                                    GroebnerStats* stats) {
  if (prime < 3 || prime > (std::uint32_t{1} << 31) || mpz_probab_prime_p(BigInt(prime).get_mpz_t(), 30) == 0) {
    fail(ErrorCode::BadArgument, "modulus must be an odd prime below 2^31");
  }
  Engine<ModularDomain> engine(numVars, ord, prime);
  return engine.run(gens, stats);
}

Polynomial normalForm(const Polynomial& p, std::span<const Polynomial> basis, const MonomialOrder& ord) {
  if (p.isZero()) return p;
  const Layout layout(p.numVars(), ord);
  const IntegerDomain dom(layout);
  Reducers<BigInt> reducers(layout);
  for (const auto& g : basis) {
    if (!g.isZero()) reducers.add(dom.fromPolynomial(g));
  }
  Rational scale;
  auto ip = dom.fromPolynomial(p, &scale);
  const BigInt factor = dom.reduce(ip, reducers, true, kNoPartner, true);
  return dom.toPolynomial(ip, scale * Rational(factor));
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term lf = leadingTerm(f, ord);
  const Term lg = leadingTerm(g, ord);
  const Monomial l = lf.mono.lcm(lg.mono);
  return f.mulMonomial(l / lf.mono) * Rational(1 / lf.coeff) -
         g.mulMonomial(l / lg.mono) * Rational(1 / lg.coeff);
}

}  // namespace mixmult

#include "mixmult/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

using PolyList = std::vector<Polynomial>;

// Appends `extra` fresh variables after the existing ones.
Polynomial widen(const Polynomial& p, std::size_t extra) {
  std::vector<std::size_t> map(p.numVars());
  std::iota(map.begin(), map.end(), 0);
  return embed(p, p.numVars() + extra, map);
}

// Drops trailing variables that are known not to occur.
Polynomial narrow(const Polynomial& p, std::size_t numVars) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Exponent> e(t.mono.exponents().begin(), t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(numVars));
    for (std::size_t v = numVars; v < t.mono.size(); ++v) {
      if (t.mono[v] != 0) fail(ErrorCode::AssertionFailed, "eliminated variable survived elimination");
    }
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::fromTerms(numVars, std::move(terms));
}

bool involves(const Polynomial& p, std::span<const std::size_t> vars) {
  for (const auto& t : p.terms()) {
    for (auto v : vars) {
      if (t.mono[v] != 0) return true;
    }
  }
  return false;
}

PolyList eliminateGens(std::size_t numVars, const PolyList& gens, std::span<const std::size_t> vars,
                       std::uint32_t prime = 0) {
  std::vector<std::size_t> block(vars.begin(), vars.end());
  const auto gb = groebnerBasisOver(numVars, gens, MonomialOrder::elimination(block), prime);
  PolyList out;
  for (const auto& g : gb) {
    if (!involves(g, vars)) out.push_back(g);
  }
  return out;
}

// (A) ∩ (B) in the polynomial ring with `numVars` variables.
PolyList intersectGens(std::size_t numVars, const PolyList& a, const PolyList& b) {
  const std::size_t tag = numVars;
  const Polynomial s = Polynomial::variable(numVars + 1, tag);
  const Polynomial oneMinusS = Polynomial::constant(numVars + 1, 1) - s;
  PolyList gens;
  for (const auto& f : a) {
    if (!f.isZero()) gens.push_back(s * widen(f, 1));
  }
  for (const auto& g : b) {
    if (!g.isZero()) gens.push_back(oneMinusS * widen(g, 1));
  }
  const std::size_t elim[] = {tag};
  PolyList out;
  for (const auto& g : eliminateGens(numVars + 1, gens, elim)) out.push_back(narrow(g, numVars));
  return out;
}

// Rational nullspace basis of the rows, each as an integer vector.
std::vector<std::vector<BigInt>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t n) {
  std::vector<std::size_t> pivotCol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rational f = rows[k][c];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivotCol.push_back(c);
    ++r;
  }
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivotCol.begin(), pivotCol.end(), free) != pivotCol.end()) continue;
    std::vector<Rational> vec(n, 0);
    vec[free] = 1;
    for (std::size_t k = 0; k < pivotCol.size(); ++k) vec[pivotCol[k]] = -rows[k][free];
    BigInt den = 1;
    for (const auto& x : vec) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> iv;
    for (const auto& x : vec) iv.push_back(x.get_num() * (den / x.get_den()));
    basis.push_back(std::move(iv));
  }
  return basis;
}

void requireSameRing(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring() && !(*I.ring() == *J.ring())) {
    fail(ErrorCode::RingMismatch, "ideals live in different rings");
  }
}

std::vector<std::size_t> supportOf(const Monomial& m) { return m.support(); }

// Smallest set of variables meeting every support (all supports nonempty).
std::size_t minHittingSet(const std::vector<std::vector<std::size_t>>& supports, std::size_t numVars) {
  std::size_t best = numVars + 1;
  std::vector<bool> chosen(numVars, false);
  auto recurse = [&](auto&& self, std::size_t size) -> void {
    if (size >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      bool hit = false;
      for (auto v : s) {
        if (chosen[v]) {
          hit = true;
          break;
        }
      }
      if (!hit && (open == nullptr || s.size() < open->size())) open = &s;
    }
    if (open == nullptr) {
      best = size;
      return;
    }
    for (auto v : *open) {
      chosen[v] = true;
      self(self, size + 1);
      chosen[v] = false;
    }
  };
  recurse(recurse, 0);
  return best;
}

BigInt countStandard(const std::vector<Monomial>& gens, std::size_t var, std::size_t numVars) {
  for (const auto& g : gens) {
    bool one = true;
    for (std::size_t v = var; v < numVars; ++v) {
      if (g[v] != 0) {
        one = false;
        break;
      }
    }
    if (one) return 0;
  }
  if (var == numVars) return 1;
  // Pure power bound for `var` among generators supported on var.. only.
  Exponent bound = 0;
  bool found = false;
  for (const auto& g : gens) {
    bool pure = g[var] != 0;
    for (std::size_t v = var + 1; v < numVars && pure; ++v) pure = g[v] == 0;
    if (pure && (!found || g[var] < bound)) {
      bound = g[var];
      found = true;
    }
  }
  if (!found) fail(ErrorCode::NotZeroDimensional, "quotient is not finite-dimensional");
  BigInt total = 0;
  for (Exponent e = 0; e < bound; ++e) {
    std::vector<Monomial> sub;
    for (const auto& g : gens) {
      if (g[var] <= e) sub.push_back(g);
    }
    total += countStandard(sub, var + 1, numVars);
  }
  return total;
}

}  // namespace

std::optional<std::vector<std::size_t>> homogenizingWeights(std::size_t numVars, std::span<const Polynomial> polys) {
  std::vector<std::vector<Rational>> rows;
  bool standard = true;
  for (const auto& p : polys) {
    for (std::size_t k = 1; k < p.size(); ++k) {
      std::vector<Rational> row(numVars);
      for (std::size_t v = 0; v < numVars; ++v) {
        row[v] = Rational(static_cast<long>(p.terms()[k].mono[v])) - Rational(static_cast<long>(p.terms()[0].mono[v]));
      }
      if (p.terms()[k].mono.totalDegree() != p.terms()[0].mono.totalDegree()) standard = false;
      rows.push_back(std::move(row));
    }
  }
  if (standard) return std::vector<std::size_t>(numVars, 1);
  const auto basis = nullspace(std::move(rows), numVars);
  if (basis.empty()) return std::nullopt;
  // Small integer combinations of the basis, looking for a positive vector.
  const std::size_t k = basis.size();
  const int range = k <= 3 ? 2 : 1;
  std::vector<int> coeff(k, -range);
  for (;;) {
    std::vector<BigInt> cand(numVars, 0);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t v = 0; v < numVars; ++v) cand[v] += coeff[b] * basis[b][v];
    }
    for (int sign : {1, -1}) {
      bool positive = true;
      for (const auto& x : cand) positive = positive && sign * x > 0;
      if (positive) {
        BigInt g = 0;
        for (const auto& x : cand) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        std::vector<std::size_t> w;
        for (const auto& x : cand) {
          const BigInt q = sign * x / g;
          if (!q.fits_uint_p() || q > 100000) return std::nullopt;
          w.push_back(q.get_ui());
        }
        return w;
      }
    }
    std::size_t pos = 0;
    while (pos < k && coeff[pos] == range) coeff[pos++] = -range;
    if (pos == k || k > 6) break;
    ++coeff[pos];
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  if (!ring_) fail(ErrorCode::BadArgument, "ideal without a ring");
  for (const auto& g : gens_) {
    if (g.numVars() != ring_->numVars()) fail(ErrorCode::RingMismatch, "generator lives in a different ring");
  }
}

Ideal Ideal::unit(RingPtr ring) {
  const auto n = ring->numVars();
  return Ideal(std::move(ring), {Polynomial::constant(n, 1)});
}

Ideal Ideal::maximal(RingPtr ring) {
  const auto n = ring->numVars();
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < n; ++v) gens.push_back(Polynomial::variable(n, v));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::fromGrevlexBasis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), basis);
  I.cache_->bases.emplace(MonomialOrder::grevlex().key(), std::move(basis));
  return I;
}

std::vector<Polynomial> Ideal::liftedGens() const {
  std::vector<Polynomial> all;
  for (const auto& g : gens_) {
    if (!g.isZero()) all.push_back(g);
  }
  for (const auto& k : ring_->quotientGens) {
    if (!k.isZero()) all.push_back(k);
  }
  return all;
}

const std::vector<Polynomial>& Ideal::groebnerBasis(const MonomialOrder& ord) const {
  const std::string key = ord.key();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  auto gb = reducedGroebnerBasis(numVars(), liftedGens(), ord);
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(gb));
  return it->second;
}

bool Ideal::isUnit() const {
  const auto& gb = groebnerBasis();
  return gb.size() == 1 && gb.front().isConstant();
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t numVars, std::vector<Monomial> gens) : numVars_(numVars) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db;
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    if (g.size() != numVars) fail(ErrorCode::RingMismatch, "monomial has the wrong number of exponents");
    bool redundant = false;
    for (const auto& h : gens_) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::isUnit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.isOne(); });
}

// -------------------------------------------------------------- operations

Polynomial normalForm(const Polynomial& p, const Ideal& I, const MonomialOrder& ord) {
  return normalForm(p, I.groebnerBasis(ord), ord);
}

bool idealMembership(const Polynomial& p, const Ideal& I) { return normalForm(p, I).isZero(); }

bool isSubideal(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  for (const auto& g : I.gens()) {
    if (!idealMembership(g, J)) return false;
  }
  return true;
}

bool idealEquality(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  return I.groebnerBasis() == J.groebnerBasis();
}

Ideal eliminate(const Ideal& I, std::span<const std::size_t> vars) {
  for (auto v : vars) {
    if (v >= I.numVars()) fail(ErrorCode::BadArgument, "elimination variable out of range");
  }
  return Ideal::fromGrevlexBasis(I.ring(), eliminateGens(I.numVars(), I.liftedGens(), vars));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  return Ideal(I.ring(), intersectGens(I.numVars(), I.liftedGens(), J.liftedGens()));
}

Ideal colon(const Ideal& I, const Polynomial& g) {
  if (g.isZero()) return Ideal::unit(I.ring());
  if (idealMembership(g, I)) return Ideal::unit(I.ring());
  PolyList out;
  for (const auto& h : intersectGens(I.numVars(), I.liftedGens(), {g})) {
    auto q = exactQuotient(h, g);
    if (!q) fail(ErrorCode::AssertionFailed, "element of I ∩ (g) not divisible by g");
    out.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    if (g.isZero()) continue;
    Ideal c = colon(I, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

std::vector<Polynomial> saturateByEliminationGens(std::size_t numVars, std::span<const Polynomial> gens,
                                                  const Polynomial& h, std::uint32_t prime) {
  const std::size_t n = numVars;
  if (h.isZero()) return {Polynomial::constant(n, 1)};
  PolyList work(gens.begin(), gens.end());
  if (h.isConstant()) return groebnerBasisOver(n, work, MonomialOrder::grevlex(), prime);
  const Polynomial u = Polynomial::variable(n + 1, n);
  for (auto& g : work) g = widen(g, 1);
  work.push_back(Polynomial::constant(n + 1, 1) - u * widen(h, 1));
  const std::size_t elim[] = {n};
  PolyList out;
  for (const auto& g : eliminateGens(n + 1, work, elim, prime)) out.push_back(narrow(g, n));
  return out;
}

Ideal saturateByElimination(const Ideal& I, const Polynomial& h) {
  if (h.isZero()) return Ideal::unit(I.ring());
  if (h.isConstant()) return Ideal(I.ring(), I.groebnerBasis());
  return Ideal::fromGrevlexBasis(I.ring(), saturateByEliminationGens(I.numVars(), I.liftedGens(), h, 0));
}

std::vector<Polynomial> groebnerBasisOver(std::size_t numVars, std::span<const Polynomial> gens,
                                          const MonomialOrder& ord, std::uint32_t prime) {
  return prime == 0 ? reducedGroebnerBasis(numVars, gens, ord) : reducedGroebnerBasisModular(numVars, gens, ord, prime);
}

std::vector<Polynomial> saturateHomogeneousGens(std::size_t numVars, std::span<const Polynomial> gens,
                                                const Polynomial& h, const std::vector<std::size_t>& weights,
                                                std::uint32_t prime) {
  const std::size_t n = numVars;
  if (weights.size() != n) fail(ErrorCode::DimensionMismatch, "one weight per variable is required");
  if (h.isZero()) return {Polynomial::constant(n, 1)};
  if (h.isConstant()) return groebnerBasisOver(n, gens, MonomialOrder::grevlex(), prime);
  std::uint64_t dh = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::uint64_t d = 0;
    for (std::size_t v = 0; v < n; ++v) d += weights[v] * h.terms()[k].mono[v];
    if (k > 0 && d != dh) fail(ErrorCode::NotHomogeneous, "saturating element is not homogeneous for the weights");
    dh = d;
  }
  // A weighted revlex basis whose last variable is v, divided by the largest
  // powers of v, generates the saturation by v. When h is a variable it is
  // moved to the last slot; otherwise v = h is adjoined.
  const auto support = h.terms().front().mono.support();
  const bool isVariable = h.size() == 1 && support.size() == 1 && h.terms().front().mono[support[0]] == 1;
  std::vector<std::size_t> to(n), from(n + 1);
  std::iota(to.begin(), to.end(), 0);
  std::size_t width = n + 1;
  if (isVariable) {
    width = n;
    const std::size_t x = support[0];
    for (std::size_t k = x; k + 1 < n; ++k) to[k + 1] = k;
    to[x] = n - 1;
  }
  for (std::size_t k = 0; k < n; ++k) from[to[k]] = k;
  std::vector<std::size_t> w(width);
  for (std::size_t k = 0; k < n; ++k) w[to[k]] = weights[k];
  PolyList work;
  for (const auto& g : gens) work.push_back(embed(g, width, to));
  std::vector<Polynomial> images(width);
  for (std::size_t k = 0; k < n; ++k) images[to[k]] = Polynomial::variable(n, k);
  if (!isVariable) {
    w[n] = static_cast<std::size_t>(dh);
    work.push_back(Polynomial::variable(n + 1, n) - embed(h, n + 1, to));
    images[n] = h;
  }
  const std::size_t last = width - 1;
  PolyList out;
  for (const auto& g : groebnerBasisOver(width, work, MonomialOrder::weightedGrevlex(w), prime)) {
    Exponent lowest = g.terms().front().mono[last];
    for (const auto& t : g.terms()) lowest = std::min(lowest, t.mono[last]);
    Monomial m(width);
    m.set(last, lowest);
    Polynomial q = divideByMonomial(g, m);
    q = isVariable ? embed(q, n, std::span<const std::size_t>(from.data(), n)) : substitute(q, images);
    if (!q.isZero() && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

Ideal saturateHomogeneous(const Ideal& I, const Polynomial& h, const std::vector<std::size_t>& weights) {
  if (h.isZero()) return Ideal::unit(I.ring());
  if (h.isConstant()) return Ideal(I.ring(), I.groebnerBasis());
  return Ideal(I.ring(), saturateHomogeneousGens(I.numVars(), I.liftedGens(), h, weights, 0));
}

Ideal saturate(const Ideal& I, const Polynomial& h) {
  PolyList all = I.liftedGens();
  all.push_back(h);
  if (auto w = homogenizingWeights(I.numVars(), all)) return saturateHomogeneous(I, h, *w);
  return saturateByElimination(I, h);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    if (g.isZero()) continue;
    Ideal s = saturate(I, g);
    acc = acc ? intersect(*acc, s) : s;
  }
  // J = (0): I : 0^∞ is the unit ideal.
  return acc ? *acc : Ideal::unit(I.ring());
}

Ideal saturateByIteratedColon(const Ideal& I, const Polynomial& h) {
  Ideal current(I.ring(), I.groebnerBasis());
  for (;;) {
    Ideal next = colon(current, h);
    if (idealEquality(next, current)) return next;
    current = std::move(next);
  }
}

Ideal trim(const Ideal& I) {
  PolyList gens;
  for (const auto& g : I.gens()) {
    if (g.isZero()) continue;
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    gens.push_back(g);
  }
  std::size_t i = 0;
  while (i < gens.size()) {
    PolyList others;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != i) others.push_back(gens[k]);
    }
    if (idealMembership(gens[i], Ideal(I.ring(), std::move(others)))) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal idealPower(const Ideal& I, std::int64_t k) {
  if (k < 0) fail(ErrorCode::NegativePower, "negative ideal power");
  if (k == 0) return Ideal::unit(I.ring());
  PolyList base;
  for (const auto& g : I.gens()) {
    if (!g.isZero()) base.push_back(g);
  }
  if (base.empty()) return Ideal::zero(I.ring());
  // Multisets of generator indices of size k, in lexicographic order.
  PolyList products;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  for (;;) {
    Polynomial p = base[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) p *= base[idx[t]];
    products.push_back(std::move(p));
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == base.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < idx.size(); ++t) idx[t] = idx[pos - 1];
  }
  return trim(Ideal(I.ring(), std::move(products)));
}

Ideal idealProduct(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  PolyList products;
  for (const auto& f : I.gens()) {
    for (const auto& g : J.gens()) products.push_back(f * g);
  }
  return trim(Ideal(I.ring(), std::move(products)));
}

Ideal idealSum(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  PolyList gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return trim(Ideal(I.ring(), std::move(gens)));
}

MonomialIdeal initialIdeal(const Ideal& I, const MonomialOrder& ord) {
  std::vector<Monomial> leads;
  for (const auto& g : I.groebnerBasis(ord)) leads.push_back(leadingTerm(g, ord).mono);
  return MonomialIdeal(I.numVars(), std::move(leads));
}

std::int64_t krullDimension(const MonomialIdeal& M) {
  if (M.isUnit()) return -1;
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : M.gens()) supports.push_back(supportOf(g));
  const auto cover = minHittingSet(supports, M.numVars());
  return static_cast<std::int64_t>(M.numVars()) - static_cast<std::int64_t>(cover);
}

std::int64_t krullDimension(const Ideal& I) { return krullDimension(initialIdeal(I)); }

bool isZeroDimensional(const MonomialIdeal& M) {
  for (std::size_t v = 0; v < M.numVars(); ++v) {
    bool pure = false;
    for (const auto& g : M.gens()) {
      const auto s = g.support();
      if (s.empty() || (s.size() == 1 && s[0] == v)) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

BigInt standardMonomialCount(const MonomialIdeal& M) {
  if (M.isUnit()) return 0;
  if (!isZeroDimensional(M)) fail(ErrorCode::NotZeroDimensional, "quotient is not finite-dimensional");
  return countStandard(M.gens(), 0, M.numVars());
}

BigInt kDimension(const Ideal& I) { return standardMonomialCount(initialIdeal(I)); }

bool isPrimaryToMaxIdeal(const Ideal& I) {
  const MonomialIdeal M = initialIdeal(I);
  if (M.isUnit() || !isZeroDimensional(M)) return false;
  const BigInt length = standardMonomialCount(M);
  const auto& gb = I.groebnerBasis();
  const std::size_t n = I.numVars();
  // In an algebra of dimension D a nilpotent element satisfies x^D = 0.
  for (std::size_t v = 0; v < n; ++v) {
    const Polynomial x = Polynomial::variable(n, v);
    Polynomial r = normalForm(x, gb, MonomialOrder::grevlex());
    BigInt k = 1;
    while (!r.isZero() && k < length) {
      r = normalForm(x * r, gb, MonomialOrder::grevlex());
      ++k;
    }
    if (!r.isZero()) return false;
  }
  return true;
}

bool hasPositiveGrade(const Ideal& I) {
  if (!I.ctx().isQuotient()) {
    return std::any_of(I.gens().begin(), I.gens().end(), [](const Polynomial& g) { return !g.isZero(); });
  }
  const Ideal zero = Ideal::zero(I.ring());
  return idealEquality(colon(zero, I), zero);
}

}  // namespace mixmult

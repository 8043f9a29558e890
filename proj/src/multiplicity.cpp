#include "mixmult/multiplicity.hpp"

#include <algorithm>
#include <set>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

const RingPtr& commonRing(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) fail(ErrorCode::BadArgument, "at least one ideal is required");
  const RingPtr& ring = ideals.front().ring();
  for (const auto& I : ideals) {
    if (I.ring() != ring && !(*I.ring() == *ring)) fail(ErrorCode::RingMismatch, "ideals live in different rings");
  }
  return ring;
}

void requirePositiveGrade(const std::vector<Ideal>& ideals) {
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!hasPositiveGrade(ideals[i])) {
      fail(ErrorCode::GradeZero, "ideal " + std::to_string(i) +
                                     " has grade zero; pass its image in R/(0 : I^infinity) instead");
    }
  }
}

// Over a domain every nonzero generator works; a variable makes the
// saturation cheapest, then the generator of least degree and length.
Polynomial cheapestGenerator(const std::vector<Polynomial>& gens) {
  auto isVariable = [](const Polynomial& g) { return g.size() == 1 && g.totalDegree() == 1; };
  for (const auto& g : gens) {
    if (isVariable(g)) return g;
  }
  return *std::min_element(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    const auto da = a.totalDegree(), db = b.totalDegree();
    return da != db ? da < db : a.size() < b.size();
  });
}

RingPtr namedRing(std::size_t numVars) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < numVars; ++v) names.push_back("x_" + std::to_string(v + 1));
  return makeRing(RingContext::polynomialRing(std::move(names)));
}

std::vector<Polynomial> partials(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < f.numVars(); ++v) out.push_back(partialDerivative(f, v));
  return out;
}

bool isHomogeneous(const Polynomial& f) {
  if (f.isZero()) return true;
  const auto d = f.terms().front().mono.totalDegree();
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return t.mono.totalDegree() == d; });
}

void requireNonconstant(const Polynomial& f) {
  if (f.isConstant() || f.isZero()) fail(ErrorCode::ConstantPolynomial, "the polynomial is constant");
}

Ideal homIdealIn(const LatticePolytope& P, const RingPtr& ring) {
  P.validate();
  const std::size_t n = P.dimension();
  if (ring->numVars() != n + 1) fail(ErrorCode::DimensionMismatch, "polytope dimension does not match the ring");
  std::int64_t top = 0;
  for (const auto& p : P.points) {
    std::int64_t d = 0;
    for (auto c : p) {
      if (c < 0) fail(ErrorCode::NegativeCoordinate, "homogenization needs nonnegative coordinates");
      d += c;
    }
    top = std::max(top, d);
  }
  std::set<Monomial> seen;
  std::vector<Polynomial> gens;
  for (const auto& p : P.points) {
    std::vector<Exponent> e(n + 1, 0);
    std::int64_t d = 0;
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = static_cast<Exponent>(p[k]);
      d += p[k];
    }
    e[n] = static_cast<Exponent>(top - d);
    Monomial m(std::move(e));
    if (seen.insert(m).second) gens.push_back(Polynomial::monomial(m));
  }
  return Ideal(ring, std::move(gens));
}

// Polytopes of one dimension n, exactly n of them.
std::size_t checkPolytopeFamily(std::span<const LatticePolytope> polys) {
  if (polys.empty()) fail(ErrorCode::CountMismatch, "no polytopes given");
  for (const auto& P : polys) P.validate();
  const std::size_t n = polys.front().dimension();
  for (const auto& P : polys) {
    if (P.dimension() != n) fail(ErrorCode::DimensionMismatch, "polytopes live in different dimensions");
  }
  if (polys.size() != n) {
    fail(ErrorCode::CountMismatch, "need exactly " + std::to_string(n) + " polytopes in dimension " + std::to_string(n));
  }
  return n;
}

// All a in N^k with |a| = total, in lexicographic order.
void compositions(std::size_t k, std::int64_t total, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == k) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(k, total - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FiberData fiberSeries(const std::vector<Ideal>& ideals) {
  const RingPtr& ring = commonRing(ideals);
  requirePositiveGrade(ideals);
  const std::size_t n = ring->numVars();
  const std::size_t s = ideals.size();

  ReesSpec spec;
  std::vector<Polynomial> nzds;
  for (const auto& I : ideals) {
    std::vector<Polynomial> gens = cleanGenerators(trim(I));
    if (ring->isQuotient()) {
      auto a = findNonzerodivisor(Ideal(ring, gens));
      if (!a) fail(ErrorCode::MissingNonzerodivisor, "no nonzerodivisor found among simple combinations of the generators");
      nzds.push_back(*a);
    } else {
      nzds.push_back(cheapestGenerator(gens));
    }
    spec.ideals.emplace_back(ring, std::move(gens));
  }
  spec.nzds = std::move(nzds);

  FiberData out{multiReesIdeal(spec), Ideal::zero(ring), {}, {}, {}, {}};
  const ReesResult& rees = out.rees;
  const std::size_t total = rees.extendedRing->numVars();
  std::vector<std::size_t> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = v;
  std::vector<Polynomial> gens = rees.definingIdeal.gens();
  for (const auto& f : rees.generators.front()) gens.push_back(embed(f, total, map));
  out.fiberIdeal = Ideal(rees.extendedRing, std::move(gens));
  const MonomialOrder ord = rees.weights ? MonomialOrder::weightedGrevlex(*rees.weights) : MonomialOrder::grevlex();
  out.initial = initialIdeal(out.fiberIdeal, ord);

  // Degrees (t; z): Y_ij -> (e_i; 0), base variables -> (0; 1).
  GradingMatrix grading(total, std::vector<std::int64_t>(s + 1, 0));
  out.tGrading.assign(total, std::vector<std::int64_t>(s, 0));
  for (std::size_t v = 0; v < n; ++v) grading[v][s] = 1;
  for (std::size_t i = 0; i < s; ++i) {
    for (auto y : rees.yVars[i]) {
      grading[y][i] = 1;
      out.tGrading[y][i] = 1;
    }
  }
  MultigradedSeries S = kPolynomial(out.initial, grading);
  for (std::size_t k = 0; k < n; ++k) {
    auto next = divideOutExact(S, s);
    if (!next) fail(ErrorCode::NotPrimaryToMaximal, "ideal 0 is not primary to the maximal ideal: a graded slice is infinite");
    S = std::move(*next);
  }
  out.tSeries = evaluateAtOne(S, s);
  out.reduced = reduceSeries(out.tSeries);
  return out;
}

BigInt mixedMultiplicityFromSeries(const MultigradedSeries& reduced, const std::vector<std::int64_t>& index) {
  auto c = thmCoefficient(reduced, index);
  return c ? *c : BigInt(0);
}

BigInt mixedMultiplicity(const MixedMultQuery& q) {
  const RingPtr& ring = commonRing(q.ideals);
  if (q.index.size() != q.ideals.size()) {
    fail(ErrorCode::IndexLengthMismatch, "index has " + std::to_string(q.index.size()) + " entries for " +
                                             std::to_string(q.ideals.size()) + " ideals");
  }
  for (auto a : q.index) {
    if (a < 0) fail(ErrorCode::BadArgument, "index entries must be nonnegative");
  }
  requirePositiveGrade(q.ideals);
  const std::int64_t d = krullDimension(Ideal::zero(ring));
  std::int64_t sum = 0;
  for (auto a : q.index) sum += a;
  if (sum != d - 1) {
    fail(ErrorCode::IndexDegreeMismatch, "index sums to " + std::to_string(sum) + " but the ring has dimension " +
                                             std::to_string(d) + ", so it must sum to " + std::to_string(d - 1));
  }
  if (!isPrimaryToMaxIdeal(q.ideals.front())) {
    fail(ErrorCode::NotPrimaryToMaximal, "ideal 0 is not primary to the maximal ideal");
  }
  return mixedMultiplicityFromSeries(fiberSeries(q.ideals).reduced, q.index);
}

Ideal homIdealPolytope(const LatticePolytope& P) {
  P.validate();
  return homIdealIn(P, namedRing(P.dimension() + 1));
}

BigInt mMixedVolume(std::span<const LatticePolytope> polys) {
  const std::size_t n = checkPolytopeFamily(polys);
  const RingPtr ring = namedRing(n + 1);
  std::vector<Ideal> ideals;
  for (const auto& P : polys) ideals.push_back(homIdealIn(P, ring));
  return mMixedVolume(ideals);
}

BigInt mMixedVolume(std::span<const Ideal> ideals) {
  if (ideals.empty()) fail(ErrorCode::CountMismatch, "no ideals given");
  const RingPtr& ring = ideals.front().ring();
  const std::size_t n = ring->numVars() - 1;
  if (ideals.size() != n) {
    fail(ErrorCode::CountMismatch, "need exactly " + std::to_string(n) + " ideals in " +
                                       std::to_string(n + 1) + " variables");
  }
  MixedMultQuery q;
  q.ideals.push_back(Ideal::maximal(ring));
  q.ideals.insert(q.ideals.end(), ideals.begin(), ideals.end());
  q.index.assign(n + 1, 1);
  q.index[0] = 0;
  return mixedMultiplicity(q);
}

MilnorResult secMilnorNumbers(const Polynomial& f) {
  requireNonconstant(f);
  const std::size_t n = f.numVars();
  const RingPtr ring = namedRing(n);
  const Ideal J(ring, partials(f));
  if (!isPrimaryToMaxIdeal(J)) fail(ErrorCode::NotPrimaryToMaximal, "the Jacobian ideal is not primary to the maximal ideal");
  const FiberData data = fiberSeries({Ideal::maximal(ring), J});
  MilnorResult out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<std::int64_t> index{static_cast<std::int64_t>(n - 1 - i), static_cast<std::int64_t>(i)};
    out[i] = mixedMultiplicityFromSeries(data.reduced, index);
  }
  out[n] = kDimension(J);
  return out;
}

BigInt milnorNumberLocal(const Polynomial& f) {
  requireNonconstant(f);
  const RingPtr ring = namedRing(f.numVars());
  const Ideal J(ring, partials(f));
  std::vector<Polynomial> withF = J.gens();
  withF.push_back(f);
  if (!isPrimaryToMaxIdeal(Ideal(ring, std::move(withF)))) {
    fail(ErrorCode::NotIsolated, "(f) + J(f) is not primary to the maximal ideal: no isolated singularity at the origin");
  }
  return kDimension(colon(J, saturate(J, Ideal::maximal(ring))));
}

LatticePolytope supportPolytopeOfPartials(const Polynomial& h) {
  requireNonconstant(h);
  if (!isHomogeneous(h)) fail(ErrorCode::NotHomogeneous, "the polynomial is not homogeneous");
  std::set<LatticePoint> points;
  for (const auto& p : partials(h)) {
    for (const auto& t : p.terms()) {
      LatticePoint pt;
      for (std::size_t v = 1; v < h.numVars(); ++v) pt.push_back(static_cast<std::int64_t>(t.mono[v]));
      points.insert(std::move(pt));
    }
  }
  return LatticePolytope{{points.begin(), points.end()}};
}

BigInt eulerCharacteristicComplement(const Polynomial& h) {
  requireNonconstant(h);
  if (!isHomogeneous(h)) fail(ErrorCode::NotHomogeneous, "the polynomial is not homogeneous");
  BigInt chi = 0;
  for (const auto& [i, e] : secMilnorNumbers(h)) chi += i % 2 == 0 ? e : BigInt(-e);
  return chi;
}

BigInt reesAlgebraMultiplicity(const std::vector<Ideal>& ideals) {
  const RingPtr& ring = commonRing(ideals);
  requirePositiveGrade(ideals);
  const std::int64_t d = krullDimension(Ideal::zero(ring));
  if (d < 1) fail(ErrorCode::ZeroDimensionalRing, "the base ring has dimension " + std::to_string(d));
  std::vector<Ideal> family{Ideal::maximal(ring)};
  family.insert(family.end(), ideals.begin(), ideals.end());
  const FiberData data = fiberSeries(family);
  std::vector<std::vector<std::int64_t>> indices;
  std::vector<std::int64_t> cur;
  compositions(family.size(), d - 1, cur, indices);
  BigInt sum = 0;
  for (const auto& a : indices) sum += mixedMultiplicityFromSeries(data.reduced, a);
  return sum;
}

BigInt mixedEhrhartLeadingCoeff(std::span<const LatticePolytope> polys) {
  const std::size_t n = checkPolytopeFamily(polys);
  BigInt factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<unsigned long>(k);
  return factorial * mMixedVolume(polys);
}

}  // namespace mixmult

#include "mixmult/rees.hpp"

#include <algorithm>
#include <numeric>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

std::string freshName(std::string name, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

bool isHomogeneous(const Polynomial& f) {
  if (f.isZero()) return true;
  const auto d = f.terms().front().mono.totalDegree();
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return t.mono.totalDegree() == d; });
}

std::vector<std::size_t> identityMap(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

// Extended ring, generators and Y indices shared by both constructions.
ReesResult prepare(const ReesSpec& spec) {
  if (spec.ideals.empty()) fail(ErrorCode::BadArgument, "a Rees algebra needs at least one ideal");
  const RingPtr& base = spec.ideals.front().ring();
  for (const auto& I : spec.ideals) {
    if (I.ring() != base && !(*I.ring() == *base)) fail(ErrorCode::RingMismatch, "ideals live in different rings");
  }
  const std::size_t n = base->numVars();
  const std::size_t s = spec.ideals.size();

  ReesResult r{nullptr, Ideal::zero(base), n, {}, {}, {}, true, std::nullopt};
  RingContext ext;
  ext.varNames = base->varNames;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::int64_t> row(s + 1, 0);
    row[s] = 1;
    ext.grading.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < s; ++i) {
    auto gens = cleanGenerators(spec.ideals[i]);
    if (gens.empty()) fail(ErrorCode::GradeZero, "ideal " + std::to_string(i + 1) + " is zero and has grade zero");
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      ys.push_back(ext.varNames.size());
      ext.varNames.push_back(freshName("Y_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), ext.varNames));
      std::vector<std::int64_t> row(s + 1, 0);
      row[i] = 1;
      row[s] = static_cast<std::int64_t>(gens[j].totalDegree());
      ext.grading.push_back(std::move(row));
      if (!isHomogeneous(gens[j])) r.internalDegreeMeaningful = false;
    }
    r.generators.push_back(std::move(gens));
    r.yVars.push_back(std::move(ys));
  }
  const std::size_t total = ext.varNames.size();
  const auto map = identityMap(n);
  for (const auto& k : base->quotientGens) ext.quotientGens.push_back(embed(k, total, map));
  r.extendedRing = makeRing(std::move(ext));
  r.definingIdeal = Ideal::zero(r.extendedRing);

  // Weights: base weights making every f_ij and K homogeneous, then
  // Y_ij -> w(f_ij) + c_i so that every minor Y_ij f_ik - Y_ik f_ij is
  // homogeneous. The shift c_i is 1 only when some f_ij is a constant.
  std::vector<Polynomial> all = base->quotientGens;
  for (const auto& gens : r.generators) all.insert(all.end(), gens.begin(), gens.end());
  if (auto w = homogenizingWeights(n, all)) {
    auto weightOf = [&](const Polynomial& f) {
      std::size_t d = 0;
      for (std::size_t v = 0; v < n; ++v) d += (*w)[v] * f.terms().front().mono[v];
      return d;
    };
    std::vector<std::size_t> full = *w;
    for (const auto& gens : r.generators) {
      const bool constant = std::any_of(gens.begin(), gens.end(), [](const Polynomial& f) { return f.isConstant(); });
      for (const auto& f : gens) full.push_back(weightOf(f) + (constant ? 1 : 0));
    }
    r.weights = std::move(full);
  }
  return r;
}

void checkTHomogeneous(const ReesResult& r) {
  const std::size_t s = r.generators.size();
  for (const auto& g : r.definingIdeal.gens()) {
    std::optional<std::vector<std::int64_t>> first;
    for (const auto& t : g.terms()) {
      std::vector<std::int64_t> d(s, 0);
      for (std::size_t i = 0; i < s; ++i) {
        for (auto y : r.yVars[i]) d[i] += t.mono[y];
      }
      if (!first) {
        first = d;
      } else if (*first != d) {
        fail(ErrorCode::AssertionFailed, "Rees generator is not homogeneous in the t-grading");
      }
    }
  }
}

}  // namespace

std::vector<Polynomial> cleanGenerators(const Ideal& I) {
  std::vector<Polynomial> out;
  for (const auto& g : I.gens()) {
    if (g.isZero() || std::find(out.begin(), out.end(), g) != out.end()) continue;
    out.push_back(g);
  }
  return out;
}

bool validateNonzerodivisor(const RingPtr& ring, const Polynomial& a) {
  if (a.isZero()) return false;
  if (!ring->isQuotient()) return true;
  const Ideal zero = Ideal::zero(ring);
  return idealEquality(colon(zero, a), zero);
}

std::optional<Polynomial> findNonzerodivisor(const Ideal& I) {
  const auto gens = cleanGenerators(I);
  for (const auto& g : gens) {
    if (validateNonzerodivisor(I.ring(), g)) return g;
  }
  if (gens.size() < 2) return std::nullopt;
  Polynomial sum(I.numVars());
  for (const auto& g : gens) sum += g;
  if (validateNonzerodivisor(I.ring(), sum)) return sum;
  for (std::int64_t trial = 1; trial <= 8; ++trial) {
    Polynomial combo(I.numVars());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::int64_t c = static_cast<std::int64_t>((k + 1) * static_cast<std::size_t>(trial + 2) % 7) + 1;
      combo += gens[k] * Rational(c);
    }
    if (validateNonzerodivisor(I.ring(), combo)) return combo;
  }
  return std::nullopt;
}

namespace {

ReesResult buildRees(const ReesSpec& spec, std::uint32_t prime) {
  ReesResult r = prepare(spec);
  const RingPtr& base = spec.ideals.front().ring();
  const std::size_t s = spec.ideals.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (!hasPositiveGrade(spec.ideals[i])) {
      fail(ErrorCode::GradeZero, "ideal " + std::to_string(i + 1) +
                                     " has grade zero; pass its image in R/(0 : I^infinity) instead");
    }
  }
  if (spec.nzds) {
    if (spec.nzds->size() != s) fail(ErrorCode::CountMismatch, "need one nonzerodivisor per ideal");
    for (std::size_t i = 0; i < s; ++i) {
      const auto& a = (*spec.nzds)[i];
      const auto& gens = r.generators[i];
      if (std::find(gens.begin(), gens.end(), a) == gens.end() && !idealMembership(a, spec.ideals[i])) {
        fail(ErrorCode::NotAGenerator, "nonzerodivisor " + std::to_string(i + 1) + " does not lie in its ideal");
      }
      if (!validateNonzerodivisor(base, a)) {
        fail(ErrorCode::NotNonzerodivisor, "element " + std::to_string(i + 1) + " is a zerodivisor");
      }
    }
    r.nzds = *spec.nzds;
  } else if (base->isQuotient()) {
    fail(ErrorCode::MissingNonzerodivisor, "over a quotient ring a nonzerodivisor must be given for each ideal");
  } else {
    for (const auto& gens : r.generators) r.nzds.push_back(gens.front());
  }

  const std::size_t total = r.extendedRing->numVars();
  const auto map = identityMap(r.baseVars);
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < s; ++i) {
    const auto& gens = r.generators[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const Polynomial yj = Polynomial::variable(total, r.yVars[i][j]);
        const Polynomial yk = Polynomial::variable(total, r.yVars[i][k]);
        minors.push_back(yj * embed(gens[k], total, map) - yk * embed(gens[j], total, map));
      }
    }
  }
  // Saturating by each a_i in turn gives L : (a_1 ... a_s)^infinity.
  std::vector<Polynomial> L = std::move(minors);
  const auto& K = r.extendedRing->quotientGens;
  for (const auto& a : r.nzds) {
    L.insert(L.end(), K.begin(), K.end());
    const Polynomial h = embed(a, total, map);
    L = r.weights ? saturateHomogeneousGens(total, L, h, *r.weights, prime)
                  : saturateByEliminationGens(total, L, h, prime);
  }
  // Drop the copies of K: the ideal lives in the quotient ring.
  std::erase_if(L, [&](const Polynomial& g) { return std::find(K.begin(), K.end(), g) != K.end(); });
  r.definingIdeal = Ideal(r.extendedRing, std::move(L));
  checkTHomogeneous(r);
  return r;
}

}  // namespace

ReesResult multiReesIdeal(const ReesSpec& spec) { return buildRees(spec, 0); }

ReesResult multiReesIdealModular(const ReesSpec& spec, std::uint32_t prime) {
  if (prime == 0) fail(ErrorCode::BadArgument, "modulus must be a prime");
  return buildRees(spec, prime);
}

ReesResult reesIdealByElimination(const ReesSpec& spec) {
  if (!spec.ideals.empty() && spec.ideals.front().ctx().isQuotient()) {
    fail(ErrorCode::QuotientUnsupported, "the elimination construction needs a polynomial base ring");
  }
  ReesResult r = prepare(spec);
  const std::size_t s = spec.ideals.size();
  const std::size_t ext = r.extendedRing->numVars();
  const std::size_t total = ext + s;
  RingContext work;
  work.varNames = r.extendedRing->varNames;
  for (std::size_t i = 0; i < s; ++i) work.varNames.push_back(freshName("T_" + std::to_string(i + 1), work.varNames));
  work.grading.assign(total, {1});
  const RingPtr workRing = makeRing(std::move(work));
  const auto map = identityMap(r.baseVars);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < s; ++i) {
    const Polynomial t = Polynomial::variable(total, ext + i);
    for (std::size_t j = 0; j < r.generators[i].size(); ++j) {
      gens.push_back(Polynomial::variable(total, r.yVars[i][j]) - embed(r.generators[i][j], total, map) * t);
    }
  }
  std::vector<std::size_t> tVars(s);
  std::iota(tVars.begin(), tVars.end(), ext);
  const Ideal kernel = eliminate(Ideal(workRing, std::move(gens)), tVars);
  std::vector<std::size_t> back = identityMap(total);
  for (std::size_t i = 0; i < s; ++i) back[ext + i] = 0;  // T variables no longer occur
  std::vector<Polynomial> basis;
  for (const auto& g : kernel.gens()) basis.push_back(embed(g, ext, back));
  r.definingIdeal = Ideal::fromGrevlexBasis(r.extendedRing, std::move(basis));
  for (const auto& gens : r.generators) r.nzds.push_back(gens.front());
  checkTHomogeneous(r);
  return r;
}

Polynomial reesImage(const ReesResult& rees, const Polynomial& g) {
  const std::size_t s = rees.generators.size();
  const std::size_t total = rees.baseVars + s;
  const auto map = identityMap(rees.baseVars);
  std::vector<Polynomial> images(rees.extendedRing->numVars());
  for (std::size_t v = 0; v < rees.baseVars; ++v) images[v] = Polynomial::variable(total, v);
  for (std::size_t i = 0; i < s; ++i) {
    const Polynomial t = Polynomial::variable(total, rees.baseVars + i);
    for (std::size_t j = 0; j < rees.generators[i].size(); ++j) {
      images[rees.yVars[i][j]] = embed(rees.generators[i][j], total, map) * t;
    }
  }
  Polynomial image = substitute(g, images);
  const auto& K = rees.extendedRing->quotientGens;
  if (K.empty() || image.isZero()) return image;
  // K only involves base variables, so the Y slots of the map are unused.
  std::vector<std::size_t> keep(rees.extendedRing->numVars(), 0);
  std::iota(keep.begin(), keep.begin() + static_cast<std::ptrdiff_t>(rees.baseVars), 0);
  std::vector<Polynomial> lifted;
  for (const auto& k : K) lifted.push_back(embed(k, total, keep));
  const auto basis = reducedGroebnerBasis(total, lifted, MonomialOrder::grevlex());
  return normalForm(image, basis, MonomialOrder::grevlex());
}

std::vector<std::optional<Multidegree>> generatorDegrees(const ReesResult& rees) {
  std::vector<std::optional<Multidegree>> out;
  for (const auto& g : rees.definingIdeal.gens()) out.push_back(multidegree(g, *rees.extendedRing));
  return out;
}

}  // namespace mixmult

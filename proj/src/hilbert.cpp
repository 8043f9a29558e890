#include "mixmult/hilbert.hpp"

#include <algorithm>
#include <unordered_map>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

using Degree = std::vector<std::int64_t>;

struct Grading {
  std::size_t rank = 0;
  std::vector<std::size_t> axis;  // series variable of each ring variable

  Degree of(const Monomial& m) const {
    Degree d(rank, 0);
    for (std::size_t v = 0; v < m.size(); ++v) d[axis[v]] += m[v];
    return d;
  }
};

Grading unitGrading(const GradingMatrix& rows, std::size_t numVars) {
  if (rows.size() != numVars) fail(ErrorCode::DimensionMismatch, "grading needs one row per variable");
  Grading g;
  g.rank = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != g.rank) fail(ErrorCode::DimensionMismatch, "grading rows have differing lengths");
    std::size_t ones = 0, where = 0;
    bool other = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 1) {
        ++ones;
        where = i;
      } else if (row[i] != 0) {
        other = true;
      }
    }
    if (ones == 0 && !other) fail(ErrorCode::ZeroDegreeVariable, "a variable has degree zero");
    if (ones != 1 || other) fail(ErrorCode::BadArgument, "variable degrees must be unit vectors");
    g.axis.push_back(where);
  }
  return g;
}

void addTerm(SeriesPolynomial& p, const Degree& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// p * (1 - t^d)
SeriesPolynomial timesOneMinus(const SeriesPolynomial& p, const Degree& d) {
  SeriesPolynomial out = p;
  for (const auto& [e, c] : p) {
    Degree s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += d[i];
    addTerm(out, s, -c);
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.totalDegree(), db = b.totalDegree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

class KPolynomialBuilder {
 public:
  explicit KPolynomialBuilder(const Grading& grading) : grading_(grading) {}

  SeriesPolynomial run(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {{Degree(grading_.rank, 0), BigInt(1)}};
    for (const auto& g : gens) {
      if (g.isOne()) return {};
    }
    const std::size_t n = gens.front().size();
    std::vector<std::size_t> count(n, 0);
    for (const auto& g : gens) {
      for (std::size_t v = 0; v < n; ++v) count[v] += g[v] != 0 ? 1 : 0;
    }
    const auto var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[var] <= 1) {
      // Pairwise coprime generators.
      SeriesPolynomial out{{Degree(grading_.rank, 0), BigInt(1)}};
      for (const auto& g : gens) out = timesOneMinus(out, grading_.of(g));
      return out;
    }
    std::vector<Exponent> exps;
    Exponent purePower = 0;
    for (const auto& g : gens) {
      if (g[var] == 0) continue;
      exps.push_back(g[var]);
      if (g.support().size() == 1 && (purePower == 0 || g[var] < purePower)) purePower = g[var];
    }
    std::sort(exps.begin(), exps.end());
    Exponent e = exps[exps.size() / 2];
    if (purePower != 0 && e >= purePower) e = purePower - 1;
    if (e == 0) e = 1;
    Monomial pivot(n);
    pivot.set(var, e);

    std::vector<Monomial> sum{pivot};
    std::vector<Monomial> quotient;
    for (const auto& g : gens) {
      if (!pivot.divides(g)) sum.push_back(g);
      Monomial q = g;
      q.set(var, g[var] > e ? g[var] - e : 0);
      quotient.push_back(std::move(q));
    }
    SeriesPolynomial out = run(minimalize(std::move(sum)));
    const Degree shift = grading_.of(pivot);
    for (const auto& [d, c] : run(minimalize(std::move(quotient)))) {
      Degree s = d;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
      addTerm(out, s, c);
    }
    return out;
  }

 private:
  const Grading& grading_;
};

Degree without(const Degree& e, std::size_t i) {
  Degree out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k != i) out.push_back(e[k]);
  }
  return out;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

MultigradedSeries kPolynomial(const MonomialIdeal& M, const GradingMatrix& grading) {
  const Grading g = unitGrading(grading, M.numVars());
  MultigradedSeries S;
  S.denomExponents.assign(g.rank, 0);
  for (auto a : g.axis) ++S.denomExponents[a];
  KPolynomialBuilder builder(g);
  S.numerator = builder.run(M.gens());
  return S;
}

std::optional<MultigradedSeries> divideOutExact(const MultigradedSeries& S, std::size_t i) {
  if (i >= S.rank()) fail(ErrorCode::BadArgument, "series variable out of range");
  if (S.denomExponents[i] < 1) return std::nullopt;
  std::map<Degree, std::map<std::int64_t, BigInt>> lines;
  for (const auto& [e, c] : S.numerator) lines[without(e, i)][e[i]] = c;
  MultigradedSeries out;
  out.denomExponents = S.denomExponents;
  --out.denomExponents[i];
  for (const auto& [rest, line] : lines) {
    // N = (1 - t) Q with Q_k = sum_{j <= k} N_j along each line.
    BigInt running = 0;
    const std::int64_t lo = line.begin()->first;
    const std::int64_t hi = line.rbegin()->first;
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (auto it = line.find(k); it != line.end()) running += it->second;
      if (k == hi) break;
      if (running != 0) {
        Degree e = rest;
        e.insert(e.begin() + static_cast<std::ptrdiff_t>(i), k);
        out.numerator.emplace(std::move(e), running);
      }
    }
    if (running != 0) return std::nullopt;
  }
  return out;
}

MultigradedSeries reduceSeries(const MultigradedSeries& S) {
  MultigradedSeries cur = S;
  for (std::size_t i = 0; i < cur.rank(); ++i) {
    while (auto next = divideOutExact(cur, i)) cur = std::move(*next);
  }
  return cur;
}

MultigradedSeries evaluateAtOne(const MultigradedSeries& S, std::size_t i) {
  if (i >= S.rank()) fail(ErrorCode::BadArgument, "series variable out of range");
  if (S.denomExponents[i] != 0) fail(ErrorCode::BadArgument, "cannot set a variable to 1 while it divides the denominator");
  MultigradedSeries out;
  out.denomExponents = without(S.denomExponents, i);
  for (const auto& [e, c] : S.numerator) addTerm(out.numerator, without(e, i), c);
  return out;
}

std::optional<BigInt> thmCoefficient(const MultigradedSeries& S, const std::vector<std::int64_t>& alpha) {
  if (alpha.size() != S.rank()) fail(ErrorCode::IndexLengthMismatch, "index length differs from the number of series variables");
  std::vector<std::int64_t> k(alpha.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) fail(ErrorCode::BadArgument, "negative index entry");
    k[i] = S.denomExponents[i] - 1 - alpha[i];
    if (k[i] < 0) return std::nullopt;
    total += k[i];
  }
  BigInt value = 0;
  for (const auto& [e, c] : S.numerator) {
    BigInt term = c;
    for (std::size_t i = 0; i < k.size() && term != 0; ++i) term *= binomial(e[i], k[i]);
    value += term;
  }
  return total % 2 == 0 ? value : BigInt(-value);
}

BigInt hilbertPolynomialValue(const MultigradedSeries& S, const std::vector<std::int64_t>& u) {
  if (u.size() != S.rank()) fail(ErrorCode::IndexLengthMismatch, "degree length differs from the number of series variables");
  BigInt total = 0;
  std::vector<std::int64_t> alpha(S.rank(), 0);
  for (std::size_t i = 0; i < S.rank(); ++i) {
    if (S.denomExponents[i] < 1) return 0;
  }
  for (;;) {
    BigInt term = *thmCoefficient(S, alpha);
    for (std::size_t i = 0; i < alpha.size() && term != 0; ++i) term *= binomial(u[i] + alpha[i], alpha[i]);
    total += term;
    std::size_t pos = 0;
    while (pos < alpha.size() && alpha[pos] == S.denomExponents[pos] - 1) alpha[pos++] = 0;
    if (pos == alpha.size()) break;
    ++alpha[pos];
  }
  return total;
}

BigInt seriesCoefficient(const MultigradedSeries& S, const std::vector<std::int64_t>& u) {
  if (u.size() != S.rank()) fail(ErrorCode::IndexLengthMismatch, "degree length differs from the number of series variables");
  BigInt total = 0;
  for (const auto& [e, c] : S.numerator) {
    BigInt term = c;
    for (std::size_t i = 0; i < u.size() && term != 0; ++i) {
      const std::int64_t gap = u[i] - e[i];
      const std::int64_t k = S.denomExponents[i];
      if (gap < 0) {
        term = 0;
      } else if (k == 0) {
        if (gap != 0) term = 0;
      } else {
        term *= binomial(gap + k - 1, k - 1);
      }
    }
    total += term;
  }
  return total;
}

BigInt hilbertFunctionValue(const Ideal& J, const GradingMatrix& tGrading, const std::vector<std::int64_t>& u) {
  const std::size_t n = J.numVars();
  if (tGrading.size() != n) fail(ErrorCode::DimensionMismatch, "grading needs one row per variable");
  const std::size_t rank = u.size();
  std::vector<std::size_t> inner;                     // variables of degree zero
  std::vector<std::vector<std::size_t>> groups(rank);  // variables of degree e_i
  for (std::size_t v = 0; v < n; ++v) {
    const auto& row = tGrading[v];
    if (row.size() != rank) fail(ErrorCode::DimensionMismatch, "grading row length differs from the degree");
    std::size_t ones = 0, where = 0;
    for (std::size_t i = 0; i < rank; ++i) {
      if (row[i] == 1) {
        ++ones;
        where = i;
      } else if (row[i] != 0) {
        fail(ErrorCode::BadArgument, "grading rows must be zero or unit vectors");
      }
    }
    if (ones == 0) {
      inner.push_back(v);
    } else if (ones == 1) {
      groups[where].push_back(v);
    } else {
      fail(ErrorCode::BadArgument, "grading rows must be zero or unit vectors");
    }
  }
  for (auto x : u) {
    if (x < 0) return 0;
  }
  for (std::size_t i = 0; i < rank; ++i) {
    if (groups[i].empty() && u[i] != 0) return 0;
  }

  const MonomialIdeal M = initialIdeal(J);
  struct Split {
    Monomial outer;
    Monomial innerPart;
  };
  std::vector<Split> gens;
  for (const auto& g : M.gens()) {
    Monomial outer(n);
    std::vector<Exponent> in;
    for (std::size_t v = 0; v < n; ++v) {
      if (tGrading[v] == std::vector<std::int64_t>(rank, 0)) {
        in.push_back(g[v]);
      } else {
        outer.set(v, g[v]);
      }
    }
    gens.push_back({std::move(outer), Monomial(std::move(in))});
  }

  // Generators with no inner part kill every completion of a partial Y-monomial they divide.
  std::vector<Monomial> pureOuter;
  for (const auto& g : gens) {
    if (g.innerPart.isOne()) pureOuter.push_back(g.outer);
  }
  std::map<std::vector<bool>, BigInt> memo;
  BigInt total = 0;
  Monomial y(n);
  auto sliceCount = [&]() {
    std::vector<bool> mask(gens.size());
    std::vector<Monomial> parts;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      mask[k] = gens[k].outer.divides(y);
      if (mask[k]) parts.push_back(gens[k].innerPart);
    }
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const MonomialIdeal local(inner.size(), std::move(parts));
    BigInt c;
    if (local.isUnit()) {
      c = 0;
    } else if (!isZeroDimensional(local)) {
      fail(ErrorCode::NotZeroDimensional, "a graded slice is infinite-dimensional");
    } else {
      c = standardMonomialCount(local);
    }
    memo.emplace(std::move(mask), c);
    return c;
  };
  auto dead = [&]() {
    return std::any_of(pureOuter.begin(), pureOuter.end(), [&](const Monomial& g) { return g.divides(y); });
  };
  // Skip empty groups (their u entry is zero by the check above).
  std::vector<std::vector<std::size_t>> nonEmpty;
  std::vector<std::int64_t> targets;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!groups[i].empty()) {
      nonEmpty.push_back(groups[i]);
      targets.push_back(u[i]);
    }
  }
  groups = std::move(nonEmpty);
  const std::size_t active = groups.size();
  // Distribute each target degree among the variables of its group.
  auto placeActive = [&](auto&& self, std::size_t group, std::size_t slot, std::int64_t left) -> void {
    if (group == active) {
      total += sliceCount();
      return;
    }
    const auto& vars = groups[group];
    if (slot + 1 == vars.size()) {
      y.set(vars[slot], static_cast<Exponent>(left));
      if (!dead()) self(self, group + 1, 0, group + 1 < active ? targets[group + 1] : 0);
      y.set(vars[slot], 0);
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      y.set(vars[slot], static_cast<Exponent>(e));
      if (dead()) break;
      self(self, group, slot + 1, left - e);
    }
    y.set(vars[slot], 0);
  };
  placeActive(placeActive, 0, 0, active ? targets[0] : 0);
  return total;
}

}  // namespace mixmult

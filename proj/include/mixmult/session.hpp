#pragma once

// Text front end: polynomial expressions and session files.
//
//   ring Q[w,x,y,z] / (w*x, y*z);
//   ideal I = (x^2 - y*w, x^3 - z*w^2);
//   poly f = x^4 + y^4 + z^4;
//   polytope P = [[1,1,0],[2,1,0]];
//
// '#' starts a comment that runs to the end of the line.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mixmult/ideal.hpp"
#include "mixmult/polytope.hpp"

namespace mixmult {

/// Parses an expression over the variables of `ctx`. Coefficients are
/// integers or a/b fractions; operators are + - * ^ and parentheses.
Polynomial parsePolynomial(std::string_view text, const RingContext& ctx);

/// Variable names in `text`, sorted, for building an ad hoc ring.
std::vector<std::string> identifiersIn(std::string_view text);

struct Session {
  RingPtr ring;
  std::vector<std::string> order;  ///< declaration order of all names
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, LatticePolytope> polytopes;

  bool has(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
  const Polynomial& poly(const std::string& name) const;
  const LatticePolytope& polytope(const std::string& name) const;
};

/// Throws Syntax (with line and column), UnknownVariable or DuplicateName.
Session parseSession(std::string_view text);

/// Session text that parses back to an identical session.
std::string serializeSession(const Session& session);

}  // namespace mixmult

#include "mixmult/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "mixmult/error.hpp"

namespace mixmult {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  bool atSym(char c) const { return cur_.kind == Tok::Sym && cur_.text[0] == c; }
  bool atIdent(std::string_view word) const { return cur_.kind == Tok::Ident && cur_.text == word; }

  [[noreturn]] void error(const Token& at, const std::string& what) const {
    std::ostringstream os;
    os << "line " << at.line << ", column " << at.column << ": " << what;
    if (at.kind == Tok::End) {
      os << " (at end of input)";
    } else {
      os << " (at '" << at.text << "')";
    }
    fail(ErrorCode::Syntax, os.str());
  }

  void expect(char c) {
    if (!atSym(c)) error(cur_, std::string("expected '") + c + "'");
    advance();
  }

  std::string expectIdent() {
    if (cur_.kind != Tok::Ident) error(cur_, "expected a name");
    return next().text;
  }

 private:
  void skipSpace() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    skipSpace();
    cur_ = Token{};
    cur_.line = line_;
    cur_.column = col_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    const std::size_t start = pos_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) step();
      cur_.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) step();
      cur_.kind = Tok::Int;
    } else if (std::string_view("+-*^/()[],;=").find(c) != std::string_view::npos) {
      step();
      cur_.kind = Tok::Sym;
    } else {
      cur_.kind = Tok::Sym;
      cur_.text = std::string(1, c);
      error(cur_, "unexpected character");
    }
    cur_.text = std::string(src_.substr(start, pos_ - start));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token cur_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, const RingContext& ctx) : lex_(lex), ctx_(ctx), n_(ctx.numVars()) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (lex_.atSym('+') || lex_.atSym('-')) {
      const bool minus = lex_.next().text == "-";
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    while (lex_.atSym('*')) {
      lex_.next();
      acc *= unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (lex_.atSym('-')) {
      lex_.next();
      return -unary();
    }
    if (lex_.atSym('+')) {
      lex_.next();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.atSym('^')) {
      lex_.next();
      const Token t = lex_.peek();
      if (t.kind != Tok::Int) lex_.error(t, "expected a nonnegative integer exponent");
      lex_.next();
      if (t.text.size() > 9) lex_.error(t, "exponent too large");
      return base.pow(std::stoull(t.text));
    }
    return base;
  }

  Polynomial atom() {
    const Token t = lex_.peek();
    if (t.kind == Tok::Int) {
      lex_.next();
      Rational c(BigInt(t.text));
      if (lex_.atSym('/')) {
        lex_.next();
        const Token d = lex_.peek();
        if (d.kind != Tok::Int) lex_.error(d, "expected a denominator");
        lex_.next();
        BigInt den(d.text);
        if (den == 0) lex_.error(d, "zero denominator");
        c /= Rational(den);
      }
      return Polynomial::constant(n_, c);
    }
    if (t.kind == Tok::Ident) {
      lex_.next();
      auto idx = ctx_.indexOf(t.text);
      if (!idx) {
        fail(ErrorCode::UnknownVariable, "line " + std::to_string(t.line) + ", column " +
                                             std::to_string(t.column) + ": unknown variable '" + t.text + "'");
      }
      return Polynomial::variable(n_, *idx);
    }
    if (lex_.atSym('(')) {
      lex_.next();
      Polynomial inner = expr();
      lex_.expect(')');
      return inner;
    }
    lex_.error(t, "expected a number, variable or '('");
  }

  Lexer& lex_;
  const RingContext& ctx_;
  std::size_t n_;
};

std::vector<Polynomial> polyList(Lexer& lex, const RingContext& ctx) {
  std::vector<Polynomial> out;
  lex.expect('(');
  if (lex.atSym(')')) {
    lex.next();
    return out;
  }
  PolyParser pp(lex, ctx);
  out.push_back(pp.expr());
  while (lex.atSym(',')) {
    lex.next();
    out.push_back(pp.expr());
  }
  lex.expect(')');
  return out;
}

std::int64_t signedInt(Lexer& lex) {
  bool neg = false;
  if (lex.atSym('-')) {
    lex.next();
    neg = true;
  }
  const Token t = lex.peek();
  if (t.kind != Tok::Int) lex.error(t, "expected an integer");
  lex.next();
  if (t.text.size() > 18) lex.error(t, "coordinate too large");
  const auto v = static_cast<std::int64_t>(std::stoll(t.text));
  return neg ? -v : v;
}

LatticePolytope polytopeLiteral(Lexer& lex) {
  LatticePolytope P;
  lex.expect('[');
  for (;;) {
    const Token at = lex.peek();
    lex.expect('[');
    LatticePoint pt;
    if (!lex.atSym(']')) {
      pt.push_back(signedInt(lex));
      while (lex.atSym(',')) {
        lex.next();
        pt.push_back(signedInt(lex));
      }
    }
    lex.expect(']');
    if (!P.points.empty() && pt.size() != P.points.front().size()) lex.error(at, "points of differing dimension");
    P.points.push_back(std::move(pt));
    if (!lex.atSym(',')) break;
    lex.next();
  }
  lex.expect(']');
  return P;
}

void requireFresh(const Session& s, const Token& at, const std::string& name) {
  if (s.has(name)) {
    fail(ErrorCode::DuplicateName, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) +
                                       ": name '" + name + "' is already defined");
  }
}

}  // namespace

Polynomial parsePolynomial(std::string_view text, const RingContext& ctx) {
  Lexer lex(text);
  PolyParser pp(lex, ctx);
  Polynomial p = pp.expr();
  if (lex.peek().kind != Tok::End) lex.error(lex.peek(), "unexpected trailing input");
  return p;
}

std::vector<std::string> identifiersIn(std::string_view text) {
  std::set<std::string> names;
  Lexer lex(text);
  while (lex.peek().kind != Tok::End) {
    Token t = lex.next();
    if (t.kind == Tok::Ident) names.insert(t.text);
  }
  return {names.begin(), names.end()};
}

bool Session::has(const std::string& name) const {
  return ideals.count(name) || polys.count(name) || polytopes.count(name);
}

const Ideal& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) fail(ErrorCode::UnknownName, "no ideal named '" + name + "'");
  return it->second;
}

const Polynomial& Session::poly(const std::string& name) const {
  auto it = polys.find(name);
  if (it == polys.end()) fail(ErrorCode::UnknownName, "no polynomial named '" + name + "'");
  return it->second;
}

const LatticePolytope& Session::polytope(const std::string& name) const {
  auto it = polytopes.find(name);
  if (it == polytopes.end()) fail(ErrorCode::UnknownName, "no polytope named '" + name + "'");
  return it->second;
}

Session parseSession(std::string_view text) {
  Session s;
  Lexer lex(text);
  while (lex.peek().kind != Tok::End) {
    const Token kw = lex.peek();
    if (kw.kind != Tok::Ident) lex.error(kw, "expected 'ring', 'ideal', 'poly' or 'polytope'");
    lex.next();
    if (kw.text == "ring") {
      if (s.ring) lex.error(kw, "a session declares exactly one ring");
      const Token field = lex.peek();
      const std::string f = lex.expectIdent();
      if (f != "Q" && f != "QQ") lex.error(field, "only the rationals Q are supported");
      lex.expect('[');
      std::vector<std::string> names;
      if (!lex.atSym(']')) {
        for (;;) {
          const Token at = lex.peek();
          std::string v = lex.expectIdent();
          if (std::find(names.begin(), names.end(), v) != names.end()) {
            fail(ErrorCode::DuplicateName, "line " + std::to_string(at.line) + ", column " +
                                               std::to_string(at.column) + ": variable '" + v + "' repeated");
          }
          names.push_back(std::move(v));
          if (!lex.atSym(',')) break;
          lex.next();
        }
      }
      lex.expect(']');
      RingContext ctx = RingContext::polynomialRing(std::move(names));
      if (lex.atSym('/')) {
        lex.next();
        for (auto& g : polyList(lex, ctx)) {
          if (!g.isZero()) ctx.quotientGens.push_back(std::move(g));
        }
      }
      lex.expect(';');
      s.ring = makeRing(std::move(ctx));
      continue;
    }
    if (kw.text != "ideal" && kw.text != "poly" && kw.text != "polytope") {
      lex.error(kw, "expected 'ring', 'ideal', 'poly' or 'polytope'");
    }
    const Token nameTok = lex.peek();
    const std::string name = lex.expectIdent();
    requireFresh(s, nameTok, name);
    lex.expect('=');
    if (kw.text == "polytope") {
      s.polytopes.emplace(name, polytopeLiteral(lex));
    } else {
      if (!s.ring) lex.error(kw, "the ring must be declared first");
      if (s.ring->indexOf(name)) lex.error(nameTok, "name clashes with a ring variable");
      if (kw.text == "ideal") {
        s.ideals.emplace(name, Ideal(s.ring, polyList(lex, *s.ring)));
      } else {
        PolyParser pp(lex, *s.ring);
        s.polys.emplace(name, pp.expr());
      }
    }
    lex.expect(';');
    s.order.push_back(name);
  }
  return s;
}

std::string serializeSession(const Session& s) {
  std::ostringstream os;
  if (s.ring) {
    const auto& names = s.ring->varNames;
    os << "ring Q[";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
    os << "]";
    if (s.ring->isQuotient()) {
      os << " / (";
      for (std::size_t i = 0; i < s.ring->quotientGens.size(); ++i) {
        os << (i ? ", " : "") << toString(s.ring->quotientGens[i], names);
      }
      os << ")";
    }
    os << ";\n";
  }
  for (const auto& name : s.order) {
    if (auto it = s.ideals.find(name); it != s.ideals.end()) {
      os << "ideal " << name << " = (";
      const auto& gens = it->second.gens();
      for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << toString(gens[i], s.ring->varNames);
      os << ");\n";
    } else if (auto pit = s.polys.find(name); pit != s.polys.end()) {
      os << "poly " << name << " = " << toString(pit->second, s.ring->varNames) << ";\n";
    } else {
      const auto& P = s.polytopes.at(name);
      os << "polytope " << name << " = [";
      for (std::size_t i = 0; i < P.points.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < P.points[i].size(); ++j) os << (j ? "," : "") << P.points[i][j];
        os << "]";
      }
      os << "];\n";
    }
  }
  return os.str();
}

}  // namespace mixmult

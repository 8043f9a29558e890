#include <doctest.h>

#include "mixmult/error.hpp"
#include "mixmult/session.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* kSession = R"(# crossing line pairs
ring Q[w,x,y,z] / (w*x, y*z);
ideal I = (x^2 - y*w, x^3 - z*w^2);
poly f = x^4 + y^4 + z^4;
polytope P = [[1,1,0],[2,1,0]];
ideal m = (w, x, y, z);
)";

}  // namespace

TEST_CASE("parsing a session") {
  const auto s = parseSession(kSession);
  CHECK(s.ring->varNames == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(s.ring->quotientGens.size() == 2);
  CHECK(s.order == std::vector<std::string>{"I", "f", "P", "m"});
  CHECK(s.ideal("I").gens().size() == 2);
  CHECK(s.poly("f") == parsePolynomial("z^4 + y^4 + x^4", *s.ring));
  CHECK(s.polytope("P").points == std::vector<LatticePoint>{{1, 1, 0}, {2, 1, 0}});
  CHECK(s.has("m"));
  CHECK_FALSE(s.has("J"));
}

TEST_CASE("polynomial expressions") {
  auto R = ring({"x", "y"});
  CHECK(poly(R, "(x + y)^2") == poly(R, "x^2 + 2*x*y + y^2"));
  CHECK(poly(R, "1/2*x - -y") == poly(R, "y + 1/2*x"));
  CHECK(poly(R, "3/6*x^0") == poly(R, "1/2"));
  CHECK(identifiersIn("x_1^2 + 3*y - x_1*zz") == std::vector<std::string>{"x_1", "y", "zz"});
}

TEST_CASE("syntax errors report their position") {
  try {
    parseSession("ring Q[x,y];\nideal I = (x + , y);\n");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("session errors") {
  auto codeOf = [](const char* text) {
    try {
      parseSession(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::AssertionFailed;
  };
  CHECK(codeOf("ring Q[x];\npoly f = y;\n") == ErrorCode::UnknownVariable);
  CHECK(codeOf("ring Q[x];\npoly f = x;\npoly f = x^2;\n") == ErrorCode::DuplicateName);
  CHECK(codeOf("ring Q[x];\npoly f = x^;\n") == ErrorCode::Syntax);
  auto R = ring({"x"});
  CHECK_THROWS_AS(poly(R, "x^99999999999999999999"), Error);
}

TEST_CASE("serialization round trip") {
  const auto s = parseSession(kSession);
  const auto text = serializeSession(s);
  const auto t = parseSession(text);
  CHECK(t.ring->varNames == s.ring->varNames);
  CHECK(t.ring->quotientGens == s.ring->quotientGens);
  CHECK(t.order == s.order);
  CHECK(t.ideal("I").gens() == s.ideal("I").gens());
  CHECK(t.poly("f") == s.poly("f"));
  CHECK(t.polytope("P") == s.polytope("P"));
  CHECK(serializeSession(t) == text);
}

TEST_CASE("random polynomials survive printing and parsing") {
  auto R = ring({"a", "b", "c"});
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = randomPoly(rng, 3, 4, 4, 9);
    CHECK(poly(R, show(R, p)) == p);
  }
}

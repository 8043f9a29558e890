// Command-line front end: one operation per invocation, one JSON record on
// stdout, diagnostics on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixmult/error.hpp"
#include "mixmult/groebner.hpp"
#include "mixmult/hilbert.hpp"
#include "mixmult/ideal.hpp"
#include "mixmult/multiplicity.hpp"
#include "mixmult/polytope.hpp"
#include "mixmult/rees.hpp"
#include "mixmult/session.hpp"

namespace mm = mixmult;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string sessionFile;
  std::vector<std::string> ideals;
  std::vector<std::int64_t> index;
  std::vector<std::string> nzds;
  std::string polytopes;
  std::string poly;
  std::string order = "grevlex";
  std::string method = "both";
  std::uint32_t prime = 0;
  bool text = false;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) mm::fail(mm::ErrorCode::BadArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string str(const mm::BigInt& v) { return v.get_str(); }

std::string freshName(std::string name, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

json sortedStrings(const std::vector<mm::Polynomial>& polys, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(mm::toString(p, names));
  std::sort(out.begin(), out.end());
  return out;
}

json degreeJson(const std::optional<mm::Multidegree>& d) {
  return d ? json(*d) : json(nullptr);
}

class Workspace {
 public:
  explicit Workspace(const Options& opts) : opts_(opts) {
    if (!opts.sessionFile.empty()) session_ = mm::parseSession(readFile(opts.sessionFile));
  }

  const mm::RingPtr& ring() {
    if (session_) return session_->ring;
    if (!adhoc_) {
      std::vector<std::string> names = mm::identifiersIn(opts_.poly);
      for (const auto& a : opts_.nzds) {
        for (auto& n : mm::identifiersIn(a)) names.push_back(std::move(n));
      }
      std::sort(names.begin(), names.end());
      names.erase(std::unique(names.begin(), names.end()), names.end());
      if (names.empty()) mm::fail(mm::ErrorCode::BadArgument, "no ring: pass a session with -f");
      adhoc_ = mm::makeRing(mm::RingContext::polynomialRing(std::move(names)));
    }
    return *adhoc_;
  }

  mm::Ideal ideal(const std::string& name) {
    if (session_ && session_->ideals.count(name)) return session_->ideal(name);
    if (name == "m") return mm::Ideal::maximal(ring());
    mm::fail(mm::ErrorCode::UnknownName, "no ideal named '" + name + "'");
  }

  std::vector<mm::Ideal> ideals(std::size_t atLeast = 1) {
    if (opts_.ideals.size() < atLeast) {
      mm::fail(mm::ErrorCode::BadArgument, "--ideals needs at least " + std::to_string(atLeast) + " name(s)");
    }
    std::vector<mm::Ideal> out;
    for (const auto& n : opts_.ideals) out.push_back(ideal(n));
    return out;
  }

  mm::Ideal singleIdeal() {
    if (opts_.ideals.size() != 1) mm::fail(mm::ErrorCode::BadArgument, "--ideals takes exactly one name here");
    return ideal(opts_.ideals.front());
  }

  bool hasPoly() const { return !opts_.poly.empty(); }

  mm::Polynomial poly() {
    if (opts_.poly.empty()) mm::fail(mm::ErrorCode::BadArgument, "--poly is required");
    if (session_ && session_->polys.count(opts_.poly)) return session_->poly(opts_.poly);
    return mm::parsePolynomial(opts_.poly, *ring());
  }

  std::vector<mm::Polynomial> nzds() {
    std::vector<mm::Polynomial> out;
    for (const auto& a : opts_.nzds) out.push_back(mm::parsePolynomial(a, *ring()));
    return out;
  }

  std::vector<mm::LatticePolytope> polytopes() {
    const std::string& spec = opts_.polytopes;
    if (spec.empty()) mm::fail(mm::ErrorCode::BadArgument, "--polytopes is required");
    if (spec.front() == '[') return parsePolytopes(spec);
    if (std::filesystem::is_regular_file(spec)) return parsePolytopes(readFile(spec));
    std::vector<mm::LatticePolytope> out;
    std::stringstream names(spec);
    for (std::string name; std::getline(names, name, ',');) {
      if (!session_ || !session_->polytopes.count(name)) {
        mm::fail(mm::ErrorCode::UnknownName, "no polytope named '" + name + "'");
      }
      out.push_back(session_->polytope(name));
    }
    return out;
  }

 private:
  static std::vector<mm::LatticePolytope> parsePolytopes(const std::string& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      mm::fail(mm::ErrorCode::Syntax, std::string("polytope JSON: ") + e.what());
    }
    auto bad = [] { mm::fail(mm::ErrorCode::Syntax, "polytopes must be an array of arrays of integer arrays"); };
    if (!doc.is_array()) bad();
    std::vector<mm::LatticePolytope> out;
    for (const auto& P : doc) {
      if (!P.is_array()) bad();
      mm::LatticePolytope poly;
      for (const auto& pt : P) {
        if (!pt.is_array()) bad();
        mm::LatticePoint p;
        for (const auto& c : pt) {
          if (!c.is_number_integer()) bad();
          p.push_back(c.get<std::int64_t>());
        }
        poly.points.push_back(std::move(p));
      }
      out.push_back(std::move(poly));
    }
    return out;
  }

  const Options& opts_;
  std::optional<mm::Session> session_;
  std::optional<mm::RingPtr> adhoc_;
};

mm::MonomialOrder parseOrder(const std::string& name) {
  if (name == "grevlex") return mm::MonomialOrder::grevlex();
  if (name == "lex") return mm::MonomialOrder::lex();
  mm::fail(mm::ErrorCode::BadArgument, "unknown order '" + name + "'");
}

json reesJson(const mm::ReesResult& rees) {
  const auto& ext = *rees.extendedRing;
  std::vector<std::string> names(ext.varNames.begin(), ext.varNames.begin() + static_cast<std::ptrdiff_t>(rees.baseVars));
  const std::vector<std::string> baseNames = names;
  json vars = json::array();
  std::size_t k = 0;
  for (std::size_t i = 0; i < rees.yVars.size(); ++i) {
    for (std::size_t j = 0; j < rees.yVars[i].size(); ++j) {
      const std::string x = freshName("X_" + std::to_string(k++), baseNames);
      names.push_back(x);
      vars.push_back(json{{"name", x},
                      {"rees_variable", ext.varNames[rees.yVars[i][j]]},
                      {"ideal", i},
                      {"generator", mm::toString(rees.generators[i][j], baseNames)}});
    }
  }
  // A minimal generating set modulo the base relations, each with a positive
  // leading coefficient.
  std::vector<std::pair<std::string, json>> rows;
  const mm::Ideal minimal = mm::trim(rees.definingIdeal);
  for (auto g : minimal.gens()) {
    if (mm::leadingTerm(g, mm::MonomialOrder::grevlex()).coeff < 0) g = -g;
    rows.emplace_back(mm::toString(g, names), degreeJson(mm::multidegree(g, ext)));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json gensOut = json::array(), degOut = json::array();
  for (auto& [s, d] : rows) {
    gensOut.push_back(s);
    degOut.push_back(d);
  }
  json nzds = json::array();
  for (const auto& a : rees.nzds) nzds.push_back(mm::toString(a, baseNames));
  return {{"generators", gensOut},
          {"degrees", degOut},
          {"internal_degree_meaningful", rees.internalDegreeMeaningful},
          {"variables", vars},
          {"nzds", nzds}};
}

json run(const std::string& command, const Options& opts) {
  Workspace ws(opts);
  if (command == "rees" || command == "rees-elim") {
    mm::ReesSpec spec{ws.ideals(), std::nullopt};
    if (!opts.nzds.empty()) spec.nzds = ws.nzds();
    return reesJson(command == "rees" ? mm::multiReesIdeal(spec) : mm::reesIdealByElimination(spec));
  }
  if (command == "mixed-mult") return str(mm::mixedMultiplicity({ws.ideals(), opts.index}));
  if (command == "hom-ideal") {
    const auto polys = ws.polytopes();
    if (polys.size() != 1) mm::fail(mm::ErrorCode::CountMismatch, "hom-ideal takes exactly one polytope");
    const mm::Ideal I = mm::homIdealPolytope(polys.front());
    return sortedStrings(I.gens(), I.ctx().varNames);
  }
  if (command == "mixed-volume") {
    if (!opts.ideals.empty()) {
      const auto ideals = ws.ideals();
      return str(mm::mMixedVolume(std::span<const mm::Ideal>(ideals)));
    }
    const auto polys = ws.polytopes();
    if (opts.method == "algebraic") return str(mm::mMixedVolume(std::span<const mm::LatticePolytope>(polys)));
    if (opts.method == "geometric") return str(mm::mixedVolumeGeometric(polys));
    if (opts.method != "both") mm::fail(mm::ErrorCode::BadArgument, "unknown method '" + opts.method + "'");
    const mm::BigInt algebraic = mm::mMixedVolume(std::span<const mm::LatticePolytope>(polys));
    if (polys.front().dimension() > 3) return str(algebraic);
    const mm::BigInt geometric = mm::mixedVolumeGeometric(polys);
    if (geometric != algebraic) {
      mm::fail(mm::ErrorCode::AssertionFailed,
               "algebraic mixed volume " + str(algebraic) + " differs from geometric " + str(geometric));
    }
    return str(algebraic);
  }
  if (command == "sec-milnor") {
    json out = json::object();
    for (const auto& [i, mu] : mm::secMilnorNumbers(ws.poly())) out[std::to_string(i)] = str(mu);
    return out;
  }
  if (command == "milnor") return str(mm::milnorNumberLocal(ws.poly()));
  if (command == "euler") return str(mm::eulerCharacteristicComplement(ws.poly()));
  if (command == "rees-mult") return str(mm::reesAlgebraMultiplicity(ws.ideals()));
  if (command == "ehrhart-lead") return str(mm::mixedEhrhartLeadingCoeff(ws.polytopes()));
  if (command == "gb") {
    const mm::Ideal I = ws.singleIdeal();
    const auto ord = parseOrder(opts.order);
    if (opts.prime != 0) {
      const auto lifted = I.liftedGens();
      return sortedStrings(mm::reducedGroebnerBasisModular(I.numVars(), lifted, ord, opts.prime),
                           I.ctx().varNames);
    }
    return sortedStrings(I.groebnerBasis(ord), I.ctx().varNames);
  }
  if (command == "saturate" || command == "colon") {
    const bool byPoly = ws.hasPoly();
    const auto ideals = ws.ideals(byPoly ? 1 : 2);
    if (ideals.size() != (byPoly ? 1u : 2u)) {
      mm::fail(mm::ErrorCode::BadArgument, "give --ideals I,J or --ideals I with --poly h");
    }
    const mm::Ideal& I = ideals.front();
    mm::Ideal result = I;
    if (command == "saturate") {
      result = byPoly ? mm::saturate(I, ws.poly()) : mm::saturate(I, ideals[1]);
    } else {
      result = byPoly ? mm::colon(I, ws.poly()) : mm::colon(I, ideals[1]);
    }
    return sortedStrings(result.groebnerBasis(), I.ctx().varNames);
  }
  if (command == "dim" || command == "kdim") {
    const mm::Ideal I = opts.ideals.empty() ? mm::Ideal::zero(ws.ring()) : ws.singleIdeal();
    return command == "dim" ? json(mm::krullDimension(I)) : json(str(mm::kDimension(I)));
  }
  mm::fail(mm::ErrorCode::BadArgument, "unknown command '" + command + "'");
}

int exitCode(mm::ErrorCategory c) {
  switch (c) {
    case mm::ErrorCategory::Parse: return 2;
    case mm::ErrorCategory::Validation: return 3;
    case mm::ErrorCategory::Hypothesis: return 4;
    case mm::ErrorCategory::Internal: return 5;
  }
  return 5;
}

void printText(const json& v, const std::string& indent, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured()) {
        os << indent << k << ":\n";
        printText(x, indent + "  ", os);
      } else {
        os << indent << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        printText(x, indent + "  ", os);
        os << "\n";
      } else {
        os << indent << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else {
    os << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed multiplicities, Rees algebras and mixed volumes"};
  app.require_subcommand(1);
  Options opts;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"rees", "defining ideal of the multi-Rees algebra by saturation"},
      {"rees-elim", "defining ideal of the multi-Rees algebra by elimination"},
      {"mixed-mult", "mixed multiplicity e_a(I_0 | I_1, ..., I_r)"},
      {"hom-ideal", "homogenized monomial ideal of a lattice polytope"},
      {"mixed-volume", "mixed volume of n polytopes in dimension n"},
      {"sec-milnor", "sectional Milnor numbers of an isolated singularity"},
      {"milnor", "local Milnor number at the origin"},
      {"euler", "Euler characteristic of a projective hypersurface complement"},
      {"rees-mult", "multiplicity of the multi-Rees algebra"},
      {"ehrhart-lead", "leading coefficient of the mixed Ehrhart polynomial"},
      {"gb", "reduced Groebner basis"},
      {"saturate", "saturation I : J^infinity or I : h^infinity"},
      {"colon", "colon ideal I : J or I : h"},
      {"dim", "Krull dimension of R/I"},
      {"kdim", "vector-space dimension of R/I"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-f,--session", opts.sessionFile, "session file")->check(CLI::ExistingFile);
    sub->add_option("--ideals", opts.ideals, "comma-separated ideal names ('m' is the maximal ideal)")
        ->delimiter(',');
    sub->add_option("--index", opts.index, "comma-separated index a_0,...,a_r")->delimiter(',');
    sub->add_option("--nzd", opts.nzds, "comma-separated nonzerodivisors, one per ideal")->delimiter(',');
    sub->add_option("--polytopes", opts.polytopes, "inline JSON, a JSON file, or session polytope names");
    sub->add_option("--poly", opts.poly, "polynomial expression or session name");
    sub->add_option("--order", opts.order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--method", opts.method, "algebraic, geometric or both")
        ->check(CLI::IsMember({"algebraic", "geometric", "both"}));
    sub->add_option("--prime", opts.prime, "compute modulo this prime (gb only)");
    sub->add_flag("--json", [&](std::int64_t) { opts.text = false; }, "JSON output (default)");
    sub->add_flag("--text", opts.text, "plain text output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json record;
  record["command"] = {{"name", command}, {"args", std::vector<std::string>(argv + 1, argv + argc)}};
  int status = 0;
  try {
    json value = run(command, opts);
    record["status"] = "ok";
    record["value"] = std::move(value);
  } catch (const mm::Error& e) {
    record["status"] = mm::errorCodeName(e.code());
    record["message"] = e.what();
    std::cerr << "error[" << mm::errorCodeName(e.code()) << "]: " << e.what() << "\n";
    status = exitCode(e.category());
  } catch (const std::exception& e) {
    record["status"] = "internal";
    record["message"] = e.what();
    std::cerr << "error[internal]: " << e.what() << "\n";
    status = 5;
  }

  if (opts.text) {
    if (status == 0) printText(record["value"], "", std::cout);
  } else {
    std::cout << record.dump(2) << "\n";
  }
  return status;
}

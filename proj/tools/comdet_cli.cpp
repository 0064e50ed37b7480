#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "comdet/constructions.hpp"
#include "comdet/io.hpp"
#include "comdet/varchenko.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string construct;
  std::string input;
  bool unsignedVars = false;
  std::string order;
  std::string format = "text";
  std::string output;
  std::optional<std::uint64_t> seed;
  bool force = false;
};

// A loaded or constructed system. Tope-only sources (k4sub) carry an explicit
// tope list and no covector set; they are always built unsigned.
struct Source {
  comdet::GroundSetPtr ground;
  std::optional<comdet::SignSystem> system;
  std::vector<comdet::SignVector> topeList;
};

std::vector<std::size_t> parseExtension(const comdet::FinitePoset& p, const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back(p.index(name));
  return out;
}

Source resolveSource(const Options& opt) {
  if (opt.construct.empty() == opt.input.empty())
    throw std::invalid_argument("exactly one of --construct and --input is required");

  Source src;
  if (!opt.input.empty()) {
    src.system = comdet::loadSystem(opt.input);
    src.ground = src.system->ground();
    return src;
  }

  const std::string& spec = opt.construct;
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "cycle" || kind == "cube") {
    std::size_t n = std::stoul(rest);
    src.system = kind == "cycle" ? comdet::cycleOM(n) : comdet::fullCube(n);
  } else if (kind == "ideals") {
    src.system = comdet::idealsCOM(comdet::loadPoset(rest));
  } else if (kind == "ranking") {
    auto c2 = rest.find(':');
    comdet::FinitePoset p = comdet::loadPoset(rest.substr(0, c2));
    if (c2 == std::string::npos)
      src.system = comdet::rankingCOM(p);
    else
      src.system = comdet::rankingCOM(p, parseExtension(p, rest.substr(c2 + 1)));
  } else if (kind == "k4sub") {
    auto [ground, ts] = comdet::k4SubdivisionTopes();
    src.ground = ground;
    src.topeList = std::move(ts);
    return src;
  } else if (kind == "random") {
    std::uint64_t seed = rest.empty() ? opt.seed.value_or(0) : std::stoull(rest);
    src.system = comdet::randomCOM(seed);
  } else {
    throw std::invalid_argument("unknown construction: " + kind);
  }
  src.ground = src.system->ground();
  return src;
}

comdet::ElementOrder resolveOrder(const Options& opt, const comdet::GroundSet& ground) {
  if (opt.order.empty()) return comdet::defaultOrder(ground);
  comdet::ElementOrder order;
  std::stringstream ss(opt.order);
  std::string name;
  while (std::getline(ss, name, ',')) order.push_back(ground.index(name));
  if (order.size() != ground.size())
    throw std::invalid_argument("--order must list every ground element exactly once");
  std::vector<char> seen(ground.size(), 0);
  for (std::size_t e : order) {
    if (seen[e]) throw std::invalid_argument("--order repeats element " + ground.name(e));
    seen[e] = 1;
  }
  return order;
}

comdet::VarchenkoMatrix buildMatrix(const Source& src, const Options& opt) {
  if (!src.system) return comdet::buildUnsignedFromTopes(src.ground, src.topeList);
  return opt.unsignedVars ? comdet::buildUnsigned(*src.system) : comdet::buildSigned(*src.system);
}

const comdet::SignSystem& requireSystem(const Source& src) {
  if (!src.system)
    throw std::invalid_argument("this command needs a covector system, not a bare tope list");
  return *src.system;
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string formatFactors(const std::vector<comdet::ClosedFormFactor>& factors,
                          const comdet::GroundSet& ground) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ' ';
    out += '(' + f.factor.str(ground) + ")^" + std::to_string(f.exponent);
  }
  if (out.empty()) out = "1";
  return out;
}

int runCheck(const Source& src, const Options&, std::ostream& os, bool jsonOut) {
  comdet::SignSystem s =
      src.system ? *src.system : comdet::SignSystem(src.ground, src.topeList);
  comdet::AxiomReport r = comdet::checkAxioms(s);
  if (jsonOut) {
    os << comdet::axiomReportToJson(r).dump(2) << "\n";
  } else {
    os << "FS: " << yesNo(r.satisfiesFS) << "\n";
    os << "SE: " << yesNo(r.satisfiesSE) << "\n";
    os << "composition: " << yesNo(r.satisfiesC) << "\n";
    os << "simple: " << yesNo(r.isSimple) << "\n";
    os << "contains zero: " << yesNo(r.containsZero) << "\n";
    os << "COM: " << yesNo(r.isCOM()) << "\n";
    os << "OM: " << yesNo(r.isOM()) << "\n";
    if (!r.fsWitness.empty()) os << "FS witness: " << r.fsWitness << "\n";
    if (!r.seWitness.empty()) os << "SE witness: " << r.seWitness << "\n";
    if (!r.cWitness.empty()) os << "composition witness: " << r.cWitness << "\n";
    if (!r.simplicityWitness.empty()) os << "simplicity witness: " << r.simplicityWitness << "\n";
  }
  return (r.isCOM() && r.isSimple) ? 0 : 1;
}

int runTopes(const Source& src, std::ostream& os, bool jsonOut) {
  std::vector<comdet::SignVector> ts =
      src.system ? comdet::topes(*src.system) : src.topeList;
  if (jsonOut) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(t.str());
    os << json{{"topes", arr}}.dump(2) << "\n";
  } else {
    for (const auto& t : ts) os << t.str() << "\n";
  }
  return 0;
}

int runMatrix(const Source& src, const Options& opt, std::ostream& os, bool jsonOut) {
  comdet::VarchenkoMatrix v = buildMatrix(src, opt);
  if (jsonOut) {
    json j = comdet::matrixToJson(v.matrix, *src.ground);
    j["ground_set"] = src.ground->names();
    j["signed"] = v.isSigned;
    os << j.dump(2) << "\n";
  } else {
    os << ".";
    for (const auto& c : v.matrix.colLabels()) os << "\t" << c;
    os << "\n";
    for (std::size_t r = 0; r < v.matrix.rows(); ++r) {
      os << v.matrix.rowLabels()[r];
      for (std::size_t c = 0; c < v.matrix.cols(); ++c)
        os << "\t" << v.matrix.at(r, c).str(*src.ground);
      os << "\n";
    }
  }
  return 0;
}

int runDet(const Source& src, const Options& opt, std::ostream& os, bool jsonOut) {
  comdet::VarchenkoMatrix v = buildMatrix(src, opt);
  if (v.matrix.rows() > 16 && !opt.force)
    throw std::invalid_argument("matrix has " + std::to_string(v.matrix.rows()) +
                                " topes; pass --force to expand the determinant anyway");
  comdet::Poly det = comdet::bareissDet(v.matrix);
  if (jsonOut)
    os << json{{"det", det.str(*src.ground)}, {"topes", v.matrix.rows()}}.dump(2) << "\n";
  else
    os << det.str(*src.ground) << "\n";
  return 0;
}

int runFormula(const Source& src, const Options& opt, std::ostream& os, bool jsonOut) {
  const comdet::SignSystem& s = requireSystem(src);
  auto order = resolveOrder(opt, *src.ground);
  auto factors = comdet::closedFormDet(s, !opt.unsignedVars, order);
  if (jsonOut) {
    json arr = json::array();
    for (const auto& f : factors)
      arr.push_back({{"factor", f.factor.str(*src.ground)},
                     {"exponent", f.exponent},
                     {"zero_set", f.zeroSet}});
    os << json{{"factors", arr}}.dump(2) << "\n";
  } else {
    os << formatFactors(factors, *src.ground) << "\n";
  }
  return 0;
}

int runVerify(const Source& src, const Options& opt, std::ostream& os, bool jsonOut) {
  const comdet::SignSystem& s = requireSystem(src);
  auto order = resolveOrder(opt, *src.ground);
  comdet::FactorReport r = comdet::verifyFactorChain(s, !opt.unsignedVars, order);
  if (jsonOut) {
    json j = comdet::factorReportToJson(r, *src.ground);
    j["formula"] = formatFactors(r.detClosedForm, *src.ground);
    j["all_hold"] = r.allHold();
    os << j.dump(2) << "\n";
  } else {
    bool blocksHold = true;
    for (const auto& b : r.blockChecks) blocksHold = blocksHold && b.triangular && b.blockDetsMatch;
    os << "factor chain: " << yesNo(r.chainHolds) << "\n";
    os << "triangular block identities: " << yesNo(r.fac1Holds) << "\n";
    os << "single-factor identity: " << yesNo(r.perElementHolds) << "\n";
    os << "block structure: " << yesNo(blocksHold) << "\n";
    os << "formula: " << formatFactors(r.detClosedForm, *src.ground) << "\n";
    os << "determinant matches formula: " << yesNo(r.match) << "\n";
    os << "all checks: " << yesNo(r.allHold()) << "\n";
  }
  return r.allHold() ? 0 : 1;
}

int runConstruct(const Source& src, std::ostream& os) {
  comdet::SignSystem s =
      src.system ? *src.system : comdet::SignSystem(src.ground, src.topeList);
  os << comdet::systemToJson(s).dump(2) << "\n";
  return 0;
}

int run(const Options& opt) {
  Source src = resolveSource(opt);
  const bool jsonOut = opt.format == "json";

  std::ostringstream buffer;
  int status;
  if (opt.command == "check")
    status = runCheck(src, opt, buffer, jsonOut);
  else if (opt.command == "topes")
    status = runTopes(src, buffer, jsonOut);
  else if (opt.command == "matrix")
    status = runMatrix(src, opt, buffer, jsonOut);
  else if (opt.command == "det")
    status = runDet(src, opt, buffer, jsonOut);
  else if (opt.command == "formula")
    status = runFormula(src, opt, buffer, jsonOut);
  else if (opt.command == "verify")
    status = runVerify(src, opt, buffer, jsonOut);
  else if (opt.command == "construct")
    status = runConstruct(src, buffer);
  else
    throw std::invalid_argument("unknown command: " + opt.command);

  if (opt.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
    out << buffer.str();
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact determinants of tope distance matrices"};
  app.require_subcommand(1);

  Options opt;
  for (const char* name :
       {"check", "topes", "matrix", "det", "formula", "verify", "construct"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--construct", opt.construct, "construction spec, e.g. cycle:3");
    sub->add_option("--input", opt.input, "system JSON file");
    sub->add_flag("--unsigned", opt.unsignedVars, "one variable per element");
    sub->add_option("--order", opt.order, "element elimination order, comma separated");
    sub->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", opt.output, "write the report to a file");
    sub->add_option("--seed", opt.seed, "seed for random:<seed> constructions");
    sub->add_flag("--force", opt.force, "expand determinants beyond the size guard");
    sub->callback([&opt, name] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(opt);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

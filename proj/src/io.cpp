#include "comdet/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace comdet {

using nlohmann::json;

SignSystem systemFromJson(const json& j) {
  if (!j.contains("ground_set") || !j.contains("covectors"))
    throw std::invalid_argument("system JSON needs ground_set and covectors");
  GroundSetPtr ground = makeGroundSet(j.at("ground_set").get<std::vector<std::string>>());
  std::vector<SignVector> covs;
  for (const auto& s : j.at("covectors")) covs.emplace_back(ground, s.get<std::string>());
  return SignSystem(ground, std::move(covs));
}

json systemToJson(const SignSystem& s) {
  json j;
  j["ground_set"] = s.ground()->names();
  std::vector<std::string> covs;
  for (const auto& x : s.covectors()) covs.push_back(x.str());
  j["covectors"] = covs;
  return j;
}

FinitePoset posetFromJson(const json& j) {
  if (!j.contains("elements"))
    throw std::invalid_argument("poset JSON needs elements");
  auto elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2)
        throw std::invalid_argument("poset relation must be a pair");
      rels.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  return FinitePoset(std::move(elements), rels);
}

json posetToJson(const FinitePoset& p) {
  json j;
  j["elements"] = p.elements();
  std::vector<std::vector<std::string>> rels;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b)) rels.push_back({p.element(a), p.element(b)});
  j["relations"] = rels;
  return j;
}

json matrixToJson(const PolyMatrix& m, const GroundSet& ground) {
  json j;
  j["row_labels"] = m.rowLabels();
  j["col_labels"] = m.colLabels();
  std::vector<std::vector<std::string>> grid;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str(ground));
    grid.push_back(std::move(row));
  }
  j["entries"] = grid;
  return j;
}

PolyMatrix matrixFromJson(const json& j, const GroundSet& ground) {
  PolyMatrix m(j.at("row_labels").get<std::vector<std::string>>(),
               j.at("col_labels").get<std::vector<std::string>>());
  const auto& grid = j.at("entries");
  if (grid.size() != m.rows()) throw std::invalid_argument("entry grid row mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (grid[r].size() != m.cols()) throw std::invalid_argument("entry grid column mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m.at(r, c) = parsePoly(grid[r][c].get<std::string>(), ground);
  }
  return m;
}

json axiomReportToJson(const AxiomReport& r) {
  json j;
  j["fs"] = r.satisfiesFS;
  j["se"] = r.satisfiesSE;
  j["composition"] = r.satisfiesC;
  j["simple"] = r.isSimple;
  j["contains_zero"] = r.containsZero;
  j["is_com"] = r.isCOM();
  j["is_om"] = r.isOM();
  json witnesses = json::object();
  if (!r.fsWitness.empty()) witnesses["fs"] = r.fsWitness;
  if (!r.seWitness.empty()) witnesses["se"] = r.seWitness;
  if (!r.cWitness.empty()) witnesses["composition"] = r.cWitness;
  if (!r.simplicityWitness.empty()) witnesses["simple"] = r.simplicityWitness;
  j["witnesses"] = witnesses;
  return j;
}

json factorReportToJson(const FactorReport& r, const GroundSet& ground) {
  json j;
  j["chain_holds"] = r.chainHolds;
  j["fac1_holds"] = r.fac1Holds;
  j["per_element_holds"] = r.perElementHolds;
  bool blocksHold = true;
  json blocks = json::array();
  for (const auto& b : r.blockChecks) {
    blocks.push_back({{"element", b.element},
                      {"triangular", b.triangular},
                      {"block_dets_match", b.blockDetsMatch}});
    blocksHold = blocksHold && b.triangular && b.blockDetsMatch;
  }
  j["blocks_hold"] = blocksHold;
  j["block_checks"] = blocks;
  json factors = json::array();
  for (const auto& f : r.detClosedForm)
    factors.push_back({{"factor", f.factor.str(ground)}, {"exponent", f.exponent}});
  j["factors"] = factors;
  j["match"] = r.match;
  return j;
}

namespace {

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

SignSystem loadSystem(const std::string& path) { return systemFromJson(loadJsonFile(path)); }
FinitePoset loadPoset(const std::string& path) { return posetFromJson(loadJsonFile(path)); }

}  // namespace comdet

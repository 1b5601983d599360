#include "twisted_h1/bundles.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "twisted_h1/error.hpp"

namespace twisted_h1 {

void CoveringData::validate() const {
  type.validate();
  if (genus < 0) fail(ErrorKind::invalid_input, "genus must be non-negative, got " + std::to_string(genus));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    const std::string where = "orbit " + std::to_string(i + 1);
    if (o.m < 2) fail(ErrorKind::invalid_input, where + ": ramification index must be at least 2");
    if (o.tau_order < 1) fail(ErrorKind::invalid_input, where + ": tau_order must be positive");
    if (o.m % o.tau_order != 0)
      fail(ErrorKind::incompatible_order, where + ": tau_order " + std::to_string(o.tau_order) +
                                              " does not divide m = " + std::to_string(o.m));
  }
}

CoveringData parse_covering(const std::string& json_text) {
  using nlohmann::json;
  CoveringData cd;
  try {
    const json doc = json::parse(json_text);
    cd.genus = doc.at("genus").get<int>();
    bool first = true;
    for (const auto& o : doc.at("orbits")) {
      const SimpleType t{parse_family(o.at("type").get<std::string>()), o.at("rank").get<int>()};
      if (first) {
        cd.type = t;
        first = false;
      } else if (!(t == cd.type)) {
        fail(ErrorKind::invalid_input,
             "all orbits must share one group type; found " + cd.type.to_string() + " and " + t.to_string());
      }
      cd.orbits.push_back({o.at("m").get<int>(), o.value("tau_order", 1)});
    }
    if (first && doc.contains("type")) cd.type = {parse_family(doc.at("type").get<std::string>()), doc.value("rank", 1)};
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("malformed covering document: ") + e.what());
  }
  cd.validate();
  return cd;
}

std::string covering_to_json(const CoveringData& cd) {
  nlohmann::ordered_json doc;
  doc["genus"] = cd.genus;
  doc["orbits"] = nlohmann::ordered_json::array();
  for (const auto& o : cd.orbits)
    doc["orbits"].push_back({{"m", o.m},
                             {"type", std::string(1, to_char(cd.type.family))},
                             {"rank", cd.type.rank},
                             {"tau_order", o.tau_order}});
  return doc.dump();
}

CoveringVerdict covering_exists(int genus, const std::vector<int>& indices) {
  if (genus < 0) fail(ErrorKind::invalid_input, "genus must be non-negative");
  for (int m : indices)
    if (m < 2) fail(ErrorKind::invalid_input, "ramification indices must be at least 2");
  if (genus == 0 && indices.size() == 1) return {false, "g=0, s=1"};
  if (genus == 0 && indices.size() == 2 && indices[0] != indices[1]) return {false, "g=0, s=2, m_1 != m_2"};
  return {true, "not an excluded case"};
}

std::vector<CohomologySet> local_type_sets(const CoveringData& cd, Isogeny isogeny) {
  cd.validate();
  const RootDatum d(cd.type, isogeny);
  std::vector<CohomologySet> out;
  for (const auto& o : cd.orbits) out.push_back(h1_group(diagram_automorphism(d, o.tau_order), o.m));
  return out;
}

std::uint64_t component_count(const CoveringData& cd, Isogeny isogeny) {
  if (isogeny != Isogeny::simply_connected)
    fail(ErrorKind::not_simply_connected, "component counting requires a simply connected group");
  std::uint64_t count = 1;
  for (const auto& set : local_type_sets(cd, isogeny)) {
    const auto n = static_cast<std::uint64_t>(set.cardinality());
    if (count > std::numeric_limits<std::uint64_t>::max() / n)
      fail(ErrorKind::too_large, "component count exceeds 64 bits");
    count *= n;
  }
  return count;
}

std::string bundle_label(const CoveringData& cd, const std::vector<CohomologySet>& sets,
                         const std::vector<std::size_t>& assignment) {
  if (assignment.size() != sets.size() || sets.size() != cd.orbits.size())
    fail(ErrorKind::invalid_assignment, "assignment has " + std::to_string(assignment.size()) +
                                            " entries for " + std::to_string(cd.orbits.size()) + " orbits");
  std::string label = cd.type.to_string();
  if (sets.empty()) return label + "|unramified";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (assignment[i] >= sets[i].cardinality())
      fail(ErrorKind::invalid_assignment, "orbit " + std::to_string(i + 1) + ": class index " +
                                              std::to_string(assignment[i]) + " out of range (" +
                                              std::to_string(sets[i].cardinality()) + " classes)");
    const auto& c = sets[i].classes[assignment[i]];
    label += "|x" + std::to_string(i + 1) + ":m=" + std::to_string(c.m) + ",lambda=" + format_vector(c.lambda_ambient);
  }
  return label;
}

}  // namespace twisted_h1

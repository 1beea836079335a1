#include "posetpoly/serialize.hpp"

#include <fstream>
#include <sstream>

#include "posetpoly/errors.hpp"

namespace posetpoly {

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer()) {
    throw InvalidInput("poset JSON needs an integer field \"d\"");
  }
  const auto d = j["d"].get<std::int64_t>();
  if (d < 1 || d > kMaxPosetSize) throw InvalidInput("poset size out of range: " + std::to_string(d));
  std::vector<CoverPair> covers;
  if (j.contains("covers")) {
    const auto& c = j["covers"];
    if (!c.is_array()) throw InvalidInput("\"covers\" must be an array");
    for (const auto& pair : c) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw InvalidInput("each cover must be a pair of integers");
      }
      covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return Poset::from_covers(static_cast<int>(d), covers);
}

Poset parse_poset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("poset JSON parse error: ") + e.what());
  }
  return poset_from_json(j);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open poset file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

nlohmann::json to_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  return {{"d", p.size()}, {"covers", covers}};
}

nlohmann::json to_json(const LatticePolytope& p) {
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : p.facets()) facets.push_back({{"a", f.normal}, {"b", f.offset}});
  return {{"d", p.dim()}, {"vertices", p.vertices()}, {"facets", facets}};
}

nlohmann::json to_json(const EhrhartPolynomial& e) { return e.coefficient_strings(); }

}  // namespace posetpoly

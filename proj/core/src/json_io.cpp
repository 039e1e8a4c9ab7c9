#include "dcut/json_io.hpp"

#include <json.hpp>

#include "dcut/errors.hpp"

namespace dcut {

using nlohmann::json;

std::string certificate_to_json(const DCutCertificate& cert) {
  json j;
  j["d"] = cert.d;
  j["red"] = cert.red;
  j["blue"] = cert.blue;
  j["cut_edges"] = json::array();
  for (const Edge& e : cert.cut_edges)
    j["cut_edges"].push_back({e.first, e.second});
  return j.dump(2) + "\n";
}

DCutCertificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
  try {
    DCutCertificate cert;
    cert.d = j.at("d").get<int>();
    cert.red = j.at("red").get<std::vector<int>>();
    cert.blue = j.at("blue").get<std::vector<int>>();
    for (const json& pair : j.at("cut_edges")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("certificate JSON: cut_edges entries must be pairs");
      int u = pair[0].get<int>(), v = pair[1].get<int>();
      cert.cut_edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

std::string edge_colouring_to_json(const EdgeColouring& ec) {
  json j = json::object();
  for (const auto& [edge, colour] : ec) {
    if (colour == Colour::None) continue;
    std::string key =
        std::to_string(edge.first) + "-" + std::to_string(edge.second);
    j[key] = colour == Colour::Red ? "red" : "blue";
  }
  return j.dump(2) + "\n";
}

EdgeColouring edge_colouring_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("edge-colouring JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("edge-colouring JSON: expected an object");
  EdgeColouring ec;
  for (const auto& [key, val] : j.items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos)
      throw ParseError("edge-colouring JSON: key \"" + key +
                       "\" is not of the form \"u-v\"");
    int u, v;
    try {
      u = std::stoi(key.substr(0, dash));
      v = std::stoi(key.substr(dash + 1));
    } catch (const std::exception&) {
      throw ParseError("edge-colouring JSON: key \"" + key +
                       "\" is not of the form \"u-v\"");
    }
    const std::string name = val.get<std::string>();
    Colour colour;
    if (name == "red") colour = Colour::Red;
    else if (name == "blue") colour = Colour::Blue;
    else
      throw ParseError("edge-colouring JSON: colour \"" + name +
                       "\" is neither \"red\" nor \"blue\"");
    ec[{std::min(u, v), std::max(u, v)}] = colour;
  }
  return ec;
}

std::string role_map_to_json(const std::vector<GadgetRole>& roles) {
  json j = json::array();
  for (std::size_t v = 0; v < roles.size(); ++v)
    j.push_back({{"vertex", v},
                 {"role", roles[v].role},
                 {"index", roles[v].index}});
  return j.dump(2) + "\n";
}

std::string stats_to_json(const SolveStats& stats) {
  json j;
  j["branches_by_phase"] = json::object();
  for (const auto& [phase, count] : stats.branches_by_phase)
    j["branches_by_phase"][phase] = count;
  j["propagation_calls"] = stats.propagation_calls;
  j["wall_time_ms"] = stats.wall_time_ms;
  return j.dump(2) + "\n";
}

}  // namespace dcut

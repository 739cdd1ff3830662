#include "carterlab/group_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace carterlab {

std::string generators_to_json(const PermGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : g.generators()) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : s.cycles()) cycles.push_back(c);
    gens.push_back(std::move(cycles));
  }
  nlohmann::ordered_json out;
  out["degree"] = g.degree();
  out["generators"] = std::move(gens);
  return out.dump();
}

PermGroup generators_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("generator JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators") ||
      !j["degree"].is_number_unsigned() || !j["generators"].is_array())
    throw std::invalid_argument("generator JSON: expected {\"degree\": n, \"generators\": [...]}");
  const std::size_t n = j["degree"].get<std::size_t>();
  if (n == 0) throw std::invalid_argument("generator JSON: degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw std::invalid_argument("generator JSON: a generator must be a list of cycles");
    std::vector<std::vector<Point>> cycles;
    for (const auto& c : g) {
      if (!c.is_array()) throw std::invalid_argument("generator JSON: a cycle must be a list of points");
      std::vector<Point> cyc;
      for (const auto& p : c) {
        if (!p.is_number_unsigned() || p.get<std::size_t>() >= n)
          throw std::invalid_argument("generator JSON: point out of range");
        cyc.push_back(p.get<Point>());
      }
      cycles.push_back(std::move(cyc));
    }
    gens.push_back(Permutation::from_cycles(n, cycles));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open generator file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return generators_from_json(ss.str());
}

}  // namespace carterlab

#include "json.hpp"
#include "carterlab/subsystems.hpp"

namespace carterlab {

std::string torus_report_json(const RootSystem& phi, const std::vector<TorusClass>& classes) {
  nlohmann::ordered_json out;
  out["type"] = phi.label();
  out["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : classes) {
    nlohmann::ordered_json row;
    row["rep_word"] = c.rep_word;
    row["size"] = c.size;
    row["order_poly"] = c.order_poly;
    out["classes"].push_back(std::move(row));
  }
  return out.dump();
}

std::string subsystems_report_json(const RootSystem& phi, const std::vector<SubsystemDescriptor>& subs) {
  nlohmann::ordered_json out;
  out["type"] = phi.label();
  out["subsystems"] = nlohmann::ordered_json::array();
  for (const auto& s : subs) {
    nlohmann::ordered_json row;
    row["label"] = s.label;
    row["basis"] = s.basis;
    row["roots"] = s.roots;
    out["subsystems"].push_back(std::move(row));
  }
  return out.dump();
}

}  // namespace carterlab

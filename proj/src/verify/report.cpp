#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "carterlab/verify.hpp"

namespace carterlab {

std::string to_string(Tier t) { return t == Tier::Quick ? "quick" : "full"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "fail";
}

Tier parse_tier(const std::string& s) {
  if (s == "quick") return Tier::Quick;
  if (s == "full") return Tier::Full;
  throw std::invalid_argument("unknown tier '" + s + "' (expected quick or full)");
}

std::optional<std::int64_t> CheckReport::metric(const std::string& key) const {
  for (const auto& [k, v] : metrics)
    if (k == key) return v;
  return std::nullopt;
}

const CheckCase* find_case(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<const CheckCase*> list_cases(std::optional<Tier> tier) {
  std::vector<const CheckCase*> out;
  for (const auto& c : registry())
    if (!tier || c.tier == *tier) out.push_back(&c);
  return out;
}

CheckReport run_case(const CheckCase& c, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = c.run(opts);
  } catch (const CapExceeded& e) {
    r = {};
    r.status = Status::Skip;
    r.reason = std::string("cap exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r = {};
    r.status = Status::Fail;
    r.details = std::string("exception: ") + e.what();
  }
  r.id = c.id;
  r.anchor = c.anchor;
  if (opts.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r.metrics.emplace_back("ms", ms.count());
  }
  return r;
}

CheckReport run_case(const std::string& id, const RunOptions& opts) {
  const CheckCase* c = find_case(id);
  if (!c) throw std::invalid_argument("unknown check id '" + id + "'");
  return run_case(*c, opts);
}

std::vector<CheckReport> run_all(const std::vector<const CheckCase*>& cases, unsigned parallelism,
                                 const RunOptions& opts) {
  std::vector<CheckReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) out[i] = run_case(*cases[i], opts);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string render_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["anchor"] = r.anchor;
    j["metrics"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metrics) j["metrics"][k] = v;
    j["details"] = r.details;
    if (r.status == Status::Skip) j["reason"] = r.reason;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

std::string render_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: os << "PASS " << r.id; break;
      case Status::Fail: os << "FAIL " << r.id; break;
      case Status::Skip: os << "SKIP " << r.id << " [" << r.reason << "]"; break;
    }
    if (auto ms = r.metric("ms")) os << " (" << *ms << " ms)";
    if (r.status == Status::Fail && !r.details.empty()) os << ": " << r.details;
    os << '\n';
  }
  return os.str();
}

std::vector<CheckReport> parse_reports_json(const std::string& text) {
  std::vector<CheckReport> out;
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("report JSON must be an array");
    for (const auto& e : j) {
      CheckReport r;
      r.id = e.at("id").get<std::string>();
      const std::string s = e.at("status").get<std::string>();
      if (s == "pass") r.status = Status::Pass;
      else if (s == "fail") r.status = Status::Fail;
      else if (s == "skip") r.status = Status::Skip;
      else throw std::invalid_argument("unknown status '" + s + "'");
      r.anchor = e.at("anchor").get<std::string>();
      for (const auto& [k, v] : e.at("metrics").items()) r.metrics.emplace_back(k, v.get<std::int64_t>());
      r.details = e.at("details").get<std::string>();
      if (e.contains("reason")) r.reason = e.at("reason").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  return out;
}

}  // namespace carterlab

// carterlab: command-line front end.
// Exit codes: 0 all pass, 1 some check failed, 2 usage or parse error,
// 3 a search cap was exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "carterlab/carter.hpp"
#include "carterlab/group_spec.hpp"
#include "carterlab/numtheory.hpp"
#include "carterlab/subsystems.hpp"
#include "carterlab/verify.hpp"

using namespace carterlab;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kCap = 3;

struct Config {
  std::string format = "text";
  std::string output;
  unsigned threads = 1;
  std::uint64_t seed = SearchOptions{}.seed;
  std::uint64_t full_search_cap = SearchOptions{}.full_search_cap;
  std::uint64_t sweep_cap = SearchOptions{}.sweep_cap;
  bool no_timing = false;

  SearchOptions search() const {
    SearchOptions o;
    o.seed = seed;
    o.full_search_cap = full_search_cap;
    o.sweep_cap = sweep_cap;
    return o;
  }
};

unsigned default_threads() {
  if (const char* env = std::getenv("CARTERLAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CARTERLAB_THREADS='" << env << "'\n";
  }
  return 1;
}

RootSystem parse_type(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw SpecError("<type><rank>, e.g. C4", "bad root type '" + s + "'");
  unsigned rank = 0;
  try {
    std::size_t used = 0;
    rank = static_cast<unsigned>(std::stoul(s.substr(1), &used));
    if (used != s.size() - 1) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    throw SpecError("<type><rank>, e.g. C4", "bad root type '" + s + "'");
  }
  return RootSystem(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))), rank);
}

std::string root_string(const RootSystem& phi, std::size_t r) {
  std::ostringstream os;
  os << '(';
  const auto& v = phi.root(r);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

nlohmann::ordered_json cycles_json(const Permutation& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : p.cycles()) out.push_back(c);
  return out;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

int cmd_check_run(const Config& cfg, const std::string& target, const std::string& tier) {
  std::vector<const CheckCase*> cases;
  if (target == "all") {
    cases = list_cases(parse_tier(tier.empty() ? "quick" : tier));
  } else {
    const CheckCase* c = find_case(target);
    if (!c) {
      std::cerr << "error: unknown check id '" << target << "' (see 'check list')\n";
      return kUsage;
    }
    cases.push_back(c);
  }
  RunOptions opts;
  opts.search = cfg.search();
  opts.timing = !cfg.no_timing;
  auto reports = run_all(cases, cfg.threads, opts);
  emit(cfg, cfg.format == "json" ? render_json(reports) : render_text(reports));
  bool fail = false, cap = false;
  for (const auto& r : reports) {
    fail = fail || r.status == Status::Fail;
    cap = cap || (r.status == Status::Skip && r.reason.rfind("cap exceeded", 0) == 0);
  }
  return fail ? kFail : cap ? kCap : kOk;
}

int cmd_check_list(const Config& cfg, const std::string& tier) {
  auto cases = list_cases(tier.empty() ? std::nullopt : std::optional<Tier>(parse_tier(tier)));
  if (cfg.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto* c : cases)
      out.push_back({{"id", c->id}, {"tier", to_string(c->tier)}, {"anchor", c->anchor}, {"expected", c->expected},
                     {"budget_ms", c->budget_ms}});
    emit(cfg, out.dump(2));
  } else {
    std::ostringstream os;
    for (const auto* c : cases) os << c->id << "  [" << to_string(c->tier) << "]  " << c->expected << '\n';
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_carter(const Config& cfg, const std::string& spec) {
  auto g = realize_group(spec);
  auto set = carter_subgroups(g.group, cfg.search());
  if (cfg.format == "json") {
    nlohmann::ordered_json out;
    out["group"] = spec;
    out["order"] = g.group.order();
    out["classes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < set.class_count(); ++i) {
      nlohmann::ordered_json c;
      c["order"] = set.representatives[i].order();
      c["class_size"] = set.class_size(i);
      c["generators"] = nlohmann::ordered_json::array();
      for (const auto& s : set.representatives[i].generators()) c["generators"].push_back(cycles_json(s));
      out["classes"].push_back(std::move(c));
    }
    emit(cfg, out.dump(2));
  } else {
    std::ostringstream os;
    os << set.class_count() << " Carter class" << (set.class_count() == 1 ? "" : "es") << " in " << spec
       << " (order " << g.group.order() << ")\n";
    for (std::size_t i = 0; i < set.class_count(); ++i)
      os << "  class " << i + 1 << ": order " << set.representatives[i].order() << ", " << set.class_size(i)
         << " conjugates\n";
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_roots_subsystems(const Config& cfg, const std::string& type) {
  RootSystem phi = parse_type(type);
  auto subs = borel_de_siebenthal(phi);
  if (cfg.format == "json") {
    emit(cfg, subsystems_report_json(phi, subs));
  } else {
    std::ostringstream os;
    os << subs.size() << " subsystem classes of " << phi.label() << '\n';
    for (const auto& s : subs) {
      os << "  " << s.label << ": " << s.roots.size() << " roots, basis";
      for (auto b : s.basis) os << ' ' << root_string(phi, b);
      os << '\n';
    }
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_roots_omega(const Config& cfg, const std::string& type) {
  RootSystem phi = parse_type(type);
  auto fixed = omega_fixed_roots(phi);
  if (cfg.format == "json") {
    nlohmann::ordered_json out;
    out["type"] = phi.label();
    out["roots"] = nlohmann::ordered_json::array();
    for (auto r : fixed) out["roots"].push_back(phi.root(r));
    emit(cfg, out.dump());
  } else {
    std::ostringstream os;
    os << fixed.size() << " positive roots of " << phi.label() << " fixed by every h_s(-1)\n";
    for (auto r : fixed) os << "  " << root_string(phi, r) << (phi.is_long(r) ? " long" : "") << '\n';
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_torus(const Config& cfg, const std::string& type, const std::string& twist, std::int64_t q) {
  RootSystem phi = parse_type(type);
  WeylGroupRep w(phi);
  auto classes = f_conjugacy_classes(w, make_twist(phi, twist));
  if (cfg.format == "json") {
    emit(cfg, torus_report_json(phi, classes));
  } else {
    std::ostringstream os;
    os << classes.size() << " classes of maximal tori for " << (twist == "id" ? "" : twist + " ") << phi.label()
       << ", q = " << q << '\n';
    for (const auto& c : classes) {
      os << "  w = [";
      for (std::size_t i = 0; i < c.rep_word.size(); ++i) os << (i ? " " : "") << c.rep_word[i];
      os << "]  size " << c.size << "  |T| = " << to_string(c.order_poly) << " = " << evaluate(c.order_poly, q)
         << '\n';
    }
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_group_info(const Config& cfg, const std::string& spec) {
  auto g = realize_group(spec);
  const auto opts = cfg.search();
  nlohmann::ordered_json out;
  out["group"] = spec;
  out["degree"] = g.group.degree();
  out["order"] = g.group.order();
  out["base"] = g.group.base();
  out["generators"] = g.group.generators().size();
  out["nilpotent"] = is_nilpotent(g.group);
  nlohmann::ordered_json sylow = nlohmann::ordered_json::object();
  for (auto p : prime_divisors(g.group.order())) sylow[std::to_string(p)] = sylow_subgroup(g.group, p, opts).order();
  out["sylow_orders"] = std::move(sylow);
  if (g.group.order() <= opts.sweep_cap) out["conjugacy_classes"] = conjugacy_classes(g.group, opts).size();
  if (cfg.format == "json") {
    emit(cfg, out.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& [k, v] : out.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    emit(cfg, os.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"carterlab: Carter subgroups, Sylow criteria and root systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  cfg.threads = default_threads();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", cfg.output, "Write output to a file");
  app.add_option("--threads", cfg.threads, "Parallel cases (default: CARTERLAB_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized internals");
  app.add_option("--full-search-cap", cfg.full_search_cap, "Largest group order for full Carter search");
  app.add_option("--sweep-cap", cfg.sweep_cap, "Largest group order for element sweeps");
  app.add_flag("--no-timing", cfg.no_timing, "Omit wall times so output is byte-stable");

  std::string target, tier, spec, type, twist = "id";
  std::int64_t q = 2;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Registered verification cases");
  check->require_subcommand(1);
  auto* run = check->add_subcommand("run", "Run one case or all cases of a tier");
  run->add_option("target", target, "Case id or 'all'")->required();
  run->add_option("--tier", tier, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  run->callback([&] { action = [&] { return cmd_check_run(cfg, target, tier); }; });
  auto* list = check->add_subcommand("list", "List registered cases");
  list->add_option("--tier", tier, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  list->callback([&] { action = [&] { return cmd_check_list(cfg, tier); }; });

  auto* carter = app.add_subcommand("carter", "Exhaustive Carter subgroup search");
  carter->add_option("group", spec, "Group spec, e.g. \"Alt(5)\"")->required();
  carter->callback([&] { action = [&] { return cmd_carter(cfg, spec); }; });

  auto* roots = app.add_subcommand("roots", "Root system queries");
  roots->require_subcommand(1);
  auto* subsystems = roots->add_subcommand("subsystems", "Subsystems from extended Dynkin diagrams");
  subsystems->add_option("type", type, "Root type, e.g. E6")->required();
  subsystems->callback([&] { action = [&] { return cmd_roots_subsystems(cfg, type); }; });
  auto* omega = roots->add_subcommand("omega", "Positive roots fixed by every h_s(-1)");
  omega->add_option("type", type, "Root type, e.g. C4")->required();
  omega->callback([&] { action = [&] { return cmd_roots_omega(cfg, type); }; });

  auto* torus = app.add_subcommand("torus", "Maximal tori from twisted Weyl group classes");
  torus->add_option("type", type, "Root type, e.g. A2")->required();
  torus->add_option("--twist", twist, "id, flip or triality")->check(CLI::IsMember({"id", "flip", "triality"}));
  torus->add_option("--q", q, "Field size")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  torus->callback([&] { action = [&] { return cmd_torus(cfg, type, twist, q); }; });

  auto* group = app.add_subcommand("group", "Group queries");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Order, base, Sylow orders, class count");
  info->add_option("group", spec, "Group spec")->required();
  info->callback([&] { action = [&] { return cmd_group_info(cfg, spec); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}

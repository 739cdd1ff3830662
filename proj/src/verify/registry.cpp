#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "carterlab/carter.hpp"
#include "carterlab/group_spec.hpp"
#include "carterlab/numtheory.hpp"
#include "carterlab/subsystems.hpp"
#include "carterlab/verify.hpp"

namespace carterlab {

namespace {

using Metrics = std::vector<std::pair<std::string, std::int64_t>>;

CheckReport verdict(bool ok, std::string details, Metrics metrics = {}) {
  CheckReport r;
  r.status = ok ? Status::Pass : Status::Fail;
  r.details = std::move(details);
  r.metrics = std::move(metrics);
  return r;
}

CheckReport skipped(std::string reason) {
  CheckReport r;
  r.status = Status::Skip;
  r.reason = std::move(reason);
  return r;
}

std::int64_t i64(std::uint64_t x) { return static_cast<std::int64_t>(x); }

bool contains_full_sylow2(const PermGroup& g, const SubgroupClassSet& carter) {
  const std::uint64_t two = p_part(g.order(), 2);
  for (const auto& k : carter.representatives)
    if (p_part(k.order(), 2) == two) return true;
  return false;
}

// --- permgrp-level cases -------------------------------------------------

CheckCase norm2syl_psl2(std::uint64_t q) {
  const std::string spec = "PSL(2," + std::to_string(q) + ")";
  const bool expected = q % 8 == 1 || q % 8 == 7;
  CheckCase c;
  c.id = "norm2syl-psl2-" + std::to_string(q);
  c.description = "Sylow 2-normalizer criterion in " + spec;
  c.anchor = "PSL(2,q), q odd: N(S) = S C(S) for a Sylow 2-subgroup S iff q = +-1 mod 8";
  c.group_specs = {spec};
  c.expected = expected ? "criterion holds" : "criterion fails";
  c.budget_ms = 2000;
  c.run = [spec, q, expected](const RunOptions& o) {
    auto g = realize_group(spec);
    const bool got = check_syl2_criterion(g.group, o.search);
    std::ostringstream d;
    d << "criterion " << (got ? "true" : "false") << ", q = " << q % 8 << " mod 8";
    return verdict(got == expected, d.str(), {{"order", i64(g.group.order())}, {"criterion", got}});
  };
  return c;
}

CheckCase norm2syl_psp43() {
  CheckCase c;
  c.id = "norm2syl-psp4-3";
  c.description = "Sylow 2-normalizer criterion in PSp(4,3)";
  c.anchor = "PSp(2n,q), q = +-3 mod 8: N(S) != S C(S) for a Sylow 2-subgroup S";
  c.group_specs = {"PSp(4,3)"};
  c.expected = "criterion fails";
  c.budget_ms = 10000;
  c.run = [](const RunOptions& o) {
    auto g = realize_group("PSp(4,3)");
    const bool got = check_syl2_criterion(g.group, o.search);
    return verdict(!got, std::string("criterion ") + (got ? "true" : "false"),
                   {{"order", i64(g.group.order())}, {"criterion", got}});
  };
  return c;
}

// Expected counts come from the exhaustive subgroup-lattice oracle in the
// test suite (Sym(6) from the Sylow 2-subgroup being self-normalizing).
CheckCase carter_case(const std::string& name, const std::string& spec, std::size_t classes,
                      std::uint64_t rep_order, std::string anchor, std::int64_t budget) {
  CheckCase c;
  c.id = "carter-" + name;
  c.description = "exhaustive Carter subgroup search in " + spec;
  c.anchor = std::move(anchor);
  c.group_specs = {spec};
  c.expected = std::to_string(classes) + " class" + (classes == 1 ? "" : "es") +
               (classes ? ", order " + std::to_string(rep_order) : "");
  c.budget_ms = budget;
  c.run = [spec, classes, rep_order](const RunOptions& o) {
    auto g = realize_group(spec);
    auto set = carter_subgroups(g.group, o.search);
    std::ostringstream d;
    d << set.class_count() << " classes";
    bool ok = set.class_count() == classes;
    for (std::size_t i = 0; i < set.class_count(); ++i) {
      const auto& k = set.representatives[i];
      d << (i ? ", " : ": orders ") << k.order();
      ok = ok && k.order() == rep_order && is_carter_witness(g.group, k, o.search);
      for (std::size_t j = 0; j < i; ++j)
        ok = ok && !are_conjugate_subgroups(g.group, set.representatives[j], k, o.search);
    }
    if (!ok) d << "; expected " << classes << " class(es) of order " << rep_order;
    Metrics m{{"order", i64(g.group.order())}, {"classes", i64(set.class_count())}};
    if (set.class_count()) m.emplace_back("rep_order", i64(set.representatives[0].order()));
    return verdict(ok, d.str(), std::move(m));
  };
  return c;
}

CheckCase quotient_suite() {
  CheckCase c;
  c.id = "carter-quotient-suite";
  c.description = "images of Carter subgroups in quotients";
  c.anchor = "If K is a Carter subgroup of G and N is normal in G, then KN/N is a Carter subgroup of G/N";
  c.group_specs = {"Sym(4)", "SL(2,3)", "PGammaL(2,8)"};
  c.expected = "every projected representative is Carter";
  c.budget_ms = 5000;
  c.run = [](const RunOptions& o) {
    std::vector<std::pair<std::string, std::pair<PermGroup, PermGroup>>> pairs;
    {
      auto s4 = symmetric_group(4);
      PermGroup v4(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
      pairs.push_back({"Sym(4)/V4", {s4, v4}});
    }
    {
      auto sl = realize_group("SL(2,3)");
      const auto& f = sl.action->field();
      Permutation minus = sl.action->map(Matrix::diagonal({f.neg(1), f.neg(1)}));
      pairs.push_back({"SL(2,3)/Z", {sl.group, PermGroup(sl.group.degree(), {minus})}});
    }
    {
      auto pg = realize_group("PGammaL(2,8)");
      pairs.push_back({"PGammaL(2,8)/PSL(2,8)", {pg.group, pg.base}});
    }
    bool ok = true;
    std::int64_t checked = 0;
    std::ostringstream d;
    for (const auto& [name, gn] : pairs) {
      const auto& [g, n] = gn;
      QuotientGroup quo(g, n, o.search);
      auto carter = carter_subgroups(g, o.search);
      bool here = carter.class_count() > 0;
      for (const auto& k : carter.representatives) {
        PermGroup image = quo.project(k);
        here = here && is_carter_witness(quo.group(), image, o.search);
        ++checked;
      }
      d << name << (here ? " ok" : " FAILED") << "; ";
      ok = ok && here;
    }
    return verdict(ok, d.str(), {{"pairs", static_cast<std::int64_t>(pairs.size())}, {"projections", checked}});
  };
  return c;
}

const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs = {
      "Sym(3)", "Sym(4)",   "Sym(5)",   "Sym(6)",   "Alt(4)",   "Alt(5)",       "SL(2,3)",
      "GL(2,3)", "PSU(3,2)", "PGU(3,2)", "PSL(2,7)", "PSL(2,9)", "PGammaL(2,8)"};
  return specs;
}

CheckCase criterion_equivalence() {
  CheckCase c;
  c.id = "criterion-equivalence-suite";
  c.description = "Sylow 2-normalizer criterion against exhaustive Carter search";
  c.anchor = "G has a Carter subgroup containing a Sylow 2-subgroup S iff N(S) = S C(S)";
  c.group_specs = catalog_specs();
  c.expected = "criterion agrees with the search on every group";
  c.budget_ms = 10000;
  c.run = [](const RunOptions& o) {
    bool ok = true;
    std::ostringstream d;
    for (const auto& spec : catalog_specs()) {
      auto g = realize_group(spec);
      const bool crit = check_syl2_criterion(g.group, o.search);
      const bool found = contains_full_sylow2(g.group, carter_subgroups(g.group, o.search));
      if (crit != found) {
        ok = false;
        d << spec << ": criterion " << crit << " vs search " << found << "; ";
      }
    }
    if (ok) d << "agreement on " << catalog_specs().size() << " groups";
    return verdict(ok, d.str(), {{"groups", static_cast<std::int64_t>(catalog_specs().size())}});
  };
  return c;
}

CheckCase inh_2ext() {
  CheckCase c;
  c.id = "inh-2ext-suite";
  c.description = "Sylow 2-normalizer criterion passes to extensions of 2-power index";
  c.anchor = "If H is normal in G, |G:H| is a power of 2 and N_H(T) = T C_H(T) for T Sylow 2 in H, "
             "then N_G(S) = S C_G(S) for S Sylow 2 in G";
  c.group_specs = {"PSL(2,7)", "PGL(2,7)", "Alt(6)", "Sym(6)"};
  c.expected = "criterion holds in each H and in each G";
  c.budget_ms = 5000;
  c.run = [](const RunOptions& o) {
    const std::vector<std::pair<std::string, std::string>> pairs = {{"PSL(2,7)", "PGL(2,7)"},
                                                                     {"Alt(6)", "Sym(6)"}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& [hs, gs] : pairs) {
      auto h = realize_group(hs), g = realize_group(gs);
      const bool setup = h.group.is_subgroup_of(g.group) && is_normal(g.group, h.group) &&
                         is_power_of(g.group.order() / h.group.order(), 2);
      const bool ch = check_syl2_criterion(h.group, o.search);
      const bool cg = check_syl2_criterion(g.group, o.search);
      d << hs << " <= " << gs << ": H " << ch << ", G " << cg << "; ";
      ok = ok && setup && ch && cg;
    }
    return verdict(ok, d.str(), {{"pairs", 2}});
  };
  return c;
}

CheckCase graph_inverse() {
  CheckCase c;
  c.id = "graph-inverse-psl32";
  c.description = "odd-order elements of PSL(3,2) against their inverses in PSL(3,2):<tau>";
  c.anchor = "In G:<tau>, tau the graph automorphism of PSL(n,q), every odd-order element of G is "
             "conjugate to its inverse";
  c.group_specs = {"Ext(PSL(3,2), graph)"};
  c.expected = "every odd-order element conjugate to its inverse";
  c.budget_ms = 5000;
  c.run = [](const RunOptions&) {
    auto g = realize_group("Ext(PSL(3,2), graph)");
    std::int64_t odd = 0, failures = 0, outer_only = 0;
    g.base.for_each_element([&](const Permutation& x) {
      if (x.order() % 2 == 0) return;
      ++odd;
      const Permutation xi = x.inverse();
      auto c = are_conjugate_elements(g.group, x, xi);
      if (!c || x.conjugate(*c) != xi) {
        ++failures;
        return;
      }
      if (!are_conjugate_elements(g.base, x, xi)) ++outer_only;
    });
    std::ostringstream d;
    d << odd << " odd-order elements, " << failures << " failures, " << outer_only
      << " need the graph automorphism";
    return verdict(failures == 0 && g.group.order() == 336, d.str(),
                   {{"order", i64(g.group.order())}, {"odd_elements", odd}, {"outer_only", outer_only}});
  };
  return c;
}

CheckCase psl23_power() {
  CheckCase c;
  c.id = "psl23-power";
  c.description = "an order-3 element against its inverse in PSL(2,3) and PGL(2,3)";
  c.anchor = "An element of order 3 is not conjugate to its inverse in PSL(2,3) but is in PGL(2,3)";
  c.group_specs = {"PSL(2,3)", "PGL(2,3)"};
  c.expected = "not conjugate in PSL(2,3); conjugate in PGL(2,3)";
  c.budget_ms = 1000;
  c.run = [](const RunOptions&) {
    auto psl = realize_group("PSL(2,3)"), pgl = realize_group("PGL(2,3)");
    std::optional<Permutation> x;
    psl.group.for_each_element([&](const Permutation& y) {
      if (!x && y.order() == 3) x = y;
    });
    if (!x) return verdict(false, "no element of order 3");
    const Permutation xi = x->inverse();
    const bool in_psl = are_conjugate_elements(psl.group, *x, xi).has_value();
    auto c = are_conjugate_elements(pgl.group, *x, xi);
    const bool in_pgl = c && x->conjugate(*c) == xi;
    std::ostringstream d;
    d << "x = " << x->to_string() << "; PSL " << in_psl << ", PGL " << in_pgl;
    if (c) d << " via " << c->to_string();
    return verdict(!in_psl && in_pgl, d.str(), {{"psl_order", i64(psl.group.order())}, {"pgl_order", i64(pgl.group.order())}});
  };
  return c;
}

// --- rootsys cases -------------------------------------------------------

CheckCase omega_roots() {
  CheckCase c;
  c.id = "omega-roots-all-types";
  c.description = "positive roots fixed by every h_s(-1)";
  c.anchor = "C_U(Omega(H)) = 1 outside type C; in type C_l it is generated by the long root subgroups";
  c.expected = "empty for A2-A7, B3-B7, D3-D7, E6-E8; the l long roots for C2-C7; one root for A1";
  c.budget_ms = 1000;
  c.run = [](const RunOptions&) {
    std::vector<std::pair<char, unsigned>> empty;
    for (unsigned r = 2; r <= 7; ++r) empty.push_back({'A', r});
    for (unsigned r = 3; r <= 7; ++r) empty.push_back({'B', r}), empty.push_back({'D', r});
    for (unsigned r = 6; r <= 8; ++r) empty.push_back({'E', r});
    bool ok = true;
    std::ostringstream d;
    for (auto [t, r] : empty) {
      auto fixed = omega_fixed_roots(RootSystem(t, r));
      if (!fixed.empty()) ok = false, d << t << r << " has " << fixed.size() << "; ";
    }
    for (unsigned r = 2; r <= 7; ++r) {
      RootSystem phi('C', r);
      auto fixed = omega_fixed_roots(phi);
      if (fixed != long_positive_roots(phi) || fixed.size() != r) ok = false, d << "C" << r << " mismatch; ";
    }
    RootSystem a1('A', 1);
    if (omega_fixed_roots(a1) != std::vector<std::size_t>{0}) ok = false, d << "A1 mismatch; ";
    if (ok) d << "all " << empty.size() + 7 << " types match";
    return verdict(ok, d.str(), {{"types", static_cast<std::int64_t>(empty.size() + 7)}});
  };
  return c;
}

CheckCase long_roots_abelian(unsigned l) {
  CheckCase c;
  c.id = "long-roots-abelian-C" + std::to_string(l);
  c.description = "long positive roots of C" + std::to_string(l) + " span an abelian unipotent subgroup";
  c.anchor = "In Sp(2n,q) the subgroup generated by the long root subgroups X_r, r > 0, is abelian";
  c.expected = std::to_string(l) + " long roots, no sum a root";
  c.budget_ms = 200;
  c.run = [l](const RunOptions&) {
    RootSystem phi('C', l);
    auto longs = long_positive_roots(phi);
    const bool ab = is_closed_abelian(phi, longs);
    return verdict(ab && longs.size() == l,
                   std::to_string(longs.size()) + " long positive roots, abelian " + (ab ? "yes" : "no"),
                   {{"roots", static_cast<std::int64_t>(longs.size())}});
  };
  return c;
}

bool closed_and_symmetric(const RootSystem& phi, const std::vector<std::size_t>& roots) {
  std::set<std::size_t> s(roots.begin(), roots.end());
  for (auto r : roots) {
    if (!s.count(phi.negative(r))) return false;
    for (auto t : roots) {
      IntVector sum = phi.root(r);
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += phi.root(t)[d];
      auto k = phi.find(sum);
      if (k >= 0 && !s.count(static_cast<std::size_t>(k))) return false;
    }
  }
  return true;
}

CheckCase bds_case(char type, unsigned rank) {
  const std::string label = std::string(1, type) + std::to_string(rank);
  CheckCase c;
  c.id = "bds-" + label;
  c.description = "subsystems of " + label + " from extended Dynkin diagrams";
  c.anchor = "Every closed root subsystem arises by iterated node removal from extended Dynkin diagrams";
  c.budget_ms = 2000;
  if (type == 'G') c.expected = "contains long A2 and A1+~A1";
  if (type == 'C') c.expected = "contains A1+A1 on the long roots";
  if (type == 'E') c.expected = "contains A2+A2+A2";
  c.run = [type, rank](const RunOptions&) {
    RootSystem phi(type, rank);
    auto subs = borel_de_siebenthal(phi);
    bool closed = true;
    for (const auto& s : subs) closed = closed && closed_and_symmetric(phi, s.roots);
    auto has = [&](const std::string& lab, auto pred) {
      return std::any_of(subs.begin(), subs.end(), [&](const SubsystemDescriptor& s) { return s.label == lab && pred(s); });
    };
    auto any = [](const SubsystemDescriptor&) { return true; };
    bool found = false;
    if (type == 'G') {
      found = has("A2", [&](const SubsystemDescriptor& s) {
                return std::all_of(s.roots.begin(), s.roots.end(), [&](std::size_t r) { return phi.is_long(r); });
              }) && has("A1+~A1", any);
    } else if (type == 'C') {
      found = has("A1+A1", [&](const SubsystemDescriptor& s) {
        std::vector<std::size_t> longs;
        for (std::size_t r = 0; r < phi.size(); ++r)
          if (phi.is_long(r)) longs.push_back(r);
        return s.roots == longs;
      });
    } else {
      found = has("A2+A2+A2", any);
    }
    std::ostringstream d;
    d << subs.size() << " classes:";
    for (const auto& s : subs) d << ' ' << s.label;
    return verdict(found && closed, d.str(), {{"subsystems", static_cast<std::int64_t>(subs.size())}});
  };
  return c;
}

bool divides_at(const IntPolynomial& p, std::uint64_t order, std::int64_t q) {
  std::int64_t v = evaluate(p, q);
  return v != 0 && order % static_cast<std::uint64_t>(v < 0 ? -v : v) == 0;
}

CheckCase torus_case(const std::string& name, char type, unsigned rank, bool twisted) {
  CheckCase c;
  c.id = "torus-" + name;
  c.description = "maximal tori of " + name + " from twisted classes of W";
  c.anchor = twisted ? "The twisted group 2A_n has a maximal torus of order (q+1)^n"
                     : "Maximal tori correspond to F-classes of W with order |det(q w - 1)|";
  c.budget_ms = 500;
  if (name == "A1") c.expected = "orders q-1 and q+1";
  if (name == "A2") c.expected = "3 classes, identity (q-1)^2";
  if (name == "2A2") c.expected = "a class of order (q+1)^2";
  c.run = [type, rank, twisted, name](const RunOptions&) {
    RootSystem phi(type, rank);
    WeylGroupRep w(phi);
    Twist tau = twisted ? diagram_flip(phi) : identity_twist(phi);
    auto classes = f_conjugacy_classes(w, tau);
    std::uint64_t total = 0;
    bool divides = true;
    std::set<IntPolynomial> polys;
    for (const auto& cl : classes) {
      total += cl.size;
      polys.insert(cl.order_poly);
      for (std::int64_t q : {2, 3, 5, 7})
        divides = divides && divides_at(cl.order_poly, lie_order(type, rank, q, twisted).full, q);
    }
    bool shape = false;
    if (name == "A1") shape = polys == std::set<IntPolynomial>{{-1, 1}, {1, 1}};
    if (name == "A2") shape = classes.size() == 3 && polys.count({1, -2, 1});
    if (name == "2A2") shape = polys.count({1, 2, 1}) > 0;
    std::ostringstream d;
    d << classes.size() << " classes:";
    for (const auto& cl : classes) d << ' ' << to_string(cl.order_poly) << " x" << cl.size;
    return verdict(shape && divides && total == w.group().order(), d.str(),
                   {{"classes", static_cast<std::int64_t>(classes.size())}, {"weyl_order", i64(w.group().order())}});
  };
  return c;
}

CheckCase highest_root_c3() {
  CheckCase c;
  c.id = "highest-root-C3";
  c.description = "highest root of C3";
  c.anchor = "In C_n, r_n + 2r_{n-1} + ... + 2r_k = 2e_k; k = 1 is the highest root";
  c.expected = "2e1 = 2r1 + 2r2 + r3";
  c.budget_ms = 100;
  c.run = [](const RunOptions&) {
    RootSystem phi('C', 3);
    auto h = highest_root(phi);
    const bool ok = h.coefficients == IntVector{2, 2, 1} && phi.root(h.index) == IntVector{2, 0, 0};
    std::ostringstream d;
    d << "coefficients (" << h.coefficients[0] << "," << h.coefficients[1] << "," << h.coefficients[2] << ")";
    return verdict(ok, d.str());
  };
  return c;
}

CheckCase e6_scan() {
  CheckCase c;
  c.id = "e6-scan";
  c.description = "order-3 subgroups of centralizers in W(E6)";
  c.anchor = "For every y in W(E6), C(y) has no self-normalizing subgroup of order 3";
  c.group_specs = {"W(E6)"};
  c.expected = "|W| = 51840, 25 classes, no self-normalizing order-3 subgroup; Alt(4) control flagged";
  c.budget_ms = 60000;
  c.run = [](const RunOptions& o) {
    auto rows = e6_centralizer_scan(o.search);
    std::uint64_t total = 0;
    std::size_t bad = 0;
    for (const auto& r : rows) total += r.class_size, bad += !r.pass();
    const auto control = order3_self_normalizing(alternating_group(4), o.search);
    std::ostringstream d;
    d << rows.size() << " classes, " << bad << " failing; Alt(4) control reports "
      << control.self_normalizing << " self-normalizing class";
    return verdict(total == 51840 && rows.size() == 25 && bad == 0 && control.self_normalizing == 1, d.str(),
                   {{"order", i64(total)}, {"classes", static_cast<std::int64_t>(rows.size())}});
  };
  return c;
}

// --- semilinear cases ----------------------------------------------------

CheckCase pgammal28_carter() {
  CheckCase c = carter_case("pgammal-2-8", "PGammaL(2,8)", 1, 6,
                            "In PGammaL(2,8) = PSL(2,8):<phi>, the Carter subgroup is S:<phi> with S a "
                            "Sylow 2-subgroup of the centralizer PSL(2,2) of phi",
                            10000);
  c.id = "pgammal-2-8-carter";
  return c;
}

CheckCase sp43_conj() {
  CheckCase c;
  c.id = "sp43-longroot-conj";
  c.description = "v = x_{2e1}(1) x_{2e2}(1) against its inverse in Sp(4,3)";
  c.anchor = "In Sp(2n,q) a product of long root elements v is conjugate to v^-1";
  c.group_specs = {"Sp(4,3)"};
  c.expected = "conjugate, with a replayed conjugator";
  c.budget_ms = 20000;
  c.run = [](const RunOptions&) {
    auto g = realize_group("Sp(4,3)");
    const auto& f = g.action->field();
    Matrix v = mul(f, long_root_element(f, 2, 1, 1), long_root_element(f, 2, 2, 1));
    Permutation pv = g.action->map(v), pvi = pv.inverse();
    auto conj = are_conjugate_elements(g.group, pv, pvi);
    const bool ok = conj && pv.conjugate(*conj) == pvi && g.group.contains(*conj);
    return verdict(ok, ok ? "conjugator found and replayed" : "no conjugator",
                   {{"order", i64(g.group.order())}});
  };
  return c;
}

CheckCase syl2_fieldaut(std::uint64_t q) {
  const std::string spec = "PSL(2," + std::to_string(q) + ")";
  const bool odd = q % 2 == 1;
  CheckCase c;
  c.id = "syl2-fieldaut-psl2-" + std::to_string(q);
  c.description = "Sylow 2-subgroups of the centralizer of the Frobenius in " + spec;
  c.anchor = "For q odd and a field automorphism psi of odd order, a Sylow 2-subgroup of C_G(psi) is "
             "a Sylow 2-subgroup of G";
  c.group_specs = {spec};
  c.expected = odd ? "Sylow in G" : "not Sylow in G (characteristic 2 control)";
  c.budget_ms = 5000;
  c.run = [spec, odd](const RunOptions& o) {
    auto g = realize_group(spec);
    Permutation phi = g.action->frobenius_perm();
    PermGroup fixed = element_centralizer(g.group, phi);
    PermGroup s = sylow_subgroup(fixed, 2, o.search);
    const std::uint64_t want = p_part(g.group.order(), 2);
    const bool sylow = s.order() == want && s.is_subgroup_of(g.group);
    std::ostringstream d;
    d << "|C(phi)| = " << fixed.order() << ", |S| = " << s.order() << ", |G|_2 = " << want;
    return verdict(sylow == odd && phi.order() % 2 == 1, d.str(),
                   {{"order", i64(g.group.order())}, {"centralizer", i64(fixed.order())}, {"sylow", i64(s.order())}});
  };
  return c;
}

CheckCase conj_automorphisms() {
  CheckCase c;
  c.id = "conj-automorphisms-pgammal28";
  c.description = "order-3 subgroups of PGammaL(2,8) outside PSL(2,8)";
  c.anchor = "Two field automorphisms of the same order generating the same coset group are conjugate "
             "up to generating the same cyclic group";
  c.group_specs = {"PGammaL(2,8)"};
  c.expected = "one conjugacy class of such subgroups";
  c.budget_ms = 5000;
  c.run = [](const RunOptions&) {
    auto g = realize_group("PGammaL(2,8)");
    std::set<Fingerprint> spans;
    std::optional<PermGroup> first;
    g.group.for_each_element([&](const Permutation& x) {
      if (x.order() != 3 || g.base.contains(x)) return;
      PermGroup h(g.group.degree(), {x});
      if (!first) first = h;
      spans.insert(fingerprint(g.group, h));
    });
    if (!first) return verdict(false, "no order-3 element outside PSL(2,8)");
    std::set<Fingerprint> orbit;
    const auto gen = first->generators().front();
    g.group.for_each_element([&](const Permutation& t) {
      orbit.insert(fingerprint(g.group, PermGroup(g.group.degree(), {gen.conjugate(t)})));
    });
    const bool ok = std::includes(orbit.begin(), orbit.end(), spans.begin(), spans.end());
    std::ostringstream d;
    d << spans.size() << " subgroups, orbit of the first has " << orbit.size();
    return verdict(ok, d.str(), {{"subgroups", static_cast<std::int64_t>(spans.size())}});
  };
  return c;
}

// --- full tier -----------------------------------------------------------

PermGroup unipotent_with_frobenius(const RealizedGroup& g) {
  const auto& f = g.action->field();
  std::vector<Permutation> gens;
  // t = 1, x, x^2, ...: an additive basis of the field over its prime field.
  for (std::uint64_t t = 1; t < f.size(); t *= f.characteristic())
    gens.push_back(g.action->map(Matrix::elementary(f, 2, 0, 1, static_cast<FiniteField::Elem>(t))));
  gens.push_back(g.autos.front());
  return PermGroup(g.group.degree(), std::move(gens));
}

CheckCase pgammal227_witness() {
  CheckCase c;
  c.id = "pgammal-2-27-witness";
  c.description = "Carter witness U:<phi> in PSL(2,27):<phi>";
  c.anchor = "For a field automorphism zeta of order 3 in PSL(2,3^3):<zeta>, S:<zeta> is Carter with S "
             "a Sylow 3-subgroup of the centralizer of the 3'-part of zeta";
  c.tier = Tier::Full;
  c.group_specs = {"Ext(PSL(2,27), frob)"};
  c.expected = "K of order 81 is a Carter subgroup";
  c.budget_ms = 60000;
  c.run = [](const RunOptions& o) {
    auto g = realize_group("Ext(PSL(2,27), frob)");
    PermGroup k = unipotent_with_frobenius(g);
    const bool ok = g.group.order() == 29484 && k.order() == 81 && is_carter_witness(g.group, k, o.search);
    return verdict(ok, "K order " + std::to_string(k.order()), {{"order", i64(g.group.order())}, {"witness_order", i64(k.order())}});
  };
  return c;
}

CheckCase pgammal227_search() {
  CheckCase c;
  c.id = "pgammal-2-27-search";
  c.description = "exhaustive Carter search in PSL(2,27):<phi>";
  c.anchor = "Carter subgroups of an almost simple extension of PSL(2,q) are conjugate";
  c.tier = Tier::Full;
  c.group_specs = {"Ext(PSL(2,27), frob)"};
  c.expected = "exactly 1 class, conjugate to U:<phi>";
  c.budget_ms = 600000;
  c.run = [](const RunOptions& o) {
    auto g = realize_group("Ext(PSL(2,27), frob)");
    auto set = carter_subgroups(g.group, o.search);
    bool ok = set.class_count() == 1;
    std::ostringstream d;
    d << set.class_count() << " classes";
    if (ok) {
      PermGroup k = unipotent_with_frobenius(g);
      ok = are_conjugate_subgroups(g.group, set.representatives[0], k, o.search).has_value();
      d << ", order " << set.representatives[0].order() << (ok ? ", conjugate to U:<phi>" : ", not conjugate to U:<phi>");
    }
    return verdict(ok, d.str(), {{"order", i64(g.group.order())}, {"classes", i64(set.class_count())}});
  };
  return c;
}

CheckCase psl2q_scan(std::uint64_t q) {
  const std::string spec = "PSL(2," + std::to_string(q) + ")";
  CheckCase c;
  c.id = "carter-psl2q-scan-" + std::to_string(q);
  c.description = "Carter search in " + spec + " against the Sylow 2-normalizer criterion";
  c.anchor = "Carter subgroups are conjugate; when N(S) = S C(S) they contain a Sylow 2-subgroup";
  c.tier = Tier::Full;
  c.group_specs = {spec};
  c.expected = "at most 1 class, containing a Sylow 2-subgroup when the criterion holds";
  c.budget_ms = 60000;
  c.run = [spec](const RunOptions& o) {
    auto g = realize_group(spec);
    auto set = carter_subgroups(g.group, o.search);
    const bool crit = check_syl2_criterion(g.group, o.search);
    const bool ok = set.class_count() <= 1 && (!crit || contains_full_sylow2(g.group, set));
    std::ostringstream d;
    d << set.class_count() << " classes, criterion " << crit;
    return verdict(ok, d.str(), {{"order", i64(g.group.order())}, {"classes", i64(set.class_count())}});
  };
  return c;
}

CheckCase skip_case(std::string id, std::string anchor, std::string reason) {
  CheckCase c;
  c.id = std::move(id);
  c.description = "registered for coverage; not run";
  c.anchor = std::move(anchor);
  c.tier = Tier::Full;
  c.expected = "skip";
  c.budget_ms = 0;
  c.run = [reason](const RunOptions&) { return skipped(reason); };
  return c;
}

std::vector<CheckCase> build_registry() {
  std::vector<CheckCase> r;
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 17, 19, 23, 25}) r.push_back(norm2syl_psl2(q));
  r.push_back(norm2syl_psp43());

  const std::string solvable = "A finite solvable group has exactly one class of Carter subgroups";
  const std::string conjugate = "Carter subgroups of a finite group are conjugate";
  r.push_back(carter_case("sym3", "Sym(3)", 1, 2, solvable, 200));
  r.push_back(carter_case("sym4", "Sym(4)", 1, 8, solvable, 200));
  r.push_back(carter_case("sym5", "Sym(5)", 1, 8, conjugate, 1000));
  r.push_back(carter_case("sym6", "Sym(6)", 1, 16, conjugate, 3000));
  r.push_back(carter_case("alt4", "Alt(4)", 1, 3, solvable, 200));
  r.push_back(carter_case("alt5", "Alt(5)", 0, 0, conjugate, 1000));
  r.push_back(carter_case("sl23", "SL(2,3)", 1, 6, solvable, 200));
  r.push_back(carter_case("gl23", "GL(2,3)", 1, 16, solvable, 500));
  r.push_back(carter_case("psu32", "PSU(3,2)", 1, 6,
                          "In the unitary group over GF(2^2) in dimension 3, a Carter subgroup has order 2*3", 1000));
  r.push_back(carter_case("pgu32", "PGU(3,2)", 1, 6, solvable, 1000));
  r.push_back(carter_case("psl27", "PSL(2,7)", 1, 8, conjugate, 1000));

  r.push_back(quotient_suite());
  r.push_back(criterion_equivalence());
  r.push_back(inh_2ext());
  r.push_back(graph_inverse());
  r.push_back(psl23_power());
  r.push_back(omega_roots());
  for (unsigned l = 2; l <= 7; ++l) r.push_back(long_roots_abelian(l));
  r.push_back(bds_case('G', 2));
  r.push_back(bds_case('C', 2));
  r.push_back(bds_case('E', 6));
  r.push_back(torus_case("A1", 'A', 1, false));
  r.push_back(torus_case("A2", 'A', 2, false));
  r.push_back(torus_case("2A2", 'A', 2, true));
  r.push_back(highest_root_c3());
  r.push_back(e6_scan());
  r.push_back(pgammal28_carter());
  r.push_back(sp43_conj());
  r.push_back(syl2_fieldaut(8));
  r.push_back(syl2_fieldaut(27));
  r.push_back(conj_automorphisms());

  r.push_back(pgammal227_witness());
  r.push_back(pgammal227_search());
  for (std::uint64_t q : {7, 9, 11, 13, 17}) r.push_back(psl2q_scan(q));
  r.push_back(skip_case("carter-semilinear-2g2",
                        "Carter subgroups of 2G2(3^(2n+1)) extended by field automorphisms",
                        "construction out of scope"));
  r.push_back(skip_case("carter-semilinear-psu3-8",
                        "Carter subgroups of PSU(3,2^t):<zeta>, t odd > 1",
                        "smallest instance has order about 5.5e6, beyond the search caps"));
  return r;
}

}  // namespace

const std::vector<CheckCase>& registry() {
  static const std::vector<CheckCase> cases = build_registry();
  return cases;
}

}  // namespace carterlab

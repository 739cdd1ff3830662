#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brute.hpp"
#include "corpus.hpp"
#include "carterlab/carter.hpp"
#include "carterlab/group_io.hpp"
#include "carterlab/numtheory.hpp"

using namespace carterlab;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

std::vector<std::size_t> indices(const oracle::Table& t, const PermGroup& h) {
  std::vector<std::size_t> out;
  h.for_each_element([&](const Permutation& x) { out.push_back(t.index(x)); });
  std::sort(out.begin(), out.end());
  return out;
}

// A spread of elements: every k-th element in oracle order, at most ~12.
std::vector<std::size_t> sample(const oracle::Table& t) {
  std::vector<std::size_t> out;
  const std::size_t step = std::max<std::size_t>(1, t.order() / 12);
  for (std::size_t i = 0; i < t.order(); i += step) out.push_back(i);
  return out;
}

}  // namespace

// --- Permutation ---------------------------------------------------------

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(cyc(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(cyc(3, {{0, 3}}), std::invalid_argument);
}

TEST(Permutation, ProductAppliesLeftFactorFirst) {
  Permutation a = cyc(3, {{0, 1}}), b = cyc(3, {{1, 2}});
  // (a*b)[0] = b[a[0]] = b[1] = 2.
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ(a.conjugate(b), b.inverse() * a * b);
  EXPECT_EQ(cyc(5, {{0, 1, 2}, {3, 4}}).order(), 6u);
  EXPECT_EQ(cyc(5, {{0, 1, 2}, {3, 4}}).pow(-1), cyc(5, {{0, 1, 2}, {3, 4}}).inverse());
}

TEST(Permutation, CompositionIsAssociative) {
  std::mt19937_64 rng(7);
  auto s6 = symmetric_group(6);
  for (int i = 0; i < 50; ++i) {
    auto a = s6.random_element(rng), b = s6.random_element(rng), c = s6.random_element(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
  }
}

// --- PermGroup basics ----------------------------------------------------

TEST(PermGroup, SpecExamples) {
  EXPECT_EQ(PermGroup(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}).order(), 6u);
  EXPECT_EQ(PermGroup(4, {}).order(), 1u);
  EXPECT_EQ(PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})}).order(), 120u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_TRUE(symmetric_group(3).contains(cyc(3, {{0, 2, 1}})));
  EXPECT_FALSE(alternating_group(4).contains(cyc(4, {{0, 1}})));
  EXPECT_TRUE(alternating_group(4).contains(Permutation(4)));
}

TEST(PermGroup, DegreeMismatchThrows) {
  EXPECT_THROW(PermGroup(4, {cyc(3, {{0, 1}})}), std::invalid_argument);
  EXPECT_THROW(symmetric_group(4).contains(Permutation(5)), std::invalid_argument);
}

TEST(PermGroup, RankUnrankRoundTrip) {
  auto g = realize_group("PSL(2,7)").group;
  std::set<Permutation> seen;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    Permutation x = g.unrank(r);
    EXPECT_EQ(g.rank(x), r);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), g.order());
}

TEST(PermGroup, StrongGeneratorsSiftAndOrderIsOrbitProduct) {
  for (const auto& e : corpus::small_groups()) {
    std::uint64_t product = 1;
    for (std::size_t l = 0; l < e.group.base_length(); ++l) product *= e.group.basic_orbit(l).size();
    EXPECT_EQ(product, e.group.order()) << e.name;
    for (const auto& s : e.group.strong_generators()) EXPECT_TRUE(e.group.contains(s)) << e.name;
  }
}

TEST(PermGroup, GeneratorJsonRoundTrip) {
  auto g = realize_group("PSL(3,2)").group;
  const std::string text = generators_to_json(g);
  auto h = generators_from_json(text);
  EXPECT_EQ(h.degree(), g.degree());
  EXPECT_EQ(h.generators(), g.generators());
  EXPECT_EQ(h.order(), 168u);
  auto s3 = generators_from_json(R"({"degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]})");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_THROW(generators_from_json(R"({"degree": 3, "generators": [[[0, 3]]]})"), std::invalid_argument);
  EXPECT_THROW(generators_from_json(R"({"degree": 3, "generators": [[[0, 1], [1, 2]]]})"), std::invalid_argument);
  EXPECT_THROW(generators_from_json("[1, 2"), std::invalid_argument);
  // Fixed points are omitted.
  EXPECT_EQ(generators_to_json(PermGroup(4, {cyc(4, {{0, 1}})})), R"({"degree":4,"generators":[[[0,1]]]})");
}

// --- Oracle agreement ----------------------------------------------------

TEST(Oracle, OrderMatchesClosure) {
  for (const auto& e : corpus::small_groups()) {
    oracle::Table t(e.group.generators(), e.group.degree());
    EXPECT_EQ(e.group.order(), t.order()) << e.name;
  }
}

TEST(Oracle, CentralizersNormalizersAndClassesMatch) {
  for (const auto& e : corpus::small_groups()) {
    const auto& g = e.group;
    oracle::Table t(g.generators(), g.degree());
    EXPECT_EQ(conjugacy_classes(g).size(), t.class_count()) << e.name;
    for (auto i : sample(t)) {
      const Permutation& x = t.element(i);
      EXPECT_EQ(subgroup_centralizer(g, x).order(), t.centralizer_order({i})) << e.name << ' ' << x.to_string();
      PermGroup cyc_x(g.degree(), {x});
      EXPECT_EQ(subgroup_normalizer(g, cyc_x).order(), t.normalizer_order(indices(t, cyc_x)))
          << e.name << ' ' << x.to_string();
    }
    for (auto p : prime_divisors(g.order())) {
      PermGroup s = sylow_subgroup(g, p);
      auto idx = indices(t, s);
      EXPECT_EQ(subgroup_normalizer(g, s).order(), t.normalizer_order(idx)) << e.name << " p=" << p;
      EXPECT_EQ(subgroup_centralizer(g, s).order(), t.centralizer_order(idx)) << e.name << " p=" << p;
    }
  }
}

TEST(Oracle, SylowSubgroupsHaveExactPPart) {
  for (const auto& e : corpus::small_groups()) {
    oracle::Table t(e.group.generators(), e.group.degree());
    for (std::uint64_t p : {2, 3, 5, 7}) {
      PermGroup s = sylow_subgroup(e.group, p);
      auto gens = s.generators();
      std::vector<std::size_t> gi;
      for (const auto& x : gens) gi.push_back(t.index(x));
      auto closure = t.generate(gi);
      EXPECT_EQ(closure.size(), p_part(t.order(), p)) << e.name << " p=" << p;
      EXPECT_EQ(s.order(), closure.size()) << e.name << " p=" << p;
    }
  }
}

TEST(Oracle, NilpotencyTestsAgree) {
  for (const auto& e : corpus::small_groups()) {
    const auto& g = e.group;
    oracle::Table t(g.generators(), g.degree());
    std::vector<PermGroup> subs{g};
    for (auto p : prime_divisors(g.order())) subs.push_back(subgroup_normalizer(g, sylow_subgroup(g, p)));
    for (auto i : sample(t)) subs.push_back(subgroup_centralizer(g, t.element(i)));
    for (const auto& h : subs) {
      const bool expected = t.is_nilpotent(indices(t, h));
      EXPECT_EQ(is_nilpotent(h), expected) << e.name << " |H|=" << h.order();
      EXPECT_EQ(is_nilpotent_normal_sylow(h), expected) << e.name;
      EXPECT_EQ(is_nilpotent_lower_central(h), expected) << e.name;
    }
  }
}

TEST(Oracle, CarterClassesMatchSubgroupLattice) {
  for (const auto& e : corpus::small_groups()) {
    if (e.group.order() > 216) continue;
    oracle::Table t(e.group.generators(), e.group.degree());
    auto expected = t.carter_classes();
    auto found = carter_subgroups(e.group);
    ASSERT_EQ(found.class_count(), expected.size()) << e.name;
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> a, b;
    for (std::size_t i = 0; i < found.class_count(); ++i)
      a.insert({found.representatives[i].order(), found.class_size(i)});
    for (const auto& c : expected) b.insert({c.order, c.conjugates});
    EXPECT_EQ(a, b) << e.name;
  }
}

TEST(Oracle, SolvableGroupsHaveOneCarterClass) {
  for (const auto& e : corpus::small_groups())
    if (e.solvable) {
      EXPECT_EQ(carter_subgroups(e.group).class_count(), 1u) << e.name;
    }
}

// --- Operation examples --------------------------------------------------

TEST(Subgroups, NormalizerAndCentralizerExamples) {
  auto s4 = symmetric_group(4);
  EXPECT_EQ(subgroup_normalizer(s4, PermGroup(4, {cyc(4, {{0, 1, 2, 3}})})).order(), 8u);
  auto a4 = alternating_group(4);
  EXPECT_EQ(subgroup_normalizer(a4, PermGroup(4, {cyc(4, {{0, 1, 2}})})).order(), 3u);
  EXPECT_EQ(subgroup_normalizer(s4, s4).order(), 24u);
  EXPECT_EQ(subgroup_centralizer(s4, cyc(4, {{0, 1}, {2, 3}})).order(), 8u);
  EXPECT_EQ(subgroup_centralizer(s4, Permutation(4)).order(), 24u);
  EXPECT_EQ(subgroup_centralizer(symmetric_group(5), cyc(5, {{0, 1, 2}})).order(), 6u);
  EXPECT_THROW(subgroup_normalizer(a4, PermGroup(4, {cyc(4, {{0, 1}})})), std::invalid_argument);
}

TEST(Subgroups, ElementConjugacy) {
  auto psl = realize_group("PSL(2,3)").group, pgl = realize_group("PGL(2,3)").group;
  std::optional<Permutation> x;
  psl.for_each_element([&](const Permutation& y) {
    if (!x && y.order() == 3) x = y;
  });
  ASSERT_TRUE(x);
  EXPECT_FALSE(are_conjugate_elements(psl, *x, x->inverse()));
  auto c = are_conjugate_elements(pgl, *x, x->inverse());
  ASSERT_TRUE(c);
  EXPECT_EQ(x->conjugate(*c), x->inverse());
  auto id = are_conjugate_elements(psl, *x, *x);
  ASSERT_TRUE(id);
  EXPECT_EQ(x->conjugate(*id), *x);
}

TEST(Subgroups, SubgroupConjugacy) {
  auto s3 = symmetric_group(3);
  auto c = are_conjugate_subgroups(s3, PermGroup(3, {cyc(3, {{0, 1}})}), PermGroup(3, {cyc(3, {{1, 2}})}));
  ASSERT_TRUE(c);
  EXPECT_EQ(cyc(3, {{0, 1}}).conjugate(*c), cyc(3, {{1, 2}}));
  auto s4 = symmetric_group(4);
  EXPECT_FALSE(are_conjugate_subgroups(s4, PermGroup(4, {cyc(4, {{0, 1}})}), PermGroup(4, {cyc(4, {{0, 1}, {2, 3}})})));
}

TEST(Subgroups, SylowExamples) {
  EXPECT_EQ(sylow_subgroup(symmetric_group(4), 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(realize_group("PSL(2,7)").group, 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(symmetric_group(3), 5).order(), 1u);
}

TEST(Subgroups, SylowIsSeedIndependentInOrder) {
  auto g = realize_group("PSL(2,13)").group;
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    SearchOptions o;
    o.seed = seed;
    EXPECT_EQ(sylow_subgroup(g, 2, o).order(), 4u);
    EXPECT_EQ(sylow_subgroup(g, 13, o).order(), 13u);
  }
}

TEST(Subgroups, NilpotencyExamples) {
  EXPECT_FALSE(is_nilpotent(symmetric_group(3)));
  EXPECT_TRUE(is_nilpotent(cyclic_group(12)));
  EXPECT_TRUE(is_nilpotent(dihedral_group(4)));
  EXPECT_TRUE(is_nilpotent(PermGroup::trivial(3)));
}

TEST(Subgroups, ConjugacyClassExamples) {
  auto classes = conjugacy_classes(symmetric_group(3));
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size);
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(conjugacy_classes(PermGroup::trivial(2)).size(), 1u);
  SearchOptions tight;
  tight.sweep_cap = 100;
  EXPECT_THROW(conjugacy_classes(symmetric_group(5), tight), CapExceeded);
}

TEST(Subgroups, QuotientExamples) {
  auto s4 = symmetric_group(4);
  PermGroup v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(quotient_group(s4, v4).group().order(), 6u);
  EXPECT_EQ(quotient_group(s4, s4).group().order(), 1u);
  auto sl = realize_group("SL(2,3)");
  const auto& f = sl.action->field();
  PermGroup z(sl.group.degree(), {sl.action->map(Matrix::diagonal({f.neg(1), f.neg(1)}))});
  EXPECT_EQ(quotient_group(sl.group, z).group().order(), 12u);
  EXPECT_THROW(quotient_group(s4, PermGroup(4, {cyc(4, {{0, 1}})})), std::invalid_argument);
}

TEST(Subgroups, QuotientProjectionIsHomomorphism) {
  auto g = direct_product(symmetric_group(4), symmetric_group(3));
  PermGroup n(7, {shift_permutation(cyc(4, {{0, 1}, {2, 3}}), 7, 0), shift_permutation(cyc(4, {{0, 2}, {1, 3}}), 7, 0)});
  auto q = quotient_group(g, n);
  EXPECT_EQ(q.group().order(), 36u);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = g.random_element(rng), b = g.random_element(rng);
    EXPECT_EQ(q.project(a * b), q.project(a) * q.project(b));
  }
}

TEST(Subgroups, CentralizerInSym) {
  auto c = centralizer_in_sym(4, {2, 2});
  EXPECT_EQ(c.order, 8u);
  EXPECT_EQ(PermGroup(4, c.generators).order(), 8u);
  EXPECT_EQ(centralizer_in_sym(5, {3}).order, 6u);
  EXPECT_EQ(centralizer_in_sym(4, {}).order, 24u);
  EXPECT_THROW(centralizer_in_sym(4, {3, 2}), std::invalid_argument);
  // The generated group is the centralizer computed by the engine.
  for (std::vector<unsigned> type : {std::vector<unsigned>{2, 2}, {3}, {2}, {3, 2}, {4, 2}, {2, 2, 2}, {3, 3}}) {
    auto sc = centralizer_in_sym(6, type);
    PermGroup gen(6, sc.generators);
    EXPECT_EQ(gen.order(), sc.order);
    EXPECT_EQ(gen, subgroup_centralizer(symmetric_group(6), sc.element));
  }
}

// --- Carter search -------------------------------------------------------

TEST(Carter, CatalogExamples) {
  auto s4 = carter_subgroups(symmetric_group(4));
  ASSERT_EQ(s4.class_count(), 1u);
  EXPECT_EQ(s4.representatives[0].order(), 8u);
  EXPECT_EQ(carter_subgroups(alternating_group(5)).class_count(), 0u);
  auto a4 = carter_subgroups(alternating_group(4));
  ASSERT_EQ(a4.class_count(), 1u);
  EXPECT_EQ(a4.representatives[0].order(), 3u);
}

TEST(Carter, WitnessExamples) {
  auto s4 = symmetric_group(4);
  EXPECT_TRUE(is_carter_witness(s4, sylow_subgroup(s4, 2)));
  EXPECT_FALSE(is_carter_witness(s4, PermGroup(4, {cyc(4, {{0, 1}})})));
  EXPECT_TRUE(is_carter_witness(dihedral_group(4), dihedral_group(4)));
  EXPECT_FALSE(is_carter_witness(symmetric_group(3), symmetric_group(3)));
}

TEST(Carter, DegenerateGroups) {
  auto triv = carter_subgroups(PermGroup::trivial(3));
  ASSERT_EQ(triv.class_count(), 1u);
  EXPECT_EQ(triv.representatives[0].order(), 1u);
  // A nilpotent group is its own unique Carter subgroup.
  auto c = carter_subgroups(cyclic_group(12));
  ASSERT_EQ(c.class_count(), 1u);
  EXPECT_EQ(c.representatives[0].order(), 12u);
}

TEST(Carter, CapIsEnforced) {
  SearchOptions o;
  o.full_search_cap = 100;
  EXPECT_THROW(carter_subgroups(symmetric_group(5), o), CapExceeded);
}

TEST(Carter, RepresentativesAreWitnessesAndPairwiseNonConjugate) {
  for (const auto& e : corpus::small_groups()) {
    auto set = carter_subgroups(e.group);
    for (std::size_t i = 0; i < set.class_count(); ++i) {
      EXPECT_TRUE(is_carter_witness(e.group, set.representatives[i])) << e.name;
      EXPECT_TRUE(set.representatives[i].is_subgroup_of(e.group)) << e.name;
      for (std::size_t j = 0; j < i; ++j)
        EXPECT_FALSE(are_conjugate_subgroups(e.group, set.representatives[i], set.representatives[j])) << e.name;
    }
  }
}

TEST(Carter, NilpotentClassCounts) {
  // Conjugacy classes of nilpotent subgroups, counted by the lattice oracle.
  for (const auto& [g, n] : std::vector<std::pair<PermGroup, std::size_t>>{
           {symmetric_group(3), 3}, {symmetric_group(4), 8}, {alternating_group(4), 4}, {alternating_group(5), 5}}) {
    oracle::Table t(g.generators(), g.degree());
    std::set<std::vector<std::size_t>> seen;
    std::size_t classes = 0;
    for (const auto& h : t.all_subgroups()) {
      if (seen.count(h) || !t.is_nilpotent(h)) continue;
      ++classes;
      for (std::size_t x = 0; x < t.order(); ++x) {
        std::vector<std::size_t> img;
        for (auto y : h) img.push_back(t.conj(y, x));
        std::sort(img.begin(), img.end());
        seen.insert(img);
      }
    }
    EXPECT_EQ(classes, n);
    EXPECT_EQ(nilpotent_subgroup_classes(g).class_count(), n);
  }
}

// --- Property suites -----------------------------------------------------

TEST(Properties, QuotientOfCarterIsCarter) {
  struct Pair {
    std::string name;
    PermGroup g, n;
  };
  std::vector<Pair> pairs;
  auto s4 = symmetric_group(4);
  pairs.push_back({"Sym4/V4", s4, PermGroup(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})})});
  pairs.push_back({"Sym4/Alt4", s4, alternating_group(4)});
  auto gl = realize_group("GL(2,3)"), sl = realize_group("SL(2,3)");
  pairs.push_back({"GL(2,3)/SL(2,3)", gl.group, sl.group});
  auto pg = realize_group("PGammaL(2,8)");
  pairs.push_back({"PGammaL(2,8)/PSL(2,8)", pg.group, pg.base});
  auto sx = direct_product(symmetric_group(4), symmetric_group(3));
  pairs.push_back({"Sym4xSym3/Sym4", sx, PermGroup(7, {shift_permutation(cyc(4, {{0, 1}}), 7, 0),
                                                        shift_permutation(cyc(4, {{0, 1, 2, 3}}), 7, 0)})});
  for (const auto& p : pairs) {
    ASSERT_TRUE(is_normal(p.g, p.n)) << p.name;
    auto q = quotient_group(p.g, p.n);
    for (const auto& k : carter_subgroups(p.g).representatives)
      EXPECT_TRUE(is_carter_witness(q.group(), q.project(k))) << p.name;
  }
}

TEST(Properties, CriterionMatchesCarterSearch) {
  for (const auto& e : corpus::small_groups()) {
    auto set = carter_subgroups(e.group);
    const std::uint64_t two = p_part(e.group.order(), 2);
    bool contains = false;
    for (const auto& k : set.representatives) contains = contains || p_part(k.order(), 2) == two;
    EXPECT_EQ(check_syl2_criterion(e.group), contains) << e.name;
  }
}

TEST(Properties, CriterionPassesToTwoPowerExtensions) {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"Alt(4)", "Sym(4)"},     {"Alt(5)", "Sym(5)"},     {"Alt(6)", "Sym(6)"},    {"PSL(2,7)", "PGL(2,7)"},
      {"PSL(2,9)", "PGL(2,9)"}, {"PSL(2,5)", "PGL(2,5)"}, {"SL(2,3)", "GL(2,3)"}, {"PSL(3,2)", "Ext(PSL(3,2), graph)"}};
  std::size_t applicable = 0;
  for (const auto& [hs, gs] : pairs) {
    auto g = realize_group(gs);
    PermGroup h = hs == "PSL(3,2)" ? g.base : realize_group(hs).group;
    ASSERT_TRUE(h.is_subgroup_of(g.group) && is_normal(g.group, h)) << hs;
    ASSERT_TRUE(is_power_of(g.group.order() / h.order(), 2)) << hs;
    if (!check_syl2_criterion(h)) continue;
    ++applicable;
    EXPECT_TRUE(check_syl2_criterion(g.group)) << gs;
  }
  EXPECT_GE(applicable, 4u);
}

TEST(Properties, OddElementsCentralizingSectionsCentralizeS) {
  // G = A x B with G_1 = A and G_2 = B, so G_1 ∩ G_2 = 1. For x of odd order
  // in N_G(S) with [x, S] inside both G_i, x centralizes S.
  std::vector<std::pair<PermGroup, PermGroup>> factors = {
      {symmetric_group(4), alternating_group(4)},
      {alternating_group(4), alternating_group(4)},
      {realize_group("SL(2,3)").group, symmetric_group(3)},
      {realize_group("PSL(2,7)").group, cyclic_group(3)}};
  std::size_t hypotheses_met = 0;
  for (const auto& [a, b] : factors) {
    auto g = direct_product(a, b);
    const std::size_t n = g.degree();
    std::vector<Permutation> ga, gb;
    for (const auto& s : a.generators()) ga.push_back(shift_permutation(s, n, 0));
    for (const auto& s : b.generators()) gb.push_back(shift_permutation(s, n, a.degree()));
    PermGroup g1(n, ga), g2(n, gb);
    PermGroup s = sylow_subgroup(g, 2);
    PermGroup ns = subgroup_normalizer(g, s);
    ns.for_each_element([&](const Permutation& x) {
      if (x.order() % 2 == 0) return;
      bool hyp = true;
      for (const auto& t : s.generators()) {
        Permutation comm = commutator(x, t);
        hyp = hyp && g1.contains(comm) && g2.contains(comm);
      }
      if (!hyp) return;
      ++hypotheses_met;
      for (const auto& t : s.generators()) EXPECT_EQ(x * t, t * x);
    });
  }
  EXPECT_GT(hypotheses_met, 4u);
}

TEST(Properties, CarterCentreElementsAreNotConjugateToOtherPowers) {
  for (const char* spec : {"Alt(4)", "SL(2,3)", "GL(2,3)", "Sym(4)", "PSU(3,2)", "PGU(3,2)", "PSL(2,7)", "PGammaL(2,8)"}) {
    auto g = realize_group(spec).group;
    for (const auto& k : carter_subgroups(g).representatives) {
      PermGroup z = subgroup_centralizer(k, k);
      z.for_each_element([&](const Permutation& x) {
        const auto ord = x.order();
        for (std::uint64_t e = 2; e < ord; ++e) {
          Permutation y = x.pow(static_cast<std::int64_t>(e));
          if (y == x) continue;
          EXPECT_FALSE(are_conjugate_elements(g, x, y)) << spec << ' ' << x.to_string() << "^" << e;
        }
      });
    }
  }
}

TEST(Properties, Syl2CriterionExamples) {
  EXPECT_TRUE(check_syl2_criterion(realize_group("PSL(2,7)").group));
  EXPECT_FALSE(check_syl2_criterion(realize_group("PSL(2,5)").group));
  EXPECT_FALSE(check_syl2_criterion(alternating_group(5)));
  EXPECT_EQ(carter_subgroups(alternating_group(5)).class_count(), 0u);
}

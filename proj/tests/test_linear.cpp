#include <gtest/gtest.h>

#include <random>
#include <set>

#include "carterlab/carter.hpp"
#include "carterlab/group_spec.hpp"
#include "carterlab/numtheory.hpp"

using namespace carterlab;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>>& small_fields() {
  static const std::vector<std::pair<std::uint32_t, unsigned>> f = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1},
      {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {2, 5}, {7, 2}, {2, 6}, {3, 4}, {2, 7}, {11, 2}, {2, 8}};
  return f;
}

// A random word of length `len` in the generators, as matrix and as index list.
std::pair<Matrix, std::vector<std::size_t>> random_word(const FiniteField& f, const std::vector<Matrix>& gens,
                                                        std::mt19937_64& rng, int len) {
  Matrix m = Matrix::identity(gens.front().n);
  std::vector<std::size_t> w;
  for (int i = 0; i < len; ++i) {
    std::size_t k = rng() % gens.size();
    m = mul(f, m, gens[k]);
    w.push_back(k);
  }
  return {m, w};
}

}  // namespace

// --- Finite fields -------------------------------------------------------

TEST(FiniteField, AxiomsExhaustiveUpTo256) {
  for (auto [p, k] : small_fields()) {
    FiniteField f(p, k);
    const auto q = f.size();
    ASSERT_EQ(q, ipow(p, k));
    // Associativity and distributivity over all triples is q^3; up to 32
    // elements run it in full, beyond that fix `a` to a spread of values.
    std::vector<FiniteField::Elem> as;
    for (FiniteField::Elem a = 0; a < q; a += (q <= 32 ? 1 : q / 16 + 1)) as.push_back(a);
    for (auto a : as)
      for (FiniteField::Elem b = 0; b < q; ++b)
        for (FiniteField::Elem c = 0; c < q; ++c) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
    for (FiniteField::Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (FiniteField::Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      }
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(FiniteField, PrimitiveElementAndFrobenius) {
  for (auto [p, k] : small_fields()) {
    FiniteField f(p, k);
    const auto q = f.size();
    std::set<FiniteField::Elem> powers;
    FiniteField::Elem x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i, x = f.mul(x, f.primitive())) powers.insert(x);
    EXPECT_EQ(powers.size(), q - 1) << p << "^" << k;
    EXPECT_EQ(x, 1u);
    // Frobenius: additive, multiplicative, order k, fixes the prime field exactly.
    std::size_t fixed = 0;
    for (FiniteField::Elem a = 0; a < q; ++a) {
      FiniteField::Elem y = a;
      for (unsigned i = 0; i < k; ++i) y = f.frobenius(y);
      EXPECT_EQ(y, a);
      fixed += f.frobenius(a) == a;
      EXPECT_EQ(f.frobenius(f.add(a, 7 % q)), f.add(f.frobenius(a), f.frobenius(7 % q)));
      EXPECT_EQ(f.frobenius(f.mul(a, f.primitive())), f.mul(f.frobenius(a), f.frobenius(f.primitive())));
    }
    EXPECT_EQ(fixed, p);
    if (k > 1) {
      EXPECT_NE(f.frobenius(f.primitive()), f.primitive());
    }
  }
}

TEST(FiniteField, SpecExamples) {
  FiniteField f2(2, 1);
  EXPECT_EQ(f2.size(), 2u);
  FiniteField f4(2, 2);
  std::set<FiniteField::Elem> fixed;
  for (FiniteField::Elem a = 0; a < 4; ++a)
    if (f4.frobenius(a) == a) fixed.insert(a);
  EXPECT_EQ(fixed, (std::set<FiniteField::Elem>{0, 1}));
  FiniteField f27(3, 3);
  FiniteField::Elem w = f27.primitive(), x = w;
  int order = 1;
  while (x != 1) x = f27.mul(x, w), ++order;
  EXPECT_EQ(order, 26);
}

TEST(FiniteField, ModulusIsLeastWithPrimitiveRoot) {
  // GF(4): x^2 + x + 1. GF(8): x^3 + x^2 + 1 (c = (1,0,1)). GF(9): x^2 + x + 2 (c = (2,1)).
  EXPECT_EQ(FiniteField(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(FiniteField(2, 3).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(FiniteField(3, 2).modulus(), (std::vector<std::uint32_t>{2, 1}));
}

TEST(FiniteField, RejectsBadParameters) {
  EXPECT_THROW(FiniteField(4, 1), std::invalid_argument);
  EXPECT_THROW(FiniteField(2, 17), std::invalid_argument);
  EXPECT_THROW(FiniteField(3, 0), std::invalid_argument);
}

// --- Matrices and classical groups ---------------------------------------

TEST(Matrix, InverseAndDeterminant) {
  FiniteField f(5, 1);
  Matrix m(3);
  m.a = {1, 2, 3, 0, 1, 4, 5 % 5, 6 % 5, 0};
  Matrix mi = inverse(f, m);
  EXPECT_EQ(mul(f, m, mi), Matrix::identity(3));
  EXPECT_EQ(f.mul(determinant(f, m), determinant(f, mi)), 1u);
  Matrix singular(2);
  singular.a = {1, 2, 2, 4};
  EXPECT_THROW(inverse(f, singular), std::domain_error);
  EXPECT_EQ(determinant(f, singular), 0u);
}

TEST(Classical, GeneratorsPreserveForms) {
  for (auto spec : std::vector<ClassicalGroupSpec>{{Family::SL, 2, 3},
                                                   {Family::SL, 3, 4},
                                                   {Family::GL, 2, 9},
                                                   {Family::Sp, 4, 3},
                                                   {Family::Sp, 6, 2},
                                                   {Family::Sp, 4, 4},
                                                   {Family::SU, 3, 2},
                                                   {Family::SU, 3, 3},
                                                   {Family::SU, 3, 4},
                                                   {Family::GU, 3, 2},
                                                   {Family::GU, 3, 3}}) {
    auto f = spec.field();
    for (const auto& g : classical_group(spec)) EXPECT_TRUE(preserves_form(spec, f, g)) << spec.to_string();
  }
}

TEST(Classical, GeneratedOrdersMatchFormulas) {
  struct Row {
    ClassicalGroupSpec spec;
    std::uint64_t order;
  };
  for (const auto& r : std::vector<Row>{{{Family::SL, 2, 3}, 24},
                                        {{Family::SL, 2, 7}, 336},
                                        {{Family::GL, 2, 3}, 48},
                                        {{Family::SL, 3, 2}, 168},
                                        {{Family::SL, 2, 8}, 504},
                                        {{Family::Sp, 4, 3}, 51840},
                                        {{Family::Sp, 2, 5}, 120},
                                        {{Family::SU, 3, 2}, 216},
                                        {{Family::GU, 3, 2}, 648},
                                        {{Family::SU, 3, 3}, 6048}}) {
    EXPECT_EQ(classical_order(r.spec), r.order) << r.spec.to_string();
    ProjectiveAction vec(r.spec.field(), r.spec.n, DomainMode::Vectors);
    EXPECT_EQ(matrix_group_image(vec, classical_group(r.spec)).order(), r.order) << r.spec.to_string();
    auto proj = projective_rep(r.spec);
    EXPECT_EQ(proj.group.order() * scalar_count(r.spec), r.order) << r.spec.to_string();
  }
}

TEST(Classical, LieOrderExamples) {
  EXPECT_EQ(lie_order('A', 1, 7).full, 336u);
  EXPECT_EQ(lie_order('A', 1, 7).simple, 168u);
  EXPECT_EQ(lie_order('C', 2, 3).full, 51840u);
  EXPECT_EQ(lie_order('C', 2, 3).simple, 25920u);
  EXPECT_EQ(lie_order('A', 2, 2, true).full, 216u);
  EXPECT_EQ(lie_order('A', 2, 2, true).simple, 72u);
  EXPECT_EQ(lie_order('G', 2, 2).full, 12096u);
  EXPECT_THROW(lie_order('B', 2, 3, true), std::invalid_argument);
}

TEST(Classical, LongRootElements) {
  FiniteField f(3, 1);
  ClassicalGroupSpec sp{Family::Sp, 4, 3};
  EXPECT_EQ(long_root_element(f, 2, 1, 0), Matrix::identity(4));
  EXPECT_EQ(mul(f, long_root_element(f, 2, 1, 1), long_root_element(f, 2, 1, 1)), long_root_element(f, 2, 1, 2));
  for (unsigned i = 1; i <= 2; ++i)
    for (FiniteField::Elem t = 0; t < 3; ++t) EXPECT_TRUE(preserves_form(sp, f, long_root_element(f, 2, i, t)));
  EXPECT_THROW(long_root_element(f, 2, 3, 1), std::invalid_argument);
  EXPECT_THROW(long_root_element(f, 2, 0, 1), std::invalid_argument);
}

// --- Projective actions --------------------------------------------------

TEST(Projective, SpecExamples) {
  auto sl23 = projective_rep({Family::SL, 2, 3});
  EXPECT_EQ(sl23.action.degree(), 4u);
  EXPECT_EQ(sl23.group.order(), 12u);
  auto su32 = projective_rep({Family::SU, 3, 2});
  EXPECT_EQ(su32.action.degree(), 21u);
  EXPECT_EQ(su32.group.order(), 72u);
  const auto& f = su32.action.field();
  EXPECT_TRUE(su32.action.map(Matrix::diagonal({f.primitive(), f.primitive(), f.primitive()})).is_identity());
}

TEST(Projective, MapIsHomomorphismWithScalarKernel) {
  std::mt19937_64 rng(11);
  for (auto spec : std::vector<ClassicalGroupSpec>{
           {Family::SL, 2, 7}, {Family::GL, 2, 4}, {Family::SL, 3, 3}, {Family::Sp, 4, 3}, {Family::SU, 3, 3}}) {
    auto img = projective_rep(spec, spec.n >= 3);
    const auto& f = img.action.field();
    for (int i = 0; i < 100; ++i) {
      auto [m, word] = random_word(f, img.matrices, rng, 12);
      Permutation p(img.action.degree());
      for (auto k : word) p *= img.action.map(img.matrices[k]);
      ASSERT_EQ(img.action.map(m), p) << spec.to_string();
      EXPECT_EQ(img.action.map(m).is_identity(), is_scalar(m)) << spec.to_string();
    }
  }
}

TEST(Projective, FrobeniusConjugationIsEntrywisePower) {
  std::mt19937_64 rng(5);
  for (auto spec : std::vector<ClassicalGroupSpec>{{Family::SL, 2, 8}, {Family::SL, 2, 27}, {Family::SL, 3, 4}, {Family::SU, 3, 3}}) {
    auto img = projective_rep(spec);
    const auto& f = img.action.field();
    Permutation phi = img.action.frobenius_perm();
    EXPECT_EQ(phi.order(), f.degree()) << spec.to_string();
    for (int i = 0; i < 100; ++i) {
      Matrix m = random_word(f, img.matrices, rng, 10).first;
      EXPECT_EQ(img.action.map(m).conjugate(phi), img.action.map(entrywise_pow(f, m, f.characteristic())))
          << spec.to_string();
    }
  }
  // On P^1(GF(4)) the Frobenius fixes the three GF(2)-points.
  auto p4 = projective_rep({Family::SL, 2, 4});
  Permutation phi = p4.action.frobenius_perm();
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < phi.degree(); ++i) fixed += phi[i] == i;
  EXPECT_EQ(fixed, 3u);
}

TEST(Projective, GraphAutomorphismIsTransposeInverse) {
  auto img = projective_rep({Family::SL, 3, 2}, true);
  const auto& f = img.action.field();
  Permutation tau = img.action.graph_auto_perm();
  EXPECT_EQ(img.action.degree(), 14u);
  EXPECT_TRUE((tau * tau).is_identity());
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(tau[i], 7 + i);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Matrix m = random_word(f, img.matrices, rng, 10).first;
    EXPECT_EQ(img.action.map(m).conjugate(tau), img.action.map(inverse(f, transpose(m))));
  }
  EXPECT_THROW(projective_rep({Family::SL, 3, 2}, false).action.graph_auto_perm(), std::logic_error);
}

TEST(Projective, DomainCapIsEnforced) {
  EXPECT_THROW(ProjectiveAction(FiniteField(2, 8), 3, DomainMode::Points, 1000), CapExceeded);
}

// --- Extensions ----------------------------------------------------------

TEST(Extensions, Orders) {
  EXPECT_EQ(realize_group("PGammaL(2,8)").group.order(), 1512u);
  EXPECT_EQ(realize_group("Ext(PSL(3,2), graph)").group.order(), 336u);
  EXPECT_EQ(realize_group("Ext(PSL(2,27), frob)").group.order(), 29484u);
  auto psl = realize_group("PSL(2,7)");
  EXPECT_EQ(extend_by_autos(psl.group, {Permutation(psl.group.degree())}).group().order(), 168u);
}

TEST(Extensions, CosetSignature) {
  auto g = realize_group("Ext(PSL(2,8), frob)");
  AutomorphismExtension ext(g.base, g.autos);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    Permutation b = g.base.random_element(rng);
    for (unsigned j = 0; j < 3; ++j) {
      auto sig = ext.coset_signature(b * g.autos[0].pow(j));
      ASSERT_EQ(sig.size(), 1u);
      EXPECT_EQ(sig[0], j);
    }
  }
}

TEST(Extensions, RejectsNonNormalizingAutomorphism) {
  PermGroup c(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  EXPECT_THROW(extend_by_autos(c, {Permutation::from_cycles(4, {{0, 1}})}), std::invalid_argument);
}

TEST(Extensions, FrobeniusCentralizerSylowInOddCharacteristic) {
  // PSL(2,3^t) with t odd: a Sylow 2-subgroup of C(phi) is Sylow in G.
  for (const char* spec : {"PSL(2,27)"}) {
    auto g = realize_group(spec);
    Permutation phi = g.action->frobenius_perm();
    ASSERT_EQ(phi.order() % 2, 1u);
    PermGroup s = sylow_subgroup(element_centralizer(g.group, phi), 2);
    EXPECT_EQ(s.order(), p_part(g.group.order(), 2)) << spec;
  }
}

TEST(Extensions, OrderThreeComplementsInPGammaL28AreConjugate) {
  auto g = realize_group("PGammaL(2,8)");
  std::vector<Permutation> outer;
  g.group.for_each_element([&](const Permutation& x) {
    if (x.order() == 3 && !g.base.contains(x)) outer.push_back(x);
  });
  ASSERT_FALSE(outer.empty());
  PermGroup first(g.group.degree(), {outer.front()});
  for (const auto& x : outer) {
    auto c = are_conjugate_subgroups(g.group, first, PermGroup(g.group.degree(), {x}));
    ASSERT_TRUE(c);
    EXPECT_TRUE(PermGroup(g.group.degree(), {x}).contains(outer.front().conjugate(*c)));
  }
}

TEST(Extensions, LongRootProductConjugateToInverse) {
  auto g = realize_group("Sp(4,3)");
  const auto& f = g.action->field();
  Permutation v = g.action->map(mul(f, long_root_element(f, 2, 1, 1), long_root_element(f, 2, 2, 1)));
  auto c = are_conjugate_elements(g.group, v, v.inverse());
  ASSERT_TRUE(c);
  EXPECT_EQ(v.conjugate(*c), v.inverse());
}

// --- Group-spec grammar --------------------------------------------------

TEST(GroupSpec, ParsesEveryProduction) {
  EXPECT_EQ(realize_group("Sym(5)").group.order(), 120u);
  EXPECT_EQ(realize_group(" Alt( 5 ) ").group.order(), 60u);
  EXPECT_EQ(realize_group("SL(2,5)").group.order(), 120u);
  EXPECT_EQ(realize_group("GL(2,4)").group.order(), 180u);
  EXPECT_EQ(realize_group("PSL(2,5)").group.order(), 60u);
  EXPECT_EQ(realize_group("PGL(2,5)").group.order(), 120u);
  EXPECT_EQ(realize_group("Sp(4,2)").group.order(), 720u);
  EXPECT_EQ(realize_group("PSp(4,3)").group.order(), 25920u);
  EXPECT_EQ(realize_group("SU(3,2)").group.order(), 216u);
  EXPECT_EQ(realize_group("PSU(3,2)").group.order(), 72u);
  EXPECT_EQ(realize_group("GU(3,2)").group.order(), 648u);
  EXPECT_EQ(realize_group("PGU(3,2)").group.order(), 216u);
  EXPECT_EQ(realize_group("PGammaL(2,9)").group.order(), 1440u);
  EXPECT_EQ(realize_group("Ext(PSL(2,9), frob)").group.order(), 720u);
  EXPECT_EQ(realize_group("Ext(PSL(2,64), frob^2)").group.order(), 262080u * 3);
  EXPECT_EQ(realize_group("Ext(Ext(PSL(3,4), graph), frob)").group.order(), 20160u * 4);
  EXPECT_EQ(realize_group("W(E6)").group.order(), 51840u);
}

TEST(GroupSpec, ErrorsNameTheProduction) {
  auto production = [](const std::string& s) {
    try {
      realize_group(s);
    } catch (const SpecError& e) {
      return e.production();
    }
    return std::string("no error");
  };
  EXPECT_EQ(production("Sym(5"), "Sym(n)");
  EXPECT_EQ(production("Foo(3)"), "group-spec");
  EXPECT_EQ(production("SL(2)"), "SL(n,q)");
  EXPECT_EQ(production("Ext(PSL(2,8), bar)"), "frob[^j] | graph");
  EXPECT_EQ(production("Ext(Sym(4), frob)"), "Ext(<linear group>, ...)");
  EXPECT_EQ(production("Sym(4) x"), "end of input");
  EXPECT_EQ(production("W(EE)"), "W(<type><rank>)");
  EXPECT_THROW(realize_group("SL(2,6)"), std::invalid_argument);
}

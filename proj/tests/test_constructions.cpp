#include <gtest/gtest.h>

#include "affcells/bruhat.hpp"
#include "affcells/cell.hpp"
#include "affcells/check_suite.hpp"
#include "affcells/constructions.hpp"
#include "affcells/exact_linalg.hpp"
#include "affcells/nilpotent.hpp"
#include "affcells/sampling.hpp"
#include "oracles.hpp"

using namespace affcells;

namespace {
const ParabolicTableau& seventeen() {
  static const ParabolicTableau tab({17, {1, 5, 9, 11}});
  return tab;
}
}  // namespace

TEST(Nilpotent, JordanTypes) {
  EXPECT_EQ(jordan_type(RationalMatrix::Zero(4, 4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(jordan_type(oracle::jordan_matrix({3})), Partition({3}));
  EXPECT_EQ(jordan_type(build_Z(seventeen())), Partition({5, 4, 3, 3, 1, 1}));
  EXPECT_THROW(jordan_type(RationalMatrix::Identity(2, 2)), DomainError);
}

TEST(Nilpotent, CentralizerDimensions) {
  EXPECT_EQ(centralizer_dim(oracle::jordan_matrix({3})), 3);
  EXPECT_EQ(centralizer_dim(RationalMatrix::Zero(2, 2)), 4);
  EXPECT_EQ(centralizer_dim(build_Z(seventeen())), 73);
}

TEST(NilpotentProperty, ConjugatedJordanForms) {
  Rng rng(51);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : partitions_of(n)) {
      const auto g = random_sl(rng, n, 2);
      const RationalMatrix nm = g * oracle::jordan_matrix(p.parts()) * inverse(g);
      EXPECT_EQ(jordan_type(nm), p);
      std::int64_t expected = 0;
      for (int a : p.parts())
        for (int b : p.parts()) expected += std::min(a, b);
      EXPECT_EQ(centralizer_dim(nm), expected);
    }
  }
}

TEST(Nilradical, BlockAndFlagTestsAgree) {
  Rng rng(52);
  for (int n = 2; n <= 6; ++n)
    for (const auto& desc : ParabolicDescriptor::all_for(n))
      for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix y = random_nilradical(rng, desc, 2);
        EXPECT_TRUE(in_nilradical_by_blocks(y, desc));
        EXPECT_TRUE(in_nilradical_by_flag(y, desc));
        const int r = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int c = std::uniform_int_distribution<int>(0, n - 1)(rng);
        y(r, c) += 1;
        EXPECT_EQ(in_nilradical_by_blocks(y, desc), in_nilradical_by_flag(y, desc));
      }
}

TEST(Constructions, ZExamples) {
  RationalMatrix z3 = RationalMatrix::Zero(3, 3);
  z3(0, 1) = 1;
  z3(1, 2) = 1;
  EXPECT_EQ(build_Z(ParabolicTableau({3, {1, 2}})), z3);
  RationalMatrix z2 = RationalMatrix::Zero(2, 2);
  z2(0, 1) = 1;
  EXPECT_EQ(build_Z(ParabolicTableau({2, {1}})), z2);
}

TEST(Constructions, KappaExamples) {
  const ParabolicTableau two({2, {1}});
  EXPECT_EQ(build_kappa(two), tau(Coroot({-1, 1})));
  EXPECT_EQ(window_string(build_kappa(two)), "[-1,4]");
  EXPECT_TRUE(build_sigma(two).is_identity());
  EXPECT_EQ(build_varpi(two), simple_reflection(2, 0));
  const auto f2 = build_factorization(two);
  EXPECT_EQ(f2.w_g, simple_reflection(2, 1));
  EXPECT_TRUE(f2.w_p.is_identity());

  const ParabolicTableau three({3, {1, 2}});
  EXPECT_EQ(matrix_string(build_kappa(three)), "t^2@(1,1) t^-1@(3,2) t^-1@(2,3)");
  EXPECT_EQ(length(build_kappa(three)), 7);
  EXPECT_EQ(length(build_varpi(three)), 4);

  const auto& tab = seventeen();
  EXPECT_EQ(length(build_kappa(tab)), 272);
  EXPECT_EQ(kappa_length_formula(tab), 272);
  EXPECT_EQ(build_kappa(tab), tau(build_q(tab)) * build_sigma(tab));
  EXPECT_EQ(length(tau(build_q(tab))), 216);
  EXPECT_EQ(length(build_sigma(tab)), 56);
}

TEST(Constructions, QExamples) {
  EXPECT_EQ(build_q(ParabolicTableau({2, {1}})), Coroot({-1, 1}));
  EXPECT_EQ(build_q(ParabolicTableau({3, {1, 2}})), Coroot({-2, 1, 1}));
  std::vector<Exponent> q17{-4, -3, -2, -2, 0, 0};
  q17.resize(17, 1);
  EXPECT_EQ(build_q(seventeen()), Coroot(q17));
  EXPECT_EQ(translation_length(Coroot(q17)), 2 * dim_g_mod_p(seventeen()));
}

TEST(Constructions, Verdicts) {
  const auto v17 = verdicts(seventeen());
  EXPECT_TRUE(v17.g_stable);
  EXPECT_TRUE(v17.kappa_minimal_in_WP);
  EXPECT_EQ(v17.kappa_length, 272);
  EXPECT_FALSE(v17.is_compactification);

  EXPECT_TRUE(verdicts(ParabolicTableau({4, {2}})).is_compactification);
  const auto v2 = verdicts(ParabolicTableau({2, {1}}));
  EXPECT_TRUE(v2.g_stable && v2.kappa_minimal_in_WP && v2.is_compactification);
  EXPECT_EQ(v2.kappa_length, 2);
}

TEST(Constructions, PhiAndPsiExamples) {
  const ParabolicTableau three({3, {1, 2}});
  const auto id = RationalMatrix::Identity(3, 3);
  const auto trivial = phi_P({id, RationalMatrix::Zero(3, 3)}, three);
  EXPECT_EQ(trivial.matrix, laurent_identity(3));
  EXPECT_TRUE(trivial.cell.is_identity());

  const auto with_z = phi_P({id, build_Z(three)}, three);
  EXPECT_EQ(with_z.cell, min_coset_rep(build_varpi(three), {1, 2}, Side::Right));
  EXPECT_TRUE(with_z.below_kappa);

  EXPECT_THROW(phi_P({id * 2, build_Z(three)}, three), DomainError);
  EXPECT_THROW(phi_P({id, build_Z(three).transpose()}, three), DomainError);

  EXPECT_TRUE(psi(RationalMatrix::Zero(3, 3)).cell.is_identity());
  const auto p2 = psi(build_Z(ParabolicTableau({2, {1}})));
  EXPECT_EQ(p2.orbit, Coroot({-1, 1}));
  EXPECT_TRUE(p2.orbit_is_bound);
  EXPECT_TRUE(p2.cell_below_bound);
  EXPECT_THROW(psi(RationalMatrix::Identity(2, 2)), DomainError);
}

TEST(Constructions, PsiOfGenericConjugateReachesBound) {
  Rng rng(53);
  const auto z = build_Z(ParabolicTableau({3, {1, 2}}));
  int reached = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_sl(rng, 3, 3);
    const auto result = psi(RationalMatrix(g * z * inverse(g)));
    EXPECT_TRUE(result.cell_below_bound);
    EXPECT_TRUE(result.orbit_is_bound);
    if (result.cell == tau(Coroot({-2, 1, 1}))) ++reached;
  }
  EXPECT_GE(reached, 1);
}

TEST(Constructions, SpringerExamples) {
  const ParabolicTableau three({3, {1, 2}});
  const CotangentPoint pt{RationalMatrix::Identity(3, 3), build_Z(three)};
  EXPECT_EQ(springer_theta(pt), build_Z(three));
  Rng rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const CotangentPoint random{random_sl(rng, 3, 3), build_Z(three)};
    EXPECT_TRUE(springer_commutes(random));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_point(rng, seventeen().descriptor(), 1);
    EXPECT_TRUE(dominance_leq(jordan_type(springer_theta(p)), seventeen().nu()));
  }
}

TEST(ConstructionsProperty, ExhaustiveDescriptorChecks) {
  SuiteOptions options;
  options.max_extract_n = 6;
  options.trials = 3;
  options.seed = 5;
  for (const auto& desc : sweep_descriptors(6)) {
    const auto rep = analyze_descriptor(desc, options);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << to_string(desc) << ' ' << c.name;
    EXPECT_FALSE(rep.laurent_skipped);
  }
}

TEST(ConstructionsProperty, TranslationOrderMatchesDominance) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = partitions_of(n);
    for (const auto& mu : all)
      for (const auto& nu : all)
        EXPECT_EQ(bruhat_leq(tau(q_from_partition(mu, n)), tau(q_from_partition(nu, n))), dominance_leq(mu, nu))
            << mu << " vs " << nu;
  }
}

TEST(ConstructionsProperty, PhiInjectivity) {
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const ParabolicDescriptor desc = trial % 2 ? ParabolicDescriptor{3, {1, 2}} : ParabolicDescriptor{4, {1, 3}};
    const ParabolicTableau tab(desc);
    const auto a = random_point(rng, desc, 2);
    const auto p = random_parabolic(rng, desc, 2);
    // Same coset of P as a, different fibre coordinate.
    CotangentPoint b{RationalMatrix(a.g * p), random_nilradical(rng, desc, 2)};
    const auto pa = phi_P(a, tab);
    const auto pb = phi_P(b, tab);
    const auto quotient = multiply(inverse_of_unimodular(pa.matrix), pb.matrix);
    const bool same_coset = is_member(quotient, Subgroup::parahoric(desc.parabolic_generators()));
    EXPECT_EQ(same_coset, points_equivalent(a, b, desc));
    if (pa.cell != pb.cell) EXPECT_FALSE(same_coset);

    // The equivalent point (g p^{-1}, p Y p^{-1}) lands in the same coset.
    CotangentPoint c{RationalMatrix(a.g * inverse(p)), RationalMatrix(p * a.y * inverse(p))};
    EXPECT_TRUE(points_equivalent(a, c, desc));
    const auto pc = phi_P(c, tab);
    EXPECT_EQ(pc.cell, pa.cell);
    EXPECT_TRUE(is_member(multiply(inverse_of_unimodular(pa.matrix), pc.matrix),
                          Subgroup::parahoric(desc.parabolic_generators())));
  }
}

TEST(ConstructionsProperty, PsiDeterminesN) {
  Rng rng(56);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const auto g = random_sl(rng, n, 2);
    const RationalMatrix nm = g * random_nilradical(rng, ParabolicDescriptor{n, finite_generators(n)}, 2) * inverse(g);
    EXPECT_EQ(psi_reconstruct(psi(nm).matrix), nm);
  }
  auto bad = laurent_identity(2);
  bad(0, 1) = Laurent::t(1);
  EXPECT_THROW(psi_reconstruct(bad), DomainError);
}

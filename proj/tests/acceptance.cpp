// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "affcells/bruhat.hpp"
#include "affcells/cell.hpp"
#include "affcells/constructions.hpp"
#include "affcells/exact_linalg.hpp"
#include "affcells/nilpotent.hpp"
#include "affcells/partition.hpp"
#include "affcells/sampling.hpp"
#include "affcells/tableau.hpp"
#include "oracles.hpp"

using namespace affcells;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

std::vector<ParabolicDescriptor> descriptors_up_to(int max_n, int min_n = 2) {
  std::vector<ParabolicDescriptor> out;
  for (int n = min_n; n <= max_n; ++n) {
    const auto all = ParabolicDescriptor::all_for(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  return out;
}

Outcome worked_example() {
  Outcome o;
  const ParabolicTableau tab({17, {1, 5, 9, 11}});
  o.require(tab.render() ==
                " 1\n 2  3  4  5\n 6  7  8  9\n10 11\n12 13 14 15 16 17\n",
            "tableau rows");
  o.require(tab.nu() == Partition({5, 4, 3, 3, 1, 1}), "nu");
  o.require(tab.red() == std::vector<int>{1, 2, 3, 4, 12, 13}, "Red");
  o.require(tab.m_seq() == std::vector<int>{14, 15, 16, 17, 10, 11, 6, 7, 8, 9, 5}, "m sequence");
  o.require(tab.s1() == std::vector<int>{1, 3, 4, 5, 16, 17}, "S1");
  o.require(tab.f(1, 4) == 10 && tab.f(4, 3) == 15 && tab.f(6, 1) == 17, "f coordinates");
  o.note = o.ok ? "n=17 d=(1,5,9,11)" : o.note;
  return o;
}

Outcome partition_identity() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      ++count;
      o.require(evaluate_partition_identity(p).holds(), "fails for " + to_string(p));
    }
  if (o.ok) o.note = std::to_string(count) + " partitions";
  return o;
}

Outcome translation_length_is_twice_dimension() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& desc : descriptors_up_to(8)) {
    const ParabolicTableau tab(desc);
    const auto q = build_q(tab);
    const auto by_inversions = length(tau(q));
    const auto by_roots = translation_length(q);
    o.require(by_inversions == by_roots && by_roots == 2 * dim_g_mod_p(tab), to_string(desc));
    ++count;
  }
  if (o.ok) o.note = std::to_string(count) + " descriptors";
  return o;
}

Outcome lift_of_varpi() {
  Outcome o;
  auto all = descriptors_up_to(8);
  all.push_back({17, {1, 5, 9, 11}});
  for (const auto& desc : all) {
    const ParabolicTableau tab(desc);
    const auto bc = build_bc(tab);
    const auto product = multiply(multiply(bc.b, one_minus_t_inverse(build_Z(tab))), bc.c);
    o.require(product == build_varpi_tilde(tab), "product identity " + to_string(desc));
    o.require(is_member(bc.b, Subgroup::iwahori()) && is_member(bc.c, Subgroup::iwahori()),
              "Iwahori membership " + to_string(desc));
  }
  if (o.ok) o.note = std::to_string(all.size()) + " descriptors incl. n=17";
  return o;
}

Outcome cell_extraction() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& desc : descriptors_up_to(6)) {
    const ParabolicTableau tab(desc);
    o.require(extract_cell(one_minus_t_inverse(build_Z(tab))) == build_varpi(tab), to_string(desc));
    ++count;
  }
  Rng rng(20240501);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 3;
    const auto w = random_affine_permutation(rng, n, 1 + trial % 10);
    const auto m = multiply(multiply(random_iwahori(rng, n, 4, 3), lift(w)), random_iwahori(rng, n, 4, 3));
    o.require(extract_cell(m) == w, "Iwahori invariance, trial " + std::to_string(trial));
  }
  if (o.ok) o.note = std::to_string(count) + " descriptors, 1000 random double cosets";
  return o;
}

Outcome factorization() {
  Outcome o;
  for (const auto& desc : descriptors_up_to(8)) {
    const ParabolicTableau tab(desc);
    const auto kappa = build_kappa(tab);
    const auto f = build_factorization(tab);
    o.require(build_varpi(tab) == f.w_g * kappa * f.w_p, "varpi = w_g kappa w_p for " + to_string(desc));
    o.require(f.w_g.is_finite() && in_parabolic_weyl_group(f.w_p, desc), "w_g in W, w_p in W_P for " + to_string(desc));
    o.require(kappa == tau(build_q(tab)) * build_sigma(tab), "kappa = tau_q sigma for " + to_string(desc));
  }
  if (o.ok) o.note = "n <= 8";
  return o;
}

Outcome g_stability() {
  Outcome o;
  for (const auto& desc : descriptors_up_to(6)) {
    const auto v = verdicts(ParabolicTableau(desc));
    o.require(v.g_stable, "G-stability for " + to_string(desc));
    o.require(v.kappa_minimal_in_WP, "right S_P descent for " + to_string(desc));
  }
  if (o.ok) o.note = "n <= 6";
  return o;
}

Outcome kappa_length() {
  Outcome o;
  for (const auto& desc : descriptors_up_to(8)) {
    const ParabolicTableau tab(desc);
    o.require(length(build_kappa(tab)) == kappa_length_formula(tab), to_string(desc));
  }
  const ParabolicTableau big({17, {1, 5, 9, 11}});
  const auto l17 = length(build_kappa(big));
  o.require(l17 == 272 && kappa_length_formula(big) == 272, "n=17 value " + std::to_string(l17));
  if (o.ok) o.note = "n <= 8, n=17 gives 272";
  return o;
}

Outcome maximal_parabolics() {
  Outcome o;
  for (const auto& desc : descriptors_up_to(8)) {
    const ParabolicTableau tab(desc);
    const auto l = length(build_kappa(tab));
    const auto twice = 2 * dim_g_mod_p(tab);
    if (tab.r() <= 2) {
      o.require(l == twice, "expected equality for " + to_string(desc));
    } else {
      o.require(l > twice, "expected strict inequality for " + to_string(desc));
    }
  }
  if (o.ok) o.note = "n <= 8";
  return o;
}

Outcome centralizers() {
  Outcome o;
  auto all = descriptors_up_to(8);
  all.push_back({17, {1, 5, 9, 11}});
  for (const auto& desc : all) {
    const ParabolicTableau tab(desc);
    const auto dim = centralizer_dim(build_Z(tab));
    std::int64_t squares = 0;
    for (int l : tab.lambda()) squares += static_cast<std::int64_t>(l) * l;
    std::int64_t mins = 0;
    for (int a : tab.nu().parts())
      for (int b : tab.nu().parts()) mins += std::min(a, b);
    o.require(dim == squares && dim == mins, to_string(desc));
    if (desc.n == 17) o.require(dim == 73, "n=17 value " + std::to_string(dim));
  }
  if (o.ok) o.note = "n <= 8, n=17 gives 73";
  return o;
}

Outcome springer_commutation() {
  Outcome o;
  Rng rng(11);
  std::size_t samples = 0;
  for (const auto& desc : descriptors_up_to(5)) {
    const ParabolicTableau tab(desc);
    for (int trial = 0; trial < 100; ++trial) {
      const auto pt = random_point(rng, desc, 2);
      o.require(springer_commutes(pt), "commutation for " + to_string(desc));
      o.require(dominance_leq(jordan_type(springer_theta(pt)), tab.nu()), "Jordan type for " + to_string(desc));
      ++samples;
    }
  }
  if (o.ok) o.note = std::to_string(samples) + " samples";
  return o;
}

Outcome minimality_witness() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& desc : descriptors_up_to(4)) {
    const ParabolicTableau tab(desc);
    const auto w = find_minimality_witness(tab);
    o.require(w.has_value(), "no witness for " + to_string(desc));
    ++count;
  }
  if (o.ok) o.note = std::to_string(count) + " descriptors";
  return o;
}

Outcome injectivity() {
  Outcome o;
  Rng rng(13);
  const std::vector<ParabolicDescriptor> descs{{3, {1, 2}}, {3, {1}}, {4, {2}}, {4, {1, 3}}, {4, {1, 2, 3}}};
  int collisions = 0;
  int equal_cells = 0;
  for (int trial = 0; trial < 100;) {
    const auto& desc = descs[trial % descs.size()];
    const ParabolicTableau tab(desc);
    const auto a = random_point(rng, desc, 2);
    // Half the trials share the base coset of G/P so that the cells tend to agree.
    CotangentPoint b = trial % 2 ? random_point(rng, desc, 2)
                                 : CotangentPoint{RationalMatrix(a.g * random_parabolic(rng, desc, 2)),
                                                  random_nilradical(rng, desc, 2)};
    if (points_equivalent(a, b, desc)) continue;
    ++trial;
    const auto pa = phi_P(a, tab);
    const auto pb = phi_P(b, tab);
    if (pa.cell != pb.cell) continue;
    ++equal_cells;
    const auto quotient = multiply(inverse_of_unimodular(pa.matrix), pb.matrix);
    if (is_member(quotient, Subgroup::parahoric(desc.parabolic_generators()))) ++collisions;
  }
  o.require(collisions == 0, std::to_string(collisions) + " phi_P collisions");

  int psi_collisions = 0;
  int psi_failures = 0;
  for (int trial = 0; trial < 100;) {
    const int n = 2 + trial % 3;
    const ParabolicDescriptor borel{n, finite_generators(n)};
    const auto g = random_sl(rng, n, 2);
    const RationalMatrix n1 = g * random_nilradical(rng, borel, 2) * inverse(g);
    // Every other pair lies in one orbit so the comparison is not decided by Jordan type alone.
    const auto h = random_sl(rng, n, 2);
    const RationalMatrix n2 = trial % 2 ? RationalMatrix(g * random_nilradical(rng, borel, 2) * inverse(g))
                                        : RationalMatrix(h * n1 * inverse(h));
    if (n1 == n2) continue;
    ++trial;
    const auto p1 = psi(n1);
    const auto p2 = psi(n2);
    if (is_member(multiply(inverse_of_unimodular(p1.matrix), p2.matrix), Subgroup::g0())) ++psi_collisions;
    if (psi_reconstruct(p1.matrix) != n1 || psi_reconstruct(p2.matrix) != n2) ++psi_failures;
  }
  o.require(psi_collisions == 0, std::to_string(psi_collisions) + " psi collisions");
  o.require(psi_failures == 0, std::to_string(psi_failures) + " psi reconstructions failed");
  if (o.ok)
    o.note = "100 distinct pairs each; phi_P: " + std::to_string(equal_cells) + " equal-cell pairs, 0 collisions; psi: 0 collisions";
  return o;
}

Outcome bruhat_oracle() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto elements = oracle::ball(n, 8);
    for (const auto& w : elements) {
      const auto below = oracle::subword_products(n, reduced_word(w));
      for (const auto& v : elements) {
        ++pairs;
        if (bruhat_leq(v, w) != (below.count(v) == 1)) {
          o.require(false, "disagreement at " + window_string(v) + " vs " + window_string(w));
        }
      }
    }
  }
  if (o.ok) o.note = std::to_string(pairs) + " pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked tableau example", worked_example},
      {"partition identity, n <= 12", partition_identity},
      {"l(tau_q) = 2 dim G/P", translation_length_is_twice_dimension},
      {"b (1 - t^-1 Z) c lifts varpi, b and c Iwahori", lift_of_varpi},
      {"cell of 1 - t^-1 Z is varpi; Iwahori invariance", cell_extraction},
      {"varpi = w_g kappa w_p and kappa = tau_q sigma", factorization},
      {"G-stability and kappa minimal in its coset", g_stability},
      {"length formula for kappa", kappa_length},
      {"l(kappa) = 2 dim G/P iff at most two rows", maximal_parabolics},
      {"centralizer dimension of Z", centralizers},
      {"Springer square commutes", springer_commutation},
      {"minimality witness for kappa", minimality_witness},
      {"injectivity of phi_P and psi", injectivity},
      {"Bruhat order against subword oracle", bruhat_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.note = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    failed += outcome.ok ? 0 : 1;
    std::printf("criterion %2zu %s  %-52s %8.2f s  %s\n", i + 1, outcome.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), elapsed.count(), outcome.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "affcells/check_suite.hpp"

#include <algorithm>
#include <random>

#include "affcells/cell.hpp"
#include "affcells/nilpotent.hpp"
#include "affcells/sampling.hpp"

namespace affcells {

bool DescriptorReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<std::string> DescriptorReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name;
  return std::nullopt;
}

namespace {

bool tableau_invariants_hold(const ParabolicTableau& tab) {
  std::vector<int> sorted_lambda = tab.lambda();
  if (tab.nu() != conjugate(partition_from_unsorted(sorted_lambda))) return false;
  for (int k = 1; k <= tab.r(); ++k) {
    if (tab.red_of_row(k).size() != tab.s1_of_row(k).size()) return false;
    if (tab.blue_of_row(k).size() != tab.s2_of_row(k).size()) return false;
    for (int x : tab.red_of_row(k))
      for (int y : tab.blue_of_row(k))
        if (x >= y) return false;
  }
  for (int i = 1; i <= tab.s(); ++i)
    if (tab.row_of(tab.f(i, 1)) != tab.row_of(tab.l(i))) return false;
  for (std::size_t i = 0; i < tab.m_seq().size(); ++i)
    if (tab.row_of(tab.m_seq()[i]) != tab.row_of(tab.t_seq()[i])) return false;
  return std::is_sorted(tab.l_seq().begin(), tab.l_seq().end());
}

std::int64_t min_double_sum(const Partition& nu) {
  std::int64_t total = 0;
  for (int i : nu.parts())
    for (int j : nu.parts()) total += std::min(i, j);
  return total;
}

}  // namespace

DescriptorReport analyze_descriptor(const ParabolicDescriptor& desc, const SuiteOptions& options) {
  const ParabolicTableau tab(desc);
  DescriptorReport rep;
  rep.descriptor = desc;
  rep.lambda = tab.lambda();
  rep.nu = tab.nu();
  rep.dim_g_mod_p = dim_g_mod_p(tab);
  rep.kappa = build_kappa(tab);
  rep.varpi = build_varpi(tab);
  rep.sigma = build_sigma(tab);
  rep.q = build_q(tab);
  rep.tau_q = tau(rep.q);
  const auto fac = build_factorization(tab);
  rep.w_g = fac.w_g;
  rep.w_p = fac.w_p;
  rep.length_kappa = length(rep.kappa);
  rep.length_tau_q = length(rep.tau_q);
  rep.length_sigma = length(rep.sigma);
  rep.verdict = verdicts(tab);

  auto check = [&rep](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("tableau_invariants", tableau_invariants_hold(tab));
  check("tau_q_length", rep.length_tau_q == translation_length(rep.q) && rep.length_tau_q == 2 * rep.dim_g_mod_p,
        "l(tau_q)=" + std::to_string(rep.length_tau_q));
  check("kappa_is_tau_q_sigma", rep.kappa == rep.tau_q * rep.sigma);
  check("kappa_length_additive", rep.length_kappa == rep.length_tau_q + rep.length_sigma);
  check("kappa_length_formula", rep.verdict.kappa_length == rep.verdict.kappa_length_formula,
        std::to_string(rep.verdict.kappa_length) + " vs " + std::to_string(rep.verdict.kappa_length_formula));
  check("varpi_factorization",
        rep.varpi == rep.w_g * rep.kappa * rep.w_p && rep.w_g.is_finite() && in_parabolic_weyl_group(rep.w_p, desc));
  check("g_stable", rep.verdict.g_stable);
  check("kappa_minimal_in_WP", rep.verdict.kappa_minimal_in_WP);
  check("compactification_iff_two_rows", rep.verdict.compactification_matches_rows);

  const auto z = build_Z(tab);
  check("Z_in_nilradical", in_nilradical_by_blocks(z, desc) && in_nilradical_by_flag(z, desc));
  check("Z_jordan_type", jordan_type(z) == tab.nu());
  const auto cdim = centralizer_dim(z);
  std::int64_t lambda_squares = 0;
  for (int l : tab.lambda()) lambda_squares += static_cast<std::int64_t>(l) * l;
  check("centralizer_dim", cdim == lambda_squares && cdim == min_double_sum(tab.nu()),
        "dim C(Z)=" + std::to_string(cdim));

  const auto bc = build_bc(tab);
  const std::size_t estimate = (term_count(bc.b) + term_count(bc.c) + static_cast<std::size_t>(desc.n)) * desc.n;
  if (estimate > options.term_budget) {
    rep.laurent_skipped = true;
  } else {
    const auto varpi_tilde = build_varpi_tilde(tab);
    const auto loop = one_minus_t_inverse(z);
    check("b_c_iwahori", is_member(bc.b, Subgroup::iwahori()) && is_member(bc.c, Subgroup::iwahori()));
    check("b_loop_c_is_varpi_tilde", multiply(multiply(bc.b, loop), bc.c) == varpi_tilde);
    check("apm_varpi_tilde", apm(varpi_tilde) == rep.varpi);
    if (desc.n <= options.max_extract_n) check("cell_of_loop_is_varpi", extract_cell(loop) == rep.varpi);
  }

  if (options.trials > 0) {
    Rng rng(descriptor_seed(options.seed, desc));
    bool commutes = true;
    bool dominated = true;
    for (int k = 0; k < options.trials; ++k) {
      const auto pt = random_point(rng, desc, 2);
      commutes = commutes && springer_commutes(pt);
      dominated = dominated && dominance_leq(jordan_type(springer_theta(pt)), tab.nu());
    }
    check("springer_commutation", commutes);
    check("springer_jordan_dominated", dominated);
  }
  return rep;
}

Json report_to_json(const DescriptorReport& rep) {
  Json doc;
  doc["descriptor"] = {{"n", rep.descriptor.n}, {"d", rep.descriptor.d}};
  doc["lambda"] = rep.lambda;
  doc["nu"] = rep.nu.parts();
  doc["dim_g_mod_p"] = rep.dim_g_mod_p;
  doc["kappa"] = {{"window", rep.kappa.window()}, {"matrix", matrix_string(rep.kappa)}};
  doc["varpi"] = {{"window", rep.varpi.window()}, {"matrix", matrix_string(rep.varpi)}};
  doc["tau_q"] = {{"q", rep.q.values()}, {"window", rep.tau_q.window()}, {"matrix", matrix_string(rep.tau_q)}};
  doc["sigma"] = {{"window", rep.sigma.window()}, {"matrix", matrix_string(rep.sigma)}};
  doc["w_g"] = {{"window", rep.w_g.window()}, {"matrix", matrix_string(rep.w_g)}};
  doc["w_p"] = {{"window", rep.w_p.window()}, {"matrix", matrix_string(rep.w_p)}};
  doc["lengths"] = {{"kappa", rep.length_kappa},
                    {"tau_q", rep.length_tau_q},
                    {"sigma", rep.length_sigma},
                    {"kappa_formula", rep.verdict.kappa_length_formula}};
  doc["verdicts"] = {{"g_stable", rep.verdict.g_stable},
                     {"kappa_minimal_in_WP", rep.verdict.kappa_minimal_in_WP},
                     {"kappa_length", rep.verdict.kappa_length},
                     {"is_compactification", rep.verdict.is_compactification}};
  Json checks = Json::object();
  for (const auto& c : rep.checks) checks[c.name] = c.passed;
  doc["checks"] = std::move(checks);
  doc["status"] = rep.passed() ? (rep.laurent_skipped ? "SKIPPED" : "PASS") : "FAIL";
  return doc;
}

std::vector<ParabolicDescriptor> sweep_descriptors(int max_n) {
  std::vector<ParabolicDescriptor> out;
  for (int n = 2; n <= max_n; ++n) {
    auto all = ParabolicDescriptor::all_for(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  return out;
}

std::uint64_t descriptor_seed(std::uint64_t seed, const ParabolicDescriptor& desc) {
  std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                      static_cast<std::uint32_t>(desc.n)};
  for (int x : desc.d) material.push_back(static_cast<std::uint32_t>(x));
  std::seed_seq seq(material.begin(), material.end());
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace affcells

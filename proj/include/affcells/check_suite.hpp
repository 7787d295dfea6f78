#pragma once

// Per-descriptor verification: builds every construction for one parabolic and
// checks the identities relating them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affcells/affine_permutation.hpp"
#include "affcells/constructions.hpp"
#include "affcells/serialization.hpp"
#include "affcells/tableau.hpp"

namespace affcells {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  /// Laurent checks are skipped when the estimated product size exceeds this many terms.
  std::size_t term_budget = 250000;
  /// Largest n for which the cell of 1 - t^{-1} Z is extracted.
  int max_extract_n = 8;
  /// Random (g, Y) samples for the Springer commutation check.
  int trials = 0;
  std::uint64_t seed = 0;
};

struct DescriptorReport {
  ParabolicDescriptor descriptor;
  std::vector<int> lambda;
  Partition nu;
  std::int64_t dim_g_mod_p = 0;
  AffinePermutation kappa;
  AffinePermutation varpi;
  AffinePermutation sigma;
  AffinePermutation tau_q;
  AffinePermutation w_g;
  AffinePermutation w_p;
  Coroot q;
  std::int64_t length_kappa = 0;
  std::int64_t length_tau_q = 0;
  std::int64_t length_sigma = 0;
  Verdicts verdict;
  std::vector<CheckResult> checks;
  /// Set when the Laurent checks were not run because of the term budget.
  bool laurent_skipped = false;

  bool passed() const;
  /// Name of the first failing check, if any.
  std::optional<std::string> first_failure() const;
};

DescriptorReport analyze_descriptor(const ParabolicDescriptor& desc, const SuiteOptions& options);

/// {descriptor, lambda, nu, dim_g_mod_p, kappa: {window, matrix}, varpi, tau_q,
///  lengths: {kappa, tau_q, sigma}, checks: {...}, status}.
Json report_to_json(const DescriptorReport& report);

/// Every descriptor with 2 <= n <= max_n, in (n, d) order.
std::vector<ParabolicDescriptor> sweep_descriptors(int max_n);

/// Seed for one descriptor, derived from the run seed and the descriptor only.
std::uint64_t descriptor_seed(std::uint64_t seed, const ParabolicDescriptor& desc);

}  // namespace affcells

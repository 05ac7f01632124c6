#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ucplab/cnf.hpp"

namespace ucplab {

struct SeparationConfig {
  std::vector<int> n_values;
  int k_offset = 0;  // k = floor(n/2) + k_offset
  int s = 5;
  std::uint64_t seed = 42;
};

struct BoundFlags {
  std::uint64_t lower_bound = 0;  // n * C(n-1, k, k-1), exact or counting bound
  bool used_exact_oracle = false;
  bool lower_bound_ok = false;
  bool size_consistent = true;  // |phi*| == (k+1) |H**| when hypergraph-built
};

// Lower-bound and size-consistency flags for a formula claimed
// ucp-equivalent to psi(n, k). The exact covering oracle is used when it can
// run (n-1 <= 9); otherwise the counting bound stands in.
BoundFlags verify_bounds_row(int n, int k, const CnfFormula& phi_star,
                             std::optional<std::size_t> hstar_size = {});

struct SeparationRow {
  int n = 0;
  int k = 0;
  std::uint64_t phi_ell_size = 0;
  std::uint64_t phi_star_size = 0;
  double ratio = 0.0;
  BoundFlags bounds;
  bool ell_irredundant = false;
  bool ell_equivalent = false;
  bool star_equiv_graphs = false;
  std::optional<bool> star_equiv_absorption;  // checked only for n <= 10
  std::string error;  // non-empty when the row failed to build

  // build metadata for the sidecar
  std::uint64_t cover_size = 0;
  std::uint64_t union_size = 0;
  std::uint64_t bad_sets = 0;
  std::uint64_t added_edges = 0;
  std::uint64_t final_size = 0;
  double millis = 0.0;

  bool ok() const;
};

struct SeparationResult {
  SeparationConfig config;
  std::vector<SeparationRow> rows;
  bool ratios_strictly_increasing = true;

  bool all_ok() const;
};

SeparationResult run_separation(const SeparationConfig& config);

// CSV with header n,k,phi_ell,phi_star,ratio,lower_bound,checks; deterministic
// for a fixed config.
void write_csv(const SeparationResult& result, std::ostream& out);

// JSON sidecar with seeds and timings.
void write_json_sidecar(const SeparationResult& result, std::ostream& out);

}  // namespace ucplab

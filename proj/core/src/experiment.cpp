#include "ucplab/experiment.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

#include "ucplab/covering.hpp"
#include "ucplab/equivalence.hpp"
#include "ucplab/rand_builder.hpp"
#include "ucplab/subsets.hpp"
#include "ucplab/symmetric.hpp"

namespace ucplab {

namespace {

constexpr int kDirectAbsorptionCeiling = 10;

SeparationRow build_row(int n, int k, int s, std::uint64_t seed) {
  SeparationRow row;
  row.n = n;
  row.k = k;
  const auto start = std::chrono::steady_clock::now();
  try {
    const CnfFormula ell = phi_ell(n, k);
    row.phi_ell_size = ell.size();

    const BuildResult build = build_connected_restrictions(n, k, s, seed);
    const CnfFormula star = theta(build.hypergraph);
    row.phi_star_size = star.size();
    row.cover_size = build.cover.blocks.size();
    row.union_size = build.report.union_size;
    row.bad_sets = build.report.bad_sets.size();
    row.added_edges = build.report.added.size();
    row.final_size = build.hypergraph.size();

    row.ell_irredundant = is_ucp_irredundant(ell);
    bool ell_equiv = is_ucp_equiv_to_psi_via_graphs(ell);
    row.star_equiv_graphs = is_ucp_equiv_to_psi_via_graphs(star);
    if (n <= kDirectAbsorptionCeiling) {
      const CnfFormula full = psi(n, k);
      ell_equiv = ell_equiv && ucp_equivalent(ell, full);
      row.star_equiv_absorption = ucp_equivalent(star, full);
    }
    row.ell_equivalent = ell_equiv;
    row.bounds = verify_bounds_row(n, k, star, build.hypergraph.size());
    row.ratio = static_cast<double>(row.phi_ell_size) / static_cast<double>(row.phi_star_size);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

}  // namespace

bool SeparationRow::ok() const {
  return error.empty() && ell_irredundant && ell_equivalent && star_equiv_graphs &&
         star_equiv_absorption.value_or(true) && bounds.lower_bound_ok && bounds.size_consistent;
}

bool SeparationResult::all_ok() const {
  for (const SeparationRow& row : rows) {
    if (!row.ok()) return false;
  }
  return true;
}

BoundFlags verify_bounds_row(int n, int k, const CnfFormula& phi_star,
                             std::optional<std::size_t> hstar_size) {
  BoundFlags flags;
  std::uint64_t cover_low;
  if (n - 1 <= 9) {
    cover_low = static_cast<std::uint64_t>(exact_cover_number(n - 1, k, k - 1));
    flags.used_exact_oracle = true;
  } else {
    // counting bound: C(n-1, k, k-1) >= binom(n-1, k-1) / k
    cover_low = ceil_div(binom(n - 1, k - 1), static_cast<std::uint64_t>(k));
  }
  flags.lower_bound = static_cast<std::uint64_t>(n) * cover_low;
  flags.lower_bound_ok = phi_star.size() >= flags.lower_bound;
  if (hstar_size) {
    flags.size_consistent =
        phi_star.size() == static_cast<std::size_t>(k + 1) * (*hstar_size);
  }
  return flags;
}

SeparationResult run_separation(const SeparationConfig& config) {
  SeparationResult result;
  result.config = config;
  std::vector<int> ns = config.n_values;
  std::sort(ns.begin(), ns.end());
  for (int n : ns) {
    const int k = n / 2 + config.k_offset;
    result.rows.push_back(build_row(n, k, config.s, config.seed));
  }
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (!(result.rows[i].ratio > result.rows[i - 1].ratio)) {
      result.ratios_strictly_increasing = false;
    }
  }
  return result;
}

void write_csv(const SeparationResult& result, std::ostream& out) {
  out << "n,k,phi_ell,phi_star,ratio,lower_bound,checks\n";
  char ratio_buf[32];
  for (const SeparationRow& row : result.rows) {
    std::snprintf(ratio_buf, sizeof(ratio_buf), "%.6f", row.ratio);
    out << row.n << ',' << row.k << ',' << row.phi_ell_size << ',' << row.phi_star_size << ','
        << ratio_buf << ',' << row.bounds.lower_bound << ',';
    if (!row.error.empty()) {
      out << "error";
    } else {
      out << "ell_irred=" << (row.ell_irredundant ? 1 : 0)
          << ";ell_equiv=" << (row.ell_equivalent ? 1 : 0)
          << ";star_equiv_graph=" << (row.star_equiv_graphs ? 1 : 0) << ";star_equiv_ucp="
          << (row.star_equiv_absorption ? (*row.star_equiv_absorption ? "1" : "0") : "na")
          << ";lower_bound_ok=" << (row.bounds.lower_bound_ok ? 1 : 0)
          << ";size_ok=" << (row.bounds.size_consistent ? 1 : 0);
    }
    out << '\n';
  }
}

void write_json_sidecar(const SeparationResult& result, std::ostream& out) {
  nlohmann::json j;
  j["config"] = {{"n", result.config.n_values},
                 {"kOffset", result.config.k_offset},
                 {"s", result.config.s},
                 {"seed", result.config.seed}};
  j["ratiosStrictlyIncreasing"] = result.ratios_strictly_increasing;
  j["rows"] = nlohmann::json::array();
  for (const SeparationRow& row : result.rows) {
    nlohmann::json r = {{"n", row.n},
                        {"k", row.k},
                        {"phiEll", row.phi_ell_size},
                        {"phiStar", row.phi_star_size},
                        {"ratio", row.ratio},
                        {"lowerBound", row.bounds.lower_bound},
                        {"usedExactOracle", row.bounds.used_exact_oracle},
                        {"coverSize", row.cover_size},
                        {"unionSize", row.union_size},
                        {"badSets", row.bad_sets},
                        {"addedEdges", row.added_edges},
                        {"finalSize", row.final_size},
                        {"millis", row.millis},
                        {"ok", row.ok()}};
    if (!row.error.empty()) r["error"] = row.error;
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(2) << '\n';
}

}  // namespace ucplab

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ucplab/cnf.hpp"

namespace ucplab {

// Fixed point of unit clause propagation: either a consistent set of derived
// literals (including the unit clauses of the formula and the assumptions),
// or the contradiction marker.
struct UcpOutcome {
  bool contradiction = false;
  std::vector<Lit> literals;  // canonical order; empty when contradiction

  bool derives(Lit l) const;

  friend bool operator==(const UcpOutcome&, const UcpOutcome&) = default;
};

struct UcpOptions {
  // When set, the propagation queue is served in a seeded random order. The
  // fixed point is schedule-independent; the order-independence tests rely
  // on this hook.
  std::optional<std::uint64_t> shuffle_seed;
};

// Counter-based propagation engine over one immutable formula. Occurrence
// lists are built once; run() resets per-invocation scratch and is linear in
// the clauses it touches. One instance is not safe for concurrent use, but
// distinct instances over the same formula are.
class Propagator {
 public:
  explicit Propagator(const CnfFormula& formula);

  // disabled_clause: index of one clause to ignore (-1 for none).
  // enabled: optional per-clause mask; false entries are ignored entirely.
  UcpOutcome run(std::span<const Lit> assumptions = {}, int disabled_clause = -1,
                 const std::vector<bool>* enabled = nullptr, const UcpOptions& options = {});

  const CnfFormula& formula() const { return *formula_; }

 private:
  const CnfFormula* formula_;
  int num_vars_;
  // occurrence lists in CSR form, indexed by literal
  std::vector<int> occ_start_;
  std::vector<int> occ_;
  std::vector<int> base_len_;
  std::vector<int> base_sum_;
  std::vector<int> unit_clauses_;
  std::vector<int> empty_clauses_;
  // per-run scratch
  std::vector<signed char> val_;
  std::vector<int> len_;
  std::vector<int> sum_;
  std::vector<Lit> queue_;
};

UcpOutcome ucp(const CnfFormula& f, const UcpOptions& options = {});
UcpOutcome ucp_with_assumptions(const CnfFormula& f, const PartialAssignment& alpha,
                                const UcpOptions& options = {});

// Removes clauses satisfied by alpha and erases falsified literals from the
// rest. May introduce the empty clause. UCP(f && alpha) equals
// UCP(simplify(f, alpha) && alpha).
CnfFormula simplify(const CnfFormula& f, const PartialAssignment& alpha);

}  // namespace ucplab

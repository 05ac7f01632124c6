#pragma once

#include "ucplab/cnf.hpp"
#include "ucplab/ucp.hpp"

namespace ucplab {

// C is absorbed by f when, for every literal l of C, propagating the
// negations of C \ {l} on f derives l or a contradiction. C must be
// non-empty (the clause invariant already rules out tautologies).
bool is_absorbed(const Clause& c, const CnfFormula& f);

// Decides absorbed <=_ucp absorber, i.e. every clause of `absorbed` is
// absorbed by `absorber`. Both formulas must share the variable universe.
bool absorbs(const CnfFormula& absorber, const CnfFormula& absorbed);

// Mutual absorption.
bool ucp_equivalent(const CnfFormula& a, const CnfFormula& b);

// No clause is absorbed by the remaining ones.
bool is_ucp_irredundant(const CnfFormula& f);

enum class RemovalOrder {
  longest_first,   // default: descending clause length, ties in canonical order
  shortest_first,
  canonical,
};

// Greedy removal of absorbed clauses to a fixed point. The result is a
// subset of f, ucp-equivalent to f and ucp-irredundant. Different orders can
// yield different (all valid) cores.
CnfFormula irredundant_core(const CnfFormula& f, RemovalOrder order = RemovalOrder::longest_first);

// Replaces every clause by a prime sub-implicate, shrinking greedily in
// canonical literal order. Requires f to be propagation complete (the
// implicate test runs UCP on f itself); throws std::invalid_argument when a
// clause is not even an implicate of f.
CnfFormula primify(const CnfFormula& f);

}  // namespace ucplab

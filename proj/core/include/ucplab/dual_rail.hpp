#pragma once

#include "ucplab/cnf.hpp"

namespace ucplab {

// A CNF formula in which every clause has at most one positive literal.
class HornFormula {
 public:
  explicit HornFormula(CnfFormula f);

  const CnfFormula& formula() const { return formula_; }

  friend bool operator==(const HornFormula&, const HornFormula&) = default;

 private:
  CnfFormula formula_;
};

// Rail variable numbering for a base formula on n variables:
// [[x_i]] -> i and [[not x_i]] -> n + i.
int rail_var(Lit base_literal, int base_num_vars);

// Implicational dual rail encoding. For every clause l_1 v ... v l_k of f it
// emits the k definite Horn clauses ([[not l_j]] for j != i) -> [[l_i]], plus
// one binary clause (not [[x_i]] v not [[not x_i]]) per base variable. The
// result has ||f|| + n clauses over 2n rail variables. f must not contain
// the empty clause.
HornFormula idr(const CnfFormula& f);

// Does every model of psi satisfy c? Decided by positive unit forward
// chaining, which is complete for Horn formulas.
bool horn_implies(const HornFormula& psi, const Clause& c);

// Mutual implication of all clauses.
bool horn_equivalent(const HornFormula& a, const HornFormula& b);

}  // namespace ucplab

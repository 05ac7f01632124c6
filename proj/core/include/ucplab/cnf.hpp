#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ucplab {

// A literal in DIMACS convention: code +v stands for x_v, code -v for its
// negation, v >= 1. Negation is an involution by construction.
struct Lit {
  int code = 0;

  Lit() = default;
  constexpr explicit Lit(int dimacs_code) : code(dimacs_code) {}

  constexpr int var() const { return code < 0 ? -code : code; }
  constexpr bool positive() const { return code > 0; }
  constexpr Lit operator-() const { return Lit(-code); }

  friend constexpr bool operator==(Lit, Lit) = default;
  // Canonical order: by variable, positive literal before negative.
  friend constexpr std::strong_ordering operator<=>(Lit a, Lit b) {
    if (a.var() != b.var()) return a.var() <=> b.var();
    return (a.positive() ? 0 : 1) <=> (b.positive() ? 0 : 1);
  }
};

// A clause is a set of literals on pairwise distinct variables, kept in
// canonical order. The default-constructed clause is the empty clause.
// Tautological literal pairs are rejected.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);
  Clause(std::initializer_list<int> dimacs_codes);

  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }
  std::span<const Lit> lits() const { return lits_; }
  bool contains(Lit l) const;
  bool contains_var(int v) const;
  Clause without(Lit l) const;

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Lit> lits_;
};

// A CNF formula: a set of clauses over variables 1..num_vars. Duplicate
// clauses collapse on insertion; the clause list stays canonically sorted.
class CnfFormula {
 public:
  explicit CnfFormula(int num_vars);
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  void add_clause(Clause c);
  bool contains(const Clause& c) const;

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return clauses_.size(); }
  std::size_t length() const { return length_; }
  bool has_empty_clause() const;

  std::span<const Clause> clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }
  CnfFormula without_clause(std::size_t index) const;

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  void check_clause(const Clause& c) const;

  int num_vars_ = 0;
  std::size_t length_ = 0;
  std::vector<Clause> clauses_;
};

struct FormulaStats {
  std::size_t size = 0;    // |phi|, number of clauses
  std::size_t length = 0;  // ||phi||, sum of clause lengths

  friend bool operator==(const FormulaStats&, const FormulaStats&) = default;
};

FormulaStats formula_length(const CnfFormula& f);

// A consistent set of literals, used as a conjunction of unit clauses.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::vector<Lit> lits);
  PartialAssignment(std::initializer_list<int> dimacs_codes);

  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }
  std::span<const Lit> lits() const { return lits_; }
  bool contains(Lit l) const;

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::vector<Lit> lits_;
};

// neg(C): the conjunction of the negations of the literals of C.
PartialAssignment negate_clause(const Clause& c);
// neg(C \ {l})
PartialAssignment negate_clause_except(const Clause& c, Lit l);

}  // namespace ucplab

#include "ucplab/cnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucplab {

namespace {

std::vector<Lit> normalize_lits(std::vector<Lit> lits, const char* what) {
  for (Lit l : lits) {
    if (l.var() < 1) throw std::invalid_argument(std::string(what) + ": literal on variable < 1");
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var() == lits[i - 1].var()) {
      throw std::invalid_argument(std::string(what) + ": complementary pair on variable " +
                                  std::to_string(lits[i].var()));
    }
  }
  return lits;
}

std::vector<Lit> from_codes(std::initializer_list<int> codes) {
  std::vector<Lit> lits;
  lits.reserve(codes.size());
  for (int c : codes) lits.push_back(Lit(c));
  return lits;
}

}  // namespace

Clause::Clause(std::vector<Lit> lits) : lits_(normalize_lits(std::move(lits), "Clause")) {}

Clause::Clause(std::initializer_list<int> dimacs_codes) : Clause(from_codes(dimacs_codes)) {}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::contains_var(int v) const {
  return contains(Lit(v)) || contains(Lit(-v));
}

Clause Clause::without(Lit l) const {
  std::vector<Lit> rest;
  rest.reserve(lits_.size());
  for (Lit x : lits_) {
    if (x != l) rest.push_back(x);
  }
  Clause c;
  c.lits_ = std::move(rest);
  return c;
}

CnfFormula::CnfFormula(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("CnfFormula: negative variable count");
}

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses) : CnfFormula(num_vars) {
  for (const Clause& c : clauses) check_clause(c);
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  clauses_ = std::move(clauses);
  for (const Clause& c : clauses_) length_ += c.size();
}

void CnfFormula::check_clause(const Clause& c) const {
  for (Lit l : c) {
    if (l.var() > num_vars_) {
      throw std::invalid_argument("CnfFormula: variable " + std::to_string(l.var()) +
                                  " exceeds declared count " + std::to_string(num_vars_));
    }
  }
}

void CnfFormula::add_clause(Clause c) {
  check_clause(c);
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
  if (it != clauses_.end() && *it == c) return;
  length_ += c.size();
  clauses_.insert(it, std::move(c));
}

bool CnfFormula::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool CnfFormula::has_empty_clause() const {
  return !clauses_.empty() && clauses_.front().empty();
}

CnfFormula CnfFormula::without_clause(std::size_t index) const {
  CnfFormula out(num_vars_);
  out.clauses_.reserve(clauses_.size() - 1);
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i == index) continue;
    out.length_ += clauses_[i].size();
    out.clauses_.push_back(clauses_[i]);
  }
  return out;
}

FormulaStats formula_length(const CnfFormula& f) {
  return FormulaStats{f.size(), f.length()};
}

PartialAssignment::PartialAssignment(std::vector<Lit> lits)
    : lits_(normalize_lits(std::move(lits), "PartialAssignment")) {}

PartialAssignment::PartialAssignment(std::initializer_list<int> dimacs_codes)
    : PartialAssignment(from_codes(dimacs_codes)) {}

bool PartialAssignment::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

PartialAssignment negate_clause(const Clause& c) {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c) lits.push_back(-l);
  return PartialAssignment(std::move(lits));
}

PartialAssignment negate_clause_except(const Clause& c, Lit l) {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit x : c) {
    if (x != l) lits.push_back(-x);
  }
  return PartialAssignment(std::move(lits));
}

}  // namespace ucplab

#include "ucplab/dual_rail.hpp"

#include <stdexcept>

namespace ucplab {

HornFormula::HornFormula(CnfFormula f) : formula_(std::move(f)) {
  for (const Clause& c : formula_) {
    int positives = 0;
    for (Lit l : c) {
      if (l.positive()) ++positives;
    }
    if (positives > 1) throw std::invalid_argument("HornFormula: clause with two positive literals");
  }
}

int rail_var(Lit base_literal, int base_num_vars) {
  return base_literal.positive() ? base_literal.var() : base_num_vars + base_literal.var();
}

HornFormula idr(const CnfFormula& f) {
  if (f.has_empty_clause()) throw std::invalid_argument("idr: formula contains the empty clause");
  const int n = f.num_vars();
  std::vector<Clause> clauses;
  clauses.reserve(f.length() + static_cast<std::size_t>(n));
  for (const Clause& c : f) {
    for (Lit head : c) {
      std::vector<Lit> lits;
      lits.reserve(c.size());
      lits.push_back(Lit(rail_var(head, n)));
      for (Lit body : c) {
        if (body == head) continue;
        lits.push_back(Lit(-rail_var(-body, n)));
      }
      clauses.emplace_back(std::move(lits));
    }
  }
  for (int v = 1; v <= n; ++v) {
    clauses.push_back(Clause{-v, -(n + v)});
  }
  return HornFormula(CnfFormula(2 * n, std::move(clauses)));
}

bool horn_implies(const HornFormula& psi, const Clause& c) {
  const CnfFormula& f = psi.formula();
  const int n = f.num_vars();

  // Definite clauses become rules body -> head; purely negative clauses are
  // constraints violated once all their variables are derived.
  struct Rule {
    int head = 0;
    int pending = 0;
  };
  std::vector<Rule> rules;
  std::vector<std::vector<int>> watched(n + 1);  // var -> rules with var in body
  std::vector<const Clause*> constraints;

  for (const Clause& cl : f) {
    int head = 0;
    for (Lit l : cl) {
      if (l.positive()) head = l.var();
    }
    if (head == 0) {
      constraints.push_back(&cl);
      continue;
    }
    Rule r;
    r.head = head;
    for (Lit l : cl) {
      if (!l.positive()) ++r.pending;
    }
    const int id = static_cast<int>(rules.size());
    rules.push_back(r);
    for (Lit l : cl) {
      if (!l.positive()) watched[l.var()].push_back(id);
    }
  }

  std::vector<char> fact(n + 1, 0);
  std::vector<int> queue;
  const auto derive = [&](int v) {
    if (!fact[v]) {
      fact[v] = 1;
      queue.push_back(v);
    }
  };

  std::vector<int> forbidden;
  for (Lit l : c) {
    if (l.var() > n) throw std::invalid_argument("horn_implies: clause variable out of range");
    if (l.positive()) {
      forbidden.push_back(l.var());
    } else {
      derive(l.var());
    }
  }
  for (const Rule& r : rules) {
    if (r.pending == 0) derive(r.head);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int id : watched[v]) {
      if (--rules[id].pending == 0) derive(rules[id].head);
    }
  }

  for (int v : forbidden) {
    if (fact[v]) return true;
  }
  for (const Clause* cl : constraints) {
    bool all = true;
    for (Lit l : *cl) {
      if (!fact[l.var()]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool horn_equivalent(const HornFormula& a, const HornFormula& b) {
  if (a.formula().num_vars() != b.formula().num_vars()) {
    throw std::invalid_argument("horn_equivalent: different variable universes");
  }
  for (const Clause& c : b.formula()) {
    if (!horn_implies(a, c)) return false;
  }
  for (const Clause& c : a.formula()) {
    if (!horn_implies(b, c)) return false;
  }
  return true;
}

}  // namespace ucplab

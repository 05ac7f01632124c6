#include "ucplab/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ucplab {

namespace {

bool absorbed_by(Propagator& p, const Clause& c, int disabled_clause,
                 const std::vector<bool>* enabled) {
  if (c.empty()) {
    // The empty clause forces UCP(f && alpha) to the contradiction for every
    // alpha; it is absorbed only by formulas on which UCP already fails.
    return p.run({}, disabled_clause, enabled).contradiction;
  }
  std::vector<Lit> assumptions(c.size() - 1);
  for (Lit l : c) {
    std::size_t j = 0;
    for (Lit x : c) {
      if (x != l) assumptions[j++] = -x;
    }
    const UcpOutcome out = p.run(assumptions, disabled_clause, enabled);
    if (out.contradiction) continue;
    if (!out.derives(l)) return false;
  }
  return true;
}

void require_same_universe(const CnfFormula& a, const CnfFormula& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("formulas live on different variable universes");
  }
}

bool is_implicate(Propagator& p, const Clause& c) {
  std::vector<Lit> assumptions;
  assumptions.reserve(c.size());
  for (Lit l : c) assumptions.push_back(-l);
  const UcpOutcome out = p.run(assumptions);
  if (out.contradiction) return true;
  for (Lit l : c) {
    if (out.derives(l)) return true;
  }
  return false;
}

}  // namespace

bool is_absorbed(const Clause& c, const CnfFormula& f) {
  if (c.empty()) throw std::invalid_argument("is_absorbed: empty clause");
  Propagator p(f);
  return absorbed_by(p, c, -1, nullptr);
}

bool absorbs(const CnfFormula& absorber, const CnfFormula& absorbed) {
  require_same_universe(absorber, absorbed);
  Propagator p(absorber);
  for (const Clause& c : absorbed) {
    if (!absorbed_by(p, c, -1, nullptr)) return false;
  }
  return true;
}

bool ucp_equivalent(const CnfFormula& a, const CnfFormula& b) {
  return absorbs(b, a) && absorbs(a, b);
}

bool is_ucp_irredundant(const CnfFormula& f) {
  if (f.has_empty_clause()) return f.size() == 1;
  Propagator p(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (absorbed_by(p, f.clause(i), static_cast<int>(i), nullptr)) return false;
  }
  return true;
}

CnfFormula irredundant_core(const CnfFormula& f, RemovalOrder order) {
  if (f.has_empty_clause()) {
    // Everything else is absorbed through the contradiction; the empty
    // clause itself is never removable.
    return CnfFormula(f.num_vars(), {Clause{}});
  }
  std::vector<std::size_t> ids(f.size());
  std::iota(ids.begin(), ids.end(), 0);
  switch (order) {
    case RemovalOrder::longest_first:
      std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return f.clause(a).size() > f.clause(b).size();
      });
      break;
    case RemovalOrder::shortest_first:
      std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return f.clause(a).size() < f.clause(b).size();
      });
      break;
    case RemovalOrder::canonical:
      break;
  }

  Propagator p(f);
  std::vector<bool> enabled(f.size(), true);
  for (std::size_t id : ids) {
    enabled[id] = false;
    if (!absorbed_by(p, f.clause(id), -1, &enabled)) enabled[id] = true;
  }
  std::vector<Clause> kept;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (enabled[i]) kept.push_back(f.clause(i));
  }
  return CnfFormula(f.num_vars(), std::move(kept));
}

CnfFormula primify(const CnfFormula& f) {
  Propagator p(f);
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const Clause& c : f) {
    if (!is_implicate(p, c)) {
      throw std::invalid_argument("primify: clause is not an implicate of the formula");
    }
    Clause current = c;
    for (Lit l : c) {
      if (current.size() <= 1) break;
      const Clause candidate = current.without(l);
      if (is_implicate(p, candidate)) current = candidate;
    }
    out.push_back(std::move(current));
  }
  return CnfFormula(f.num_vars(), std::move(out));
}

}  // namespace ucplab

#include "ucplab/ucp.hpp"

#include <algorithm>
#include <random>

namespace ucplab {

namespace {

// literal index for occurrence lists: x_v -> 2(v-1), not x_v -> 2(v-1)+1
inline int lit_index(Lit l) { return 2 * (l.var() - 1) + (l.positive() ? 0 : 1); }

}  // namespace

bool UcpOutcome::derives(Lit l) const {
  return std::binary_search(literals.begin(), literals.end(), l);
}

Propagator::Propagator(const CnfFormula& formula)
    : formula_(&formula), num_vars_(formula.num_vars()) {
  const auto clauses = formula.clauses();
  const int m = static_cast<int>(clauses.size());
  base_len_.resize(m);
  base_sum_.resize(m);
  occ_start_.assign(2 * num_vars_ + 1, 0);
  for (int i = 0; i < m; ++i) {
    const Clause& c = clauses[i];
    base_len_[i] = static_cast<int>(c.size());
    int sum = 0;
    for (Lit l : c) {
      sum += l.code;
      ++occ_start_[lit_index(l) + 1];
    }
    base_sum_[i] = sum;
    if (c.empty()) empty_clauses_.push_back(i);
    if (c.size() == 1) unit_clauses_.push_back(i);
  }
  for (std::size_t i = 1; i < occ_start_.size(); ++i) occ_start_[i] += occ_start_[i - 1];
  occ_.resize(formula.length());
  std::vector<int> fill(occ_start_.begin(), occ_start_.end() - 1);
  for (int i = 0; i < m; ++i) {
    for (Lit l : clauses[i]) occ_[fill[lit_index(l)]++] = i;
  }
  val_.assign(num_vars_ + 1, 0);
  len_.resize(m);
  sum_.resize(m);
}

UcpOutcome Propagator::run(std::span<const Lit> assumptions, int disabled_clause,
                           const std::vector<bool>* enabled, const UcpOptions& options) {
  std::fill(val_.begin(), val_.end(), 0);
  len_ = base_len_;
  sum_ = base_sum_;
  queue_.clear();

  const auto clause_enabled = [&](int cid) {
    if (cid == disabled_clause) return false;
    return enabled == nullptr || (*enabled)[static_cast<std::size_t>(cid)];
  };

  bool conflict = false;
  const auto enqueue = [&](Lit l) {
    const signed char s = l.positive() ? 1 : -1;
    signed char& v = val_[l.var()];
    if (v == s) return;
    if (v == -s) {
      conflict = true;
      return;
    }
    v = s;
    queue_.push_back(l);
  };

  for (int cid : empty_clauses_) {
    if (clause_enabled(cid)) conflict = true;
  }
  for (int cid : unit_clauses_) {
    if (conflict) break;
    if (clause_enabled(cid)) enqueue(formula_->clause(cid).lits()[0]);
  }
  for (Lit l : assumptions) {
    if (conflict) break;
    enqueue(l);
  }

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  std::size_t head = 0;
  while (!conflict && head < queue_.size()) {
    if (rng) {
      const std::size_t j = head + static_cast<std::size_t>((*rng)() % (queue_.size() - head));
      std::swap(queue_[head], queue_[j]);
    }
    const Lit l = queue_[head++];
    const int fidx = lit_index(-l);
    for (int pos = occ_start_[fidx]; pos < occ_start_[fidx + 1]; ++pos) {
      const int cid = occ_[pos];
      if (!clause_enabled(cid)) continue;
      len_[cid] -= 1;
      sum_[cid] -= (-l).code;
      if (len_[cid] == 1) {
        enqueue(Lit(sum_[cid]));
        if (conflict) break;
      }
    }
  }

  UcpOutcome out;
  if (conflict) {
    out.contradiction = true;
    return out;
  }
  out.literals.assign(queue_.begin(), queue_.end());
  std::sort(out.literals.begin(), out.literals.end());
  return out;
}

UcpOutcome ucp(const CnfFormula& f, const UcpOptions& options) {
  Propagator p(f);
  return p.run({}, -1, nullptr, options);
}

UcpOutcome ucp_with_assumptions(const CnfFormula& f, const PartialAssignment& alpha,
                                const UcpOptions& options) {
  Propagator p(f);
  return p.run(alpha.lits(), -1, nullptr, options);
}

CnfFormula simplify(const CnfFormula& f, const PartialAssignment& alpha) {
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const Clause& c : f) {
    bool satisfied = false;
    std::vector<Lit> rest;
    rest.reserve(c.size());
    for (Lit l : c) {
      if (alpha.contains(l)) {
        satisfied = true;
        break;
      }
      if (!alpha.contains(-l)) rest.push_back(l);
    }
    if (!satisfied) out.emplace_back(std::move(rest));
  }
  return CnfFormula(f.num_vars(), std::move(out));
}

}  // namespace ucplab

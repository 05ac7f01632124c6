#include "ucplab/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ucplab/subsets.hpp"

namespace ucplab {

namespace {

Clause psi_clause(std::uint64_t neg_mask, int pos_var) {
  std::vector<Lit> lits;
  lits.reserve(static_cast<std::size_t>(std::popcount(neg_mask)) + 1);
  for (int v : mask_vertices(neg_mask)) lits.push_back(Lit(-v));
  lits.push_back(Lit(pos_var));
  return Clause(std::move(lits));
}

// (neg_mask, pos_var) of a psi-shaped clause.
std::optional<std::pair<std::uint64_t, int>> decompose(const Clause& c) {
  std::uint64_t neg = 0;
  int pos = 0;
  for (Lit l : c) {
    if (l.positive()) {
      if (pos != 0) return std::nullopt;
      pos = l.var();
    } else {
      neg |= std::uint64_t{1} << (l.var() - 1);
    }
  }
  if (pos == 0 || c.size() < 2) return std::nullopt;
  return std::make_pair(neg, pos);
}

}  // namespace

CnfFormula psi(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("psi: need 1 <= k <= n-1");
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>((n - k) * binom(n, k)));
  for_each_subset(n, k, [&](std::uint64_t b) {
    for (int x = 1; x <= n; ++x) {
      if ((b >> (x - 1)) & 1) continue;
      clauses.push_back(psi_clause(b, x));
    }
  });
  return CnfFormula(n, std::move(clauses));
}

bool f_eval(int n, int k, std::uint64_t assignment_mask) {
  const std::uint64_t relevant = n >= 64 ? assignment_mask
                                         : assignment_mask & ((std::uint64_t{1} << n) - 1);
  const int ones = std::popcount(relevant);
  return ones < k || ones == n;
}

CnfFormula theta(const Hypergraph& h) {
  std::vector<Clause> clauses;
  clauses.reserve(h.size() * static_cast<std::size_t>(h.edge_size()));
  for (std::uint64_t e : h.edges()) {
    for (int x : mask_vertices(e)) {
      clauses.push_back(psi_clause(e & ~(std::uint64_t{1} << (x - 1)), x));
    }
  }
  return CnfFormula(h.n(), std::move(clauses));
}

Hypergraph complete_hypergraph(int n, int k) {
  Hypergraph h(n, k);
  std::vector<std::uint64_t> edges;
  edges.reserve(static_cast<std::size_t>(binom(n, k + 1)));
  for_each_subset(n, k + 1, [&](std::uint64_t e) { edges.push_back(e); });
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph star_hypergraph(int n, int k) {
  std::vector<std::uint64_t> edges;
  edges.reserve(static_cast<std::size_t>(binom(n - 1, k)));
  for_each_subset(n - 1, k, [&](std::uint64_t rest) {
    edges.push_back((rest << 1) | 1);  // shift into vertices 2..n, add x_1
  });
  return Hypergraph(n, k, std::move(edges));
}

CnfFormula phi_ell(int n, int k) {
  return theta(star_hypergraph(n, k));
}

std::optional<int> psi_subset_arity(const CnfFormula& f) {
  std::optional<int> k;
  for (const Clause& c : f) {
    const auto parts = decompose(c);
    if (!parts) return std::nullopt;
    const int negs = static_cast<int>(c.size()) - 1;
    if (k && *k != negs) return std::nullopt;
    k = negs;
  }
  return k;
}

DirectedRestrictionGraph g_directed(const CnfFormula& f, std::uint64_t base_mask) {
  const auto k = psi_subset_arity(f);
  if (f.size() > 0) {
    if (!k) throw std::invalid_argument("g_directed: formula is not a subset of psi(n,k)");
    if (std::popcount(base_mask) != *k - 1) {
      throw std::invalid_argument("g_directed: base set is not a (k-1)-set");
    }
  }
  DirectedRestrictionGraph g;
  g.n = f.num_vars();
  g.base = base_mask;
  for (const Clause& c : f) {
    const auto [neg, pos] = *decompose(c);
    if ((base_mask & ~neg) != 0) continue;
    const std::uint64_t extra = neg & ~base_mask;
    if (std::popcount(extra) != 1) continue;
    if ((base_mask >> (pos - 1)) & 1) continue;
    g.arcs.emplace_back(std::countr_zero(extra) + 1, pos);
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

UndirectedRestrictionGraph g_restriction(const Hypergraph& h, std::uint64_t base_mask) {
  if (std::popcount(base_mask) != h.k() - 1) {
    throw std::invalid_argument("g_restriction: base set is not a (k-1)-set");
  }
  UndirectedRestrictionGraph g;
  g.n = h.n();
  g.base = base_mask;
  for (std::uint64_t e : h.edges()) {
    if ((base_mask & ~e) != 0) continue;
    const std::uint64_t rest = e & ~base_mask;
    const int a = std::countr_zero(rest) + 1;
    const int b = 63 - std::countl_zero(rest) + 1;
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::vector<std::vector<int>> restriction_components(const Hypergraph& h,
                                                     std::uint64_t base_mask) {
  const auto g = g_restriction(h, base_mask);
  // Union-find over the vertices of X \ A, indexed by variable.
  std::vector<int> parent(h.n() + 1);
  for (int v = 1; v <= h.n(); ++v) parent[v] = v;
  const auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : g.edges) {
    const int ra = root(a);
    const int rb = root(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> index(h.n() + 1, -1);
  for (int v = 1; v <= h.n(); ++v) {
    if ((base_mask >> (v - 1)) & 1) continue;
    const int r = root(v);
    if (index[r] == -1) {
      index[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[index[r]].push_back(v);
  }
  return comps;
}

namespace {

// Strong connectivity of the arc list over the vertex set `verts_mask`
// (1-based variables), via forward/backward mask reachability.
bool strongly_connected(std::uint64_t verts_mask, const std::vector<std::pair<int, int>>& arcs,
                        int n) {
  if (verts_mask == 0) return true;
  std::vector<std::uint64_t> out(n + 1, 0), in(n + 1, 0);
  for (const auto& [a, b] : arcs) {
    out[a] |= std::uint64_t{1} << (b - 1);
    in[b] |= std::uint64_t{1} << (a - 1);
  }
  const int start = std::countr_zero(verts_mask) + 1;
  for (const auto* adj : {&out, &in}) {
    std::uint64_t reached = std::uint64_t{1} << (start - 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f != 0) {
        const int v = std::countr_zero(f) + 1;
        f &= f - 1;
        next |= (*adj)[v];
      }
      frontier = next & verts_mask & ~reached;
      reached |= frontier;
    }
    if (reached != verts_mask) return false;
  }
  return true;
}

}  // namespace

RestrictionReport check_psi_equivalence_graphs(const CnfFormula& f, bool collect_all) {
  const auto arity = psi_subset_arity(f);
  if (!arity) {
    throw std::invalid_argument(
        "check_psi_equivalence_graphs: formula is empty or not a subset of psi(n,k)");
  }
  const int n = f.num_vars();
  const int k = *arity;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  RestrictionReport report;
  // Bucket the arcs by the colex rank of A: a clause neg(M) v x_j yields the
  // arc (x_i, x_j) for A = M \ {x_i}, for every x_i in M.
  const std::size_t num_bases = binom(n, k - 1);
  std::vector<std::vector<std::pair<int, int>>> arcs(num_bases);
  for (const Clause& c : f) {
    const auto [neg, pos] = *decompose(c);
    std::uint64_t m = neg;
    while (m != 0) {
      const int xi = std::countr_zero(m) + 1;
      m &= m - 1;
      const std::uint64_t base = neg & ~(std::uint64_t{1} << (xi - 1));
      arcs[colex_rank(base)].emplace_back(xi, pos);
    }
  }

  std::size_t rank = 0;
  for_each_subset(n, k - 1, [&](std::uint64_t base) {
    if (!collect_all && !report.ok) {
      ++rank;
      return;
    }
    if (!strongly_connected(full & ~base, arcs[rank], n)) {
      report.ok = false;
      report.bad_sets.push_back(base);
    }
    ++rank;
  });
  return report;
}

bool is_ucp_equiv_to_psi_via_graphs(const CnfFormula& f) {
  return check_psi_equivalence_graphs(f).ok;
}

RestrictionReport check_connected_restrictions(const Hypergraph& h, bool collect_all) {
  const int n = h.n();
  const int k = h.k();
  RestrictionReport report;

  // Bucket the derived edges by the colex rank of A: every hyperedge e
  // contributes the edge e \ A to each (k-1)-subset A of e.
  const std::size_t num_bases = binom(n, k - 1);
  std::vector<std::vector<std::pair<int, int>>> edges(num_bases);
  std::vector<int> members;
  for (std::uint64_t e : h.edges()) {
    members = mask_vertices(e);
    const int sz = static_cast<int>(members.size());
    for (int i = 0; i < sz; ++i) {
      for (int j = i + 1; j < sz; ++j) {
        const std::uint64_t pair_mask =
            (std::uint64_t{1} << (members[i] - 1)) | (std::uint64_t{1} << (members[j] - 1));
        edges[colex_rank(e & ~pair_mask)].emplace_back(members[i], members[j]);
      }
    }
  }

  std::vector<int> parent(n + 1);
  std::size_t rank = 0;
  for_each_subset(n, k - 1, [&](std::uint64_t base) {
    if (!collect_all && !report.ok) {
      ++rank;
      return;
    }
    for (int v = 1; v <= n; ++v) parent[v] = v;
    const auto root = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int unions = 0;
    for (const auto& [a, b] : edges[rank]) {
      const int ra = root(a);
      const int rb = root(b);
      if (ra != rb) {
        parent[std::max(ra, rb)] = std::min(ra, rb);
        ++unions;
      }
    }
    const int verts = n - (k - 1);
    if (unions != verts - 1) {
      report.ok = false;
      report.bad_sets.push_back(base);
    }
    ++rank;
  });
  return report;
}

bool has_connected_restrictions(const Hypergraph& h) {
  return check_connected_restrictions(h).ok;
}

}  // namespace ucplab

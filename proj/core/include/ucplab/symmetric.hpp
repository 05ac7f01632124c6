#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ucplab/cnf.hpp"
#include "ucplab/hypergraph.hpp"

namespace ucplab {

// All clauses on x_1..x_n with k negative literals and one positive literal;
// the prime implicates of the threshold-style symmetric function below.
CnfFormula psi(int n, int k);

// f_{n,k}(x) = 1 iff fewer than k ones or all ones. Bit v-1 of
// `assignment_mask` is the value of x_v.
bool f_eval(int n, int k, std::uint64_t assignment_mask);

// Hypergraph formula: for every hyperedge e and x in e, the clause
// neg(e \ {x}) v x.
CnfFormula theta(const Hypergraph& h);

Hypergraph complete_hypergraph(int n, int k);  // all (k+1)-subsets
Hypergraph star_hypergraph(int n, int k);      // all (k+1)-subsets containing x_1
CnfFormula phi_ell(int n, int k);              // theta of the star hypergraph

// Shape test: every clause has exactly k negative literals and one positive
// one. Returns k, or nullopt if the formula is not a subset of any psi(n, k).
std::optional<int> psi_subset_arity(const CnfFormula& f);

// Directed graph of the binary clauses left after assigning the (k-1)-set A
// to 1: arc (x_i, x_j) when neg(A) v not x_i v x_j is a clause.
struct DirectedRestrictionGraph {
  int n = 0;
  std::uint64_t base = 0;  // the set A
  std::vector<std::pair<int, int>> arcs;  // 1-based variables in X \ A
};
DirectedRestrictionGraph g_directed(const CnfFormula& f, std::uint64_t base_mask);

// G(H, A) = { e \ A : A included in e in H } as a graph on X \ A.
struct UndirectedRestrictionGraph {
  int n = 0;
  std::uint64_t base = 0;
  std::vector<std::pair<int, int>> edges;
};
UndirectedRestrictionGraph g_restriction(const Hypergraph& h, std::uint64_t base_mask);

// Vertex sets of the connected components of G(H, A) on X \ A, each sorted,
// components ordered by smallest vertex. Isolated vertices count.
std::vector<std::vector<int>> restriction_components(const Hypergraph& h, std::uint64_t base_mask);

struct RestrictionReport {
  bool ok = true;
  // Failing (k-1)-sets in colex order; only the first unless collect_all.
  std::vector<std::uint64_t> bad_sets;
};

// A subset of psi(n, k) is ucp-equivalent to psi(n, k) iff all directed
// restriction graphs are strongly connected.
RestrictionReport check_psi_equivalence_graphs(const CnfFormula& f, bool collect_all = false);
bool is_ucp_equiv_to_psi_via_graphs(const CnfFormula& f);

// theta(H) is ucp-equivalent to psi(n, k) iff every G(H, A) is connected.
RestrictionReport check_connected_restrictions(const Hypergraph& h, bool collect_all = false);
bool has_connected_restrictions(const Hypergraph& h);

}  // namespace ucplab

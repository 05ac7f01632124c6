#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "support/test_support.hpp"
#include "ucplab/covering.hpp"
#include "ucplab/equivalence.hpp"
#include "ucplab/subsets.hpp"
#include "ucplab/symmetric.hpp"

using namespace ucplab;
using namespace ucplab::testing;

namespace {

CnfFormula random_psi_subset(int n, int k, double keep, std::mt19937_64& rng) {
  const CnfFormula full = psi(n, k);
  std::vector<Clause> kept;
  for (const Clause& c : full) {
    if (static_cast<double>(rng() % 1000) < keep * 1000) kept.push_back(c);
  }
  return CnfFormula(n, kept);
}

Hypergraph random_hypergraph(int n, int k, double keep, std::mt19937_64& rng) {
  std::vector<std::uint64_t> edges;
  for_each_subset(n, k + 1, [&](std::uint64_t e) {
    if (static_cast<double>(rng() % 1000) < keep * 1000) edges.push_back(e);
  });
  return Hypergraph(n, k, edges);
}

}  // namespace

TEST_CASE("psi sizes") {
  CHECK(psi(3, 1).size() == 6);
  CHECK(psi(4, 2).size() == 12);
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const CnfFormula f = psi(n, k);
      CHECK(f.size() == (n - k) * binom(n, k));
      CHECK(f.length() == f.size() * static_cast<std::size_t>(k + 1));
    }
  }
  CHECK(psi(5, 4).size() == 5);
  CHECK_THROWS_AS(psi(3, 3), std::invalid_argument);
}

TEST_CASE("psi(3,1) is exactly the implication clauses") {
  const CnfFormula f = psi(3, 1);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) CHECK(f.contains(Clause{-i, j}));
    }
  }
}

TEST_CASE("f_eval") {
  CHECK_FALSE(f_eval(4, 2, 0b0011));  // two ones: neither branch
  CHECK(f_eval(4, 2, 0));             // all zeros
  CHECK(f_eval(4, 2, 0b1111));        // all ones
  CHECK(f_eval(4, 2, 0b1000));        // one 1 < k
  CHECK_FALSE(f_eval(4, 2, 0b0111));
}

TEST_CASE("psi represents f: truth tables agree for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const CnfFormula f = psi(n, k);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool sat = true;
        for (const Clause& c : f) {
          if (!model_satisfies(m, c)) {
            sat = false;
            break;
          }
        }
        CHECK(sat == f_eval(n, k, m));
      }
    }
  }
}

TEST_CASE("theta of a single hyperedge") {
  const Hypergraph h(3, 2, {0b111});
  const CnfFormula f = theta(h);
  CHECK(f.size() == 3);
  CHECK(f.contains(Clause{-2, -3, 1}));
  CHECK(f.contains(Clause{-1, -3, 2}));
  CHECK(f.contains(Clause{-1, -2, 3}));
}

TEST_CASE("theta of the empty hypergraph is the empty formula") {
  CHECK(theta(Hypergraph(4, 2)).size() == 0);
}

TEST_CASE("theta of the complete hypergraph is psi, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const Hypergraph h0 = complete_hypergraph(n, k);
      CHECK(theta(h0) == psi(n, k));
      CHECK(theta(h0).size() == (k + 1) * h0.size());
    }
  }
}

TEST_CASE("g_directed of psi is the complete digraph on the rest") {
  const int n = 5, k = 2;
  const CnfFormula f = psi(n, k);
  const auto g = g_directed(f, vertex_mask({2}));
  // complete digraph on {1,3,4,5}: 12 arcs
  CHECK(g.arcs.size() == 12);
  const auto empty_g = g_directed(CnfFormula(n), vertex_mask({2}));
  CHECK(empty_g.arcs.empty());
}

TEST_CASE("g_directed of a hypergraph formula has a symmetric arc set") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const Hypergraph h = random_hypergraph(6, 3, 0.4, rng);
    const CnfFormula f = theta(h);
    if (f.size() == 0) continue;
    for_each_subset(6, 2, [&](std::uint64_t a) {
      const auto g = g_directed(f, a);
      for (const auto& [x, y] : g.arcs) {
        CHECK(std::binary_search(g.arcs.begin(), g.arcs.end(), std::make_pair(y, x)));
      }
    });
  }
}

TEST_CASE("g_directed validates its inputs") {
  CHECK_THROWS_AS(g_directed(psi(4, 2), vertex_mask({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(g_directed(CnfFormula(3, {Clause{1, 2}}), 0), std::invalid_argument);
}

TEST_CASE("phi_ell sizes match (k+1) binom(n-1,k)") {
  CHECK(phi_ell(8, 4).size() == 175);
  CHECK(phi_ell(3, 1).size() == 4);
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      CHECK(phi_ell(n, k).size() == (k + 1) * binom(n - 1, k));
    }
  }
}

TEST_CASE("phi_ell(6,3) is ucp-irredundant and equivalent to psi(6,3)") {
  const CnfFormula ell = phi_ell(6, 3);
  CHECK(is_ucp_irredundant(ell));
  CHECK(is_ucp_equiv_to_psi_via_graphs(ell));
  CHECK(ucp_equivalent(ell, psi(6, 3)));
}

TEST_CASE("graph characterization: psi passes, the star passes, empty fails") {
  CHECK(is_ucp_equiv_to_psi_via_graphs(psi(5, 2)));
  CHECK(is_ucp_equiv_to_psi_via_graphs(phi_ell(6, 3)));
  const auto report = check_psi_equivalence_graphs(phi_ell(6, 3).without_clause(0), true);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.bad_sets.empty());
}

TEST_CASE("removing one clause from phi_ell breaks equivalence") {
  const CnfFormula ell = phi_ell(5, 2);
  for (std::size_t i = 0; i < ell.size(); ++i) {
    CHECK_FALSE(is_ucp_equiv_to_psi_via_graphs(ell.without_clause(i)));
  }
}

TEST_CASE("characterization agrees with absorption equivalence on sampled subsets, n <= 6") {
  std::mt19937_64 rng(2718);
  int equivalent_seen = 0;
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const double keep = (i % 2 == 0) ? 0.97 : 0.6;
    const CnfFormula f = random_psi_subset(n, k, keep, rng);
    if (f.size() == 0) continue;
    const bool via_graphs = is_ucp_equiv_to_psi_via_graphs(f);
    CHECK(via_graphs == ucp_equivalent(f, psi(n, k)));
    if (via_graphs) ++equivalent_seen;
  }
  CHECK(equivalent_seen > 0);
}

TEST_CASE("hypergraph characterization agrees with theta equivalence, n <= 6") {
  std::mt19937_64 rng(3141);
  int connected_seen = 0;
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % (n - 2));
    const double keep = (i % 2 == 0) ? 0.9 : 0.5;
    const Hypergraph h = random_hypergraph(n, k, keep, rng);
    const bool connected = has_connected_restrictions(h);
    if (h.size() == 0) {
      CHECK_FALSE(connected);
      continue;
    }
    CHECK(connected == ucp_equivalent(theta(h), psi(n, k)));
    if (connected) ++connected_seen;
  }
  CHECK(connected_seen > 0);
}

TEST_CASE("star and complete hypergraphs have connected restrictions") {
  CHECK(has_connected_restrictions(star_hypergraph(6, 3)));
  CHECK(has_connected_restrictions(complete_hypergraph(6, 3)));
  CHECK_FALSE(has_connected_restrictions(Hypergraph(6, 3)));
}

TEST_CASE("reachability lemma, exhaustive for n = 6, k = 3") {
  const int n = 6, k = 3;
  std::mt19937_64 rng(5050);
  for (int i = 0; i < 25; ++i) {
    const CnfFormula f = random_psi_subset(n, k, 0.5, rng);
    for_each_subset(n, k - 1, [&](std::uint64_t a) {
      const auto g = g_directed(f, a);
      std::vector<Lit> alpha_lits;
      for (int v : mask_vertices(a)) alpha_lits.push_back(Lit(v));
      for (int ell = 1; ell <= n; ++ell) {
        if ((a >> (ell - 1)) & 1) continue;
        // reach_to[v]: path from v to ell; reach_from[v]: path from ell to v
        std::vector<char> reach_to(n + 1, 0), reach_from(n + 1, 0);
        reach_to[ell] = reach_from[ell] = 1;
        bool grown = true;
        while (grown) {
          grown = false;
          for (const auto& [x, y] : g.arcs) {
            if (reach_to[y] && !reach_to[x]) {
              reach_to[x] = 1;
              grown = true;
            }
            if (reach_from[x] && !reach_from[y]) {
              reach_from[y] = 1;
              grown = true;
            }
          }
        }
        // negative branch: exactly the vertices with a path to ell get 0
        std::vector<Lit> with_neg = alpha_lits;
        with_neg.push_back(Lit(-ell));
        const UcpOutcome o_neg = ucp_with_assumptions(f, PartialAssignment(with_neg));
        REQUIRE_FALSE(o_neg.contradiction);
        for (int v = 1; v <= n; ++v) {
          if ((a >> (v - 1)) & 1) {
            CHECK(o_neg.derives(Lit(v)));
          } else {
            CHECK(o_neg.derives(Lit(-v)) == static_cast<bool>(reach_to[v]));
            CHECK_FALSE(o_neg.derives(Lit(v)));
          }
        }
        // positive branch: at least the vertices reachable from ell get 1
        std::vector<Lit> with_pos = alpha_lits;
        with_pos.push_back(Lit(ell));
        const UcpOutcome o_pos = ucp_with_assumptions(f, PartialAssignment(with_pos));
        REQUIRE_FALSE(o_pos.contradiction);
        for (int v = 1; v <= n; ++v) {
          if (reach_from[v]) CHECK(o_pos.derives(Lit(v)));
        }
      }
    });
  }
}

TEST_CASE("lower bound: any formula ucp-equivalent to psi has >= n C(n-1,k,k-1) clauses") {
  // n <= 8 with the exact covering oracle.
  struct Case { int n, k; };
  for (const Case c : {Case{4, 2}, Case{5, 2}, Case{6, 3}, Case{8, 4}}) {
    const std::uint64_t lb =
        static_cast<std::uint64_t>(c.n) * exact_cover_number(c.n - 1, c.k, c.k - 1);
    CHECK(psi(c.n, c.k).size() >= lb);
    CHECK(phi_ell(c.n, c.k).size() >= lb);
  }
}

TEST_CASE("hypergraph io round trip") {
  const Hypergraph h = star_hypergraph(5, 2);
  std::ostringstream out;
  const std::string comments[] = {"star hypergraph"};
  write_hypergraph(h, out, comments);
  std::istringstream in(out.str());
  CHECK(read_hypergraph(in) == h);
}

TEST_CASE("hypergraph reader errors") {
  std::istringstream bad1("1 2 3\n1 2\n");
  CHECK_THROWS_AS(read_hypergraph(bad1), ParseError);
  std::istringstream bad2("# only comments\n");
  CHECK_THROWS_AS(read_hypergraph(bad2), ParseError);
  std::istringstream bad3("1 2 x\n");
  CHECK_THROWS_AS(read_hypergraph(bad3), ParseError);
}

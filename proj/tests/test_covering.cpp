#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ucplab/covering.hpp"
#include "ucplab/subsets.hpp"

using namespace ucplab;

namespace {

// Brute-force covering number for tiny instances: try all block subsets by
// increasing size. Independent of the branch-and-bound path.
int brute_cover_number(int n, int r, int k) {
  std::vector<std::uint64_t> blocks;
  for_each_subset(n, r, [&](std::uint64_t b) { blocks.push_back(b); });
  std::vector<std::uint64_t> targets;
  for_each_subset(n, k, [&](std::uint64_t t) { targets.push_back(t); });
  const int nb = static_cast<int>(blocks.size());
  for (int size = 1; size <= nb; ++size) {
    bool found = false;
    for_each_subset(nb, size, [&](std::uint64_t pick) {
      if (found) return;
      for (std::uint64_t t : targets) {
        bool covered = false;
        std::uint64_t p = pick;
        while (p != 0) {
          const int b = std::countr_zero(p);
          p &= p - 1;
          if ((t & ~blocks[b]) == 0) {
            covered = true;
            break;
          }
        }
        if (!covered) return;
      }
      found = true;
    });
    if (found) return size;
  }
  return nb;
}

// Brute-force Turan number for tiny instances.
int brute_turan_number(int n, int ell, int t) {
  std::vector<std::uint64_t> blocks;
  for_each_subset(n, t, [&](std::uint64_t b) { blocks.push_back(b); });
  std::vector<std::uint64_t> targets;
  for_each_subset(n, ell, [&](std::uint64_t x) { targets.push_back(x); });
  const int nb = static_cast<int>(blocks.size());
  for (int size = 1; size <= nb; ++size) {
    bool found = false;
    for_each_subset(nb, size, [&](std::uint64_t pick) {
      if (found) return;
      for (std::uint64_t x : targets) {
        bool hit = false;
        std::uint64_t p = pick;
        while (p != 0) {
          const int b = std::countr_zero(p);
          p &= p - 1;
          if ((blocks[b] & ~x) == 0) {
            hit = true;
            break;
          }
        }
        if (!hit) return;
      }
      found = true;
    });
    if (found) return size;
  }
  return nb;
}

}  // namespace

TEST_CASE("greedy produces valid covers within the ES74 bound, 2 <= k < n <= 14") {
  for (int n = 3; n <= 14; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const CoverDesign d = greedy_cover(n, k);
      CHECK(verify_cover(d));
      const double bound = es74_bound(n, k);
      CHECK(static_cast<double>(d.blocks.size()) <= std::ceil(bound));
    }
  }
}

TEST_CASE("greedy on n=4,k=2 matches the exact optimum of 3") {
  const CoverDesign d = greedy_cover(4, 2);
  CHECK(verify_cover(d));
  CHECK(exact_cover_number(4, 3, 2) == 3);
  CHECK(d.blocks.size() >= 3);
}

TEST_CASE("verify_cover mutation: removing a block from a minimal cover breaks it") {
  // exact_cover_number(4,3,2) == 3 and binom(4,3) == 4, so any valid
  // 3-subset family of blocks that covers is minimal.
  CoverDesign d = greedy_cover(4, 2);
  while (d.blocks.size() > static_cast<std::size_t>(exact_cover_number(4, 3, 2))) {
    d.blocks.pop_back();
  }
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    CoverDesign mutated = d;
    mutated.blocks.erase(mutated.blocks.begin() + static_cast<long>(i));
    CHECK_FALSE(verify_cover(mutated));
  }
}

TEST_CASE("the complete block set is always a valid cover") {
  std::vector<std::uint64_t> blocks;
  for_each_subset(6, 4, [&](std::uint64_t b) { blocks.push_back(b); });
  CHECK(verify_cover(CoverDesign{6, 4, 3, blocks}));
}

TEST_CASE("exact covering numbers on hand-checkable instances") {
  CHECK(exact_cover_number(3, 2, 1) == 2);
  CHECK(exact_cover_number(4, 3, 2) == 3);
  CHECK(exact_cover_number(5, 3, 2) == 4);
  CHECK(exact_cover_number(4, 3, 2) == brute_cover_number(4, 3, 2));
  CHECK(exact_cover_number(5, 3, 2) == brute_cover_number(5, 3, 2));
  CHECK(exact_cover_number(5, 4, 3) == brute_cover_number(5, 4, 3));
  CHECK(exact_cover_number(6, 3, 2) == 6);  // classical value
}

TEST_CASE("exact oracle rejects oversized instances") {
  CHECK_THROWS_AS(exact_cover_number(10, 6, 5), std::domain_error);
  CHECK_THROWS_AS(exact_cover_number(4, 4, 2), std::invalid_argument);
}

TEST_CASE("counting lower bound holds on exact values") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const int c = exact_cover_number(n, k + 1, k);
      CHECK(static_cast<std::uint64_t>(c) * (k + 1) >= binom(n, k));
      CHECK(c >= schonheim_bound(n, k + 1, k));
    }
  }
}

TEST_CASE("duality C(n,r,k) == T(n,n-k,n-r) via the dual search") {
  struct Case { int n, r, k; };
  for (const Case c : {Case{4, 3, 2}, Case{5, 3, 2}, Case{5, 4, 3}, Case{6, 3, 2},
                       Case{6, 4, 3}, Case{6, 5, 4}, Case{7, 4, 3}}) {
    CHECK(exact_cover_number(c.n, c.r, c.k) == exact_turan_number(c.n, c.n - c.k, c.n - c.r));
  }
  // tiny instances against plain subset enumeration
  CHECK(exact_turan_number(5, 3, 2) == brute_turan_number(5, 3, 2));
  CHECK(exact_cover_number(5, 3, 2) == brute_turan_number(5, 3, 2));
}

TEST_CASE("turan_from_cover certifies the complement system") {
  const CoverDesign d = greedy_cover(6, 3);
  const TuranSystem s = turan_from_cover(d);
  CHECK(s.ell == 3);
  CHECK(s.t == 2);
  CHECK(verify_turan(s));
  CHECK(cover_from_turan(s).blocks == d.blocks);

  CoverDesign minimal = greedy_cover(4, 2);
  const TuranSystem dual = turan_from_cover(minimal);
  CHECK(dual.n == 4);
  CHECK(dual.ell == 2);
  CHECK(dual.t == 1);
  CHECK(verify_turan(dual));
}

TEST_CASE("mu examples") {
  const MuEstimate m = mu_of(4, 2, 3);
  CHECK(m.mu == Rational(3, 2));
  // all blocks: coverSize = binom(n, k+1)
  const MuEstimate all = mu_of(5, 2, static_cast<long long>(binom(5, 3)));
  CHECK(all.mu == Rational(10 * 3, 10));
  CHECK_THROWS_AS(mu_of(4, 2, 0), std::invalid_argument);
}

TEST_CASE("mu is between 1 and 1+ln(k+1) on exact values") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const MuEstimate m = mu_of(n, k, exact_cover_number(n, k + 1, k));
      CHECK(Rational(1, 1) <= m.mu);
      CHECK(m.mu.value() <= 1.0 + std::log(k + 1.0) + 1e-12);
    }
  }
}

TEST_CASE("mu lemma inequalities on exact values, n <= 8") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const Rational mu_nk = mu_of(n, k, exact_cover_number(n, k + 1, k)).mu;
      if (k - 1 >= 1 && k - 1 <= n - 3) {
        const Rational mu_prev = mu_of(n - 1, k - 1, exact_cover_number(n - 1, k, k - 1)).mu;
        CHECK(mu_prev <= mu_nk);
      }
      if (n + 1 <= 8 && k <= n - 1) {
        const Rational mu_next = mu_of(n + 1, k, exact_cover_number(n + 1, k + 1, k)).mu;
        CHECK(Rational(n - k + 1, n + 1) * mu_nk <= mu_next);
      }
    }
  }
}

TEST_CASE("the one-point extension step holds on exact values") {
  // (n/(k+1)) C(n-1, k, k-1) <= C(n, k+1, k)
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const long long lhs_num = static_cast<long long>(n) * exact_cover_number(n - 1, k, k - 1);
      const long long rhs = static_cast<long long>(k + 1) * exact_cover_number(n, k + 1, k);
      CHECK(lhs_num <= rhs);
    }
  }
}

TEST_CASE("block file writer") {
  CoverDesign d{4, 3, 2, {0b0111, 0b1110}};
  std::ostringstream out;
  write_blocks(d, out);
  CHECK(out.str() == "1 2 3\n2 3 4\n");
}

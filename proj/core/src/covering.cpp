#include "ucplab/covering.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "ucplab/subsets.hpp"

namespace ucplab {

namespace {

void check_cover_params(int n, int r, int k) {
  if (!(n > r && r > k && k > 0)) {
    throw std::invalid_argument("covering numbers need n > r > k > 0");
  }
  if (n > 62) throw std::invalid_argument("ground set too large");
}

}  // namespace

CoverDesign greedy_cover(int n, int k) {
  if (!(n > k && k >= 2)) throw std::invalid_argument("greedy_cover: need n > k >= 2");
  if (n > 30) throw std::invalid_argument("greedy_cover: ground set too large");
  const int r = k + 1;

  const std::size_t universe = binom(n, k);
  std::vector<std::uint64_t> covered((universe + 63) / 64, 0);
  std::size_t uncovered = universe;

  // Candidate blocks with the colex ranks of the k-subsets they cover.
  std::vector<std::uint64_t> blocks;
  blocks.reserve(binom(n, r));
  for_each_subset(n, r, [&](std::uint64_t b) { blocks.push_back(b); });
  std::vector<std::array<std::uint32_t, 64>> block_ranks(blocks.size());
  std::vector<int> block_arity(blocks.size(), r);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int j = 0;
    std::uint64_t m = blocks[i];
    while (m != 0) {
      const std::uint64_t bit = m & (~m + 1);
      m &= m - 1;
      block_ranks[i][j++] = static_cast<std::uint32_t>(colex_rank(blocks[i] & ~bit));
    }
  }

  const auto is_covered = [&](std::uint32_t rank) {
    return (covered[rank >> 6] >> (rank & 63)) & 1;
  };

  CoverDesign design{n, r, k, {}};
  while (uncovered > 0) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      int gain = 0;
      for (int j = 0; j < block_arity[i]; ++j) {
        if (!is_covered(block_ranks[i][j])) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    assert(best_gain > 0);
    design.blocks.push_back(blocks[best]);
    for (int j = 0; j < block_arity[best]; ++j) {
      const std::uint32_t rank = block_ranks[best][j];
      if (!is_covered(rank)) {
        covered[rank >> 6] |= std::uint64_t{1} << (rank & 63);
        --uncovered;
      }
    }
  }
  std::sort(design.blocks.begin(), design.blocks.end());
  return design;
}

bool verify_cover(const CoverDesign& d) {
  // r == n is the degenerate single-block cover, reachable from greedy at
  // k == n-1.
  if (!(d.n >= d.r && d.r > d.k && d.k > 0) || d.n > 62) return false;
  for (std::uint64_t b : d.blocks) {
    if (std::popcount(b) != d.r || b >= (std::uint64_t{1} << d.n)) return false;
  }
  bool ok = true;
  for_each_subset(d.n, d.k, [&](std::uint64_t s) {
    if (!ok) return;
    for (std::uint64_t b : d.blocks) {
      if ((s & ~b) == 0) return;
    }
    ok = false;
  });
  return ok;
}

long long schonheim_bound(int n, int r, int k) {
  if (k <= 0) return 1;
  if (r >= n) return 1;
  const long long inner = schonheim_bound(n - 1, r - 1, k - 1);
  return static_cast<long long>(ceil_div(static_cast<std::uint64_t>(n) * inner, r));
}

double es74_bound(int n, int k) {
  return (1.0 / (k + 1)) * static_cast<double>(binom(n, k)) * (1.0 + std::log(k + 1.0));
}

namespace {

// Branch-and-bound minimum set cover over subset incidences on a ground set
// of at most 9 vertices (so at most C(9,4) = 126 elements and blocks, two
// 64-bit words per element bitset).
class ExactSearch {
 public:
  static constexpr int kWords = 2;
  using Bits = std::array<std::uint64_t, kWords>;

  ExactSearch(int n, std::vector<std::uint64_t> element_masks,
              std::vector<std::uint64_t> block_masks, bool block_contains_element)
      : n_(n),
        element_masks_(std::move(element_masks)),
        block_masks_(std::move(block_masks)) {
    const std::size_t ne = element_masks_.size();
    if (ne > 64 * kWords) throw std::domain_error("exact cover search: universe too large");
    cover_bits_.assign(block_masks_.size(), Bits{});
    blocks_of_element_.assign(ne, {});
    for (std::size_t b = 0; b < block_masks_.size(); ++b) {
      for (std::size_t e = 0; e < ne; ++e) {
        const bool covers = block_contains_element
                                ? (element_masks_[e] & ~block_masks_[b]) == 0
                                : (block_masks_[b] & ~element_masks_[e]) == 0;
        if (covers) {
          set_bit(cover_bits_[b], e);
          blocks_of_element_[e].push_back(static_cast<int>(b));
        }
      }
    }
    for (std::size_t e = 0; e < ne; ++e) {
      if (blocks_of_element_[e].empty()) {
        throw std::invalid_argument("exact cover search: uncoverable element");
      }
    }
    max_cover_ = 1;
    for (const Bits& bits : cover_bits_) {
      max_cover_ = std::max(max_cover_, popcount(bits));
    }
    conflict_.assign(ne, Bits{});
    for (std::size_t e = 0; e < ne; ++e) {
      for (int b : blocks_of_element_[e]) or_into(conflict_[e], cover_bits_[b]);
    }
    // Summed degree bounds over vertex subsets. With superset incidence a
    // block covering an element "through" a vertex set S (S inside the
    // element) must contain S; with subset incidence it must avoid S. Each
    // block therefore belongs to a fixed number of groups per family, which
    // justifies dividing the per-group block demands by that number. Using
    // single vertices and pairs mirrors the first two levels of the
    // classical recursive counting bound, made adaptive to partial covers.
    const int arity = block_masks_.empty() ? 0 : std::popcount(block_masks_[0]);
    const auto add_family = [&](const std::vector<std::uint64_t>& signatures,
                                long long divisor) {
      if (divisor <= 0) return;
      GroupFamily family;
      family.divisor = divisor;
      for (std::uint64_t sig : signatures) {
        Bits g{};
        for (std::size_t e = 0; e < ne; ++e) {
          const bool related = block_contains_element ? (sig & ~element_masks_[e]) == 0
                                                      : (sig & element_masks_[e]) == 0;
          if (related) set_bit(g, e);
        }
        int maxc = 0;
        for (std::size_t b = 0; b < block_masks_.size(); ++b) {
          const bool member = block_contains_element ? (sig & ~block_masks_[b]) == 0
                                                     : (sig & block_masks_[b]) == 0;
          if (member) {
            Bits inter = cover_bits_[b];
            and_into(inter, g);
            maxc = std::max(maxc, popcount(inter));
          }
        }
        if (maxc > 0 && popcount(g) > 0) {
          family.groups.push_back(g);
          family.max_cover.push_back(maxc);
        }
      }
      if (!family.groups.empty()) families_.push_back(std::move(family));
    };
    std::vector<std::uint64_t> singles, pairs;
    for (int v = 0; v < n_; ++v) singles.push_back(std::uint64_t{1} << v);
    for (int v = 0; v < n_; ++v) {
      for (int w = v + 1; w < n_; ++w) {
        pairs.push_back((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
      }
    }
    const long long d1 = block_contains_element ? arity : n_ - arity;
    add_family(singles, d1);
    add_family(pairs, d1 * (d1 - 1) / 2);

    full_ = Bits{};
    for (std::size_t e = 0; e < ne; ++e) set_bit(full_, e);
  }

  int solve(int lower_hint = 1) {
    const int greedy = greedy_upper();
    const int lower = std::max({1, lower_hint, lower_bound(full_, 0)});
    for (int target = lower; target < greedy; ++target) {
      if (feasible(full_, Bits{}, 0, 0, target)) return target;
    }
    return greedy;
  }

 private:
  static void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
  static bool test_bit(const Bits& b, std::size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1;
  }
  static void or_into(Bits& a, const Bits& b) {
    for (int w = 0; w < kWords; ++w) a[w] |= b[w];
  }
  static void and_into(Bits& a, const Bits& b) {
    for (int w = 0; w < kWords; ++w) a[w] &= b[w];
  }
  static int popcount(const Bits& b) {
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(b[w]);
    return c;
  }
  static int first_bit(const Bits& b) {
    for (int w = 0; w < kWords; ++w) {
      if (b[w] != 0) return 64 * w + std::countr_zero(b[w]);
    }
    return -1;
  }
  static int and_popcount(const Bits& a, const Bits& b) {
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  int greedy_upper() {
    Bits uncov = full_;
    int used = 0;
    while (popcount(uncov) > 0) {
      std::size_t best = 0;
      int best_gain = -1;
      for (std::size_t b = 0; b < cover_bits_.size(); ++b) {
        const int gain = and_popcount(cover_bits_[b], uncov);
        if (gain > best_gain) {
          best_gain = gain;
          best = b;
        }
      }
      for (int w = 0; w < kWords; ++w) uncov[w] &= ~cover_bits_[best][w];
      ++used;
    }
    return used;
  }

  int lower_bound(const Bits& uncov, int uncov_count_hint) {
    const int u = uncov_count_hint > 0 ? uncov_count_hint : popcount(uncov);
    if (u == 0) return 0;
    int lb = static_cast<int>(ceil_div(u, max_cover_));
    for (const GroupFamily& family : families_) {
      long long total = 0;
      for (std::size_t g = 0; g < family.groups.size(); ++g) {
        const int ug = and_popcount(family.groups[g], uncov);
        if (ug > 0) total += ceil_div(ug, family.max_cover[g]);
      }
      lb = std::max(lb, static_cast<int>(ceil_div(total, family.divisor)));
    }
    // Greedy packing of pairwise non-co-coverable elements.
    Bits avail = uncov;
    int packing = 0;
    for (int e = first_bit(avail); e >= 0; e = first_bit(avail)) {
      ++packing;
      for (int w = 0; w < kWords; ++w) avail[w] &= ~conflict_[e][w];
    }
    return std::max(lb, packing);
  }

  // forbidden: blocks excluded by the branching scheme at ancestor nodes.
  // touched: vertices mentioned by chosen or forbidden blocks and by branch
  // elements, used for the interchangeable-vertex filter.
  bool feasible(Bits uncov, Bits forbidden, std::uint64_t touched, int depth, int target) {
    const int u = popcount(uncov);
    if (u == 0) return true;
    if (depth + lower_bound(uncov, u) > target) return false;

    // Branch on the uncovered element with the fewest available blocks; an
    // element with none left fails the node outright.
    int e = -1;
    int best_domain = 1 << 30;
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = uncov[w];
      while (bits != 0) {
        const int idx = 64 * w + std::countr_zero(bits);
        bits &= bits - 1;
        int domain = 0;
        for (int b : blocks_of_element_[idx]) {
          if (!test_bit(forbidden, static_cast<std::size_t>(b))) ++domain;
        }
        if (domain == 0) return false;
        if (domain < best_domain) {
          best_domain = domain;
          e = idx;
          if (domain == 1) goto chosen;
        }
      }
    }
  chosen:
    const std::uint64_t free_vertices =
        ((std::uint64_t{1} << n_) - 1) & ~(touched | element_masks_[e]);

    // Candidates covering e, cheapest symmetry filter first: a block may use
    // untouched vertices only as the lowest-indexed ones.
    std::vector<int> candidates;
    for (int b : blocks_of_element_[e]) {
      if (test_bit(forbidden, static_cast<std::size_t>(b))) continue;
      std::uint64_t used_free = block_masks_[b] & free_vertices;
      std::uint64_t expect = free_vertices;
      bool canonical = true;
      while (used_free != 0) {
        const std::uint64_t lowest = expect & (~expect + 1);
        if ((used_free & lowest) == 0) {
          canonical = false;
          break;
        }
        used_free &= ~lowest;
        expect &= ~lowest;
      }
      if (!canonical) continue;
      candidates.push_back(b);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const int ga = and_popcount(cover_bits_[a], uncov);
      const int gb = and_popcount(cover_bits_[b], uncov);
      if (ga != gb) return ga > gb;
      return a < b;
    });

    Bits forbidden_child = forbidden;
    std::uint64_t touched_child = touched;
    for (int b : candidates) {
      Bits next = uncov;
      for (int w = 0; w < kWords; ++w) next[w] &= ~cover_bits_[b][w];
      if (feasible(next, forbidden_child, touched_child | block_masks_[b] | element_masks_[e],
                   depth + 1, target)) {
        return true;
      }
      set_bit(forbidden_child, static_cast<std::size_t>(b));
      touched_child |= block_masks_[b];
    }
    return false;
  }

  struct GroupFamily {
    std::vector<Bits> groups;
    std::vector<int> max_cover;
    long long divisor = 1;
  };

  int n_;
  std::vector<std::uint64_t> element_masks_;
  std::vector<std::uint64_t> block_masks_;
  std::vector<Bits> cover_bits_;
  std::vector<std::vector<int>> blocks_of_element_;
  std::vector<Bits> conflict_;
  std::vector<GroupFamily> families_;
  int max_cover_ = 1;
  Bits full_{};
};

std::vector<std::uint64_t> all_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  out.reserve(binom(n, k));
  for_each_subset(n, k, [&](std::uint64_t m) { out.push_back(m); });
  return out;
}

}  // namespace

int exact_cover_number(int n, int r, int k) {
  check_cover_params(n, r, k);
  if (n > 9) throw std::domain_error("exact_cover_number: guarded to n <= 9");
  static std::map<std::tuple<int, int, int>, int> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    const auto it = memo.find({n, r, k});
    if (it != memo.end()) return it->second;
  }
  ExactSearch search(n, all_subsets(n, k), all_subsets(n, r), /*block_contains_element=*/true);
  const int value = search.solve(static_cast<int>(schonheim_bound(n, r, k)));
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::make_tuple(n, r, k), value);
  return value;
}

int exact_turan_number(int n, int ell, int t) {
  if (!(n > ell && ell > t && t > 0)) {
    throw std::invalid_argument("Turan numbers need n > ell > t > 0");
  }
  if (n > 9) throw std::domain_error("exact_turan_number: guarded to n <= 9");
  ExactSearch search(n, all_subsets(n, ell), all_subsets(n, t), /*block_contains_element=*/false);
  return search.solve();
}

TuranSystem turan_from_cover(const CoverDesign& d) {
  const std::uint64_t full = (std::uint64_t{1} << d.n) - 1;
  TuranSystem s{d.n, d.n - d.k, d.n - d.r, {}};
  s.blocks.reserve(d.blocks.size());
  for (std::uint64_t b : d.blocks) s.blocks.push_back(full & ~b);
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

CoverDesign cover_from_turan(const TuranSystem& s) {
  const std::uint64_t full = (std::uint64_t{1} << s.n) - 1;
  CoverDesign d{s.n, s.n - s.t, s.n - s.ell, {}};
  d.blocks.reserve(s.blocks.size());
  for (std::uint64_t b : s.blocks) d.blocks.push_back(full & ~b);
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

bool verify_turan(const TuranSystem& s) {
  if (!(s.n > s.ell && s.ell > s.t && s.t > 0) || s.n > 62) return false;
  for (std::uint64_t b : s.blocks) {
    if (std::popcount(b) != s.t || b >= (std::uint64_t{1} << s.n)) return false;
  }
  bool ok = true;
  for_each_subset(s.n, s.ell, [&](std::uint64_t big) {
    if (!ok) return;
    for (std::uint64_t b : s.blocks) {
      if ((b & ~big) == 0) return;
    }
    ok = false;
  });
  return ok;
}

MuEstimate mu_of(int n, int k, long long cover_size) {
  if (cover_size < 1) throw std::invalid_argument("mu_of: cover size must be positive");
  return MuEstimate{n, k, cover_size,
                    Rational(cover_size * (k + 1), static_cast<long long>(binom(n, k)))};
}

void write_blocks(const CoverDesign& d, std::ostream& out) {
  for (std::uint64_t b : d.blocks) {
    const auto vs = mask_vertices(b);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i != 0) out << ' ';
      out << vs[i];
    }
    out << '\n';
  }
}

}  // namespace ucplab

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ucplab/covering.hpp"
#include "ucplab/graphs.hpp"
#include "ucplab/hypergraph.hpp"
#include "ucplab/rational.hpp"

namespace ucplab {

// Seedable generator with explicit stream splitting: stream i of seed s is a
// mersenne twister seeded with splitmix64 applied to (s, i). Bounded draws
// use rejection sampling and shuffles are plain Fisher-Yates, so identical
// (seed, stream) pairs reproduce bit-identically across platforms.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform on [0, bound)

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Relabels every hyperedge by the bijection pi (1-based, pi[v-1] is the
// image of v).
Hypergraph permute_hypergraph(const Hypergraph& h, std::span<const int> pi);

struct PermutedUnion {
  Hypergraph source;
  std::vector<std::vector<int>> permutations;  // one per stream 1..s
  Hypergraph hypergraph_union;
};

PermutedUnion permuted_union(const Hypergraph& source, int s, std::uint64_t seed);

// Number of index sets I with sum_{i in I} sizes[i] == d; requires every
// size >= 2 and 2 <= d <= floor(m/2). The count never exceeds
// binom(floor(m/2), floor(d/2)).
std::uint64_t count_component_unions(std::span<const int> sizes, int d);

struct DisconnectEstimate {
  double estimate = 0.0;  // Monte-Carlo frequency
  int samples = 0;
  Rational bound;                  // binom(m/2, d/2) / binom(m, d)
  std::optional<Rational> exact;   // full enumeration, available for m <= 10
};

// Probability that a uniformly random relabeling of g leaves no edge between
// a fixed d-subset and the rest. g must have no isolated vertices and
// 2 <= d <= m/2.
DisconnectEstimate estimate_disconnect_probability(const Graph& g, int d, int samples,
                                                   std::uint64_t seed);

// Hyperedges A v {u, v} chaining the components of G(h, A); requires that
// restriction to be disconnected. Representatives are the component minima,
// chained in ascending order.
std::vector<std::uint64_t> repair_bad_set(const Hypergraph& h, std::uint64_t base_mask);

struct RepairReport {
  std::vector<std::uint64_t> bad_sets;  // bad (k-1)-sets of the initial union
  std::vector<std::uint64_t> added;     // hyperedges added by the repair loop
  std::size_t union_size = 0;           // |H*| before repair and pruning
  int rounds = 0;
};

struct BuildResult {
  Hypergraph hypergraph;  // H** with connected restrictions
  RepairReport report;
  CoverDesign cover;
  int s = 0;
  std::uint64_t seed = 0;
};

// Greedy cover, union of s seeded random relabelings, repair of the bad sets
// until every restriction is connected, then greedy removal of redundant
// hyperedges. Requires n > k+1 >= 3, s >= 3.
BuildResult build_connected_restrictions(int n, int k, int s, std::uint64_t seed);

}  // namespace ucplab

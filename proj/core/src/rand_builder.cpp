#include "ucplab/rand_builder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "ucplab/subsets.hpp"
#include "ucplab/symmetric.hpp"

namespace ucplab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ stream)) {}

std::uint64_t StreamRng::next() { return engine_(); }

std::uint64_t StreamRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("StreamRng::below: zero bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Hypergraph permute_hypergraph(const Hypergraph& h, std::span<const int> pi) {
  if (static_cast<int>(pi.size()) != h.n()) {
    throw std::invalid_argument("permute_hypergraph: permutation size mismatch");
  }
  std::uint64_t seen = 0;
  for (int image : pi) {
    if (image < 1 || image > h.n()) throw std::invalid_argument("permute_hypergraph: not a bijection");
    seen |= std::uint64_t{1} << (image - 1);
  }
  if (seen != (std::uint64_t{1} << h.n()) - 1) {
    throw std::invalid_argument("permute_hypergraph: not a bijection");
  }
  std::vector<std::uint64_t> edges;
  edges.reserve(h.size());
  for (std::uint64_t e : h.edges()) {
    std::uint64_t image = 0;
    std::uint64_t m = e;
    while (m != 0) {
      const int v = std::countr_zero(m) + 1;
      m &= m - 1;
      image |= std::uint64_t{1} << (pi[v - 1] - 1);
    }
    edges.push_back(image);
  }
  return Hypergraph(h.n(), h.k(), std::move(edges));
}

PermutedUnion permuted_union(const Hypergraph& source, int s, std::uint64_t seed) {
  if (s < 1) throw std::invalid_argument("permuted_union: need s >= 1");
  PermutedUnion out{source, {}, Hypergraph(source.n(), source.k())};
  std::vector<std::uint64_t> edges;
  for (int i = 1; i <= s; ++i) {
    std::vector<int> pi(source.n());
    std::iota(pi.begin(), pi.end(), 1);
    StreamRng rng(seed, static_cast<std::uint64_t>(i));
    rng.shuffle(pi);
    const Hypergraph copy = permute_hypergraph(source, pi);
    edges.insert(edges.end(), copy.edges().begin(), copy.edges().end());
    out.permutations.push_back(std::move(pi));
  }
  out.hypergraph_union = Hypergraph(source.n(), source.k(), std::move(edges));
  return out;
}

std::uint64_t count_component_unions(std::span<const int> sizes, int d) {
  int m = 0;
  for (int a : sizes) {
    if (a < 2) throw std::invalid_argument("count_component_unions: component sizes must be >= 2");
    m += a;
  }
  if (d < 2 || d > m / 2) {
    throw std::invalid_argument("count_component_unions: need 2 <= d <= floor(m/2)");
  }
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int a : sizes) {
    for (int t = d; t >= a; --t) ways[t] += ways[t - a];
  }
  return ways[d];
}

DisconnectEstimate estimate_disconnect_probability(const Graph& g, int d, int samples,
                                                   std::uint64_t seed) {
  const int m = g.num_vertices;
  if (d < 2 || 2 * d > m) {
    throw std::invalid_argument("estimate_disconnect_probability: need 2 <= d <= m/2");
  }
  const auto comp = connected_components(g);
  std::vector<char> isolated(m, 1);
  for (const auto& [a, b] : g.edges) {
    isolated[a] = 0;
    isolated[b] = 0;
  }
  for (int v = 0; v < m; ++v) {
    if (isolated[v]) {
      throw std::invalid_argument("estimate_disconnect_probability: isolated vertex");
    }
  }
  const int num_comps = 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<int> comp_size(num_comps, 0);
  for (int c : comp) ++comp_size[c];

  DisconnectEstimate out;
  out.samples = samples;
  out.bound = Rational(static_cast<long long>(binom(m / 2, d / 2)),
                       static_cast<long long>(binom(m, d)));

  if (m <= 10) {
    // Exhaustive: count d-subsets that are unions of components.
    std::uint64_t hits = 0;
    std::vector<int> inside(num_comps);
    for_each_subset(m, d, [&](std::uint64_t z) {
      std::fill(inside.begin(), inside.end(), 0);
      std::uint64_t t = z;
      while (t != 0) {
        const int v = std::countr_zero(t);
        t &= t - 1;
        ++inside[comp[v]];
      }
      for (int c = 0; c < num_comps; ++c) {
        if (inside[c] != 0 && inside[c] != comp_size[c]) return;
      }
      ++hits;
    });
    out.exact = Rational(static_cast<long long>(hits), static_cast<long long>(binom(m, d)));
  }

  StreamRng rng(seed, 0);
  std::vector<int> order(m);
  std::vector<int> inside(num_comps);
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    std::iota(order.begin(), order.end(), 0);
    // partial Fisher-Yates: the first d entries are a uniform d-subset
    for (int i = 0; i < d; ++i) {
      const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
      std::swap(order[i], order[j]);
    }
    std::fill(inside.begin(), inside.end(), 0);
    for (int i = 0; i < d; ++i) ++inside[comp[order[i]]];
    bool union_of_components = true;
    for (int c = 0; c < num_comps; ++c) {
      if (inside[c] != 0 && inside[c] != comp_size[c]) {
        union_of_components = false;
        break;
      }
    }
    if (union_of_components) ++hits;
  }
  out.estimate = samples > 0 ? static_cast<double>(hits) / samples : 0.0;
  return out;
}

std::vector<std::uint64_t> repair_bad_set(const Hypergraph& h, std::uint64_t base_mask) {
  const auto comps = restriction_components(h, base_mask);
  if (comps.size() <= 1) {
    throw std::invalid_argument("repair_bad_set: restriction already connected");
  }
  std::vector<int> reps;
  reps.reserve(comps.size());
  for (const auto& c : comps) reps.push_back(c.front());
  std::sort(reps.begin(), reps.end());
  std::vector<std::uint64_t> added;
  added.reserve(reps.size() - 1);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    added.push_back(base_mask | (std::uint64_t{1} << (reps[i - 1] - 1)) |
                    (std::uint64_t{1} << (reps[i] - 1)));
  }
  return added;
}

namespace {

// Can edge `removed` go without disconnecting any restriction? Only the
// (k-1)-subsets of the removed edge are affected.
bool removable_edge(const std::vector<std::uint64_t>& edges, std::size_t removed, int n, int k) {
  const std::uint64_t gone = edges[removed];
  const auto vertices = mask_vertices(gone);
  std::vector<int> parent(n + 1);
  const int sz = static_cast<int>(vertices.size());
  for (int i = 0; i < sz; ++i) {
    for (int j = i + 1; j < sz; ++j) {
      const std::uint64_t base = gone & ~((std::uint64_t{1} << (vertices[i] - 1)) |
                                          (std::uint64_t{1} << (vertices[j] - 1)));
      for (int v = 1; v <= n; ++v) parent[v] = v;
      const auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      int unions = 0;
      for (std::size_t t = 0; t < edges.size(); ++t) {
        if (t == removed) continue;
        const std::uint64_t e = edges[t];
        if ((base & ~e) != 0) continue;
        const std::uint64_t rest = e & ~base;
        const int a = std::countr_zero(rest) + 1;
        const int b = 63 - std::countl_zero(rest) + 1;
        const int ra = root(a);
        const int rb = root(b);
        if (ra != rb) {
          parent[std::max(ra, rb)] = std::min(ra, rb);
          ++unions;
        }
      }
      if (unions != n - (k - 1) - 1) return false;
    }
  }
  return true;
}

// Greedy removal of redundant hyperedges in colex order, to a fixed point.
// Every hypergraph with connected restrictions stays one, and all size
// bounds only improve.
std::vector<std::uint64_t> prune_connected(std::vector<std::uint64_t> edges, int n, int k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (removable_edge(edges, i, n, k)) {
        edges.erase(edges.begin() + static_cast<long>(i));
        changed = true;
        --i;
      }
    }
  }
  return edges;
}

}  // namespace

BuildResult build_connected_restrictions(int n, int k, int s, std::uint64_t seed) {
  if (!(n > k + 1 && k + 1 >= 3)) {
    throw std::invalid_argument("build_connected_restrictions: need n > k+1 >= 3");
  }
  if (s < 3) throw std::invalid_argument("build_connected_restrictions: need s >= 3");

  CoverDesign cover = greedy_cover(n, k);
  Hypergraph source(n, k, cover.blocks);
  PermutedUnion pu = permuted_union(source, s, seed);

  Hypergraph h = pu.hypergraph_union;
  RepairReport report;
  report.bad_sets = check_connected_restrictions(h, /*collect_all=*/true).bad_sets;

  std::vector<std::uint64_t> pending = report.bad_sets;
  while (!pending.empty()) {
    ++report.rounds;
    for (std::uint64_t base : pending) {
      if (restriction_components(h, base).size() <= 1) continue;
      for (std::uint64_t e : repair_bad_set(h, base)) {
        h.add_edge(e);
        report.added.push_back(e);
      }
    }
    pending = check_connected_restrictions(h, /*collect_all=*/true).bad_sets;
  }

  std::vector<std::uint64_t> edges(h.edges().begin(), h.edges().end());
  report.union_size = edges.size() - report.added.size();
  Hypergraph pruned(n, k, prune_connected(std::move(edges), n, k));

  return BuildResult{std::move(pruned), std::move(report), std::move(cover), s, seed};
}

}  // namespace ucplab

#include "ucplab/graphs.hpp"

#include <numeric>

namespace ucplab {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : g.edges) {
    const int ra = find_root(parent, a);
    const int rb = find_root(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> comp(g.num_vertices, -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    const int r = find_root(parent, v);
    if (comp[r] == -1) comp[r] = next++;
    comp[v] = comp[r];
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices <= 1) return true;
  const auto comp = connected_components(g);
  for (int c : comp) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace ucplab

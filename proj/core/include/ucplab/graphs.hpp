#pragma once

#include <utility>
#include <vector>

namespace ucplab {

// Simple undirected graph on vertices 0..num_vertices-1.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Component id per vertex; ids are assigned in order of the smallest vertex
// of each component.
std::vector<int> connected_components(const Graph& g);

// Spanning connectivity: a graph on zero or one vertices is connected.
bool is_connected(const Graph& g);

}  // namespace ucplab

#include "ucplab/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ucplab/subsets.hpp"

namespace ucplab {

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k > n - 1 || n > 62) {
    throw std::invalid_argument("Hypergraph: need 1 <= k <= n-1 and n <= 62");
  }
}

Hypergraph::Hypergraph(int n, int k, std::vector<std::uint64_t> edges) : Hypergraph(n, k) {
  for (std::uint64_t e : edges) check_edge(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

void Hypergraph::check_edge(std::uint64_t mask) const {
  if (std::popcount(mask) != k_ + 1) {
    throw std::invalid_argument("Hypergraph: hyperedge is not a (k+1)-set");
  }
  if (mask >= (std::uint64_t{1} << n_)) {
    throw std::invalid_argument("Hypergraph: vertex out of range");
  }
}

void Hypergraph::add_edge(std::uint64_t mask) {
  check_edge(mask);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), mask);
  if (it != edges_.end() && *it == mask) return;
  edges_.insert(it, mask);
}

bool Hypergraph::contains(std::uint64_t mask) const {
  return std::binary_search(edges_.begin(), edges_.end(), mask);
}

Hypergraph read_hypergraph(std::istream& in, std::optional<int> n_override) {
  std::vector<std::uint64_t> edges;
  int edge_size = -1;
  int max_vertex = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> vertices;
    long long v;
    while (ls >> v) {
      if (v < 1 || v > 62) throw ParseError(line_no, "vertex index out of range");
      vertices.push_back(static_cast<int>(v));
      max_vertex = std::max(max_vertex, static_cast<int>(v));
    }
    if (!ls.eof()) throw ParseError(line_no, "not a vertex index");
    if (vertices.empty()) continue;
    if (edge_size == -1) {
      edge_size = static_cast<int>(vertices.size());
      if (edge_size < 2) throw ParseError(line_no, "hyperedges need at least two vertices");
    } else if (static_cast<int>(vertices.size()) != edge_size) {
      throw ParseError(line_no, "non-uniform hyperedge");
    }
    const std::uint64_t mask = vertex_mask(vertices);
    if (std::popcount(mask) != edge_size) throw ParseError(line_no, "repeated vertex in hyperedge");
    edges.push_back(mask);
  }
  if (edge_size == -1) throw ParseError(line_no, "no hyperedges in input");
  const int n = n_override.value_or(max_vertex);
  if (n < max_vertex) throw ParseError(line_no, "vertex count override below largest vertex");
  return Hypergraph(n, edge_size - 1, std::move(edges));
}

void write_hypergraph(const Hypergraph& h, std::ostream& out,
                      std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "# " << c << '\n';
  for (std::uint64_t e : h.edges()) {
    const auto vs = mask_vertices(e);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i != 0) out << ' ';
      out << vs[i];
    }
    out << '\n';
  }
}

}  // namespace ucplab

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucplab/parse_error.hpp"

namespace ucplab {

// (k+1)-uniform set system on vertices 1..n, hyperedges as bitmasks in
// numeric (colex) order with set semantics.
class Hypergraph {
 public:
  Hypergraph(int n, int k);
  Hypergraph(int n, int k, std::vector<std::uint64_t> edges);

  void add_edge(std::uint64_t mask);
  bool contains(std::uint64_t mask) const;

  int n() const { return n_; }
  int k() const { return k_; }
  int edge_size() const { return k_ + 1; }
  std::size_t size() const { return edges_.size(); }
  std::span<const std::uint64_t> edges() const { return edges_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void check_edge(std::uint64_t mask) const;

  int n_;
  int k_;
  std::vector<std::uint64_t> edges_;
};

// File format: one hyperedge per line as space-separated vertex indices,
// '#' starts a comment line. The vertex count defaults to the largest vertex
// mentioned unless overridden.
Hypergraph read_hypergraph(std::istream& in, std::optional<int> n_override = {});
void write_hypergraph(const Hypergraph& h, std::ostream& out,
                      std::span<const std::string> comments = {});

}  // namespace ucplab

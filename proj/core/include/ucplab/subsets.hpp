#pragma once

#include <cstdint>
#include <vector>

namespace ucplab {

// Binomial coefficient; exact for the parameter ranges used here (n <= 62).
std::uint64_t binom(int n, int k);

// ceil(a / b) for positive b.
std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

// k-subsets of {0,...,n-1} as bitmasks. For a fixed k, colex order on the
// subsets coincides with numeric order of the masks, so enumeration is a
// Gosper walk and ranks come from the combinatorial number system.
std::uint64_t first_subset_mask(int k);
std::uint64_t next_subset_mask(std::uint64_t mask);
std::uint64_t colex_rank(std::uint64_t mask);

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  for (std::uint64_t m = first_subset_mask(k); m < limit; m = next_subset_mask(m)) {
    fn(m);
  }
}

// Vertices are 1-based everywhere; bit (v-1) of a mask stands for vertex v.
std::vector<int> mask_vertices(std::uint64_t mask);
std::uint64_t vertex_mask(const std::vector<int>& vertices);

}  // namespace ucplab

#include "ucplab/subsets.hpp"

#include <array>
#include <bit>
#include <cassert>

namespace ucplab {

namespace {

constexpr int kMaxN = 62;

const std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> t{};
    for (int n = 0; n <= kMaxN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  assert(n <= kMaxN);
  return pascal()[n][k];
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

std::uint64_t first_subset_mask(int k) {
  assert(k >= 1 && k < 64);
  return (std::uint64_t{1} << k) - 1;
}

std::uint64_t next_subset_mask(std::uint64_t m) {
  assert(m != 0);
  const std::uint64_t c = m & (~m + 1);
  const std::uint64_t r = m + c;
  return r | (((m ^ r) >> 2) / c);
}

std::uint64_t colex_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask != 0) {
    const int pos = std::countr_zero(mask);
    rank += binom(pos, i);
    ++i;
    mask &= mask - 1;
  }
  return rank;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t vertex_mask(const std::vector<int>& vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    assert(v >= 1 && v <= 64);
    mask |= std::uint64_t{1} << (v - 1);
  }
  return mask;
}

}  // namespace ucplab

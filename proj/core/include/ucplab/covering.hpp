#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ucplab/rational.hpp"

namespace ucplab {

// A system of r-subsets of {1..n} meant to contain every k-subset in at
// least one block.
struct CoverDesign {
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<std::uint64_t> blocks;
};

// Max-coverage greedy with r = k+1; ties broken by the colex-least block.
// The greedy guarantee keeps the size within the classical
// (1/(k+1)) C(n,k) (1+ln(k+1)) bound.
CoverDesign greedy_cover(int n, int k);

// Exhaustive check of the covering property (and of the block shapes).
bool verify_cover(const CoverDesign& d);

// ceil(n/r ceil((n-1)/(r-1) ... )) recursive lower bound.
long long schonheim_bound(int n, int r, int k);

// (1/(k+1)) C(n,k) (1 + ln(k+1)), valid for n > k >= 2.
double es74_bound(int n, int k);

// Exact covering and Turan numbers by branch and bound. Guarded to n <= 9;
// larger instances throw std::domain_error. The two run the same search on
// the two incidence structures, which keeps the duality check two-route.
int exact_cover_number(int n, int r, int k);
int exact_turan_number(int n, int ell, int t);

// A system of t-subsets such that every ell-subset contains one.
struct TuranSystem {
  int n = 0;
  int ell = 0;
  int t = 0;
  std::vector<std::uint64_t> blocks;
};

// Complementing blocks turns a C(n,r,k) cover into a T(n,n-k,n-r) system.
TuranSystem turan_from_cover(const CoverDesign& d);
CoverDesign cover_from_turan(const TuranSystem& s);
bool verify_turan(const TuranSystem& s);

// mu(n,k) = coverSize (k+1) / C(n,k); exactly 1 at the counting lower bound.
struct MuEstimate {
  int n = 0;
  int k = 0;
  long long cover_size = 0;
  Rational mu;
};
MuEstimate mu_of(int n, int k, long long cover_size);

// One block per line, space-separated vertex indices.
void write_blocks(const CoverDesign& d, std::ostream& out);

}  // namespace ucplab

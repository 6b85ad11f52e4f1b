#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ameforge {

using cplx = std::complex<double>;

// Default tolerance for every unitarity / normalization / uniformity check.
inline constexpr double kDefaultTol = 1e-10;

// Thrown when eigenvalues or other numerics leave the trusted range.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic 64-bit mixer; used to derive independent per-restart and
// per-sample RNG seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// All k-element subsets of {0..n-1} in lexicographic order of the sorted
// element lists. This ordering is the deterministic merge order for every
// parallel loop over subsets.
std::vector<std::vector<int>> k_subsets(int n, int k);

std::vector<int> subset_complement(const std::vector<int>& subset, int n);

}  // namespace ameforge

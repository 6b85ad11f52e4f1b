#include "ameforge/common.hpp"

namespace ameforge {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> subset_complement(const std::vector<int>& subset, int n) {
  std::vector<int> out;
  out.reserve(n - subset.size());
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    if (pos < subset.size() && subset[pos] == i) {
      ++pos;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace ameforge

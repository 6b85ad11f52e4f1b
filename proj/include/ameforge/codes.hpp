#pragma once

#include <optional>
#include <vector>

#include "ameforge/state.hpp"

namespace ameforge {

// Length-N words over {0..d-1} with cached minimum distance.
struct Code {
  int length = 0;
  int base = 2;
  std::vector<std::vector<int>> words;

  Code() = default;
  Code(int length, int base, std::vector<std::vector<int>> words);

  std::int64_t size() const { return static_cast<std::int64_t>(words.size()); }
  int min_distance() const;  // throws on fewer than two words

 private:
  mutable int cached_distance_ = -1;
};

int hamming_distance(const std::vector<int>& x, const std::vector<int>& y);

// Singleton bound: M <= d^{N - delta + 1}; MDS iff equality.
bool is_mds(const Code& code);

// Necessary alphabet bound for an MDS code with M = d^{floor(N/2)} words and
// distance floor(N/2)+1 (equivalently a minimal-support maximally entangled
// state): d >= floor(N/2) + 1.
bool existence_bound(int length, int base);

// Generator of the doubly-extended Reed-Solomon code for prime d: k = (d+1)/2
// rows, d+1 columns; column 0 evaluates at zero, column 1 is the degree tail,
// columns 2.. evaluate at 1..d-1.
std::vector<std::vector<int>> rs_generator(int d);
Code rs_code(int d);

struct GreedyResult {
  Code code;        // on failure: the maximal greedy set (certificate)
  bool success = false;
};

// Scan all d^N words in ascending base-d order, keeping a word iff it is at
// distance >= floor(N/2)+1 from every kept word; success iff d^{floor(N/2)}
// words survive. Sequential by definition (order-dependent).
GreedyResult greedy_mds_search(int length, int base);

// Keep the words starting with 0 and strip the leading letter (N -> N-1).
Code shorten_code(const Code& code);
// Delete one position from every word (N-1 -> N-2).
Code drop_letter(const Code& code, int position);

// Equal-weight superposition over the code words; optional per-word phases.
PureState code_to_state(const Code& code, const std::vector<cplx>& phases = {});
// Requires all nonzero amplitudes to share one modulus.
Code state_to_code(const PureState& state, double tol = kDefaultTol);

}  // namespace ameforge

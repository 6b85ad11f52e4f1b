#include "ameforge/codes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ameforge/gf.hpp"

namespace ameforge {

Code::Code(int length, int base, std::vector<std::vector<int>> words)
    : length(length), base(base), words(std::move(words)) {
  std::vector<std::vector<int>> sorted = this->words;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (static_cast<int>(sorted[i].size()) != length)
      throw std::domain_error("all code words must have the stated length");
    for (int v : sorted[i]) {
      if (v < 0 || v >= base) throw std::domain_error("code letter out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::domain_error("duplicate code word");
  }
}

int hamming_distance(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw std::domain_error("words must have equal length");
  int dist = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) ++dist;
  }
  return dist;
}

int Code::min_distance() const {
  if (words.size() < 2)
    throw std::domain_error("minimum distance requires at least two words");
  if (cached_distance_ < 0) {
    int best = length;
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        best = std::min(best, hamming_distance(words[i], words[j]));
      }
    }
    cached_distance_ = best;
  }
  return cached_distance_;
}

bool is_mds(const Code& code) {
  int delta = code.min_distance();
  return code.size() == ipow(code.base, code.length - delta + 1);
}

bool existence_bound(int length, int base) {
  if (length < 2 || base < 2) throw std::domain_error("need N >= 2 and d >= 2");
  return base >= length / 2 + 1;
}

std::vector<std::vector<int>> rs_generator(int d) {
  if (!GaloisField::is_prime(d)) throw std::domain_error("generator requires prime d");
  if (d % 2 == 0) throw std::domain_error("generator requires odd d (even word length)");
  if (d > 13) throw std::domain_error("generator limited to d <= 13");
  const int n = d + 1;
  const int k = n / 2;
  // Column 0 evaluates all monomials at zero; column 1 carries the top
  // monomial alone; columns 2..d evaluate at the nonzero points 1..d-1.
  std::vector<std::vector<int>> g(k, std::vector<int>(n, 0));
  for (int r = 0; r < k; ++r) {
    g[r][0] = (r == 0) ? 1 : 0;
    g[r][1] = (r == k - 1) ? 1 : 0;
    for (int j = 1; j < d; ++j) {
      int value = 1;
      for (int e = 0; e < r; ++e) value = (value * j) % d;
      g[r][1 + j] = value;
    }
  }
  return g;
}

Code rs_code(int d) {
  auto g = rs_generator(d);
  const int n = d + 1;
  const int k = n / 2;
  std::vector<std::vector<int>> words;
  const std::int64_t count = ipow(d, k);
  for (std::int64_t u = 0; u < count; ++u) {
    std::vector<int> coeffs(k);
    std::int64_t uu = u;
    for (int r = k - 1; r >= 0; --r) {
      coeffs[r] = static_cast<int>(uu % d);
      uu /= d;
    }
    std::vector<int> word(n, 0);
    for (int c = 0; c < n; ++c) {
      int acc = 0;
      for (int r = 0; r < k; ++r) acc = (acc + coeffs[r] * g[r][c]) % d;
      word[c] = acc;
    }
    words.push_back(std::move(word));
  }
  return Code(n, d, std::move(words));
}

GreedyResult greedy_mds_search(int length, int base) {
  const std::int64_t total = ipow(base, length);
  if (total > 10'000'000) throw std::domain_error("word space too large for the greedy scan");
  const int need_distance = length / 2 + 1;
  const std::int64_t target = ipow(base, length / 2);

  std::vector<std::vector<int>> kept;
  std::vector<int> word(length, 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t ii = idx;
    for (int p = length - 1; p >= 0; --p) {
      word[p] = static_cast<int>(ii % base);
      ii /= base;
    }
    bool ok = true;
    for (const auto& w : kept) {
      if (hamming_distance(word, w) < need_distance) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(word);
  }

  GreedyResult result;
  result.success = static_cast<std::int64_t>(kept.size()) == target;
  result.code = Code(length, base, std::move(kept));
  return result;
}

Code shorten_code(const Code& code) {
  if (!is_mds(code)) throw std::domain_error("shortening requires an MDS code");
  std::vector<std::vector<int>> words;
  for (const auto& w : code.words) {
    if (w[0] == 0) words.emplace_back(w.begin() + 1, w.end());
  }
  return Code(code.length - 1, code.base, std::move(words));
}

Code drop_letter(const Code& code, int position) {
  if (!is_mds(code)) throw std::domain_error("letter dropping requires an MDS code");
  if (position < 0 || position >= code.length)
    throw std::domain_error("drop position out of range");
  std::vector<std::vector<int>> words;
  for (const auto& w : code.words) {
    std::vector<int> out;
    out.reserve(code.length - 1);
    for (int i = 0; i < code.length; ++i) {
      if (i != position) out.push_back(w[i]);
    }
    words.push_back(std::move(out));
  }
  return Code(code.length - 1, code.base, std::move(words));
}

PureState code_to_state(const Code& code, const std::vector<cplx>& phases) {
  if (!phases.empty() && phases.size() != code.words.size())
    throw std::domain_error("phase list must match the word count");
  const double amp = 1.0 / std::sqrt(static_cast<double>(code.size()));
  std::vector<std::pair<std::vector<int>, cplx>> terms;
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    cplx phase = phases.empty() ? cplx(1.0, 0.0) : phases[i] / std::abs(phases[i]);
    terms.emplace_back(code.words[i], amp * phase);
  }
  return PureState::from_terms(code.length, code.base, terms);
}

Code state_to_code(const PureState& state, double tol) {
  auto terms = state.terms(tol);
  if (terms.empty()) throw std::domain_error("state has empty support");
  double modulus = std::abs(terms.front().second);
  std::vector<std::vector<int>> words;
  for (const auto& [word, a] : terms) {
    if (std::abs(std::abs(a) - modulus) > tol)
      throw std::domain_error("state amplitudes do not share one modulus");
    words.push_back(word);
  }
  return Code(state.num_parties(), state.local_dim(), std::move(words));
}

}  // namespace ameforge

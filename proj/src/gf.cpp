#include "ameforge/gf.hpp"

#include <map>

namespace ameforge {

namespace {

// Fixed irreducible polynomials (coefficients packed base p, least significant
// digit = constant term) so every derived design is deterministic.
const std::map<int, int>& irreducible_polys() {
  static const std::map<int, int> polys = {
      {4, 0b111},        // x^2 + x + 1
      {8, 0b1011},       // x^3 + x + 1
      {9, 1 * 9 + 0 + 1},  // x^2 + 1 -> digits (1,0,1) base 3 = 10
      {16, 0b10011},     // x^4 + x + 1
      {25, 1 * 25 + 1 * 5 + 2},   // x^2 + x + 2
      {27, 1 * 27 + 2 * 3 + 1},   // x^3 + 2x + 1
      {32, 0b100101},    // x^5 + x^2 + 1
      {49, 1 * 49 + 1 * 7 + 3},   // x^2 + x + 3
      {64, 0b1000011},   // x^6 + x + 1
  };
  return polys;
}

std::vector<int> to_digits(int value, int p, int len) {
  std::vector<int> d(len, 0);
  for (int i = 0; i < len && value > 0; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

}  // namespace

bool GaloisField::is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool GaloisField::prime_power(int n, int& p, int& m) {
  if (n < 2) return false;
  for (int f = 2; f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      m = 0;
      while (n > 1) {
        if (n % f != 0) return false;
        n /= f;
        ++m;
      }
      return is_prime(p);
    }
  }
  return false;
}

GaloisField::GaloisField(int order) : q_(order) {
  if (!prime_power(order, p_, m_))
    throw std::domain_error("field order must be a prime power");
  if (order > 64) throw std::domain_error("field order limited to 64");

  mul_.assign(q_ * q_, 0);
  if (m_ == 1) {
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) mul_[a * q_ + b] = (a * b) % p_;
    }
  } else {
    auto it = irreducible_polys().find(q_);
    if (it == irreducible_polys().end())
      throw std::domain_error("no irreducible polynomial registered for this order");
    std::vector<int> poly = to_digits(it->second, p_, m_ + 1);
    for (int a = 0; a < q_; ++a) {
      std::vector<int> da = to_digits(a, p_, m_);
      for (int b = 0; b < q_; ++b) {
        std::vector<int> db = to_digits(b, p_, m_);
        std::vector<int> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i) {
          for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        // Reduce modulo the irreducible polynomial (leading coefficient 1).
        for (int deg = 2 * m_ - 2; deg >= m_; --deg) {
          int coef = prod[deg];
          if (coef == 0) continue;
          prod[deg] = 0;
          for (int i = 0; i <= m_; ++i) {
            int pos = deg - m_ + i;
            prod[pos] = ((prod[pos] - coef * poly[i]) % p_ + p_) % p_;
          }
        }
        prod.resize(m_);
        mul_[a * q_ + b] = from_digits(prod, p_);
      }
    }
  }

  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

int GaloisField::add(int a, int b) const {
  std::vector<int> da = to_digits(a, p_, m_);
  std::vector<int> db = to_digits(b, p_, m_);
  for (int i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da, p_);
}

int GaloisField::neg(int a) const {
  std::vector<int> da = to_digits(a, p_, m_);
  for (int i = 0; i < m_; ++i) da[i] = (p_ - da[i]) % p_;
  return from_digits(da, p_);
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

int GaloisField::pow(int a, int e) const {
  int r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

}  // namespace ameforge

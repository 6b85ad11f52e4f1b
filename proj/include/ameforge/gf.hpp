#pragma once

#include <vector>

#include "ameforge/common.hpp"

namespace ameforge {

// GF(p^m) with elements encoded as integers 0..p^m-1: the base-p digits of an
// element are its polynomial coefficients, least significant digit = constant
// term. Arithmetic tables are built once at construction.
class GaloisField {
 public:
  explicit GaloisField(int order);  // order = p^m <= 64

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws on a == 0
  int pow(int a, int e) const;

  static bool is_prime(int n);
  // Decomposes n = p^m for prime p; returns false if n is not a prime power.
  static bool prime_power(int n, int& p, int& m);

 private:
  int p_, m_, q_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

}  // namespace ameforge

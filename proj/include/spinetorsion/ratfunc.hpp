#pragma once

#include <string>

#include "spinetorsion/poly.hpp"

namespace spinetorsion {

/// Element of Q(t1..tr): num/den coprime in Z[t], den with positive
/// leading coefficient.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  /// t1^e1 ... tr^er with arbitrary integer exponents.
  static RatFunc laurent_monomial(const std::vector<int>& exponents);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  bool operator==(const RatFunc& o) const = default;

  /// Representative of {x, -x}: numerator with positive leading coefficient.
  /// `sign` receives +1 or -1 with x = sign * result.
  RatFunc up_to_sign(int* sign = nullptr) const;

  std::string to_string() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

}  // namespace spinetorsion

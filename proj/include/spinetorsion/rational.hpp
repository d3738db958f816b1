#pragma once

#include <gmpxx.h>

#include <string>

#include "spinetorsion/errors.hpp"

namespace spinetorsion {

class Rational {
 public:
  Rational() = default;
  Rational(long c) : v_(c) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }  // NOLINT(google-explicit-constructor)

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const {
    if (is_zero()) throw SpineError(ErrorCode::InvalidArgument, "division by zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this *= o.inverse(); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  bool operator==(const Rational& o) const { return v_ == o.v_; }

  Rational up_to_sign(int* sign = nullptr) const {
    int s = v_ < 0 ? -1 : 1;
    if (sign) *sign = s;
    return s > 0 ? *this : -*this;
  }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace spinetorsion

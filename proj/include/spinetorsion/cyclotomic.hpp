#pragma once

#include <memory>
#include <string>

#include "spinetorsion/upoly.hpp"

namespace spinetorsion {

struct CycloContext {
  int order;
  UPoly modulus;  // the order-th cyclotomic polynomial
};

/// Element of Q(zeta_n), stored as a polynomial in zeta of degree < phi(n).
/// Elements built from integers carry no order and adapt to the order of
/// whatever they are combined with.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpq_class& c) : value_(std::vector<mpq_class>{c}) {}  // NOLINT

  /// zeta_n^k.
  static Cyclotomic zeta_power(int n, long k);
  static Cyclotomic from_poly(int n, const UPoly& p);

  int order() const { return ctx_ ? ctx_->order : 0; }
  const UPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  bool operator==(const Cyclotomic& o) const { return value_ == o.value_; }

  /// Representative of {x, -x}: highest nonzero coefficient positive.
  Cyclotomic up_to_sign(int* sign = nullptr) const;

  std::string to_string() const;

 private:
  static std::shared_ptr<const CycloContext> context(int n);
  static std::shared_ptr<const CycloContext> join(const Cyclotomic& a, const Cyclotomic& b);

  std::shared_ptr<const CycloContext> ctx_;
  UPoly value_;
};

}  // namespace spinetorsion

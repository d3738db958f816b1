#pragma once

// Univariate polynomials over Q.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace spinetorsion {

class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<mpq_class> coeffs);

  static UPoly x_pow(int k);

  const std::vector<mpq_class>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const mpq_class& lead() const { return c_.back(); }
  mpq_class coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  bool operator==(const UPoly& o) const = default;

  UPoly scaled(const mpq_class& s) const;
  UPoly monic() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, or 0

/// Solves s*a + t*b = gcd(a,b); returns the gcd.
UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);

/// The n-th cyclotomic polynomial.
UPoly cyclotomic_polynomial(int n);

/// Canonical representative modulo units c*t^k (c rational): lowest term
/// removed, integer primitive, positive leading coefficient.
UPoly normalize_laurent_unit(const UPoly& p);

}  // namespace spinetorsion

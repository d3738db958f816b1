#pragma once

// Multivariate polynomials with integer coefficients in t1..tr.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace spinetorsion {

/// Exponent vector with trailing zeros removed; std::vector ordering is then
/// the lexicographic monomial order with t1 most significant.
using Monomial = std::vector<int>;

class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Monomial& m, const mpz_class& c = 1);
  static Poly variable(int index, int power = 1);

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int num_vars() const;  // highest variable index present + 1

  /// Leading term in lexicographic order.
  const Monomial& lead_monomial() const { return terms_.rbegin()->first; }
  const mpz_class& lead_coeff() const { return terms_.rbegin()->second; }

  mpz_class content() const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const = default;

  /// Degree in variable v (0 for the zero polynomial).
  int degree_in(int v) const;
  /// Lowest exponent of variable v over all terms.
  int min_degree_in(int v) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  std::map<Monomial, mpz_class> terms_;
};

/// Exact quotient a / b; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Returns true and sets q when b divides a.
bool try_div(const Poly& a, const Poly& b, Poly& q);

/// Greatest common divisor with positive leading coefficient (0 if both 0).
Poly gcd(const Poly& a, const Poly& b);

/// Multiplies by t1^e1...tr^er (exponents may be negative if divisible).
Poly shift(const Poly& p, const Monomial& by);

std::string monomial_string(const Monomial& m, const std::string& var = "t", bool single = false);

}  // namespace spinetorsion

#include "spinetorsion/upoly.hpp"

#include <sstream>

#include "spinetorsion/errors.hpp"

namespace spinetorsion {

UPoly::UPoly(long c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_pow(int k) {
  std::vector<mpq_class> c(k + 1, 0);
  c[k] = 1;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> c = c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(1 / lead()); }

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& x = c_[i];
    if (x == 0) continue;
    mpq_class a = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) os << a.get_str();
    else if (a == 1) os << mono;
    else os << a.get_str() << "*" << mono;
  }
  return os.str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw SpineError(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quo(std::max(0, a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    mpq_class f = rem[i] / b.lead();
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  mpq_class inv = 1 / r0.lead();
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

UPoly cyclotomic_polynomial(int n) {
  if (n <= 0) throw SpineError(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  UPoly p = UPoly::x_pow(n) - UPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    UPoly q, r;
    divmod(p, cyclotomic_polynomial(d), q, r);
    p = q;
  }
  return p;
}

UPoly normalize_laurent_unit(const UPoly& p) {
  if (p.is_zero()) return p;
  std::size_t low = 0;
  while (p.coeffs()[low] == 0) ++low;
  std::vector<mpq_class> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
  mpz_class den = 1, num = 0;
  for (const auto& x : c) den = lcm(den, mpz_class(x.get_den()));
  for (auto& x : c) {
    x *= den;
    num = gcd(num, mpz_class(x.get_num()));
  }
  mpq_class s = mpq_class(1) / mpq_class(num);
  if (c.back() < 0) s = -s;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

}  // namespace spinetorsion

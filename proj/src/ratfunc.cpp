#include "spinetorsion/ratfunc.hpp"

#include "spinetorsion/errors.hpp"

namespace spinetorsion {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw SpineError(ErrorCode::InvalidArgument, "zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!(g == Poly(1))) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (den_.lead_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::laurent_monomial(const std::vector<int>& exponents) {
  Monomial up, down;
  for (int e : exponents) {
    up.push_back(e > 0 ? e : 0);
    down.push_back(e < 0 ? -e : 0);
  }
  RatFunc r;
  r.num_ = Poly::monomial(up);
  r.den_ = Poly::monomial(down);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw SpineError(ErrorCode::InvalidArgument, "division by zero");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_ == Poly(1) && b.den_ == Poly(1)) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // Cross-cancel before multiplying to keep the gcd small.
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  RatFunc r;
  r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  if (r.den_.lead_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::up_to_sign(int* sign) const {
  int s = (!num_.is_zero() && num_.lead_coeff() < 0) ? -1 : 1;
  if (sign) *sign = s;
  return s > 0 ? *this : -*this;
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace spinetorsion

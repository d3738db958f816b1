#include "spinetorsion/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "spinetorsion/errors.hpp"

namespace spinetorsion {

std::shared_ptr<const CycloContext> Cyclotomic::context(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CycloContext>(CycloContext{n, cyclotomic_polynomial(n)});
  return slot;
}

std::shared_ptr<const CycloContext> Cyclotomic::join(const Cyclotomic& a, const Cyclotomic& b) {
  if (!a.ctx_) return b.ctx_;
  if (!b.ctx_ || a.ctx_ == b.ctx_) return a.ctx_;
  throw SpineError(ErrorCode::InvalidArgument, "mixing cyclotomic fields of different orders");
}

Cyclotomic Cyclotomic::from_poly(int n, const UPoly& p) {
  Cyclotomic r;
  r.ctx_ = context(n);
  r.value_ = p % r.ctx_->modulus;
  return r;
}

Cyclotomic Cyclotomic::zeta_power(int n, long k) {
  long e = ((k % n) + n) % n;
  return from_poly(n, UPoly::x_pow(static_cast<int>(e)));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  r.value_ = -r.value_;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r;
  r.ctx_ = Cyclotomic::join(a, b);
  r.value_ = a.value_ + b.value_;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r;
  r.ctx_ = Cyclotomic::join(a, b);
  r.value_ = a.value_ * b.value_;
  if (r.ctx_ && r.value_.degree() >= r.ctx_->modulus.degree()) r.value_ = r.value_ % r.ctx_->modulus;
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw SpineError(ErrorCode::InvalidArgument, "division by zero");
  Cyclotomic r;
  r.ctx_ = ctx_;
  if (!ctx_ || value_.degree() == 0) {
    r.value_ = UPoly(std::vector<mpq_class>{1 / value_.lead()});
    return r;
  }
  UPoly s, t;
  ext_gcd(value_, ctx_->modulus, s, t);
  r.value_ = s % ctx_->modulus;
  return r;
}

Cyclotomic Cyclotomic::up_to_sign(int* sign) const {
  int s = (!is_zero() && value_.lead() < 0) ? -1 : 1;
  if (sign) *sign = s;
  return s > 0 ? *this : -*this;
}

std::string Cyclotomic::to_string() const {
  std::string s = value_.to_string("z");
  if (ctx_) s += " [z^" + std::to_string(ctx_->order) + "=1]";
  return s;
}

}  // namespace spinetorsion

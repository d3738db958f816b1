#include "spinetorsion/poly.hpp"

#include <algorithm>
#include <sstream>

#include "spinetorsion/errors.hpp"

namespace spinetorsion {

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

// a / b when every exponent stays non-negative.
bool mono_div(const Monomial& a, const Monomial& b, Monomial& q) {
  if (b.size() > a.size()) {
    for (std::size_t i = a.size(); i < b.size(); ++i)
      if (b[i] != 0) return false;
  }
  q = a;
  for (std::size_t i = 0; i < b.size() && i < a.size(); ++i) {
    q[i] -= b[i];
    if (q[i] < 0) return false;
  }
  trim(q);
  return true;
}

using UniView = std::vector<Poly>;  // coefficients by degree in one variable

UniView split(const Poly& p, int v) {
  UniView out(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int d = 0;
    if (v < static_cast<int>(rest.size())) {
      d = rest[v];
      rest[v] = 0;
      trim(rest);
    }
    out[d] += Poly::monomial(rest, c);
  }
  return out;
}

Poly join(const UniView& u, int v) {
  Poly out;
  for (std::size_t d = 0; d < u.size(); ++d) {
    if (u[d].is_zero()) continue;
    out += u[d] * Poly::variable(v, static_cast<int>(d));
  }
  return out;
}

void drop_zeros(UniView& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly uni_content(const UniView& u) {
  Poly c;
  for (const Poly& p : u) {
    c = gcd(c, p);
    if (c == Poly(1)) break;
  }
  return c;
}

UniView uni_primitive(const UniView& u) {
  Poly c = uni_content(u);
  UniView out;
  out.reserve(u.size());
  for (const Poly& p : u) out.push_back(exact_div(p, c));
  return out;
}

// Pseudo-remainder of a by b as polynomials in one variable.
UniView prem(UniView a, const UniView& b) {
  const Poly& lc = b.back();
  const int db = static_cast<int>(b.size()) - 1;
  drop_zeros(a);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift_by = static_cast<int>(a.size()) - 1 - db;
    Poly lead = a.back();
    for (auto& p : a) p *= lc;
    for (int i = 0; i <= db; ++i) a[i + shift_by] -= lead * b[i];
    drop_zeros(a);
  }
  return a;
}

Poly normalize_sign(Poly p) {
  if (!p.is_zero() && p.lead_coeff() < 0) p = -p;
  return p;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_[{}] = c;
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_[{}] = c;
}

Poly Poly::monomial(const Monomial& m, const mpz_class& c) {
  Poly p;
  Monomial t = m;
  trim(t);
  if (c != 0) p.terms_[t] = c;
  return p;
}

Poly Poly::variable(int index, int power) {
  Monomial m(index + 1, 0);
  m[index] = power;
  return monomial(m);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int Poly::num_vars() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, static_cast<int>(m.size()));
  return n;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) g = gcd(g, c);
  return g;
}

void Poly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (v < static_cast<int>(m.size())) d = std::max(d, m[v]);
  return d;
}

int Poly::min_degree_in(int v) const {
  if (terms_.empty()) return 0;
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int e = v < static_cast<int>(m.size()) ? m[v] : 0;
    d = d < 0 ? e : std::min(d, e);
  }
  return d;
}

std::string monomial_string(const Monomial& m, const std::string& var, bool single) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += single ? var : var + std::to_string(i + 1);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string ms = monomial_string(m);
    if (ms.empty()) os << a.get_str();
    else if (a == 1) os << ms;
    else os << a.get_str() << "*" << ms;
  }
  return os.str();
}

bool try_div(const Poly& a, const Poly& b, Poly& q) {
  if (b.is_zero()) throw SpineError(ErrorCode::InvalidArgument, "polynomial division by zero");
  q = Poly();
  Poly r = a;
  const Monomial& bm = b.lead_monomial();
  const mpz_class& bc = b.lead_coeff();
  // Degrees add under multiplication, which bounds every quotient term.
  const int nv = std::max(a.num_vars(), b.num_vars());
  std::vector<int> bound(nv);
  for (int v = 0; v < nv; ++v) {
    bound[v] = a.degree_in(v) - b.degree_in(v);
    if (bound[v] < 0 && !a.is_zero()) return false;
  }
  while (!r.is_zero()) {
    Monomial qm;
    if (!mono_div(r.lead_monomial(), bm, qm)) return false;
    for (std::size_t v = 0; v < qm.size(); ++v)
      if (qm[v] > bound[v]) return false;
    if (!mpz_divisible_p(r.lead_coeff().get_mpz_t(), bc.get_mpz_t())) return false;
    mpz_class qc = r.lead_coeff() / bc;
    Poly t = Poly::monomial(qm, qc);
    q += t;
    r -= t * b;
  }
  return true;
}

Poly exact_div(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_div(a, b, q))
    throw SpineError(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) return Poly(mpz_class(gcd(a.content(), b.content())));
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    const int nv = std::max(a.num_vars(), b.num_vars());
    Monomial m(nv);
    for (int i = 0; i < nv; ++i) m[i] = std::min(a.min_degree_in(i), b.min_degree_in(i));
    return Poly::monomial(m, gcd(a.content(), b.content()));
  }
  const int v = std::max(a.num_vars(), b.num_vars()) - 1;
  UniView A = split(a, v), B = split(b, v);
  Poly c = gcd(uni_content(A), uni_content(B));
  A = uni_primitive(A);
  B = uni_primitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (true) {
    if (B.size() == 1) return c;
    UniView R = prem(A, B);
    A = std::move(B);
    if (R.empty()) break;
    B = uni_primitive(R);
  }
  return normalize_sign(join(A, v) * c);
}

Poly shift(const Poly& p, const Monomial& by) {
  Poly r;
  for (const auto& [m, c] : p.terms()) {
    Monomial n(std::max(m.size(), by.size()), 0);
    for (std::size_t i = 0; i < m.size(); ++i) n[i] += m[i];
    for (std::size_t i = 0; i < by.size(); ++i) n[i] += by[i];
    for (int e : n)
      if (e < 0) throw SpineError(ErrorCode::InvalidArgument, "negative exponent in shift");
    r += Poly::monomial(n, c);
  }
  return r;
}

}  // namespace spinetorsion

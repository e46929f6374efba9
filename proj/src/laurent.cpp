#include "ks/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace ks {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("laurent: int64 overflow in add");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("laurent: int64 overflow in mul");
  return r;
}

laurent laurent::monomial(std::int64_t c, int exp) {
  laurent p;
  if (c != 0) { p.lo_ = exp; p.coef_ = {c}; }
  return p;
}

std::int64_t laurent::at(int exp) const {
  if (coef_.empty() || exp < lo_ || exp > hi()) return 0;
  return coef_[size_t(exp - lo_)];
}

void laurent::trim() {
  size_t b = 0, e = coef_.size();
  while (e > b && coef_[e - 1] == 0) --e;
  while (b < e && coef_[b] == 0) ++b;
  if (b == e) { coef_.clear(); lo_ = 0; return; }
  if (b > 0) coef_.erase(coef_.begin(), coef_.begin() + long(b));
  coef_.resize(e - b);
  lo_ += int(b);
}

laurent& laurent::operator+=(const laurent& o) {
  if (o.coef_.empty()) return *this;
  if (coef_.empty()) { *this = o; return *this; }
  int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
  std::vector<std::int64_t> out(size_t(nhi - nlo + 1), 0);
  for (size_t i = 0; i < coef_.size(); ++i) out[size_t(lo_ - nlo) + i] = coef_[i];
  for (size_t i = 0; i < o.coef_.size(); ++i) {
    auto& slot = out[size_t(o.lo_ - nlo) + i];
    slot = checked_add(slot, o.coef_[i]);
  }
  lo_ = nlo;
  coef_ = std::move(out);
  trim();
  return *this;
}

laurent& laurent::operator-=(const laurent& o) { return *this += -o; }

laurent laurent::operator-() const {
  laurent r(*this);
  for (auto& c : r.coef_) c = checked_mul(c, -1);
  return r;
}

laurent operator*(const laurent& a, const laurent& b) {
  if (a.coef_.empty() || b.coef_.empty()) return laurent();
  laurent r;
  r.lo_ = a.lo_ + b.lo_;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
  for (size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (size_t j = 0; j < b.coef_.size(); ++j) {
      if (b.coef_[j] == 0) continue;
      r.coef_[i + j] = checked_add(r.coef_[i + j], checked_mul(a.coef_[i], b.coef_[j]));
    }
  }
  r.trim();
  return r;
}

laurent laurent::divided_by(const laurent& d) const {
  if (d.is_zero()) throw std::domain_error("laurent: division by zero");
  laurent rem(*this), quo;
  while (!rem.is_zero()) {
    if (rem.coef_.size() < d.coef_.size())
      throw std::domain_error("laurent: inexact division");
    std::int64_t c = rem.lead() / d.lead();
    if (c * d.lead() != rem.lead())
      throw std::domain_error("laurent: inexact division");
    laurent m = monomial(c, rem.hi() - d.hi());
    quo += m;
    rem -= m * d;
  }
  return quo;
}

laurent laurent::invert_variable() const {
  laurent r;
  if (coef_.empty()) return r;
  r.coef_.assign(coef_.rbegin(), coef_.rend());
  r.lo_ = -hi();
  return r;
}

laurent laurent::unit_normalized() const {
  if (coef_.empty()) return laurent();
  laurent r(*this);
  r.lo_ = 0;
  if (r.lead() < 0)
    for (auto& c : r.coef_) c = -c;
  return r;
}

bool laurent::equals_up_to_units(const laurent& o) const {
  return unit_normalized() == o.unit_normalized() ||
         unit_normalized() == o.invert_variable().unit_normalized();
}

std::int64_t laurent::eval_at_one() const {
  std::int64_t s = 0;
  for (auto c : coef_) s = checked_add(s, c);
  return s;
}

std::string laurent::str(const std::string& var) const {
  if (coef_.empty()) return "0";
  std::string out;
  for (int e = lo(); e <= hi(); ++e) {
    std::int64_t c = at(e);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    std::int64_t a = c > 0 ? c : -c;
    if (a != 1 || e == 0) out += std::to_string(a);
    if (e != 0) {
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

laurent rewrite_in_z(const laurent& p) {
  // Peel off the top-degree term against (x - x^{-1})^k; what remains
  // must telescope to zero if p lies in Z[x - x^{-1}].
  laurent rem(p), out;
  laurent z = laurent::monomial(1, 1) + laurent::monomial(-1, -1);
  while (!rem.is_zero()) {
    int k = rem.hi();
    if (k < 0 || -rem.lo() > k)
      throw std::domain_error("rewrite_in_z: not a polynomial in x - 1/x");
    std::int64_t c = rem.lead();
    laurent zk(1);
    for (int i = 0; i < k; ++i) zk = zk * z;
    out += laurent::monomial(c, k);
    rem -= zk * laurent(c);
    if (!rem.is_zero() && rem.hi() >= k)
      throw std::domain_error("rewrite_in_z: degree did not drop");
  }
  return out;
}

laurent substitute_z(const laurent& p) {
  laurent z = laurent::monomial(1, 1) + laurent::monomial(-1, -1);
  laurent out;
  if (p.is_zero()) return out;
  if (p.lo() < 0) throw std::domain_error("substitute_z: negative z-exponent");
  for (int e = p.lo(); e <= p.hi(); ++e) {
    std::int64_t c = p.at(e);
    if (c == 0) continue;
    laurent zk(1);
    for (int i = 0; i < e; ++i) zk = zk * z;
    out += zk * laurent(c);
  }
  return out;
}

}  // namespace ks

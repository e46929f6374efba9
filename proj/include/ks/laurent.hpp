#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ks {

// Integer Laurent polynomial in one formal variable. Dense coefficient
// vector plus the exponent of its first entry; zero coefficients are
// trimmed at both ends, so two equal polynomials have equal fields.
class laurent {
public:
  laurent() = default;
  explicit laurent(std::int64_t c) {
    if (c != 0) { lo_ = 0; coef_ = {c}; }
  }
  static laurent monomial(std::int64_t c, int exp);

  bool is_zero() const { return coef_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + int(coef_.size()) - 1; }
  std::int64_t at(int exp) const;
  std::int64_t lead() const { return coef_.empty() ? 0 : coef_.back(); }
  std::int64_t trail() const { return coef_.empty() ? 0 : coef_.front(); }
  const std::vector<std::int64_t>& coeffs() const { return coef_; }

  laurent& operator+=(const laurent& o);
  laurent& operator-=(const laurent& o);
  laurent operator-() const;
  friend laurent operator+(laurent a, const laurent& b) { return a += b; }
  friend laurent operator-(laurent a, const laurent& b) { return a -= b; }
  friend laurent operator*(const laurent& a, const laurent& b);
  friend bool operator==(const laurent& a, const laurent& b) = default;
  friend auto operator<=>(const laurent& a, const laurent& b) = default;

  // Exact division; throws std::domain_error if the remainder is nonzero.
  laurent divided_by(const laurent& d) const;

  // Substitute the variable by its inverse (mirror the exponents).
  laurent invert_variable() const;

  // Multiply by a unit +-x^k so that lo() == 0 and lead() > 0.
  laurent unit_normalized() const;

  // Equality up to multiplication by +-x^k.
  bool equals_up_to_units(const laurent& o) const;

  std::int64_t eval_at_one() const;

  std::string str(const std::string& var = "z") const;

private:
  void trim();
  int lo_ = 0;
  std::vector<std::int64_t> coef_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Rewrite p, a Laurent polynomial in x, in terms of z = x - x^{-1}.
// Throws std::domain_error if p is not a polynomial in x - x^{-1}.
laurent rewrite_in_z(const laurent& p);

// Substitute z -> x - x^{-1} (inverse of rewrite_in_z).
laurent substitute_z(const laurent& p);

}  // namespace ks

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace symbio {

/// Exact Laurent polynomial with integer coefficients in one formal variable.
/// Zero coefficients are never stored, so structural equality is value equality.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeff constant);

  static LaurentPoly monomial(Coeff coeff, int exponent);
  /// The variable itself, x^1.
  static LaurentPoly var() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  const std::map<int, Coeff>& terms() const { return terms_; }
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned k) const;
  /// Image under x -> x^-1.
  LaurentPoly mirror() const;
  /// Exact quotient by `divisor`, or nullopt when the division leaves a remainder.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Terms in descending exponent order, e.g. "-A^2 - A^-2".
  std::string to_string(const std::string& var = "A") const;

 private:
  void add_term(int exponent, Coeff c);
  std::map<int, Coeff> terms_;
};

}  // namespace symbio

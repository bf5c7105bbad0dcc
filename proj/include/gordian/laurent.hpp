#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gordian {

/// Integer-coefficient Laurent polynomial in one variable.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
class LaurentPolynomial {
public:
  using Coefficient = std::int64_t;
  using Terms = std::map<int, Coefficient>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Coefficient constant);

  static LaurentPolynomial monomial(Coefficient coefficient, int exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  void add_term(Coefficient coefficient, int exponent);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned exponent) const;

  /// Substitutes x -> x^factor (factor may be negative, e.g. -1 for x -> 1/x).
  LaurentPolynomial rescale_exponents(int factor) const;

  /// Divides every exponent by divisor; throws if some exponent is not a multiple.
  LaurentPolynomial divide_exponents(int divisor) const;

  /// Value at x = -1 or x = 1 (the only points where a Laurent polynomial is
  /// integral without denominators).
  Coefficient evaluate_at_sign(int sign) const;

  /// Canonical ascending rendering, e.g. "-t^-4+t^-3+t^-1", "2-3t+t^2", "0".
  std::string to_string(std::string_view variable = "t") const;

  /// Same as to_string, but exponents are stored in units of 1/denominator
  /// and rendered as fractions when they do not divide evenly.
  std::string to_string_scaled(int denominator, std::string_view variable = "t") const;

  /// Parses the format produced by to_string (and KnotInfo-style input with
  /// '*', spaces and parenthesised exponents).
  static LaurentPolynomial parse(std::string_view text, std::string_view variable = "t");

private:
  Terms terms_;
};

std::size_t hash_value(const LaurentPolynomial& p) noexcept;

}  // namespace gordian

#include "gordian/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gordian {

LaurentPolynomial::LaurentPolynomial(Coefficient constant) { add_term(constant, 0); }

LaurentPolynomial LaurentPolynomial::monomial(Coefficient coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(coefficient, exponent);
  return p;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(Coefficient coefficient, int exponent) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (auto [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (auto [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial product;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : other.terms_) product.add_term(c1 * c2, e1 + e2);
  *this = std::move(product);
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::rescale_exponents(int factor) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.add_term(c, e * factor);
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exponents(int divisor) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) {
    if (e % divisor != 0)
      throw std::domain_error("exponent " + std::to_string(e) + " not divisible by " +
                              std::to_string(divisor));
    out.add_term(c, e / divisor);
  }
  return out;
}

LaurentPolynomial::Coefficient LaurentPolynomial::evaluate_at_sign(int sign) const {
  Coefficient total = 0;
  for (auto [e, c] : terms_) total += (sign < 0 && (e % 2 != 0)) ? -c : c;
  return total;
}

namespace {

std::string render_exponent(int numerator, int denominator) {
  if (numerator % denominator == 0) return std::to_string(numerator / denominator);
  int g = std::gcd(std::abs(numerator), denominator);
  return "(" + std::to_string(numerator / g) + "/" + std::to_string(denominator / g) + ")";
}

}  // namespace

std::string LaurentPolynomial::to_string(std::string_view variable) const {
  return to_string_scaled(1, variable);
}

std::string LaurentPolynomial::to_string_scaled(int denominator, std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e, c] : terms_) {
    if (c < 0) out << '-';
    else if (!first) out << '+';
    first = false;
    Coefficient magnitude = c < 0 ? -c : c;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude;
    out << variable;
    if (e != denominator) out << '^' << render_exponent(e, denominator);
  }
  return out.str();
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, std::string_view variable) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  LaurentPolynomial p;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](std::size_t& pos) -> long long {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  };

  while (i < s.size()) {
    Coefficient sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    Coefficient magnitude = 1;
    bool has_digits = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    if (has_digits) magnitude = read_int(i);
    int exponent = 0;
    if (s.compare(i, variable.size(), variable) == 0) {
      i += variable.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '(') {
          ++i;
          exponent = static_cast<int>(read_int(i));
          if (i >= s.size() || s[i] != ')') fail("unbalanced parenthesis");
          ++i;
        } else {
          exponent = static_cast<int>(read_int(i));
        }
      }
    } else if (!has_digits) {
      fail("expected coefficient or variable");
    }
    p.add_term(sign * magnitude, exponent);
  }
  return p;
}

std::size_t hash_value(const LaurentPolynomial& p) noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto [e, c] : p.terms()) {
    h ^= std::hash<long long>{}(static_cast<long long>(e) * 1000003LL + c) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace gordian

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pruned/errors.hpp"

namespace pruned {

// A monomial x^a = x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
// The ambient variable count n is the vector length.  Exponent arithmetic is
// checked: it throws OverflowError instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> exponents);
  // The unit monomial 1 in n variables.
  static Monomial one(int n);
  // x_i (1-based) in n variables.
  static Monomial variable(int n, int i);

  int ambient() const { return static_cast<int>(exp_.size()); }
  std::int64_t exponent(int i) const { return exp_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::int64_t>& exponents() const { return exp_; }

  std::int64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  // Largest / smallest variable index appearing, 0 if the monomial is 1.
  int max_var() const;
  int min_var() const;
  // Variables with positive exponent as a bitmask (bit i-1 for x_i); requires n <= 64.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;

  Monomial times(const Monomial& other) const;
  Monomial pow(std::int64_t k) const;
  // this / other, requires other | this.
  Monomial quotient(const Monomial& other) const;
  // Exponent of x_i set to e (1-based), other entries kept.
  Monomial with_exponent(int i, std::int64_t e) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }
  // Total order used for canonical sorting: degree, then lex.
  bool operator<(const Monomial& other) const;

  // Lexicographic order with x_1 > x_2 > ... : true iff *this >_lex other.
  bool lex_greater(const Monomial& other) const;

  // `x1*x3^2` syntax; "1" for the unit monomial.
  std::string str() const;

 private:
  std::vector<std::int64_t> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Parses `x1*x3^2` / `x2` / `1`.  Exponents must be >= 0.  The result is
// padded to `ambient` variables; ambient == 0 means "use the max index seen"
// (the caller re-pads when assembling an ideal).
Monomial parse_monomial(const std::string& text, int ambient = 0);

}  // namespace pruned

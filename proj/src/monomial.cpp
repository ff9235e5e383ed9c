#include "pruned/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pruned {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent multiplication overflow");
  return r;
}

Monomial::Monomial(std::vector<std::int64_t> exponents) : exp_(std::move(exponents)) {
  for (auto e : exp_)
    if (e < 0) throw InvalidInputError("negative exponent in monomial");
}

Monomial Monomial::one(int n) { return Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

Monomial Monomial::variable(int n, int i) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto e : exp_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::int64_t e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::int64_t e) { return e <= 1; });
}

int Monomial::max_var() const {
  for (int i = ambient(); i >= 1; --i)
    if (exponent(i) > 0) return i;
  return 0;
}

int Monomial::min_var() const {
  for (int i = 1; i <= ambient(); ++i)
    if (exponent(i) > 0) return i;
  return 0;
}

std::uint64_t Monomial::support_mask() const {
  if (ambient() > 64) throw CapacityError("support_mask requires n <= 64");
  std::uint64_t m = 0;
  for (int i = 1; i <= ambient(); ++i)
    if (exponent(i) > 0) m |= std::uint64_t{1} << (i - 1);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (ambient() != other.ambient()) throw DimensionError("divides: mismatched ambient n");
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (ambient() != other.ambient()) throw DimensionError("times: mismatched ambient n");
  std::vector<std::int64_t> e(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) e[i] = checked_add(exp_[i], other.exp_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::pow(std::int64_t k) const {
  if (k < 0) throw InvalidInputError("negative monomial power");
  std::vector<std::int64_t> e(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) e[i] = checked_mul(exp_[i], k);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) throw InvalidInputError("quotient: divisor does not divide");
  std::vector<std::int64_t> e(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) e[i] = exp_[i] - other.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(int i, std::int64_t e) const {
  auto v = exp_;
  v.at(static_cast<std::size_t>(i - 1)) = e;
  return Monomial(std::move(v));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("lcm: mismatched ambient n");
  std::vector<std::int64_t> e(a.exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp_[i], b.exp_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("gcd: mismatched ambient n");
  std::vector<std::int64_t> e(a.exp_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exp_[i], b.exp_[i]);
  return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& other) const {
  auto da = degree(), db = other.degree();
  if (da != db) return da < db;
  return exp_ < other.exp_;
}

bool Monomial::lex_greater(const Monomial& other) const {
  if (ambient() != other.ambient()) throw DimensionError("lex_greater: mismatched ambient n");
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] != other.exp_[i]) return exp_[i] > other.exp_[i];
  return false;
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= ambient(); ++i) {
    auto e = exponent(i);
    if (e == 0) continue;
    if (!first) out << "*";
    out << "x" << i;
    if (e > 1) out << "^" << e;
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

Monomial parse_monomial(const std::string& text, int ambient) {
  std::vector<std::int64_t> exp(ambient > 0 ? static_cast<std::size_t>(ambient) : 0, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw InvalidInputError("expected integer in monomial: " + text);
    return std::stoll(text.substr(start, pos - start));
  };
  bool any = false;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '*') { ++pos; continue; }
    if (text[pos] == '1' && (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      any = true;
      continue;
    }
    if (text[pos] != 'x' && text[pos] != 'X')
      throw InvalidInputError("bad monomial syntax: " + text);
    ++pos;
    std::int64_t idx = parse_int();
    if (idx < 1) throw InvalidInputError("variable index must be >= 1: " + text);
    std::int64_t e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_int();
      if (e < 0) throw InvalidInputError("negative exponent: " + text);
    }
    if (ambient > 0 && idx > ambient)
      throw DimensionError("variable index exceeds declared ambient n: " + text);
    if (static_cast<std::size_t>(idx) > exp.size()) exp.resize(static_cast<std::size_t>(idx), 0);
    exp[static_cast<std::size_t>(idx - 1)] = checked_add(exp[static_cast<std::size_t>(idx - 1)], e);
    any = true;
  }
  if (!any) throw InvalidInputError("empty monomial");
  return Monomial(std::move(exp));
}

}  // namespace pruned

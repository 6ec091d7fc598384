#pragma once

#include "algradix/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algradix {

/// Integer polynomial; coeffs()[i] is the coefficient of x^i. Trailing zero
/// coefficients are trimmed on construction so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const Int& c, int k);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int i) const;
  Int leading() const;
  Int height() const;
  Int content() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  /// x^deg * P(1/x).
  IntPolynomial reversed() const;
  IntPolynomial negated() const;

  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Int> coeffs_;
};

/// Accepts "x^2-x-1", "2x^2 - 3*x + 2", "-x+2", "7", or a JSON-style
/// coefficient list "[c0, c1, ..., cd]". Throws Error(Syntax).
IntPolynomial parse_polynomial(std::string_view text);

/// Rational polynomial used for gcd and Sturm computations.
struct RatPolynomial {
  std::vector<Rat> coeffs;

  RatPolynomial() = default;
  explicit RatPolynomial(const IntPolynomial& p);
  explicit RatPolynomial(std::vector<Rat> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void trim();
  Rat eval(const Rat& x) const;
  RatPolynomial derivative() const;
  /// Scales to a primitive integer polynomial with positive leading coefficient.
  IntPolynomial to_primitive() const;
};

struct RatDivision {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

RatDivision divide(const RatPolynomial& num, const RatPolynomial& den);
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b in Z[x] when b divides a there, otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree(const IntPolynomial& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_real_roots(const IntPolynomial& p, const Rat& lo, const Rat& hi);

}  // namespace algradix

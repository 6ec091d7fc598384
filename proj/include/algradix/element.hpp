#pragma once

#include "algradix/base.hpp"
#include "algradix/numeric.hpp"
#include "algradix/polynomial.hpp"
#include "algradix/roots.hpp"

#include <string>
#include <vector>

namespace algradix {

/// Exact element of Z[alpha]. Monic bases use the power basis
/// sum coords[i] alpha^i with exactly d coordinates; rational bases a/b with
/// |b| >= 2 store the rational value, whose denominator divides a power of |b|.
/// Both forms are canonical, so equality of stored forms is equality in Z[alpha].
class ZAlphaElt {
 public:
  enum class Kind { PowerBasis, Rational };

  ZAlphaElt() = default;
  static ZAlphaElt power_basis(std::vector<Int> coords);
  static ZAlphaElt rational(Rat value);

  Kind kind() const { return kind_; }
  const std::vector<Int>& coords() const { return coords_; }
  const Rat& value() const { return value_; }
  bool is_zero() const;
  /// Integer value, when the element is a rational integer.
  bool is_integer() const;
  Int as_integer() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const ZAlphaElt& a, const ZAlphaElt& b);
  friend bool operator!=(const ZAlphaElt& a, const ZAlphaElt& b) { return !(a == b); }
  /// Canonical order: coordinate vectors lexicographically, rationals by value.
  friend bool operator<(const ZAlphaElt& a, const ZAlphaElt& b);

 private:
  Kind kind_ = Kind::PowerBasis;
  std::vector<Int> coords_;
  Rat value_;
};

struct ZAlphaEltHash {
  std::size_t operator()(const ZAlphaElt& e) const { return e.hash(); }
};

/// Throws Error(Unsupported) unless the base has canonical exact elements.
void require_elements(const AlgebraicBase& base);

ZAlphaElt from_int(const AlgebraicBase& base, const Int& k);
ZAlphaElt from_coords(const AlgebraicBase& base, std::vector<Int> coords);
ZAlphaElt from_rational(const AlgebraicBase& base, const Rat& value);
/// P(alpha), reduced exactly.
ZAlphaElt from_polynomial(const AlgebraicBase& base, const IntPolynomial& p);

/// beta mod alpha as an integer in [0, |M(0)|).
Int residue(const ZAlphaElt& x, const AlgebraicBase& base);

ZAlphaElt add(const ZAlphaElt& x, const ZAlphaElt& y);
ZAlphaElt sub(const ZAlphaElt& x, const ZAlphaElt& y);
ZAlphaElt negate(const ZAlphaElt& x);
ZAlphaElt add_int(const ZAlphaElt& x, const Int& k);
ZAlphaElt mul_int(const ZAlphaElt& x, const Int& k);
ZAlphaElt mul_alpha(const ZAlphaElt& x, const AlgebraicBase& base);
ZAlphaElt mul(const ZAlphaElt& x, const ZAlphaElt& y, const AlgebraicBase& base);
/// x / alpha; requires residue(x) == 0.
ZAlphaElt div_alpha_exact(const ZAlphaElt& x, const AlgebraicBase& base);

/// Balls containing sigma_k(x) for the conjugates in `data`.
std::vector<ComplexBall> eval_conjugates(const ZAlphaElt& x, const ConjugateData& data);

struct ComplexBox {
  Interval re;
  Interval im;
};

/// Boxes certifiably containing sigma_k(x), each side no wider than 2^-precision_bits.
std::vector<ComplexBox> conjugate_boxes(const ZAlphaElt& x, const AlgebraicBase& base, int precision_bits);

}  // namespace algradix

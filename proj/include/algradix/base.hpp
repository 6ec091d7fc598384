#pragma once

#include "algradix/numeric.hpp"
#include "algradix/polynomial.hpp"
#include "algradix/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algradix {

enum class Classification {
  ExpandingInteger,     // monic, every conjugate of modulus > 1
  ExpandingNonInteger,  // non-monic, degree >= 2, every conjugate of modulus > 1
  Unimodular,           // every conjugate of modulus 1, not a root of unity
  RootOfUnity,
  Rational,             // degree 1 with denominator |b| >= 2
  Mixed,                // anything else (fails the height reducing property)
};

enum class Irreducibility { Verified, Assumed };

const char* to_string(Classification c);
const char* to_string(Irreducibility i);

/// alpha = a / b with a > 0 and gcd(a, b) = 1.
struct RationalParams {
  Int a;
  Int b;
};

struct Conjugate {
  ComplexBall ball;
  Interval modulus;  // exactly [1, 1] for conjugates on the unit circle
  int side = 0;      // +1 modulus > 1, -1 modulus < 1, 0 on the unit circle
};

struct BaseOptions {
  int precision_bits = 40;  // conjugate moduli certified to width 2^-precision_bits
  int max_bits = 8192;
  int irreducibility_degree_limit = 6;
  bool assume_irreducible = false;
};

/// Certified conjugates at a given working precision plus the balls of
/// alpha_k^i for 0 <= i < d, used to evaluate power-basis elements.
struct ConjugateData {
  int bits = 0;
  std::vector<Conjugate> conjugates;
  std::vector<std::vector<ComplexBall>> powers;  // powers[k][i] contains alpha_k^i
};

class AlgebraicBase {
 public:
  const IntPolynomial& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }
  Int leading_coeff() const { return min_poly_.leading(); }
  Int const_term() const { return min_poly_.coeff(0); }
  Int abs_const_term() const { return abs_int(min_poly_.coeff(0)); }
  bool is_monic() const { return min_poly_.leading() == 1; }
  Irreducibility irreducibility() const { return irreducibility_; }
  Classification classification() const { return classification_; }
  const std::vector<Conjugate>& conjugates() const { return data_.conjugates; }
  const ConjugateData& conjugate_data() const { return data_; }
  int n_expanding() const;
  int n_unit() const;
  int precision_bits() const { return options_.precision_bits; }
  const BaseOptions& options() const { return options_; }

  /// Present exactly for degree-one bases.
  const std::optional<RationalParams>& rational_view() const { return rational_; }

  /// Height reducing property: all conjugates of modulus one, or all greater than one.
  bool hrp() const;
  /// Elements of Z[alpha] have a canonical exact form (monic or degree one).
  bool supports_elements() const { return is_monic() || degree() == 1; }
  bool has_unit_circle_conjugate() const { return n_unit() > 0; }

  /// Recomputes conjugates and power balls at a finer precision.
  ConjugateData refined(int bits) const;

  friend AlgebraicBase make_base(const IntPolynomial& m, const BaseOptions& options);

 private:
  IntPolynomial min_poly_;
  Irreducibility irreducibility_ = Irreducibility::Assumed;
  Classification classification_ = Classification::Mixed;
  std::optional<RationalParams> rational_;
  BaseOptions options_;
  ConjugateData data_;
};

/// Validates and classifies a minimal polynomial. The sign is normalized so the
/// leading coefficient is positive.
AlgebraicBase make_base(const IntPolynomial& m, const BaseOptions& options = {});

/// Base for alpha = num/den as the polynomial den*x - num.
AlgebraicBase make_rational_base(const Int& num, const Int& den, const BaseOptions& options = {});

struct CardBounds {
  Int lower;
  std::optional<Int> upper;
};

/// max(2, |M(0)|) <= Card(S_alpha), and <= 2|M(0)| - 1 for expanding integers.
CardBounds card_bounds(const AlgebraicBase& base);

enum class FactorSearch { Irreducible, Reducible, Inconclusive };

struct FactorResult {
  FactorSearch status;
  std::optional<IntPolynomial> factor;
};

/// Rational-root test, then Kronecker interpolation over divisor tuples with
/// Mignotte coefficient bounds for factors of degree 2..deg/2.
FactorResult find_factor(const IntPolynomial& m, long long max_combinations = 4'000'000);

/// Exact test for M dividing x^m - 1 for some m with phi(m) = deg M.
bool is_cyclotomic(const IntPolynomial& m);

}  // namespace algradix

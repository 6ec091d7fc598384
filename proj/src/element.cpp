#include "algradix/element.hpp"

#include "algradix/error.hpp"

namespace algradix {

ZAlphaElt ZAlphaElt::power_basis(std::vector<Int> coords) {
  ZAlphaElt e;
  e.kind_ = Kind::PowerBasis;
  e.coords_ = std::move(coords);
  return e;
}

ZAlphaElt ZAlphaElt::rational(Rat value) {
  value.canonicalize();
  ZAlphaElt e;
  e.kind_ = Kind::Rational;
  e.value_ = std::move(value);
  return e;
}

bool ZAlphaElt::is_zero() const {
  if (kind_ == Kind::Rational) return value_ == 0;
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool ZAlphaElt::is_integer() const {
  if (kind_ == Kind::Rational) return value_.get_den() == 1;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Int ZAlphaElt::as_integer() const {
  if (!is_integer()) fail(ErrorKind::Precondition, "element " + to_string() + " is not a rational integer");
  if (kind_ == Kind::Rational) return value_.get_num();
  return coords_.empty() ? Int(0) : coords_[0];
}

std::size_t ZAlphaElt::hash() const {
  if (kind_ == Kind::Rational) return hash_int(value_.get_num()) * 31 + hash_int(value_.get_den());
  return hash_ints(coords_);
}

std::string ZAlphaElt::to_string() const {
  if (kind_ == Kind::Rational) return value_.get_str();
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + "]";
}

bool operator==(const ZAlphaElt& a, const ZAlphaElt& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == ZAlphaElt::Kind::Rational) return a.value_ == b.value_;
  return a.coords_ == b.coords_;
}

bool operator<(const ZAlphaElt& a, const ZAlphaElt& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.kind_ == ZAlphaElt::Kind::Rational) return a.value_ < b.value_;
  return lex_less(a.coords_, b.coords_);
}

void require_elements(const AlgebraicBase& base) {
  if (!base.supports_elements()) {
    fail(ErrorKind::Unsupported, "base " + base.min_poly().to_string() +
                                     " is neither monic nor rational; exact Z[alpha] elements are unavailable");
  }
}

namespace {

bool uses_rational_form(const AlgebraicBase& base) { return !base.is_monic(); }

Rat alpha_value(const AlgebraicBase& base) {
  const auto& r = *base.rational_view();
  Rat v(r.a, r.b);
  v.canonicalize();
  return v;
}

// Denominator divides a power of |b|.
bool denominator_ok(const Rat& v, const Int& b) {
  Int den = v.get_den();
  Int g;
  while (den != 1) {
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), b.get_mpz_t());
    if (g == 1) return false;
    den /= g;
  }
  return true;
}

void same_kind(const ZAlphaElt& x, const ZAlphaElt& y) {
  if (x.kind() != y.kind() ||
      (x.kind() == ZAlphaElt::Kind::PowerBasis && x.coords().size() != y.coords().size())) {
    fail(ErrorKind::Precondition, "elements " + x.to_string() + " and " + y.to_string() + " belong to different rings");
  }
}

}  // namespace

ZAlphaElt from_int(const AlgebraicBase& base, const Int& k) {
  require_elements(base);
  if (uses_rational_form(base)) return ZAlphaElt::rational(Rat(k));
  std::vector<Int> c(static_cast<std::size_t>(base.degree()), Int(0));
  c[0] = k;
  return ZAlphaElt::power_basis(std::move(c));
}

ZAlphaElt from_coords(const AlgebraicBase& base, std::vector<Int> coords) {
  require_elements(base);
  if (uses_rational_form(base)) {
    if (coords.size() != 1) fail(ErrorKind::Precondition, "rational base elements take a single value");
    return ZAlphaElt::rational(Rat(coords[0]));
  }
  if (coords.size() > static_cast<std::size_t>(base.degree())) {
    return from_polynomial(base, IntPolynomial(std::move(coords)));
  }
  coords.resize(static_cast<std::size_t>(base.degree()), Int(0));
  return ZAlphaElt::power_basis(std::move(coords));
}

ZAlphaElt from_rational(const AlgebraicBase& base, const Rat& value) {
  require_elements(base);
  if (!uses_rational_form(base)) {
    if (value.get_den() != 1) fail(ErrorKind::Precondition, "value " + value.get_str() + " is not in Z[alpha]");
    return from_int(base, value.get_num());
  }
  if (!denominator_ok(value, base.leading_coeff())) {
    fail(ErrorKind::Precondition, "value " + value.get_str() + " is not in Z[alpha]");
  }
  return ZAlphaElt::rational(value);
}

ZAlphaElt from_polynomial(const AlgebraicBase& base, const IntPolynomial& p) {
  require_elements(base);
  if (uses_rational_form(base)) {
    return ZAlphaElt::rational(p.eval(alpha_value(base)));
  }
  // Horner with the companion action keeps every intermediate reduced.
  ZAlphaElt acc = from_int(base, Int(0));
  for (int i = p.degree(); i >= 0; --i) acc = add_int(mul_alpha(acc, base), p.coeff(i));
  return acc;
}

Int residue(const ZAlphaElt& x, const AlgebraicBase& base) {
  const Int m0 = base.abs_const_term();
  if (x.kind() == ZAlphaElt::Kind::Rational) {
    if (x.value().get_den() != 1) {
      fail(ErrorKind::Precondition,
           "residue of non-integral " + x.value().get_str() + " is undefined (negative valuation at the denominator)");
    }
    return mod_floor(x.value().get_num(), m0);
  }
  return mod_floor(x.coords().empty() ? Int(0) : x.coords()[0], m0);
}

ZAlphaElt add(const ZAlphaElt& x, const ZAlphaElt& y) {
  same_kind(x, y);
  if (x.kind() == ZAlphaElt::Kind::Rational) return ZAlphaElt::rational(x.value() + y.value());
  std::vector<Int> c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coords()[i];
  return ZAlphaElt::power_basis(std::move(c));
}

ZAlphaElt negate(const ZAlphaElt& x) { return mul_int(x, Int(-1)); }

ZAlphaElt sub(const ZAlphaElt& x, const ZAlphaElt& y) { return add(x, negate(y)); }

ZAlphaElt add_int(const ZAlphaElt& x, const Int& k) {
  if (x.kind() == ZAlphaElt::Kind::Rational) return ZAlphaElt::rational(x.value() + Rat(k));
  std::vector<Int> c = x.coords();
  c[0] += k;
  return ZAlphaElt::power_basis(std::move(c));
}

ZAlphaElt mul_int(const ZAlphaElt& x, const Int& k) {
  if (x.kind() == ZAlphaElt::Kind::Rational) return ZAlphaElt::rational(x.value() * Rat(k));
  std::vector<Int> c = x.coords();
  for (auto& v : c) v *= k;
  return ZAlphaElt::power_basis(std::move(c));
}

ZAlphaElt mul_alpha(const ZAlphaElt& x, const AlgebraicBase& base) {
  require_elements(base);
  if (x.kind() == ZAlphaElt::Kind::Rational) {
    return ZAlphaElt::rational(x.value() * alpha_value(base));
  }
  const std::size_t d = x.coords().size();
  const auto& m = base.min_poly();
  const Int top = x.coords()[d - 1];
  std::vector<Int> y(d);
  for (std::size_t i = 0; i < d; ++i) {
    y[i] = (i == 0 ? Int(0) : x.coords()[i - 1]) - top * m.coeff(static_cast<int>(i));
  }
  return ZAlphaElt::power_basis(std::move(y));
}

ZAlphaElt mul(const ZAlphaElt& x, const ZAlphaElt& y, const AlgebraicBase& base) {
  same_kind(x, y);
  if (x.kind() == ZAlphaElt::Kind::Rational) return ZAlphaElt::rational(x.value() * y.value());
  return from_polynomial(base, IntPolynomial(x.coords()) * IntPolynomial(y.coords()));
}

ZAlphaElt div_alpha_exact(const ZAlphaElt& x, const AlgebraicBase& base) {
  if (residue(x, base) != 0) {
    fail(ErrorKind::Precondition, "element " + x.to_string() + " is not divisible by alpha");
  }
  if (x.kind() == ZAlphaElt::Kind::Rational) {
    return ZAlphaElt::rational(x.value() / alpha_value(base));
  }
  // alpha^{-1} = -(m_1 + m_2 alpha + ... + alpha^{d-1}) / m_0.
  const auto& m = base.min_poly();
  const std::size_t d = x.coords().size();
  const Int q = x.coords()[0] / m.coeff(0);
  std::vector<Int> y(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Int next = i + 1 < d ? x.coords()[i + 1] : Int(0);
    y[i] = next - q * m.coeff(static_cast<int>(i + 1));
  }
  return ZAlphaElt::power_basis(std::move(y));
}

std::vector<ComplexBall> eval_conjugates(const ZAlphaElt& x, const ConjugateData& data) {
  std::vector<ComplexBall> out;
  if (x.kind() == ZAlphaElt::Kind::Rational) {
    for (std::size_t k = 0; k < data.conjugates.size(); ++k) out.push_back(ComplexBall::exact(x.value()));
    return out;
  }
  for (const auto& pw : data.powers) {
    ComplexBall acc = ComplexBall::exact(Rat(0));
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
      if (x.coords()[i] != 0) acc = add(acc, scale(pw[i], x.coords()[i]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<ComplexBox> conjugate_boxes(const ZAlphaElt& x, const AlgebraicBase& base, int precision_bits) {
  require_elements(base);
  const Rat half_width = pow2_neg(precision_bits + 1);
  int bits = std::max(base.conjugate_data().bits, precision_bits + 4);
  while (true) {
    ConjugateData data = bits == base.conjugate_data().bits ? base.conjugate_data() : base.refined(bits);
    std::vector<ComplexBall> balls = eval_conjugates(x, data);
    bool ok = true;
    for (const auto& b : balls) ok = ok && b.rad <= half_width;
    if (ok) {
      std::vector<ComplexBox> out;
      for (const auto& b : balls) out.push_back({{b.re - b.rad, b.re + b.rad}, {b.im - b.rad, b.im + b.rad}});
      return out;
    }
    bits *= 2;
    if (bits > base.options().max_bits) {
      fail(ErrorKind::Resource, "conjugate boxes of " + x.to_string() + " need more than " +
                                    std::to_string(base.options().max_bits) + " bits");
    }
  }
}

}  // namespace algradix

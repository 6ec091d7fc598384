#include "algradix/base.hpp"
#include "algradix/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace algradix;

namespace {

AlgebraicBase base_of(const char* text) { return make_base(parse_polynomial(text)); }

ErrorKind kind_of(const char* text) {
  try {
    base_of(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return ErrorKind::Syntax;
}

}  // namespace

TEST_CASE("classification fixtures") {
  const AlgebraicBase golden = base_of("x^2-x-1");
  CHECK(golden.classification() == Classification::Mixed);
  CHECK_FALSE(golden.hrp());
  CHECK(golden.degree() == 2);
  CHECK(golden.const_term() == -1);
  CHECK(golden.n_expanding() == 1);

  const AlgebraicBase uni = base_of("2x^2-3x+2");
  CHECK(uni.classification() == Classification::Unimodular);
  CHECK(uni.const_term() == 2);
  CHECK(uni.n_unit() == 2);
  for (const auto& c : uni.conjugates()) {
    CHECK(c.modulus.lo == 1);
    CHECK(c.modulus.hi == 1);
  }

  const AlgebraicBase eis = base_of("x^2+2x+2");
  CHECK(eis.classification() == Classification::ExpandingInteger);
  for (const auto& c : eis.conjugates()) {
    // sqrt 2 lies in every modulus interval
    CHECK(c.modulus.lo * c.modulus.lo <= 2);
    CHECK(c.modulus.hi * c.modulus.hi >= 2);
    CHECK(c.modulus.width() <= pow2_neg(40));
  }

  const AlgebraicBase two = base_of("x-2");
  CHECK(two.classification() == Classification::ExpandingInteger);
  REQUIRE(two.rational_view());
  CHECK(two.rational_view()->a == 2);
  CHECK(two.rational_view()->b == 1);

  const AlgebraicBase three_halves = make_rational_base(Int(3), Int(2));
  CHECK(three_halves.classification() == Classification::Rational);
  CHECK(three_halves.min_poly() == IntPolynomial({-3, 2}));
  CHECK(three_halves.hrp());
  const AlgebraicBase neg = make_rational_base(Int(3), Int(-2));
  CHECK(neg.rational_view()->a == 3);
  CHECK(neg.rational_view()->b == -2);
  CHECK_FALSE(make_rational_base(Int(1), Int(2)).hrp());

  CHECK(base_of("x^2+1").classification() == Classification::RootOfUnity);
  CHECK(base_of("x+1").classification() == Classification::RootOfUnity);
  CHECK(base_of("x^2+x+2").classification() == Classification::ExpandingInteger);
  CHECK(base_of("2x^2+2x+3").classification() == Classification::ExpandingNonInteger);
  // leading coefficient is normalized positive
  CHECK(base_of("-x^2+x+1").min_poly() == IntPolynomial({-1, -1, 1}));
}

TEST_CASE("construction errors") {
  CHECK(kind_of("0") == ErrorKind::Precondition);
  CHECK(kind_of("5") == ErrorKind::Precondition);
  CHECK(kind_of("2x^2+4x+2") == ErrorKind::Precondition);  // content 2
  CHECK(kind_of("x^2+x") == ErrorKind::Precondition);      // M(0) = 0
  CHECK(kind_of("x^2+2x+1") == ErrorKind::Precondition);   // not squarefree
  CHECK(kind_of("x^4+4") == ErrorKind::Precondition);      // (x^2+2x+2)(x^2-2x+2)
  CHECK(kind_of("x^2+") == ErrorKind::Syntax);
  try {
    base_of("2x^2+4x+2");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("irreducibility against products of small factors") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial a({coef(rng), coef(rng), 1});
    IntPolynomial b({coef(rng) == 0 ? 1 : coef(rng), coef(rng), 1});
    if (a.coeff(0) == 0) continue;
    const IntPolynomial p = a * b;
    const FactorResult r = find_factor(p);
    CAPTURE(p.to_string());
    CHECK(r.status == FactorSearch::Reducible);
    REQUIRE(r.factor);
    CHECK(r.factor->degree() >= 1);
    CHECK(r.factor->degree() < p.degree());
    CHECK(oracle::divides(r.factor->coeffs(), p.coeffs()));
  }
  for (const char* irr : {"x^2+2x+2", "x^3-x-1", "x^4+1", "x^5-x-1", "x^6+x+1", "2x^2-3x+2", "x^4-10x^2+1"}) {
    CAPTURE(irr);
    CHECK(find_factor(parse_polynomial(irr)).status == FactorSearch::Irreducible);
  }
}

TEST_CASE("degree limit and the assumption flag") {
  const IntPolynomial m = parse_polynomial("x^7+x+3");
  CHECK_THROWS_AS(make_base(m), Error);
  BaseOptions opts;
  opts.assume_irreducible = true;
  const AlgebraicBase b = make_base(m, opts);
  CHECK(b.irreducibility() == Irreducibility::Assumed);
  CHECK(base_of("x^2+2x+2").irreducibility() == Irreducibility::Verified);
}

TEST_CASE("cyclotomic detection matches the oracle construction") {
  for (int n = 1; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(is_cyclotomic(IntPolynomial(oracle::cyclotomic(n))));
  }
  CHECK_FALSE(is_cyclotomic(parse_polynomial("x^2+x+2")));
  CHECK_FALSE(is_cyclotomic(parse_polynomial("x^4-x^3-x^2-x+1")));
}

TEST_CASE("card bounds") {
  const CardBounds two = card_bounds(base_of("x-2"));
  CHECK(two.lower == 2);
  CHECK(two.upper.value() == 3);
  const CardBounds uni = card_bounds(base_of("2x^2-3x+2"));
  CHECK(uni.lower == 2);
  CHECK_FALSE(uni.upper);
  const CardBounds eis = card_bounds(base_of("x^2+2x+2"));
  CHECK(eis.lower == 2);
  CHECK(eis.upper.value() == 3);
  CHECK_THROWS_AS(card_bounds(base_of("x^2-x-1")), Error);
  for (const char* p : {"x^2+x+1", "x+1", "x^3+3x+5", "x-7"}) CHECK(card_bounds(base_of(p)).lower >= 2);
}

TEST_CASE("conjugate moduli are consistent with the oracle roots") {
  for (const char* text : {"x^3-x-1", "x^2+3x+3", "x^4+2x^3+2", "3x^2+x+2"}) {
    const AlgebraicBase b = base_of(text);
    const auto roots = oracle::approx_roots(b.min_poly().coeffs());
    std::vector<long double> oracle_mod;
    for (const auto& z : roots) oracle_mod.push_back(std::abs(z));
    std::sort(oracle_mod.rbegin(), oracle_mod.rend());
    REQUIRE(oracle_mod.size() == b.conjugates().size());
    for (std::size_t k = 0; k < oracle_mod.size(); ++k) {
      CHECK(std::abs(b.conjugates()[k].modulus.lo.get_d() - static_cast<double>(oracle_mod[k])) < 1e-9);
    }
  }
}

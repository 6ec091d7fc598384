#include "algradix/digits.hpp"
#include "algradix/error.hpp"

#include <doctest.h>

#include <random>

using namespace algradix;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<long> as_longs(const std::vector<ZAlphaElt>& xs) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(x.as_integer().get_si());
  return out;
}

// Independent evaluation of sum d_i x^i at a rational point.
Rat horner(const std::vector<long>& digits, const Rat& x) {
  Rat acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST_CASE("complete residue systems") {
  const AlgebraicBase neg2 = make_base(parse_polynomial("x+2"));
  CHECK(validate_crs(neg2, ints({0, 1})).size() == 2);
  const AlgebraicBase three = make_base(parse_polynomial("x-3"));
  CHECK(validate_crs(three, ints({-1, 0, 1})).size() == 3);
  const AlgebraicBase eis = make_base(parse_polynomial("x^2+2x+2"));
  CHECK_THROWS_AS(validate_crs(eis, ints({0, 2})), Error);
  CHECK_THROWS_AS(validate_crs(eis, ints({0, 1, 3})), Error);
  try {
    validate_crs(eis, ints({0, 2}));
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("share residue") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_crs(make_rational_base(Int(1), Int(2)), ints({0})), Error);
}

TEST_CASE("J steps") {
  const AlgebraicBase neg2 = make_base(parse_polynomial("x+2"));
  const DigitSet r = validate_crs(neg2, ints({0, 1}));
  JStep s = j_step(from_int(neg2, Int(7)), r, neg2);
  CHECK(s.digit.as_integer() == 1);
  CHECK(s.next.as_integer() == -3);
  s = j_step(from_int(neg2, Int(-3)), r, neg2);
  CHECK(s.digit.as_integer() == 1);
  CHECK(s.next.as_integer() == 2);

  const AlgebraicBase five_halves = make_rational_base(Int(5), Int(2));
  const DigitSet r52 = validate_crs(five_halves, ints({0, 1, 2, 4, -2}));
  s = j_step(from_int(five_halves, Int(2)), r52, five_halves);
  CHECK(s.digit.as_integer() == 2);
  CHECK(s.next.is_zero());
}

TEST_CASE("orbits and replay") {
  const AlgebraicBase neg2 = make_base(parse_polynomial("x+2"));
  const DigitSet r = validate_crs(neg2, ints({0, 1}));
  const ExpansionRecord rec = orbit(from_int(neg2, Int(7)), r, neg2);
  CHECK(rec.tail == Tail::Terminated);
  CHECK(as_longs(rec.digits) == std::vector<long>{1, 1, 0, 1, 1});
  CHECK(horner(as_longs(rec.digits), Rat(-2)) == 7);
  CHECK(replay_holds(rec, neg2));
  CHECK(rec.states.size() == rec.digits.size() + 1);

  const AlgebraicBase three = make_base(parse_polynomial("x-3"));
  const ExpansionRecord r3 = orbit(from_int(three, Int(2)), validate_crs(three, ints({-1, 0, 1})), three);
  CHECK(as_longs(r3.digits) == std::vector<long>{-1, 1});

  const AlgebraicBase three_halves = make_rational_base(Int(3), Int(2));
  const ExpansionRecord cyc = orbit(from_int(three_halves, Int(-2)), validate_crs(three_halves, ints({0, 1, 2})),
                                    three_halves);
  CHECK(cyc.tail == Tail::Cycle);
  REQUIRE(cyc.cycle.size() == 1);
  CHECK(cyc.cycle[0].as_integer() == -2);
  CHECK(replay_holds(cyc, three_halves));

  // a Mixed base runs into the step limit or a cycle, never silently
  const AlgebraicBase golden = make_base(parse_polynomial("x^2-x-1"));
  const ExpansionRecord g = orbit(from_int(golden, Int(5)), validate_crs(golden, ints({0})), golden, 50);
  CHECK(replay_holds(g, golden));
  CHECK_THROWS_AS(orbit(from_int(golden, Int(5)), validate_crs(golden, ints({0})), golden, 0), Error);
}

TEST_CASE("replay holds on random quadratic orbits") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> c(-40, 40);
  for (const char* text : {"x^2+2x+2", "x^2+x+3", "x^3+3x^2+3x+3", "x^2-2"}) {
    const AlgebraicBase base = make_base(parse_polynomial(text));
    std::vector<Int> digits;
    for (long k = 0; k < base.abs_const_term(); ++k) digits.emplace_back(k);
    const DigitSet r = validate_crs(base, digits);
    for (int t = 0; t < 30; ++t) {
      std::vector<Int> coords;
      for (int i = 0; i < base.degree(); ++i) coords.emplace_back(c(rng));
      const ExpansionRecord rec = orbit(from_coords(base, coords), r, base);
      CHECK(rec.tail != Tail::Truncated);
      CHECK(replay_holds(rec, base));
      if (rec.tail == Tail::Terminated) CHECK(evaluate_digits(rec.digits, base) == rec.start);
      // uniqueness: each digit is the only one in its residue class
      for (std::size_t n = 0; n < rec.digits.size(); ++n) {
        CHECK(residue(rec.digits[n], base) == residue(rec.states[n], base));
      }
    }
  }
}

TEST_CASE("height reduction") {
  const AlgebraicBase eis = make_base(parse_polynomial("x^2+2x+2"));
  // S = {0, 1}, s = 0
  HeightReduction h = height_reduce(eis, {{std::nullopt, IntPolynomial{}}, {std::nullopt, IntPolynomial{1}}});
  CHECK(h.digits == ints({0, 1}));
  CHECK(h.bound == 2);
  CHECK(h.max_exponent == 0);
  // S = {0, alpha + 1}, s = 1
  h = height_reduce(eis, {{from_int(eis, Int(0)), IntPolynomial{}}, {std::nullopt, IntPolynomial({1, 1})}});
  CHECK(h.max_exponent == 1);
  CHECK(h.bound == 6);
  CHECK(h.digits.size() <= 6);
  for (const auto& f : h.digits) CHECK((f >= 0 && f <= 2));
  // S = {1, -1}
  h = height_reduce(eis, {{std::nullopt, IntPolynomial{1}}, {std::nullopt, IntPolynomial{-1}}});
  CHECK(h.digits == ints({-1, 1}));
  CHECK_THROWS_AS(height_reduce(eis, {}), Error);
  // a wrong representation is rejected
  CHECK_THROWS_AS(height_reduce(eis, {{from_int(eis, Int(3)), IntPolynomial{1}}}), Error);
}

TEST_CASE("lifted words evaluate to the original sum") {
  const AlgebraicBase eis = make_base(parse_polynomial("x^2+2x+2"));
  const std::vector<DigitRepresentation> s{{std::nullopt, IntPolynomial{}},
                                           {std::nullopt, IntPolynomial({1, 1})},
                                           {std::nullopt, IntPolynomial({0, -1, 1})}};
  const std::vector<std::size_t> word{1, 2, 0, 1};
  ZAlphaElt direct = from_int(eis, Int(0));
  ZAlphaElt power = from_int(eis, Int(1));
  for (std::size_t idx : word) {
    direct = add(direct, mul(from_polynomial(eis, s[idx].rep), power, eis));
    power = mul_alpha(power, eis);
  }
  CHECK(from_polynomial(eis, lift_word(s, word)) == direct);
}

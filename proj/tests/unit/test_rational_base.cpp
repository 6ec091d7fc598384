#include "algradix/error.hpp"
#include "algradix/rational_base.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace algradix;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Digit set written independently: keep 0..a-1, but a positive multiple m of
// (a - b) below a is swapped for m - a.
std::set<long> expected_digits(long a, long b) {
  std::set<long> out;
  if (b < 0) {
    for (long d = 0; d < a; ++d) out.insert(d);
  } else if (b == a - 1) {
    for (long d = 1 - a; d < a; ++d) out.insert(d);
  } else {
    for (long d = 0; d < a; ++d) out.insert(d > 0 && d % (a - b) == 0 ? d - a : d);
  }
  return out;
}

std::set<long> as_set(const std::vector<Int>& xs) {
  std::set<long> out;
  for (const auto& x : xs) out.insert(x.get_si());
  return out;
}

Rat value(long a, long b, const std::vector<Int>& word) {
  Rat acc = 0;
  Rat alpha{Int(a), Int(b)};
  alpha.canonicalize();
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

}  // namespace

TEST_CASE("digit sets per case") {
  RationalDigitSet s = digit_set_rational(Int(5), Int(2));
  CHECK(s.kind == RationalCase::PositiveB);
  CHECK(s.removed == ints({-2, 3}));
  CHECK(s.digits == ints({-2, 0, 1, 2, 4}));
  s = digit_set_rational(Int(3), Int(-2));
  CHECK(s.kind == RationalCase::NegativeB);
  CHECK(s.digits == ints({0, 1, 2}));
  s = digit_set_rational(Int(3), Int(2));
  CHECK(s.kind == RationalCase::Degenerate);
  CHECK(s.digits == ints({-2, -1, 0, 1, 2}));
  // sign normalization
  s = digit_set_rational(Int(-3), Int(2));
  CHECK(s.a == 3);
  CHECK(s.b == -2);
  CHECK_THROWS_AS(digit_set_rational(Int(4), Int(2)), Error);
  CHECK_THROWS_AS(digit_set_rational(Int(2), Int(3)), Error);
  CHECK_THROWS_AS(digit_set_rational(Int(3), Int(0)), Error);
}

TEST_CASE("property report examples") {
  CHECK(verify_digit_properties(Int(5), Int(2), ints({0, 1, 2, 4, -2})).all());
  const DigitPropertyReport r = verify_digit_properties(Int(5), Int(2), ints({0, 1, 2, 3, 4}));
  CHECK(r.crs);
  CHECK_FALSE(r.has_pm_b);
  CHECK_FALSE(r.failures.empty());
  CHECK(verify_digit_properties(Int(3), Int(-2), ints({0, 1, 2})).crs);
  CHECK_FALSE(verify_digit_properties(Int(5), Int(2), ints({0, 5, 1, 2, 3})).crs);
}

TEST_CASE("every coprime pair up to 60") {
  for (long a = 2; a <= 60; ++a) {
    for (long b = -(a - 1); b <= a - 1; ++b) {
      if (b == 0 || std::gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      const RationalDigitSet s = digit_set_rational(Int(a), Int(b));
      CHECK(as_set(s.digits) == expected_digits(a, b));
      const DigitPropertyReport r = verify_digit_properties(s);
      if (s.kind == RationalCase::Degenerate) {
        CHECK(s.digits.size() == static_cast<std::size_t>(2 * a - 1));
      } else {
        CHECK(s.digits.size() == static_cast<std::size_t>(a));
        CHECK(r.crs);
      }
      if (s.kind == RationalCase::PositiveB) CHECK(r.all());
    }
  }
}

TEST_CASE("transducer examples") {
  const AdditionTransducer t = AdditionTransducer::build(Int(3), Int(-2), ints({0, 1, 2}));
  const std::vector<Int> out = t.transduce(Int(-2), ints({0}));
  CHECK(value(3, -2, out) == -2);

  const AdditionTransducer t52 = AdditionTransducer::build(Int(5), Int(2), ints({-2, 0, 1, 2, 4}));
  const std::vector<Int> four = t52.transduce(Int(2), ints({2}));
  CHECK(four == ints({4}));

  const std::vector<Int> word = ints({4, -2, 0, 1, 2});
  CHECK(t52.transduce(Int(0), word) == word);
  CHECK_THROWS_AS(t52.transduce(Int(2), ints({3})), Error);
  CHECK_THROWS_AS(t52.transduce(Int(1), ints({0})), Error);
  for (const auto& [key, edge] : t52.edges()) {
    if (key.first == 0) {
      CHECK(edge.output == key.second);
      CHECK(edge.next == 0);
    }
  }
}

TEST_CASE("transducers add and subtract b on random words") {
  std::mt19937 rng(7);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{3, -2}, {5, 2}, {5, -3}, {7, 3}, {7, 2}, {3, 2}, {4, 3}, {11, 4}}) {
    CAPTURE(a);
    CAPTURE(b);
    const RationalDigitSet s = digit_set_rational(Int(a), Int(b));
    const AdditionTransducer t = AdditionTransducer::build(s.a, s.b, s.digits);
    std::uniform_int_distribution<std::size_t> pick(0, s.digits.size() - 1);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Int> w(len(rng));
      for (auto& d : w) d = s.digits[pick(rng)];
      for (long start : {b, -b}) {
        const std::vector<Int> out = t.transduce(Int(start), w);
        CHECK(value(a, b, out) == value(a, b, w) + start);
        CHECK(out.size() <= w.size() + 2);
        for (const auto& d : out) CHECK(std::binary_search(s.digits.begin(), s.digits.end(), d));
      }
    }
  }
}

TEST_CASE("rational values") {
  CHECK(rational_value(Int(3), Int(2), ints({1, 2})) == Rat(4));
  CHECK(rational_value(Int(5), Int(2), {}) == 0);
}

TEST_CASE("expansions of multiples of b terminate") {
  ExpansionSweep sw = expand_all(Int(3), Int(-2), ints({0, 1, 2}), -20, 20);
  CHECK(sw.all_terminated);
  CHECK(sw.all_replayed);
  CHECK(sw.rows.size() == 41);
  for (const auto& row : sw.rows) CHECK(row.value == row.k * -2);

  sw = expand_all(Int(5), Int(2), ints({-2, 0, 1, 2, 4}), -50, 50);
  CHECK(sw.all_terminated);
  CHECK(sw.all_replayed);
  CHECK(sw.max_growth <= 2);

  sw = expand_all(Int(3), Int(2), ints({-2, -1, 0, 1, 2}), -30, 30);
  CHECK(sw.all_terminated);
  CHECK(sw.all_replayed);

  // a plain CRS is too small for the degenerate base
  sw = expand_all(Int(3), Int(2), ints({0, 1, 2}), -5, 5);
  CHECK_FALSE(sw.all_terminated);
}

TEST_CASE("degenerate bases fix -bd") {
  for (long a : {3L, 4L, 5L, 7L}) {
    const long b = a - 1;
    const AlgebraicBase base = make_rational_base(Int(a), Int(b));
    for (const auto& crs : std::vector<std::vector<Int>>{ints({0, 1, 2, 3, 4, 5, 6}), ints({0, -1, -2, -3, -4, -5, -6})}) {
      const std::vector<Int> digits(crs.begin(), crs.begin() + a);
      const DigitSet ds = validate_crs(base, digits);
      for (const auto& d : digits) {
        if (d == 0) continue;
        const JStep s = j_step(from_int(base, Int(-b * d)), ds, base);
        CHECK(s.digit.as_integer() == d);
        CHECK(s.next.as_integer() == -b * d);
      }
    }
  }
}

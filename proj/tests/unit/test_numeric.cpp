#include "algradix/error.hpp"
#include "algradix/numeric.hpp"

#include <doctest.h>

using namespace algradix;

TEST_CASE("floor division and residues") {
  for (long a = -20; a <= 20; ++a) {
    for (long m : {-7L, -3L, 2L, 5L}) {
      const Int q = floor_div(Int(a), Int(m));
      Rat exact{Int(a), Int(m)};
      exact.canonicalize();
      CHECK(Rat(q) <= exact);
      CHECK(exact < Rat(q + 1));
      const Int r = mod_floor(Int(a), Int(m));
      CHECK(r >= 0);
      CHECK(r < abs_int(Int(m)));
      CHECK((Int(a) - r) % m == 0);
    }
  }
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(-2)) == -4);
}

TEST_CASE("dyadic rounding brackets the input") {
  const Rat third(1, 3);
  for (int bits : {1, 8, 40, 100}) {
    const Rat lo = round_down(third, bits);
    const Rat hi = round_up(third, bits);
    CHECK(lo <= third);
    CHECK(third <= hi);
    CHECK(hi - lo <= pow2_neg(bits));
  }
  CHECK(round_down(Rat(3, 4), 2) == Rat(3, 4));
}

TEST_CASE("square root bounds") {
  for (int n : {0, 1, 2, 3, 10, 99}) {
    const Rat lo = sqrt_lower(Rat(n), 50);
    const Rat hi = sqrt_upper(Rat(n), 50);
    CHECK(lo * lo <= n);
    CHECK(hi * hi >= n);
    CHECK(hi - lo <= pow2_neg(49));
  }
}

TEST_CASE("integer and rational parsing") {
  CHECK(parse_int("-123") == -123);
  CHECK(parse_int("+5") == 5);
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK_THROWS_AS(parse_int("1x"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK(to_string(parse_rat("-5/10")) == "-1/2");
}

TEST_CASE("hashing is value based") {
  CHECK(hash_int(Int(42)) == hash_int(Int("42")));
  CHECK(hash_ints({Int(1), Int(2)}) != hash_ints({Int(2), Int(1)}));
  CHECK(lex_less({Int(0), Int(5)}, {Int(1), Int(-5)}));
}

#include "algradix/error.hpp"
#include "algradix/periodic.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace algradix;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::set<Int> as_set(const std::vector<ZAlphaElt>& xs) {
  std::set<Int> out;
  for (const auto& x : xs) out.insert(x.as_integer());
  return out;
}

}  // namespace

TEST_CASE("integer bases against direct iteration") {
  struct Case {
    long a, b;
    std::vector<Int> digits;
  };
  const std::vector<Case> cases{{-2, 1, ints({0, 1})},   {2, 1, ints({0, 1})},   {3, 1, ints({-1, 0, 1})},
                                {3, 1, ints({0, 1, 2})}, {-3, 1, ints({0, 1, 5})}, {3, 2, ints({0, 1, 2})},
                                {5, 2, ints({0, 1, 2, 4, -2})}, {3, -2, ints({0, 1, 2})}, {4, 1, ints({0, 1, 6, 3})}};
  for (const auto& c : cases) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    const AlgebraicBase base = make_rational_base(Int(c.a), Int(c.b));
    const DigitSet ds = validate_crs(base, c.digits);
    const PeriodicSet p = periodic_points(base, ds);
    CHECK(as_set(p.elements) == oracle::integer_periodic(Int(c.a), Int(c.b), c.digits, 200));
  }
}

TEST_CASE("quadratic bases against direct iteration") {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 2}, {0, -2}, {1, 2}, {-1, 3}, {3, 3}, {4, 5}, {-2, 3}}) {
    CAPTURE(p);
    CAPTURE(q);
    const AlgebraicBase base = make_base(IntPolynomial({q, p, 1}));
    if (base.classification() != Classification::ExpandingInteger) continue;
    std::vector<long> digits;
    std::vector<Int> idigits;
    for (long k = 0; k < std::abs(q); ++k) {
      digits.push_back(k);
      idigits.emplace_back(k);
    }
    const PeriodicSet ps = periodic_points(base, validate_crs(base, idigits));
    std::set<std::pair<long, long>> got;
    for (const auto& e : ps.elements) got.insert({e.coords()[0].get_si(), e.coords()[1].get_si()});
    CHECK(got == oracle::quadratic_periodic(p, q, digits, 25));
  }
}

TEST_CASE("number system fixtures") {
  const AlgebraicBase neg2 = make_base(parse_polynomial("x+2"));
  const DigitSet r = validate_crs(neg2, ints({0, 1}));
  CHECK(is_number_system(neg2, r));
  CHECK(spans_ring(neg2, r));

  const AlgebraicBase eis = make_base(parse_polynomial("x^2+2x+2"));
  const DigitSet re = validate_crs(eis, ints({0, 1}));
  CHECK(is_number_system(eis, re));
  CHECK(spans_ring(eis, re));

  const AlgebraicBase two = make_base(parse_polynomial("x-2"));
  const DigitSet r2 = validate_crs(two, ints({0, 1}));
  const PeriodicSet p2 = periodic_points(two, r2);
  CHECK(as_set(p2.elements) == std::set<Int>{-1, 0});
  CHECK_FALSE(is_number_system(p2, r2));
  CHECK_FALSE(spans_ring(p2, two, r2));

  const AlgebraicBase root2 = make_base(parse_polynomial("x^2-2"));
  const DigitSet rr = validate_crs(root2, ints({0, 1}));
  CHECK_FALSE(spans_ring(root2, rr));

  const AlgebraicBase th = make_rational_base(Int(3), Int(2));
  const PeriodicSet pth = periodic_points(th, validate_crs(th, ints({0, 1, 2})));
  for (long x : {0L, -2L, -4L}) CHECK(as_set(pth.elements).count(Int(x)) == 1);

  // a CRS without 0 is never a number system, but can still span
  const AlgebraicBase three = make_base(parse_polynomial("x-3"));
  const DigitSet shifted = validate_crs(three, ints({1, 2, 3}));
  CHECK_FALSE(is_number_system(three, shifted));
}

TEST_CASE("orbit bound dominates late orbit points") {
  const AlgebraicBase base = make_base(parse_polynomial("x^2+x+3"));
  const DigitSet ds = validate_crs(base, ints({0, 1, 2}));
  const BoundsReport b = orbit_bounds(base, ds);
  CHECK(b.c_alpha_r >= 1);
  for (long u = -30; u <= 30; u += 5) {
    for (long v = -30; v <= 30; v += 5) {
      const ExpansionRecord rec = orbit(from_coords(base, ints({u, v})), ds, base);
      REQUIRE(rec.tail != Tail::Truncated);
      // the last state is 0 or periodic, hence inside the bound
      for (const auto& z : eval_conjugates(rec.states.back(), base.conjugate_data())) {
        CHECK(abs_upper(z, 60) <= b.c_alpha_r + pow2_neg(20));
      }
    }
  }
}

TEST_CASE("spanning agrees with a forward reachability search") {
  // |M(0)| <= 3, coordinate box 5
  struct Case {
    long p, q;
    std::vector<long> digits;
  };
  const std::vector<Case> cases{{2, 2, {0, 1}}, {0, -2, {0, 1}}, {1, 3, {0, 1, 2}}, {-1, 2, {0, 1}}, {1, 2, {0, -1}},
                                {0, 3, {0, 1, 2}}, {2, 3, {-1, 0, 1}}};
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.q);
    const AlgebraicBase base = make_base(IntPolynomial({c.q, c.p, 1}));
    if (base.classification() != Classification::ExpandingInteger) continue;
    std::vector<Int> idigits;
    for (long d : c.digits) idigits.emplace_back(d);
    const bool spans = spans_ring(base, validate_crs(base, idigits));
    const auto reach = oracle::quadratic_reachable(c.p, c.q, c.digits, 200, 40);
    bool all = true;
    for (long u = -5; u <= 5; ++u) {
      for (long v = -5; v <= 5; ++v) all = all && reach.count({u, v}) > 0;
    }
    CHECK(spans == all);
  }
}

TEST_CASE("unsupported bases and caps") {
  const AlgebraicBase golden = make_base(parse_polynomial("x^2-x-1"));
  CHECK_THROWS_AS(periodic_points(golden, validate_crs(golden, ints({0}))), Error);
  const AlgebraicBase eis = make_base(parse_polynomial("x^2+2x+2"));
  PeriodicOptions tiny;
  tiny.max_candidates = 3;
  try {
    periodic_points(eis, validate_crs(eis, ints({0, 1})), tiny);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
}

TEST_CASE("thread count does not change the result") {
  const AlgebraicBase base = make_base(parse_polynomial("x^2-2"));
  const DigitSet ds = validate_crs(base, ints({0, 1}));
  PeriodicOptions one, four;
  four.threads = 4;
  const PeriodicSet a = periodic_points(base, ds, one);
  const PeriodicSet b = periodic_points(base, ds, four);
  CHECK(a.elements == b.elements);
  CHECK(a.cycles == b.cycles);
}

#pragma once

#include "algradix/numeric.hpp"
#include "algradix/polynomial.hpp"

#include <vector>

namespace algradix {

/// Closed rational interval [lo, hi].
struct Interval {
  Rat lo;
  Rat hi;

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  Rat width() const { return hi - lo; }
};

/// Closed disk |z - (re + i im)| <= rad with dyadic center.
struct ComplexBall {
  Rat re;
  Rat im;
  Rat rad;

  static ComplexBall exact(const Rat& re, const Rat& im = Rat(0)) { return {re, im, Rat(0)}; }
};

Rat abs_upper(const ComplexBall& z, int bits);
Rat abs_lower(const ComplexBall& z, int bits);
Interval modulus(const ComplexBall& z, int bits);

ComplexBall add(const ComplexBall& a, const ComplexBall& b);
/// Product ball, center rounded to 2^-bits with the rounding error absorbed in the radius.
ComplexBall mul(const ComplexBall& a, const ComplexBall& b, int bits);
ComplexBall scale(const ComplexBall& a, const Int& k);

/// Isolating disks for the roots of a squarefree polynomial, each of radius at
/// most 2^-target_bits and pairwise disjoint, so each contains exactly one root.
/// Ordered by decreasing modulus, then decreasing imaginary part, then real part.
/// Throws Error(Resource) when working precision would exceed max_bits.
std::vector<ComplexBall> isolate_roots(const IntPolynomial& p, int target_bits, int max_bits = 8192);

/// Exact number of roots z of the squarefree polynomial p with |z| = t (t > 0).
int count_roots_on_circle(const IntPolynomial& p, const Rat& t);

/// Root disks together with an exact side assignment relative to |z| = t:
/// +1 outside, -1 inside, 0 on the circle.
struct CircleSplit {
  int bits = 0;
  std::vector<ComplexBall> roots;
  std::vector<int> side;
};

CircleSplit split_by_circle(const IntPolynomial& p, const Rat& t, int start_bits, int max_bits = 8192);

}  // namespace algradix

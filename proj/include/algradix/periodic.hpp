#pragma once

#include "algradix/base.hpp"
#include "algradix/digits.hpp"
#include "algradix/element.hpp"

#include <cstddef>
#include <vector>

namespace algradix {

/// Orbit bound c(alpha, R) = max over conjugates of 1 + K_sigma / (|sigma(alpha)| - 1),
/// K_sigma = max |sigma(r)| over the digits. All entries are rational upper bounds.
struct BoundsReport {
  std::vector<Rat> k_sigma;
  std::vector<Rat> orbit_bounds;
  Rat c_alpha_r;
};

struct PeriodicOptions {
  std::size_t max_candidates = 10'000'000;
  std::size_t max_walk = 1'000'000;
  int threads = 1;
};

struct PeriodicSet {
  std::vector<ZAlphaElt> elements;             // canonical order
  std::vector<std::vector<ZAlphaElt>> cycles;  // each rotated to its least element; sorted
  BoundsReport bounds;
  std::vector<Int> coordinate_bounds;          // enumeration box half-widths
  std::size_t candidates = 0;
};

/// Requires an expanding integer or a rational base a/b with a > |b|.
BoundsReport orbit_bounds(const AlgebraicBase& base, const DigitSet& digits);

PeriodicSet periodic_points(const AlgebraicBase& base, const DigitSet& digits, const PeriodicOptions& opts = {});

/// J-orbit {J^n(0) : n >= 0}, canonical order.
std::vector<ZAlphaElt> zero_orbit(const AlgebraicBase& base, const DigitSet& digits);

/// Periodic set is {0} and 0 is a digit.
bool is_number_system(const AlgebraicBase& base, const DigitSet& digits, const PeriodicOptions& opts = {});
bool is_number_system(const PeriodicSet& periodic, const DigitSet& digits);
/// Periodic set equals the orbit of 0, i.e. Z[alpha] = R[alpha].
bool spans_ring(const AlgebraicBase& base, const DigitSet& digits, const PeriodicOptions& opts = {});
bool spans_ring(const PeriodicSet& periodic, const AlgebraicBase& base, const DigitSet& digits);

}  // namespace algradix

#pragma once

#include "algradix/base.hpp"
#include "algradix/digits.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace algradix {

enum class RationalCase { NegativeB, PositiveB, Degenerate };
const char* to_string(RationalCase c);

/// Base alpha = a/b with a > |b| >= 1, gcd(a, b) = 1.
struct RationalDigitSet {
  Int a;
  Int b;
  RationalCase kind = RationalCase::NegativeB;
  std::vector<Int> digits;  // sorted
  std::vector<Int> removed;  // the set B, PositiveB only
};

/// Flips the signs of a and b so that a > 0, then checks a > |b| >= 1 and gcd(a, b) = 1.
std::pair<Int, Int> normalize_rational(Int a, Int b);

RationalDigitSet digit_set_rational(const Int& a, const Int& b);

struct DigitPropertyReport {
  bool crs = false;        // (A)
  bool add_closed = false; // (B) d+b or d+b-a in S
  bool sub_closed = false; // (C) d-b or d-b+a in S
  bool has_pm_b = false;   // (D) -b, b in S
  std::vector<std::string> failures;
  bool all() const { return crs && add_closed && sub_closed && has_pm_b; }
};

DigitPropertyReport verify_digit_properties(const Int& a, const Int& b, const std::vector<Int>& digits);
inline DigitPropertyReport verify_digit_properties(const RationalDigitSet& s) {
  return verify_digit_properties(s.a, s.b, s.digits);
}

struct TransducerEdge {
  Int output;
  Int next;
};

/// Three-state carry transducer over S reading least significant digit first.
/// From carry c on input d it writes d+c when that is a digit, else d+c-a
/// (carry b) or d+c+a (carry -b).
class AdditionTransducer {
 public:
  static AdditionTransducer build(const Int& a, const Int& b, const std::vector<Int>& digits);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const std::vector<Int>& digits() const { return digits_; }
  std::vector<Int> states() const { return {b_, -b_, Int(0)}; }
  const std::map<std::pair<Int, Int>, TransducerEdge>& edges() const { return edges_; }

  /// start is b, -b or 0; the result has value value(word) + start.
  std::vector<Int> transduce(const Int& start, const std::vector<Int>& word) const;

 private:
  Int a_, b_;
  std::vector<Int> digits_;
  std::map<std::pair<Int, Int>, TransducerEdge> edges_;  // (carry, input)
};

/// sum word[i] (a/b)^i.
Rat rational_value(const Int& a, const Int& b, const std::vector<Int>& word);

struct RationalExpansion {
  Int k;
  Int value;                 // k b
  ExpansionRecord record;    // integer states
};

struct ExpansionSweep {
  std::vector<RationalExpansion> rows;
  bool all_terminated = true;
  bool all_replayed = true;
  long max_growth = 0;       // max over consecutive k of len(k+1) - len(k), in absolute value
};

/// Expansions of k b for k in [k_lo, k_hi]. A CRS digit set uses the J-map.
/// A larger set (the degenerate case) walks k b outward from 0 with the transducer.
ExpansionSweep expand_all(const Int& a, const Int& b, const std::vector<Int>& digits, long k_lo, long k_hi,
                          std::size_t max_steps = kDefaultMaxSteps);

}  // namespace algradix

#pragma once

#include "algradix/base.hpp"
#include "algradix/element.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace algradix {

/// Complete residue system modulo alpha: one digit per class of Z/|M(0)|Z.
class DigitSet {
 public:
  const std::vector<ZAlphaElt>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  const ZAlphaElt& for_residue(const Int& r) const;
  bool contains_zero() const;

  friend DigitSet validate_crs(const AlgebraicBase& base, std::vector<ZAlphaElt> candidate);

 private:
  std::vector<ZAlphaElt> digits_;
  std::vector<std::size_t> by_residue_;
};

/// Throws Error(Precondition) naming the wrong cardinality or a colliding pair.
DigitSet validate_crs(const AlgebraicBase& base, std::vector<ZAlphaElt> candidate);
DigitSet validate_crs(const AlgebraicBase& base, const std::vector<Int>& candidate);

struct JStep {
  ZAlphaElt digit;
  ZAlphaElt next;
};

/// beta = digit + alpha * next with digit the representative of beta mod alpha.
JStep j_step(const ZAlphaElt& beta, const DigitSet& digits, const AlgebraicBase& base);

enum class Tail { Terminated, Cycle, Truncated };
const char* to_string(Tail t);

/// Digits r_0, r_1, ... of an orbit of J. states[n] = J^n(start), so
/// states.size() == digits.size() + 1. For a cycle, states.back() equals
/// states[cycle_entry] and `cycle` lists states[cycle_entry .. size-2].
struct ExpansionRecord {
  ZAlphaElt start;
  std::vector<ZAlphaElt> digits;
  std::vector<ZAlphaElt> states;
  Tail tail = Tail::Truncated;
  std::size_t cycle_entry = 0;
  std::vector<ZAlphaElt> cycle;
};

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

ExpansionRecord orbit(const ZAlphaElt& beta, const DigitSet& digits, const AlgebraicBase& base,
                      std::size_t max_steps = kDefaultMaxSteps);

/// Checks start = r_0 + ... + r_n alpha^n + alpha^{n+1} J^{n+1}(start) for every n.
bool replay_holds(const ExpansionRecord& rec, const AlgebraicBase& base);

/// sum digits[i] alpha^i.
ZAlphaElt evaluate_digits(const std::vector<ZAlphaElt>& digits, const AlgebraicBase& base);

// ---------------------------------------------------------------------------
// Reduction of a complex digit set to an integer one.

struct DigitRepresentation {
  std::optional<ZAlphaElt> element;  // checked against rep when present
  IntPolynomial rep;                 // fixed representation in powers of alpha
};

struct HeightReduction {
  std::vector<Int> digits;  // F, sorted
  int max_exponent = 0;     // s
  Int bound;                // Card(S)(Card(S)^{s+1} - 1)/(Card(S) - 1)
};

/// F = { a_{0,j_0} + ... + a_{m,j_m} : m <= s } over the coefficient tables of
/// the given representations.
HeightReduction height_reduce(const AlgebraicBase& base, const std::vector<DigitRepresentation>& s);

/// Coefficients of sum_n rep_{word[n]}(x) x^n: the integer word obtained by
/// substituting each digit's representation.
IntPolynomial lift_word(const std::vector<DigitRepresentation>& s, const std::vector<std::size_t>& word);

}  // namespace algradix

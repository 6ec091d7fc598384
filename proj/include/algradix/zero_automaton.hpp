#pragma once

#include "algradix/base.hpp"
#include "algradix/element.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace algradix {

struct ZeroTransition {
  std::size_t from;
  long digit;
  std::size_t to;
  bool operator==(const ZeroTransition&) const = default;
};

struct AutomatonOptions {
  std::size_t max_states = 1'000'000;
  int threads = 1;
  int refine_rounds = 2;  // each round quadruples the conjugate precision
};

/// Digit words d_m ... d_0 over {-H..H}, read most significant first, whose
/// value at alpha is 0. State y moves to alpha y + d; 0 is initial and final.
class ZeroAutomaton {
 public:
  long height() const { return h_; }
  const std::vector<ZAlphaElt>& states() const { return states_; }
  const std::vector<std::size_t>& levels() const { return levels_; }
  const std::vector<ZeroTransition>& transitions() const { return transitions_; }
  std::size_t zero_state() const { return zero_; }
  bool trimmed() const { return trimmed_; }
  /// Inflated states whose bound check stayed undecided at the highest precision.
  std::size_t undecided_kept() const { return undecided_kept_; }
  std::size_t size() const { return states_.size(); }

  /// Target of (state, digit) or nullopt.
  std::optional<std::size_t> next(std::size_t state, long digit) const;

  friend ZeroAutomaton build_zero_automaton(const AlgebraicBase& base, long h, const AutomatonOptions& opts);
  friend ZeroAutomaton trim(const ZeroAutomaton& a);

 private:
  void index_transitions();

  long h_ = 0;
  std::vector<ZAlphaElt> states_;   // canonical order
  std::vector<std::size_t> levels_; // first S_j containing the state, S_1 = {0}
  std::vector<ZeroTransition> transitions_;  // sorted
  std::vector<long> table_;         // states x (2H+1), -1 when absent
  std::size_t zero_ = 0;
  bool trimmed_ = false;
  std::size_t undecided_kept_ = 0;
};

/// Throws Precondition for bases with a conjugate on the unit circle and
/// Unsupported for non-monic bases of degree above one or contracting rational bases.
void require_automaton_base(const AlgebraicBase& base);

ZeroAutomaton build_zero_automaton(const AlgebraicBase& base, long h, const AutomatonOptions& opts = {});

/// Keeps the states from which 0 is reachable.
ZeroAutomaton trim(const ZeroAutomaton& a);

/// Runs the word d_m first. Throws Precondition for a digit outside {-H..H}.
bool accepts(const ZeroAutomaton& a, const std::vector<long>& msb_first);

/// Same language read least significant digit first, as a nondeterministic automaton.
struct MirrorAutomaton {
  std::size_t n_states = 0;
  std::size_t start = 0;
  long height = 0;
  std::vector<ZeroTransition> transitions;  // reversed edges, sorted
};
MirrorAutomaton mirror(const ZeroAutomaton& a);
bool accepts(const MirrorAutomaton& m, const std::vector<long>& lsb_first);

struct WordSearchResult {
  std::optional<std::vector<long>> word;  // d_m first, d_m > 0
  long height = 0;
  bool value_check = false;  // exact evaluation gave 0
};

WordSearchResult shortest_nonzero_word(const ZeroAutomaton& a, const AlgebraicBase& base);

/// Exact value of sum d_i alpha^i == 0 for the word d_m ... d_0.
bool word_is_zero(const AlgebraicBase& base, const std::vector<long>& msb_first);

/// Coefficient vector (lowest degree first) of the word d_m ... d_0.
IntPolynomial word_polynomial(const std::vector<long>& msb_first);

struct MinHeightResult {
  long h_star = 0;
  IntPolynomial witness;
  std::vector<std::size_t> automaton_sizes;  // per tried H, before trimming
  bool divisible = false;
};

/// Smallest H <= h_max admitting a nonzero word; h_max <= 0 means height(M).
MinHeightResult min_height(const AlgebraicBase& base, long h_max = 0, const AutomatonOptions& opts = {});

/// Number of accepted words of length exactly L, leading zeros included.
Int count_words(const ZeroAutomaton& a, std::size_t length);

struct GrowthEstimate {
  double rate = 0;
  double residual = 0;
  int iterations = 0;
};
GrowthEstimate growth_rate(const ZeroAutomaton& a, int max_iterations = 10'000, double tolerance = 1e-12);

std::string to_dot(const ZeroAutomaton& a, const AlgebraicBase& base);

}  // namespace algradix

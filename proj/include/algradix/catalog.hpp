#pragma once

#include "algradix/base.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algradix {

/// x^2 + a1 x + a2 is a CNS iff a2 >= 2 and -1 <= a1 <= a2.
bool quadratic_cns(const Int& a1, const Int& a2);

/// Monic x^d + a_1 x^{d-1} + ... + a_d with d >= 2, a_d >= 2 and 1 <= a_1 <= ... <= a_d.
bool kovacs_sufficient(const IntPolynomial& m);

/// Every conjugate has modulus > t, decided exactly.
bool all_conjugates_gt(const AlgebraicBase& base, const Rat& t);

/// |M(1)| == 1.
bool m1_obstruction(const AlgebraicBase& base);

enum class F2Verdict { InF2, PossiblyInF2, ExcludedByM1, ExcludedByNecessaryCondition };
const char* to_string(F2Verdict v);

struct F2Analysis {
  F2Verdict verdict;
  std::string reason;
  std::vector<Int> witness_digits;  // {0, 1} for roots of unity and alpha = -2
};

F2Analysis f2_analysis(const AlgebraicBase& base);

struct Certificate {
  std::string criterion;
  std::string verdict;
  std::string citation;
};

struct FIndexReport {
  Int lower;
  std::optional<Int> upper;
  std::optional<Int> exact;
  std::vector<Certificate> certificates;
};

/// Bounds on N with alpha in F_N. Requires the height reducing property.
FIndexReport classify_f_index(const AlgebraicBase& base);

struct QuadraticRow {
  long a1;
  long a2;
  bool criterion;
  bool brute_force;
  bool agree() const { return criterion == brute_force; }
};

/// Irreducible expanding x^2 + a1 x + a2 with 2 <= a2 <= a2_max and -3 <= a1 <= a2 + 2,
/// comparing quadratic_cns against is_number_system with digits {0..a2-1}. Ordered by (a2, a1).
std::vector<QuadraticRow> sweep_quadratic(long a2_max, int threads = 1);

std::string to_csv(const std::vector<QuadraticRow>& rows);

}  // namespace algradix

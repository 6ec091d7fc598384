#pragma once

// Arbitrary-precision helpers shared by the exact and certified layers.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace algradix {

using Int = mpz_class;
using Rat = mpq_class;

std::size_t hash_int(const Int& v);
std::size_t hash_ints(const std::vector<Int>& v);

struct IntVectorHash {
  std::size_t operator()(const std::vector<Int>& v) const { return hash_ints(v); }
};

// Lexicographic order on equal-length coordinate vectors; shorter first otherwise.
bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b);

Int floor_div(const Int& a, const Int& b);
// Representative of a mod m in [0, |m|).
Int mod_floor(const Int& a, const Int& m);
Int abs_int(const Int& a);

// Largest/smallest dyadic k/2^bits below/above q.
Rat round_down(const Rat& q, int bits);
Rat round_up(const Rat& q, int bits);

// Rational bounds lo <= sqrt(q) <= hi with error below 2^-bits. q >= 0.
Rat sqrt_lower(const Rat& q, int bits);
Rat sqrt_upper(const Rat& q, int bits);

// 2^-bits as a rational.
Rat pow2_neg(int bits);

// Parse a decimal integer, optionally signed. Throws Error(Syntax).
Int parse_int(const std::string& text);
// Parse "p" or "p/q".
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace algradix

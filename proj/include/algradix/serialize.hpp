#pragma once

// JSON views of the library types. Integers are decimal strings.

#include "algradix/base.hpp"
#include "algradix/catalog.hpp"
#include "algradix/digits.hpp"
#include "algradix/periodic.hpp"
#include "algradix/rational_base.hpp"
#include "algradix/zero_automaton.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace algradix {

using Json = nlohmann::json;

/// Fixed-point decimal rounded toward zero.
std::string decimal(const Rat& q, int places = 12);

Json to_json(const Int& v);
Json to_json(const Rat& v);
Json to_json(const std::vector<Int>& v);
Json to_json(const IntPolynomial& p);
Json to_json(const ZAlphaElt& x);
Json to_json(const std::vector<ZAlphaElt>& xs);
Json to_json(const AlgebraicBase& base);
Json to_json(const CardBounds& b);
Json to_json(const ExpansionRecord& rec);
Json to_json(const BoundsReport& b);
Json to_json(const PeriodicSet& p);
Json to_json(const RationalDigitSet& s);
Json to_json(const DigitPropertyReport& r);
Json to_json(const AdditionTransducer& t);
Json to_json(const ExpansionSweep& s);
Json to_json(const ZeroAutomaton& a, const AlgebraicBase& base);
Json to_json(const WordSearchResult& w);
Json to_json(const MinHeightResult& m);
Json to_json(const GrowthEstimate& g);
Json to_json(const FIndexReport& r);
Json to_json(const F2Analysis& f);
Json to_json(const std::vector<QuadraticRow>& rows);

// Inputs. Throw Error(Syntax) on malformed text.

/// "P(x)" polynomial text or a coefficient list; see parse_polynomial.
/// Bases may also be given as "a/b" or an integer, mapped to b x - a.
AlgebraicBase parse_base(const std::string& poly, const std::string& rational, const BaseOptions& options);

/// "0,1,2", "[0,1]" or "[[0,1],[1,0]]" (coordinate vectors, constant term first).
std::vector<ZAlphaElt> parse_elements(const std::string& text, const AlgebraicBase& base);
ZAlphaElt parse_element(const std::string& text, const AlgebraicBase& base);
std::vector<long> parse_word(const std::string& text);
std::vector<Int> parse_int_list(const std::string& text);

/// Digits {0, ..., |M(0)| - 1}.
std::vector<Int> canonical_digits(const AlgebraicBase& base);

}  // namespace algradix

#include "algradix/serialize.hpp"

#include "algradix/error.hpp"

#include <algorithm>
#include <cctype>

namespace algradix {

std::string decimal(const Rat& q, int places) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Int scaled = abs_int(q.get_num()) * scale / q.get_den();
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  if (q < 0 && scaled != 0) out.insert(0, "-");
  return out;
}

Json to_json(const Int& v) { return v.get_str(); }
Json to_json(const Rat& v) { return to_string(v); }

Json to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const IntPolynomial& p) { return to_json(p.coeffs()); }

Json to_json(const ZAlphaElt& x) {
  if (x.kind() == ZAlphaElt::Kind::Rational) return to_string(x.value());
  if (x.coords().size() == 1) return x.coords().front().get_str();
  return to_json(x.coords());
}

Json to_json(const std::vector<ZAlphaElt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json to_json(const AlgebraicBase& base) {
  Json conj = Json::array();
  for (const auto& c : base.conjugates()) {
    conj.push_back({{"re", decimal(c.ball.re)},
                    {"im", decimal(c.ball.im)},
                    {"modulus", {decimal(c.modulus.lo), decimal(c.modulus.hi)}},
                    {"side", c.side == 1 ? "outside" : c.side == -1 ? "inside" : "on"}});
  }
  Json out{{"polynomial", base.min_poly().to_string()},
           {"coefficients", to_json(base.min_poly())},
           {"degree", base.degree()},
           {"leading", to_json(base.leading_coeff())},
           {"constant", to_json(base.const_term())},
           {"monic", base.is_monic()},
           {"irreducibility", to_string(base.irreducibility())},
           {"classification", to_string(base.classification())},
           {"hrp", base.hrp()},
           {"expanding_conjugates", base.n_expanding()},
           {"unit_conjugates", base.n_unit()},
           {"precision_bits", base.precision_bits()},
           {"conjugates", conj}};
  if (base.rational_view()) {
    out["rational"] = {{"a", to_json(base.rational_view()->a)}, {"b", to_json(base.rational_view()->b)}};
  }
  return out;
}

Json to_json(const CardBounds& b) {
  return {{"lower", to_json(b.lower)}, {"upper", b.upper ? to_json(*b.upper) : Json(nullptr)}};
}

Json to_json(const ExpansionRecord& rec) {
  Json out{{"start", to_json(rec.start)},
           {"digits", to_json(rec.digits)},
           {"tail", to_string(rec.tail)},
           {"length", rec.digits.size()}};
  if (rec.tail == Tail::Cycle) {
    out["cycle_entry"] = rec.cycle_entry;
    out["cycle"] = to_json(rec.cycle);
  }
  return out;
}

Json to_json(const BoundsReport& b) {
  Json k = Json::array();
  Json o = Json::array();
  for (const auto& x : b.k_sigma) k.push_back(decimal(x));
  for (const auto& x : b.orbit_bounds) o.push_back(decimal(x));
  return {{"k_sigma", k}, {"orbit_bounds", o}, {"c", decimal(b.c_alpha_r)}};
}

Json to_json(const PeriodicSet& p) {
  Json cycles = Json::array();
  for (const auto& c : p.cycles) cycles.push_back(to_json(c));
  return {{"elements", to_json(p.elements)},
          {"cycles", cycles},
          {"bounds", to_json(p.bounds)},
          {"coordinate_bounds", to_json(p.coordinate_bounds)},
          {"candidates", p.candidates}};
}

Json to_json(const RationalDigitSet& s) {
  return {{"a", to_json(s.a)},
          {"b", to_json(s.b)},
          {"case", to_string(s.kind)},
          {"digits", to_json(s.digits)},
          {"removed", to_json(s.removed)},
          {"size", s.digits.size()}};
}

Json to_json(const DigitPropertyReport& r) {
  return {{"A", r.crs}, {"B", r.add_closed}, {"C", r.sub_closed}, {"D", r.has_pm_b}, {"failures", r.failures}};
}

Json to_json(const AdditionTransducer& t) {
  Json edges = Json::array();
  for (const auto& [key, e] : t.edges()) {
    edges.push_back({{"carry", to_json(key.first)},
                     {"input", to_json(key.second)},
                     {"output", to_json(e.output)},
                     {"next", to_json(e.next)}});
  }
  return {{"a", to_json(t.a())}, {"b", to_json(t.b())}, {"digits", to_json(t.digits())}, {"edges", edges}};
}

Json to_json(const ExpansionSweep& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json row = to_json(r.record);
    row["k"] = to_json(r.k);
    row["value"] = to_json(r.value);
    rows.push_back(row);
  }
  return {{"rows", rows},
          {"all_terminated", s.all_terminated},
          {"all_replayed", s.all_replayed},
          {"max_growth", s.max_growth}};
}

Json to_json(const ZeroAutomaton& a, const AlgebraicBase& base) {
  Json trans = Json::array();
  for (const auto& t : a.transitions()) trans.push_back({t.from, t.digit, t.to});
  return {{"H", a.height()},
          {"base", base.min_poly().to_string()},
          {"states", to_json(a.states())},
          {"levels", a.levels()},
          {"transitions", trans},
          {"initial", a.zero_state()},
          {"final", a.zero_state()},
          {"trimmed", a.trimmed()},
          {"undecided_kept", a.undecided_kept()}};
}

Json to_json(const WordSearchResult& w) {
  return {{"word", w.word ? Json(*w.word) : Json(nullptr)}, {"height", w.height}, {"value_check", w.value_check}};
}

Json to_json(const MinHeightResult& m) {
  return {{"H", m.h_star},
          {"witness", to_json(m.witness)},
          {"witness_text", m.witness.to_string()},
          {"divisible_by_minimal_polynomial", m.divisible},
          {"automaton_sizes", m.automaton_sizes}};
}

Json to_json(const GrowthEstimate& g) {
  return {{"rate", g.rate}, {"residual", g.residual}, {"iterations", g.iterations}};
}

Json to_json(const FIndexReport& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"criterion", c.criterion}, {"verdict", c.verdict}, {"citation", c.citation}});
  }
  return {{"lower", to_json(r.lower)},
          {"upper", r.upper ? to_json(*r.upper) : Json(nullptr)},
          {"exact", r.exact ? to_json(*r.exact) : Json(nullptr)},
          {"certificates", certs}};
}

Json to_json(const F2Analysis& f) {
  return {{"verdict", to_string(f.verdict)}, {"reason", f.reason}, {"witness_digits", to_json(f.witness_digits)}};
}

Json to_json(const std::vector<QuadraticRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"a1", r.a1}, {"a2", r.a2}, {"criterion", r.criterion}, {"brute_force", r.brute_force},
                   {"agree", r.agree()}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inputs

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorKind::Syntax, "malformed list '" + text + "': " + e.what());
  }
}

Int json_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.dump());
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(ErrorKind::Syntax, "expected an integer, got " + j.dump());
}

ZAlphaElt json_element(const Json& j, const AlgebraicBase& base) {
  if (j.is_array()) {
    std::vector<Int> coords;
    for (const auto& c : j) coords.push_back(json_int(c));
    return from_coords(base, std::move(coords));
  }
  if (j.is_string() && j.get<std::string>().find('/') != std::string::npos) {
    return from_rational(base, parse_rat(j.get<std::string>()));
  }
  return from_int(base, json_int(j));
}

}  // namespace

AlgebraicBase parse_base(const std::string& poly, const std::string& rational, const BaseOptions& options) {
  if (!poly.empty() && !rational.empty()) fail(ErrorKind::Syntax, "give either a polynomial or a base, not both");
  if (!poly.empty()) return make_base(parse_polynomial(poly), options);
  if (rational.empty()) fail(ErrorKind::Syntax, "a polynomial or a base is required");
  const Rat q = parse_rat(strip(rational));
  return make_rational_base(q.get_num(), q.get_den(), options);
}

std::vector<ZAlphaElt> parse_elements(const std::string& text_in, const AlgebraicBase& base) {
  const std::string text = strip(text_in);
  std::vector<ZAlphaElt> out;
  if (!text.empty() && text.front() == '[') {
    const Json j = parse_json_text(text);
    if (!j.is_array()) fail(ErrorKind::Syntax, "expected a list of digits");
    for (const auto& item : j) out.push_back(json_element(item, base));
    return out;
  }
  for (const auto& v : parse_int_list(text)) out.push_back(from_int(base, v));
  return out;
}

ZAlphaElt parse_element(const std::string& text_in, const AlgebraicBase& base) {
  const std::string text = strip(text_in);
  if (!text.empty() && text.front() == '[') return json_element(parse_json_text(text), base);
  if (text.find('/') != std::string::npos) return from_rational(base, parse_rat(text));
  return from_int(base, parse_int(text));
}

std::vector<Int> parse_int_list(const std::string& text_in) {
  std::string text = strip(text_in);
  if (!text.empty() && text.front() == '[') {
    std::vector<Int> out;
    const Json j = parse_json_text(text);
    if (!j.is_array()) fail(ErrorKind::Syntax, "expected a list of integers");
    for (const auto& item : j) out.push_back(json_int(item));
    return out;
  }
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(parse_int(strip(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos))));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<long> parse_word(const std::string& text) {
  std::vector<long> out;
  for (const auto& v : parse_int_list(text)) {
    if (!v.fits_slong_p()) fail(ErrorKind::Syntax, "digit " + v.get_str() + " is too large");
    out.push_back(v.get_si());
  }
  return out;
}

std::vector<Int> canonical_digits(const AlgebraicBase& base) {
  std::vector<Int> out;
  for (Int k = 0; k < base.abs_const_term(); ++k) out.push_back(k);
  return out;
}

}  // namespace algradix

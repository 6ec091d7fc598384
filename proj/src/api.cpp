#include "algradix/api.hpp"

#include "algradix/error.hpp"

namespace algradix::api {

namespace {

AlgebraicBase load(const Options& o) { return parse_base(o.poly, o.base, o.base_options); }

DigitSet load_digits(const AlgebraicBase& base, const std::string& digits) {
  if (digits.empty()) return validate_crs(base, canonical_digits(base));
  return validate_crs(base, parse_elements(digits, base));
}

PeriodicOptions periodic_options(const Options& o) {
  PeriodicOptions p;
  p.max_candidates = o.max_candidates;
  p.threads = o.threads;
  return p;
}

AutomatonOptions automaton_options(const Options& o) {
  AutomatonOptions a;
  a.max_states = o.max_states;
  a.threads = o.threads;
  return a;
}

std::pair<Int, Int> load_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return normalize_rational(parse_int(text), Int(1));
  return normalize_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::vector<Int> load_rational_digits(const Int& a, const Int& b, const std::string& digits) {
  if (digits.empty()) return digit_set_rational(a, b).digits;
  return parse_int_list(digits);
}

}  // namespace

Json analyze(const Options& o) {
  const AlgebraicBase base = load(o);
  Json out{{"base", to_json(base)}, {"m1_obstruction", m1_obstruction(base)}, {"f2", to_json(f2_analysis(base))}};
  if (base.hrp()) {
    out["card_bounds"] = to_json(card_bounds(base));
    out["f_index"] = to_json(classify_f_index(base));
    out["all_conjugates_gt_2"] = all_conjugates_gt(base, Rat(2));
  } else {
    out["card_bounds"] = nullptr;
    out["f_index"] = nullptr;
  }
  if (base.is_monic()) out["kovacs_sufficient"] = kovacs_sufficient(base.min_poly());
  if (base.is_monic() && base.degree() == 2) {
    out["quadratic_cns"] = quadratic_cns(base.min_poly().coeff(1), base.min_poly().coeff(0));
  }
  return out;
}

Json classify(const Options& o) {
  const AlgebraicBase base = load(o);
  return to_json(classify_f_index(base));
}

Json expand(const Options& o, const std::string& digits, const std::string& value) {
  const AlgebraicBase base = load(o);
  const DigitSet ds = load_digits(base, digits);
  const ExpansionRecord rec = orbit(parse_element(value, base), ds, base, o.max_steps);
  Json out = to_json(rec);
  out["replay"] = replay_holds(rec, base);
  out["digit_set"] = to_json(ds.digits());
  return out;
}

Json periodic(const Options& o, const std::string& digits) {
  const AlgebraicBase base = load(o);
  const DigitSet ds = load_digits(base, digits);
  Json out = to_json(periodic_points(base, ds, periodic_options(o)));
  out["digit_set"] = to_json(ds.digits());
  return out;
}

Json is_ns(const Options& o, const std::string& digits) {
  const AlgebraicBase base = load(o);
  const DigitSet ds = load_digits(base, digits);
  const PeriodicSet p = periodic_points(base, ds, periodic_options(o));
  return {{"number_system", is_number_system(p, ds)},
          {"spans_ring", spans_ring(p, base, ds)},
          {"periodic", to_json(p.elements)},
          {"zero_orbit", to_json(zero_orbit(base, ds))},
          {"digit_set", to_json(ds.digits())}};
}

Json rational_digits(const std::string& text) {
  const auto [a, b] = load_rational(text);
  return to_json(digit_set_rational(a, b));
}

Json rational_verify(const std::string& text, const std::string& digits) {
  const auto [a, b] = load_rational(text);
  const RationalDigitSet constructed = digit_set_rational(a, b);
  const std::vector<Int> ds = load_rational_digits(a, b, digits);
  Json out = to_json(verify_digit_properties(a, b, ds));
  out["digits"] = to_json(ds);
  out["case"] = to_string(constructed.kind);
  out["a"] = to_json(a);
  out["b"] = to_json(b);
  return out;
}

Json rational_expand(const std::string& text, const std::string& digits, long k_lo, long k_hi,
                     std::size_t max_steps) {
  const auto [a, b] = load_rational(text);
  const std::vector<Int> ds = load_rational_digits(a, b, digits);
  Json out = to_json(expand_all(a, b, ds, k_lo, k_hi, max_steps));
  out["digits"] = to_json(ds);
  return out;
}

Json rational_transduce(const std::string& text, const std::string& digits, const std::string& start,
                        const std::string& word) {
  const auto [a, b] = load_rational(text);
  const std::vector<Int> ds = load_rational_digits(a, b, digits);
  Int carry;
  if (start == "+b" || start == "b") {
    carry = b;
  } else if (start == "-b") {
    carry = -b;
  } else {
    carry = parse_int(start);
  }
  const AdditionTransducer t = AdditionTransducer::build(a, b, ds);
  const std::vector<Int> input = parse_int_list(word);
  const std::vector<Int> output = t.transduce(carry, input);
  const Rat in_value = rational_value(a, b, input);
  const Rat out_value = rational_value(a, b, output);
  return {{"input", to_json(input)},
          {"output", to_json(output)},
          {"start", to_json(carry)},
          {"input_value", to_json(in_value)},
          {"output_value", to_json(out_value)},
          {"difference", to_json(Rat(out_value - in_value))},
          {"growth", static_cast<long>(output.size()) - static_cast<long>(input.size())}};
}

Json zero_automaton(const Options& o, long h, bool trimmed) {
  const AlgebraicBase base = load(o);
  ZeroAutomaton a = build_zero_automaton(base, h, automaton_options(o));
  if (trimmed) a = trim(a);
  return to_json(a, base);
}

std::string zero_automaton_dot(const Options& o, long h, bool trimmed) {
  const AlgebraicBase base = load(o);
  ZeroAutomaton a = build_zero_automaton(base, h, automaton_options(o));
  if (trimmed) a = trim(a);
  return to_dot(a, base);
}

Json min_height(const Options& o, long h_max) {
  const AlgebraicBase base = load(o);
  return to_json(algradix::min_height(base, h_max, automaton_options(o)));
}

Json count(const Options& o, long h, std::size_t length, bool growth) {
  const AlgebraicBase base = load(o);
  const ZeroAutomaton a = trim(build_zero_automaton(base, h, automaton_options(o)));
  Json out{{"H", h}, {"length", length}, {"count", to_json(count_words(a, length))}, {"states", a.size()}};
  if (growth) out["growth"] = to_json(growth_rate(a));
  return out;
}

Json sweep_quadratic(long a2_max, int threads) {
  const auto rows = algradix::sweep_quadratic(a2_max, threads);
  std::size_t disagreements = 0;
  for (const auto& r : rows) disagreements += r.agree() ? 0 : 1;
  return {{"rows", to_json(rows)}, {"disagreements", disagreements}};
}

std::string sweep_quadratic_csv(long a2_max, int threads) { return to_csv(algradix::sweep_quadratic(a2_max, threads)); }

}  // namespace algradix::api

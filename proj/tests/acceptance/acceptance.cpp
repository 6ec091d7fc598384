// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include "algradix/api.hpp"
#include "algradix/catalog.hpp"
#include "algradix/digits.hpp"
#include "algradix/error.hpp"
#include "algradix/rational_base.hpp"
#include "algradix/zero_automaton.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

using namespace algradix;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

AlgebraicBase poly(const char* text) { return make_base(parse_polynomial(text)); }

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Outcome quadratic_sweep() {
  Outcome o;
  const auto rows = sweep_quadratic(8);
  std::size_t bad = 0;
  for (const auto& r : rows) bad += r.agree() ? 0 : 1;
  o.require(!rows.empty(), "empty sweep");
  o.require(bad == 0, std::to_string(bad) + " disagreements");
  o.detail = o.ok ? std::to_string(rows.size()) + " polynomials, 0 disagreements" : o.detail;
  return o;
}

Outcome grunwald() {
  Outcome o;
  const AlgebraicBase neg2 = poly("x+2");
  const AlgebraicBase three = poly("x-3");
  const DigitSet d2 = validate_crs(neg2, ints({0, 1}));
  const DigitSet d3 = validate_crs(three, ints({-1, 0, 1}));
  for (long k = -100; k <= 100; ++k) {
    for (const auto& [base, ds] : {std::pair{&neg2, &d2}, std::pair{&three, &d3}}) {
      const ExpansionRecord rec = orbit(from_int(*base, Int(k)), *ds, *base);
      o.require(rec.tail == Tail::Terminated, "k = " + std::to_string(k) + " did not terminate");
      o.require(replay_holds(rec, *base), "replay failed at k = " + std::to_string(k));
      o.require(evaluate_digits(rec.digits, *base) == rec.start, "value mismatch at k = " + std::to_string(k));
    }
  }
  const AlgebraicBase two = poly("x-2");
  const ExpansionRecord fp = orbit(from_int(two, Int(-1)), validate_crs(two, ints({0, 1})), two);
  o.require(fp.tail == Tail::Cycle && fp.cycle.size() == 1 && fp.cycle[0].as_integer() == -1,
            "base 2 does not fix -1");
  if (o.ok) o.detail = "402 expansions replayed; J(-1) = -1 in base 2";
  return o;
}

Outcome rational() {
  Outcome o;
  const RationalDigitSet s = digit_set_rational(Int(5), Int(2));
  o.require(s.digits == ints({-2, 0, 1, 2, 4}), "digit set differs");
  o.require(verify_digit_properties(s).all(), "a property (A)-(D) failed");
  const ExpansionSweep sw = expand_all(s.a, s.b, s.digits, -50, 50);
  o.require(sw.all_terminated && sw.all_replayed, "an expansion of kb failed");
  const AdditionTransducer t = AdditionTransducer::build(s.a, s.b, s.digits);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, s.digits.size() - 1);
  std::uniform_int_distribution<int> len(0, 20);
  std::size_t longest = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Int> w(len(rng));
    for (auto& d : w) d = s.digits[pick(rng)];
    const Int start = i % 2 == 0 ? s.b : Int(-s.b);
    const std::vector<Int> out = t.transduce(start, w);
    o.require(rational_value(s.a, s.b, out) == rational_value(s.a, s.b, w) + start, "transducer value mismatch");
    o.require(out.size() <= w.size() + 2, "output more than two digits longer");
    longest = std::max(longest, out.size() - std::min(out.size(), w.size()));
  }
  if (o.ok) o.detail = "101 expansions terminate; 1000 transductions exact, max growth " + std::to_string(longest);
  return o;
}

Outcome degenerate() {
  Outcome o;
  const RationalDigitSet s = digit_set_rational(Int(3), Int(2));
  o.require(s.kind == RationalCase::Degenerate && s.digits.size() == 5, "digit set size is not 5");
  const AlgebraicBase base = make_rational_base(Int(3), Int(2));
  int crs_count = 0;
  for (long r0 = -6; r0 <= 6; r0 += 3) {
    for (long r1 = -5; r1 <= 7; r1 += 3) {
      for (long r2 = -4; r2 <= 8; r2 += 3) {
        const DigitSet ds = validate_crs(base, ints({r0, r1, r2}));
        ++crs_count;
        for (long d : {r0, r1, r2}) {
          if (d == 0) continue;
          const JStep step = j_step(from_int(base, Int(-2 * d)), ds, base);
          o.require(step.digit.as_integer() == d && step.next.as_integer() == -2 * d,
                    "J does not fix " + std::to_string(-2 * d));
        }
      }
    }
  }
  if (o.ok) o.detail = "size 5; J(-bd) = -bd for " + std::to_string(crs_count) + " digit systems";
  return o;
}

std::set<std::vector<long>> accepted(const ZeroAutomaton& a, long h, int length) {
  std::set<std::vector<long>> out;
  std::vector<long> w(length, -h);
  while (true) {
    if (accepts(a, w)) out.insert(w);
    int i = length - 1;
    while (i >= 0 && w[i] == h) w[i--] = -h;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

Outcome zero_language() {
  Outcome o;
  std::size_t words = 0;
  for (const char* text : {"x^2-x-1", "x^2+2x+2", "x-2"}) {
    const AlgebraicBase base = poly(text);
    for (long h : {1L, 2L}) {
      const ZeroAutomaton a = build_zero_automaton(base, h);
      for (int len = 1; len <= 8; ++len) {
        const auto brute = oracle::zero_words(base.min_poly().coeffs(), h, len);
        const auto got = accepted(a, h, len);
        o.require(brute == got, std::string(text) + " H=" + std::to_string(h) + " length " + std::to_string(len));
        words += got.size();
      }
    }
  }
  if (o.ok) o.detail = "0 mismatches, " + std::to_string(words) + " zero words of length <= 8";
  return o;
}

Outcome heights() {
  Outcome o;
  const std::vector<std::pair<const char*, long>> cases{{"x^2-x-1", 1}, {"x-2", 2}, {"x^2-2", 2}};
  for (const auto& [text, expected] : cases) {
    const AlgebraicBase base = poly(text);
    const MinHeightResult r = min_height(base);
    o.require(r.h_star == expected, std::string(text) + " gave H* = " + std::to_string(r.h_star));
    std::vector<long> msb;
    for (auto it = r.witness.coeffs().rbegin(); it != r.witness.coeffs().rend(); ++it) msb.push_back(it->get_si());
    o.require(word_is_zero(base, msb), std::string(text) + " witness is not a zero");
    o.require(oracle::divides(base.min_poly().coeffs(), r.witness.coeffs()), std::string(text) + " witness not divisible");
    o.require(r.witness.height() == expected, std::string(text) + " witness height");
    if (expected == 2) {
      for (int len = 1; len <= 12; ++len) {
        for (const auto& w : oracle::zero_words(base.min_poly().coeffs(), 1, len)) {
          bool zero = true;
          for (long d : w) zero = zero && d == 0;
          o.require(zero, std::string(text) + " has a nonzero word at H = 1");
        }
      }
    }
  }
  if (o.ok) o.detail = "1, 2, 2 with divisible witnesses; H = 1 empty up to length 12";
  return o;
}

Outcome obstructions() {
  Outcome o;
  for (const char* text : {"x-2", "x^2-2", "2x^2-3x+2"}) o.require(m1_obstruction(poly(text)), text);
  try {
    build_zero_automaton(poly("2x^2-3x+2"), 1);
    o.require(false, "automaton built for a unit-circle base");
  } catch (const Error& e) {
    o.require(e.kind() == ErrorKind::Precondition && std::string(e.what()).find("unit circle") != std::string::npos,
              std::string("unexpected refusal: ") + e.what());
  }
  const FIndexReport f = classify_f_index(poly("x-2"));
  o.require(f.exact && *f.exact == 3, "F-index of 2 is not 3");
  std::set<std::string> in_f2;
  for (long a = -10; a <= 10; ++a) {
    for (long b = 1; b <= 10; ++b) {
      if (a == 0 || std::gcd(a, b) != 1) continue;
      if (f2_analysis(make_rational_base(Int(a), Int(b))).verdict == F2Verdict::InF2) {
        in_f2.insert(std::to_string(a) + "/" + std::to_string(b));
      }
    }
  }
  o.require(in_f2 == std::set<std::string>{"-2/1", "-1/1", "1/1"}, "rational F2 members differ");
  if (o.ok) o.detail = "M(1) fires 3/3; unit circle refused; 2 in F_3; Q cap F2 = {-2,-1,1}";
  return o;
}

Outcome height_reduction() {
  Outcome o;
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> size(1, 2);
  std::uniform_int_distribution<int> degree(0, 2);
  const std::vector<const char*> polys{"x^2+2x+2", "x^2-x-1", "x^3-x-1", "x-3", "x^2+1"};
  int trials = 0;
  for (int t = 0; t < 300; ++t) {
    const AlgebraicBase base = poly(polys[t % polys.size()]);
    std::vector<DigitRepresentation> s{{from_int(base, Int(0)), IntPolynomial{}}};
    const int extra = size(rng);
    for (int i = 0; i < extra; ++i) {
      std::vector<Int> c(degree(rng) + 1);
      for (auto& x : c) x = coeff(rng);
      IntPolynomial rep(c);
      s.push_back({from_polynomial(base, rep), rep});
    }
    const HeightReduction h = height_reduce(base, s);
    const Int n(static_cast<unsigned long>(s.size()));
    Int bound = 0;
    if (n == 1) {
      bound = h.max_exponent + 1;
    } else {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(h.max_exponent + 1));
      bound = n * (pw - 1) / (n - 1);
    }
    o.require(Int(static_cast<unsigned long>(h.digits.size())) <= bound, "|F| exceeds the bound");
    o.require(h.bound == bound, "reported bound differs");
    // each element is sum c_m alpha^m with every c_m in F
    for (const auto& d : s) {
      std::vector<Int> coeffs = d.rep.coeffs();
      for (const auto& c : coeffs) {
        o.require(std::binary_search(h.digits.begin(), h.digits.end(), c), "coefficient " + c.get_str() + " not in F");
      }
      o.require(from_polynomial(base, IntPolynomial(coeffs)) == *d.element, "spot check value");
    }
    ++trials;
  }
  if (o.ok) o.detail = std::to_string(trials) + " random digit sets within the bound";
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto run = [](int threads) {
    std::string out = api::sweep_quadratic(8, threads).dump();
    out += api::rational_digits("5/2").dump();
    out += api::rational_verify("5/2", "").dump();
    out += api::rational_expand("5/2", "", -50, 50, kDefaultMaxSteps).dump();
    for (const char* text : {"x^2-x-1", "x^2+2x+2", "x-2"}) {
      api::Options opts;
      opts.poly = text;
      opts.threads = threads;
      for (long h : {1L, 2L}) out += api::zero_automaton(opts, h, false).dump();
    }
    return out;
  };
  const std::string first = run(1);
  o.require(first == run(1), "two single-thread runs differ");
  o.require(first == run(4), "1 and 4 threads differ");
  if (o.ok) o.detail = std::to_string(first.size()) + " bytes identical over 3 runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"quadratic CNS sweep", quadratic_sweep},
      {"Grunwald bases", grunwald},
      {"rational base 5/2", rational},
      {"degenerate rational base 3/2", degenerate},
      {"zero automaton language", zero_language},
      {"minimal heights", heights},
      {"obstruction fixtures", obstructions},
      {"height reduction bound", height_reduction},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu (%s): %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

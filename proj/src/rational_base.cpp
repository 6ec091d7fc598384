#include "algradix/rational_base.hpp"

#include "algradix/error.hpp"

#include <algorithm>
#include <set>

namespace algradix {

const char* to_string(RationalCase c) {
  switch (c) {
    case RationalCase::NegativeB: return "NegativeB";
    case RationalCase::PositiveB: return "PositiveB";
    case RationalCase::Degenerate: return "Degenerate";
  }
  return "?";
}

std::pair<Int, Int> normalize_rational(Int a, Int b) {
  if (a < 0) {
    a = -a;
    b = -b;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (b == 0 || a <= abs_int(b)) {
    fail(ErrorKind::Precondition, "rational base " + a.get_str() + "/" + b.get_str() + " needs |a| > |b| >= 1");
  }
  if (g != 1) {
    fail(ErrorKind::Precondition, "rational base " + a.get_str() + "/" + b.get_str() + " is not reduced (gcd " +
                                      g.get_str() + ")");
  }
  return {a, b};
}

RationalDigitSet digit_set_rational(const Int& a_in, const Int& b_in) {
  auto [a, b] = normalize_rational(a_in, b_in);
  RationalDigitSet out;
  out.a = a;
  out.b = b;
  if (b < 0) {
    out.kind = RationalCase::NegativeB;
    for (Int d = 0; d < a; ++d) out.digits.push_back(d);
  } else if (b == a - 1) {
    out.kind = RationalCase::Degenerate;
    for (Int d = -(a - 1); d <= a - 1; ++d) out.digits.push_back(d);
  } else {
    out.kind = RationalCase::PositiveB;
    std::set<Int> r;
    for (Int d = 0; d < a; ++d) r.insert(d);
    std::set<Int> removed;
    const Int kmax = floor_div(a - 1, a - b);
    for (Int k = 1; k <= kmax; ++k) {
      removed.insert(k * (a - b));
      removed.insert(k * (a - b) - a);
    }
    std::set<Int> sym;
    std::set_symmetric_difference(r.begin(), r.end(), removed.begin(), removed.end(), std::inserter(sym, sym.end()));
    out.digits.assign(sym.begin(), sym.end());
    out.removed.assign(removed.begin(), removed.end());
  }
  return out;
}

DigitPropertyReport verify_digit_properties(const Int& a, const Int& b, const std::vector<Int>& digits) {
  DigitPropertyReport rep;
  const std::set<Int> s(digits.begin(), digits.end());
  const auto has = [&](const Int& x) { return s.count(x) > 0; };

  std::map<Int, Int> by_class;
  rep.crs = s.size() == digits.size() && Int(static_cast<unsigned long>(s.size())) == a;
  if (!rep.crs) {
    rep.failures.push_back("(A) " + std::to_string(digits.size()) + " digits for modulus " + a.get_str());
  }
  for (const auto& d : s) {
    auto [it, fresh] = by_class.emplace(mod_floor(d, a), d);
    if (!fresh) {
      rep.crs = false;
      rep.failures.push_back("(A) " + it->second.get_str() + " and " + d.get_str() + " are congruent mod " +
                             a.get_str());
    }
  }
  rep.add_closed = true;
  rep.sub_closed = true;
  for (const auto& d : s) {
    if (!has(d + b) && !has(d + b - a)) {
      rep.add_closed = false;
      rep.failures.push_back("(B) neither " + Int(d + b).get_str() + " nor " + Int(d + b - a).get_str() +
                             " is a digit");
    }
    if (!has(d - b) && !has(d - b + a)) {
      rep.sub_closed = false;
      rep.failures.push_back("(C) neither " + Int(d - b).get_str() + " nor " + Int(d - b + a).get_str() +
                             " is a digit");
    }
  }
  rep.has_pm_b = has(b) && has(-b);
  if (!has(b)) rep.failures.push_back("(D) " + b.get_str() + " is not a digit");
  if (!has(-b)) rep.failures.push_back("(D) " + Int(-b).get_str() + " is not a digit");
  return rep;
}

AdditionTransducer AdditionTransducer::build(const Int& a_in, const Int& b_in, const std::vector<Int>& digits) {
  auto [a, b] = normalize_rational(a_in, b_in);
  AdditionTransducer t;
  t.a_ = a;
  t.b_ = b;
  std::set<Int> s(digits.begin(), digits.end());
  t.digits_.assign(s.begin(), s.end());
  for (const Int& c : t.states()) {
    for (const Int& d : t.digits_) {
      const Int sum = d + c;
      if (s.count(sum)) {
        t.edges_.emplace(std::make_pair(c, d), TransducerEdge{sum, Int(0)});
      } else if (s.count(sum - a)) {
        t.edges_.emplace(std::make_pair(c, d), TransducerEdge{sum - a, b});
      } else if (s.count(sum + a)) {
        t.edges_.emplace(std::make_pair(c, d), TransducerEdge{sum + a, Int(-b)});
      }
    }
  }
  return t;
}

std::vector<Int> AdditionTransducer::transduce(const Int& start, const std::vector<Int>& word) const {
  if (start != 0 && start != b_ && start != -b_) {
    fail(ErrorKind::Precondition, "transducer start state must be 0 or +-" + b_.get_str());
  }
  std::vector<Int> out;
  Int carry = start;
  const auto step = [&](const Int& d) {
    auto it = edges_.find({carry, d});
    if (it == edges_.end()) {
      if (!std::binary_search(digits_.begin(), digits_.end(), d)) {
        fail(ErrorKind::Precondition, "digit " + d.get_str() + " is not in the digit set");
      }
      fail(ErrorKind::Precondition, "no transition from carry " + carry.get_str() + " on digit " + d.get_str());
    }
    out.push_back(it->second.output);
    carry = it->second.next;
  };
  for (const auto& d : word) step(d);
  if (carry != 0 && !std::binary_search(digits_.begin(), digits_.end(), Int(0))) {
    fail(ErrorKind::Precondition, "digit set lacks 0, cannot flush a carry");
  }
  for (int pad = 0; carry != 0; ++pad) {
    if (pad > 64) fail(ErrorKind::Resource, "carry did not clear after 64 padding digits");
    step(Int(0));
  }
  return out;
}

Rat rational_value(const Int& a, const Int& b, const std::vector<Int>& word) {
  Rat alpha(a, b);
  alpha.canonicalize();
  Rat acc = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

namespace {

bool is_crs(const Int& a, const std::vector<Int>& digits) {
  std::set<Int> classes;
  for (const auto& d : digits) classes.insert(mod_floor(d, a));
  return classes.size() == digits.size() && Int(static_cast<unsigned long>(digits.size())) == a;
}

}  // namespace

ExpansionSweep expand_all(const Int& a_in, const Int& b_in, const std::vector<Int>& digits, long k_lo, long k_hi,
                          std::size_t max_steps) {
  auto [a, b] = normalize_rational(a_in, b_in);
  if (k_lo > k_hi) fail(ErrorKind::Precondition, "empty k range");
  ExpansionSweep sweep;
  const AlgebraicBase base = make_rational_base(a, b);

  if (is_crs(a, digits)) {
    const DigitSet ds = validate_crs(base, digits);
    for (long k = k_lo; k <= k_hi; ++k) {
      RationalExpansion row{Int(k), Int(k) * b, orbit(from_int(base, Int(k) * b), ds, base, max_steps)};
      sweep.all_terminated = sweep.all_terminated && row.record.tail == Tail::Terminated;
      sweep.all_replayed = sweep.all_replayed && replay_holds(row.record, base);
      sweep.rows.push_back(std::move(row));
    }
  } else {
    // Walk outward from the empty word for 0 using +-b steps.
    const AdditionTransducer t = AdditionTransducer::build(a, b, digits);
    std::map<long, std::vector<Int>> words{{0, {}}};
    for (long k = 1; k <= std::max(0L, k_hi); ++k) words[k] = t.transduce(b, words[k - 1]);
    for (long k = -1; k >= std::min(0L, k_lo); --k) words[k] = t.transduce(-b, words[k + 1]);
    for (long k = k_lo; k <= k_hi; ++k) {
      RationalExpansion row{Int(k), Int(k) * b, {}};
      row.record.start = from_int(base, row.value);
      row.record.tail = Tail::Terminated;
      const auto& w = words[k];
      for (const auto& d : w) row.record.digits.push_back(from_int(base, d));
      for (std::size_t n = 0; n <= w.size(); ++n) {
        row.record.states.push_back(ZAlphaElt::rational(rational_value(a, b, {w.begin() + static_cast<long>(n), w.end()})));
      }
      sweep.all_replayed = sweep.all_replayed && row.record.states.front() == row.record.start &&
                           replay_holds(row.record, base);
      sweep.rows.push_back(std::move(row));
    }
  }
  for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
    const long prev = static_cast<long>(sweep.rows[i - 1].record.digits.size());
    const long cur = static_cast<long>(sweep.rows[i].record.digits.size());
    sweep.max_growth = std::max(sweep.max_growth, std::abs(cur - prev));
  }
  return sweep;
}

}  // namespace algradix

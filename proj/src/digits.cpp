#include "algradix/digits.hpp"

#include "algradix/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace algradix {

const ZAlphaElt& DigitSet::for_residue(const Int& r) const {
  return digits_[by_residue_[r.get_ui()]];
}

bool DigitSet::contains_zero() const {
  return std::any_of(digits_.begin(), digits_.end(), [](const ZAlphaElt& d) { return d.is_zero(); });
}

DigitSet validate_crs(const AlgebraicBase& base, std::vector<ZAlphaElt> candidate) {
  require_elements(base);
  if (!base.is_monic() && !base.hrp()) {
    fail(ErrorKind::Unsupported, "digit systems over the rational base of " + base.min_poly().to_string() +
                                     " need |alpha| > 1");
  }
  const Int m0 = base.abs_const_term();
  if (Int(static_cast<unsigned long>(candidate.size())) != m0) {
    fail(ErrorKind::Precondition, "a complete residue system needs " + m0.get_str() + " digits, got " +
                                      std::to_string(candidate.size()));
  }
  const std::size_t n = candidate.size();
  DigitSet out;
  out.by_residue_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = residue(candidate[i], base).get_ui();
    if (out.by_residue_[r] != n) {
      fail(ErrorKind::Precondition, "digits " + candidate[out.by_residue_[r]].to_string() + " and " +
                                        candidate[i].to_string() + " share residue " + std::to_string(r));
    }
    out.by_residue_[r] = i;
  }
  out.digits_ = std::move(candidate);
  return out;
}

DigitSet validate_crs(const AlgebraicBase& base, const std::vector<Int>& candidate) {
  std::vector<ZAlphaElt> elts;
  for (const auto& k : candidate) elts.push_back(from_int(base, k));
  return validate_crs(base, std::move(elts));
}

JStep j_step(const ZAlphaElt& beta, const DigitSet& digits, const AlgebraicBase& base) {
  const ZAlphaElt& r = digits.for_residue(residue(beta, base));
  return {r, div_alpha_exact(sub(beta, r), base)};
}

const char* to_string(Tail t) {
  switch (t) {
    case Tail::Terminated: return "Terminated";
    case Tail::Cycle: return "Cycle";
    case Tail::Truncated: return "Truncated";
  }
  return "?";
}

ExpansionRecord orbit(const ZAlphaElt& beta, const DigitSet& digits, const AlgebraicBase& base,
                      std::size_t max_steps) {
  if (max_steps < 1) fail(ErrorKind::Precondition, "max_steps must be at least 1");
  ExpansionRecord rec;
  rec.start = beta;
  rec.states.push_back(beta);
  const bool zero_digit = digits.contains_zero();
  std::unordered_map<ZAlphaElt, std::size_t, ZAlphaEltHash> seen{{beta, 0}};
  while (true) {
    const ZAlphaElt& cur = rec.states.back();
    if (zero_digit && cur.is_zero()) {
      rec.tail = Tail::Terminated;
      return rec;
    }
    if (rec.digits.size() >= max_steps) {
      rec.tail = Tail::Truncated;
      return rec;
    }
    JStep step = j_step(cur, digits, base);
    rec.digits.push_back(std::move(step.digit));
    rec.states.push_back(step.next);
    auto [it, fresh] = seen.emplace(std::move(step.next), rec.states.size() - 1);
    if (!fresh) {
      if (zero_digit && rec.states.back().is_zero()) continue;  // reported as Terminated next round
      rec.tail = Tail::Cycle;
      rec.cycle_entry = it->second;
      rec.cycle.assign(rec.states.begin() + static_cast<long>(it->second), rec.states.end() - 1);
      return rec;
    }
  }
}

bool replay_holds(const ExpansionRecord& rec, const AlgebraicBase& base) {
  if (rec.states.size() != rec.digits.size() + 1 || rec.states.front() != rec.start) return false;
  ZAlphaElt partial = from_int(base, Int(0));
  ZAlphaElt power = from_int(base, Int(1));
  for (std::size_t n = 0; n < rec.digits.size(); ++n) {
    partial = add(partial, mul(rec.digits[n], power, base));
    power = mul_alpha(power, base);
    if (add(partial, mul(power, rec.states[n + 1], base)) != rec.start) return false;
  }
  return true;
}

ZAlphaElt evaluate_digits(const std::vector<ZAlphaElt>& digits, const AlgebraicBase& base) {
  ZAlphaElt acc = from_int(base, Int(0));
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = add(mul_alpha(acc, base), *it);
  return acc;
}

HeightReduction height_reduce(const AlgebraicBase& base, const std::vector<DigitRepresentation>& s) {
  if (s.empty()) fail(ErrorKind::Precondition, "height reduction needs a nonempty digit set");
  HeightReduction out;
  for (const auto& d : s) {
    out.max_exponent = std::max(out.max_exponent, d.rep.degree());
    if (d.element) {
      require_elements(base);
      if (from_polynomial(base, d.rep) != *d.element) {
        fail(ErrorKind::Precondition,
             "representation " + d.rep.to_string() + " does not evaluate to " + d.element->to_string());
      }
    }
  }
  std::set<Int> f;
  std::set<Int> prefix{Int(0)};
  for (int m = 0; m <= out.max_exponent; ++m) {
    std::set<Int> next;
    for (const auto& p : prefix) {
      for (const auto& d : s) next.insert(p + d.rep.coeff(m));
    }
    prefix = std::move(next);
    f.insert(prefix.begin(), prefix.end());
  }
  out.digits.assign(f.begin(), f.end());
  const Int n(static_cast<unsigned long>(s.size()));
  Int sum = 0;
  Int pw = 1;
  for (int k = 1; k <= out.max_exponent + 1; ++k) {
    pw *= n;
    sum += pw;
  }
  out.bound = sum;
  return out;
}

IntPolynomial lift_word(const std::vector<DigitRepresentation>& s, const std::vector<std::size_t>& word) {
  IntPolynomial acc;
  for (std::size_t n = 0; n < word.size(); ++n) {
    acc = acc + s.at(word[n]).rep * IntPolynomial::monomial(Int(1), static_cast<int>(n));
  }
  return acc;
}

}  // namespace algradix

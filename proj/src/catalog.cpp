#include "algradix/catalog.hpp"

#include "algradix/digits.hpp"
#include "algradix/error.hpp"
#include "algradix/parallel.hpp"
#include "algradix/periodic.hpp"

#include <sstream>

namespace algradix {

bool quadratic_cns(const Int& a1, const Int& a2) { return a2 >= 2 && a1 >= -1 && a1 <= a2; }

bool kovacs_sufficient(const IntPolynomial& m) {
  if (m.leading() != 1) fail(ErrorKind::Precondition, "Kovacs condition needs a monic polynomial, got " + m.to_string());
  const int d = m.degree();
  if (d < 2 || m.coeff(0) < 2) return false;
  // a_i is the coefficient of x^{d-i}
  if (m.coeff(d - 1) < 1) return false;
  for (int i = 1; i < d; ++i) {
    if (m.coeff(d - i) > m.coeff(d - i - 1)) return false;
  }
  return true;
}

bool all_conjugates_gt(const AlgebraicBase& base, const Rat& t) {
  const CircleSplit split =
      split_by_circle(base.min_poly(), t, base.options().precision_bits, base.options().max_bits);
  for (int s : split.side) {
    if (s != 1) return false;
  }
  return true;
}

bool m1_obstruction(const AlgebraicBase& base) { return abs_int(base.min_poly().eval(Int(1))) == 1; }

const char* to_string(F2Verdict v) {
  switch (v) {
    case F2Verdict::InF2: return "InF2";
    case F2Verdict::PossiblyInF2: return "PossiblyInF2";
    case F2Verdict::ExcludedByM1: return "ExcludedByM1";
    case F2Verdict::ExcludedByNecessaryCondition: return "ExcludedByNecessaryCondition";
  }
  return "?";
}

F2Analysis f2_analysis(const AlgebraicBase& base) {
  const Classification c = base.classification();
  if (c == Classification::RootOfUnity) {
    return {F2Verdict::InF2, "roots of unity lie in F_2", {Int(0), Int(1)}};
  }
  const bool obstructed = m1_obstruction(base) && base.abs_const_term() == 2;
  if (base.degree() == 1) {
    // Rational numbers in F_2 are exactly -2, -1 and 1.
    if (base.is_monic() && base.const_term() == 2) {
      return {F2Verdict::InF2, "alpha = -2 with digits {0, 1}", {Int(0), Int(1)}};
    }
    if (obstructed) return {F2Verdict::ExcludedByM1, "|M(1)| = 1 and |M(0)| = 2", {}};
    return {F2Verdict::ExcludedByNecessaryCondition, "the only rationals in F_2 are -2, -1, 1", {}};
  }
  const bool shape = (c == Classification::ExpandingInteger || c == Classification::Unimodular);
  if (!shape || base.abs_const_term() != 2) {
    return {F2Verdict::ExcludedByNecessaryCondition,
            "F_2 outside the roots of unity needs an expanding integer or unimodular alpha with |M(0)| = 2", {}};
  }
  if (obstructed) return {F2Verdict::ExcludedByM1, "|M(1)| = 1 and |M(0)| = 2", {}};
  return {F2Verdict::PossiblyInF2, "necessary conditions hold", {}};
}

FIndexReport classify_f_index(const AlgebraicBase& base) {
  const CardBounds cb = card_bounds(base);
  FIndexReport r;
  r.lower = cb.lower;
  r.upper = cb.upper;
  const Int m0 = base.abs_const_term();
  r.certificates.push_back({"residue count", "N >= " + cb.lower.get_str(), "a reducing set contains a CRS mod alpha"});
  if (cb.upper) {
    r.certificates.push_back({"symmetric digits", "N <= " + cb.upper->get_str(),
                              "Lagarias-Wang digit set {0, +-1, ..., +-(|M(0)|-1)}"});
  }
  if (m1_obstruction(base)) {
    if (m0 >= 2) {
      r.lower = std::max(r.lower, Int(m0 + 1));
      r.certificates.push_back({"|M(1)| = 1", "N != " + m0.get_str(), "|M(1)| = 1 obstruction"});
    } else {
      r.certificates.push_back({"|M(1)| = 1", "no effect, |M(0)| < 2", "|M(1)| = 1 obstruction"});
    }
  }
  switch (base.classification()) {
    case Classification::RootOfUnity:
      r.exact = Int(2);
      r.certificates.push_back({"root of unity", "N = 2", "roots of unity lie in F_2"});
      break;
    case Classification::Rational: {
      const auto& rv = *base.rational_view();
      const bool degenerate = rv.a == rv.b + 1;
      r.exact = degenerate ? Int(2 * rv.a - 1) : rv.a;
      r.certificates.push_back({"rational base", "N = " + r.exact->get_str(),
                                degenerate ? "rational base a/b with a = b + 1" : "rational base a/b with a != b + 1"});
      break;
    }
    case Classification::ExpandingInteger: {
      if (base.degree() == 1) {
        const auto& rv = *base.rational_view();
        const bool degenerate = rv.a == rv.b + 1;
        r.exact = degenerate ? Int(2 * rv.a - 1) : rv.a;
        r.certificates.push_back({"rational base", "N = " + r.exact->get_str(),
                                  degenerate ? "rational base a/b with a = b + 1" : "rational base a/b with a != b + 1"});
      }
      if (all_conjugates_gt(base, Rat(2))) {
        r.exact = m0;
        r.certificates.push_back({"moduli > 2", "N = " + m0.get_str(), "all conjugates of modulus greater than 2"});
      } else {
        r.certificates.push_back({"moduli > 2", "not applicable", "all conjugates of modulus greater than 2"});
      }
      break;
    }
    case Classification::Unimodular:
      r.certificates.push_back({"unimodular", "if N = |M(0)| then no reducing set of that size is integral",
                                "unimodular bases with Card(S) = |M(0)|"});
      break;
    default:
      break;
  }
  if (!r.exact && r.upper && *r.upper == r.lower) r.exact = r.lower;
  if (r.exact) {
    if (*r.exact < r.lower || (r.upper && *r.exact > *r.upper)) {
      fail(ErrorKind::Resource, "inconsistent F-index certificates for " + base.min_poly().to_string());
    }
    r.lower = *r.exact;
    r.upper = *r.exact;
  }
  return r;
}

std::vector<QuadraticRow> sweep_quadratic(long a2_max, int threads) {
  if (a2_max < 2) fail(ErrorKind::Precondition, "sweep needs a2_max >= 2");
  std::vector<std::pair<long, long>> grid;
  for (long a2 = 2; a2 <= a2_max; ++a2) {
    for (long a1 = -3; a1 <= a2 + 2; ++a1) grid.emplace_back(a1, a2);
  }
  const std::size_t chunks = chunk_count(grid.size(), threads);
  std::vector<std::vector<QuadraticRow>> parts(chunks);
  parallel_chunks(grid.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [a1, a2] = grid[i];
      const IntPolynomial m(std::vector<Int>{Int(a2), Int(a1), Int(1)});
      if (find_factor(m).status != FactorSearch::Irreducible) continue;
      const AlgebraicBase base = make_base(m);
      if (base.classification() != Classification::ExpandingInteger) continue;
      std::vector<Int> digits;
      for (long k = 0; k < a2; ++k) digits.emplace_back(k);
      const DigitSet ds = validate_crs(base, digits);
      parts[chunk].push_back({a1, a2, quadratic_cns(Int(a1), Int(a2)), is_number_system(base, ds)});
    }
  });
  std::vector<QuadraticRow> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string to_csv(const std::vector<QuadraticRow>& rows) {
  std::ostringstream os;
  os << "a1,a2,criterion,brute_force,agree\n";
  for (const auto& r : rows) {
    os << r.a1 << ',' << r.a2 << ',' << (r.criterion ? "true" : "false") << ',' << (r.brute_force ? "true" : "false")
       << ',' << (r.agree() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace algradix

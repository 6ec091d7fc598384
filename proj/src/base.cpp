#include "algradix/base.hpp"

#include "algradix/error.hpp"

#include <algorithm>
#include <map>

namespace algradix {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::ExpandingInteger: return "ExpandingInteger";
    case Classification::ExpandingNonInteger: return "ExpandingNonInteger";
    case Classification::Unimodular: return "Unimodular";
    case Classification::RootOfUnity: return "RootOfUnity";
    case Classification::Rational: return "Rational";
    case Classification::Mixed: return "Mixed";
  }
  return "?";
}

const char* to_string(Irreducibility i) {
  return i == Irreducibility::Verified ? "Verified" : "Assumed";
}

int AlgebraicBase::n_expanding() const {
  return static_cast<int>(std::count_if(data_.conjugates.begin(), data_.conjugates.end(),
                                        [](const Conjugate& c) { return c.side > 0; }));
}

int AlgebraicBase::n_unit() const {
  return static_cast<int>(std::count_if(data_.conjugates.begin(), data_.conjugates.end(),
                                        [](const Conjugate& c) { return c.side == 0; }));
}

bool AlgebraicBase::hrp() const {
  switch (classification_) {
    case Classification::ExpandingInteger:
    case Classification::ExpandingNonInteger:
    case Classification::Unimodular:
    case Classification::RootOfUnity:
      return true;
    case Classification::Rational:
      return rational_ && rational_->a > abs_int(rational_->b);
    case Classification::Mixed:
      return false;
  }
  return false;
}

namespace {

ConjugateData compute_conjugates(const IntPolynomial& m, int bits, int max_bits) {
  ConjugateData out;
  const int d = m.degree();
  const int on_circle = count_roots_on_circle(m, Rat(1));
  std::vector<ComplexBall> roots;
  std::vector<int> side;
  if (on_circle == d) {
    roots = isolate_roots(m, bits + 2, max_bits);
    side.assign(roots.size(), 0);
  } else {
    CircleSplit split = split_by_circle(m, Rat(1), bits + 2, max_bits);
    roots = std::move(split.roots);
    side = std::move(split.side);
    bits = std::max(bits, split.bits - 2);
  }
  out.bits = bits;
  const int guard = bits + 8;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Conjugate c;
    c.ball = roots[k];
    c.side = side[k];
    c.modulus = side[k] == 0 ? Interval{Rat(1), Rat(1)} : modulus(roots[k], guard);
    out.conjugates.push_back(std::move(c));
  }
  for (const auto& c : out.conjugates) {
    std::vector<ComplexBall> pw;
    ComplexBall cur = ComplexBall::exact(Rat(1));
    for (int i = 0; i < d; ++i) {
      pw.push_back(cur);
      cur = mul(cur, c.ball, guard + 8);
    }
    out.powers.push_back(std::move(pw));
  }
  return out;
}

}  // namespace

ConjugateData AlgebraicBase::refined(int bits) const {
  return compute_conjugates(min_poly_, bits, options_.max_bits);
}

AlgebraicBase make_base(const IntPolynomial& input, const BaseOptions& options) {
  if (input.is_zero()) fail(ErrorKind::Precondition, "zero polynomial is not a minimal polynomial");
  if (input.degree() < 1) fail(ErrorKind::Precondition, "constant polynomial is not a minimal polynomial");
  IntPolynomial m = input.leading() < 0 ? input.negated() : input;
  const Int content = m.content();
  if (content != 1) {
    fail(ErrorKind::Precondition,
         "polynomial " + m.to_string() + " is not primitive (content " + content.get_str() + ")");
  }
  if (m.coeff(0) == 0) fail(ErrorKind::Precondition, "M(0) = 0: the base must be nonzero");
  if (!is_squarefree(m)) fail(ErrorKind::Precondition, "polynomial " + m.to_string() + " is not squarefree");

  AlgebraicBase base;
  base.min_poly_ = m;
  base.options_ = options;
  const int d = m.degree();
  if (d <= options.irreducibility_degree_limit) {
    FactorResult f = find_factor(m);
    if (f.status == FactorSearch::Reducible) {
      fail(ErrorKind::Precondition,
           "polynomial " + m.to_string() + " is reducible (factor " + f.factor->to_string() + ")");
    }
    base.irreducibility_ =
        f.status == FactorSearch::Irreducible ? Irreducibility::Verified : Irreducibility::Assumed;
    if (f.status == FactorSearch::Inconclusive && !options.assume_irreducible) {
      fail(ErrorKind::Precondition, "irreducibility of " + m.to_string() +
                                        " could not be decided; pass the assume-irreducible flag");
    }
  } else {
    if (!options.assume_irreducible) {
      fail(ErrorKind::Precondition, "degree " + std::to_string(d) + " exceeds the irreducibility check limit " +
                                        std::to_string(options.irreducibility_degree_limit) +
                                        "; pass the assume-irreducible flag");
    }
    base.irreducibility_ = Irreducibility::Assumed;
  }

  base.data_ = compute_conjugates(m, options.precision_bits, options.max_bits);

  const int unit = base.n_unit();
  const int expanding = base.n_expanding();
  if (d == 1) {
    RationalParams r;
    r.a = abs_int(m.coeff(0));
    r.b = m.coeff(0) > 0 ? Int(-m.leading()) : m.leading();
    base.rational_ = r;
  }
  if (unit == d) {
    base.classification_ =
        (base.is_monic() && is_cyclotomic(m)) ? Classification::RootOfUnity : Classification::Unimodular;
  } else if (d == 1) {
    base.classification_ = base.is_monic() ? Classification::ExpandingInteger : Classification::Rational;
    if (base.is_monic() && expanding != 1) base.classification_ = Classification::Mixed;
  } else if (expanding == d) {
    base.classification_ =
        base.is_monic() ? Classification::ExpandingInteger : Classification::ExpandingNonInteger;
  } else {
    base.classification_ = Classification::Mixed;
  }
  return base;
}

AlgebraicBase make_rational_base(const Int& num, const Int& den, const BaseOptions& options) {
  if (den == 0) fail(ErrorKind::Precondition, "zero denominator");
  if (num == 0) fail(ErrorKind::Precondition, "the base must be nonzero");
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return make_base(IntPolynomial(std::vector<Int>{Int(-num / g), Int(den / g)}), options);
}

CardBounds card_bounds(const AlgebraicBase& base) {
  if (!base.hrp()) {
    fail(ErrorKind::Precondition,
         "base " + base.min_poly().to_string() + " does not have the height reducing property");
  }
  CardBounds out;
  const Int m0 = base.abs_const_term();
  out.lower = m0 > 2 ? m0 : Int(2);
  if (base.classification() == Classification::ExpandingInteger) out.upper = 2 * m0 - 1;
  return out;
}

// ---------------------------------------------------------------------------
// Irreducibility

namespace {

std::vector<Int> positive_divisors(Int n) {
  n = abs_int(n);
  std::vector<Int> small;
  std::vector<Int> large;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Coefficients of the interpolating polynomial through (xs[i], ys[i]).
std::vector<Rat> interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> coef(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rat(xs[j]);
      }
      basis = std::move(next);
      denom *= Rat(xs[i] - xs[j]);
    }
    for (std::size_t k = 0; k < n; ++k) coef[k] += basis[k] * Rat(ys[i]) / denom;
  }
  return coef;
}

Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

FactorResult find_factor(const IntPolynomial& m, long long max_combinations) {
  const int d = m.degree();
  if (d <= 1) return {FactorSearch::Irreducible, std::nullopt};
  for (const Int& p : positive_divisors(m.coeff(0))) {
    for (const Int& q : positive_divisors(m.leading())) {
      Int g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int s : {1, -1}) {
        Rat root(s * p, q);
        if (m.eval(root) == 0) return {FactorSearch::Reducible, IntPolynomial(std::vector<Int>{Int(-s * p), q})};
      }
    }
  }
  // Mignotte: a factor of degree k has |g_j| <= C(k, j) * ||M||_2, rounded up.
  Int norm2_sq = 0;
  for (const auto& c : m.coeffs()) norm2_sq += c * c;
  Int norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2_sq.get_mpz_t());
  norm2 += 1;

  std::vector<std::pair<Int, Int>> points;  // (|M(x)|, x)
  for (long x = -24; x <= 24; ++x) {
    Int v = m.eval(Int(x));
    if (v != 0) points.emplace_back(abs_int(v), Int(x));
  }
  std::sort(points.begin(), points.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    if (abs_int(l.second) != abs_int(r.second)) return abs_int(l.second) < abs_int(r.second);
    return l.second < r.second;
  });

  bool inconclusive = false;
  for (int k = 2; k <= d / 2; ++k) {
    std::vector<Int> xs;
    std::vector<std::vector<Int>> choices;
    long long combos = 1;
    for (int i = 0; i <= k; ++i) {
      xs.push_back(points[static_cast<std::size_t>(i)].second);
      std::vector<Int> divs = positive_divisors(m.eval(xs.back()));
      std::vector<Int> signed_divs;
      for (const auto& v : divs) {
        signed_divs.push_back(v);
        if (i > 0) signed_divs.push_back(-v);  // g and -g are the same factor
      }
      combos *= static_cast<long long>(signed_divs.size());
      if (combos > max_combinations) break;
      choices.push_back(std::move(signed_divs));
    }
    if (combos > max_combinations) {
      inconclusive = true;
      continue;
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<Int> ys;
      for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
      std::vector<Rat> g = interpolate(xs, ys);
      bool ok = g.back() != 0;
      std::vector<Int> gi;
      for (std::size_t j = 0; ok && j < g.size(); ++j) {
        if (g[j].get_den() != 1 || abs_int(g[j].get_num()) > binomial(k, static_cast<int>(j)) * norm2) {
          ok = false;
        } else {
          gi.push_back(g[j].get_num());
        }
      }
      if (ok) {
        IntPolynomial cand(std::move(gi));
        if (cand.degree() == k && exact_quotient(m, cand)) {
          return {FactorSearch::Reducible, cand.primitive_part()};
        }
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return {inconclusive ? FactorSearch::Inconclusive : FactorSearch::Irreducible, std::nullopt};
}

namespace {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

bool is_cyclotomic(const IntPolynomial& m) {
  const int d = m.degree();
  if (d < 1 || abs_int(m.leading()) != 1) return false;
  // phi(n) >= sqrt(n / 2), so phi(n) = d forces n <= 2 d^2.
  const long limit = 2L * d * d + 2;
  for (long n = 1; n <= limit; ++n) {
    if (euler_phi(n) != d) continue;
    IntPolynomial xn = IntPolynomial::monomial(Int(1), static_cast<int>(n)) - IntPolynomial{1};
    if (exact_quotient(xn, m)) return true;
  }
  return false;
}

}  // namespace algradix

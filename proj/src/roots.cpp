#include "algradix/roots.hpp"

#include "algradix/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace algradix {

Rat abs_upper(const ComplexBall& z, int bits) {
  return sqrt_upper(z.re * z.re + z.im * z.im, bits) + z.rad;
}

Rat abs_lower(const ComplexBall& z, int bits) {
  Rat v = sqrt_lower(z.re * z.re + z.im * z.im, bits) - z.rad;
  return v < 0 ? Rat(0) : v;
}

Interval modulus(const ComplexBall& z, int bits) { return {abs_lower(z, bits), abs_upper(z, bits)}; }

ComplexBall add(const ComplexBall& a, const ComplexBall& b) {
  return {a.re + b.re, a.im + b.im, a.rad + b.rad};
}

ComplexBall mul(const ComplexBall& a, const ComplexBall& b, int bits) {
  const Rat re = a.re * b.re - a.im * b.im;
  const Rat im = a.re * b.im + a.im * b.re;
  ComplexBall out;
  out.re = round_down(re, bits);
  out.im = round_down(im, bits);
  const int guard = bits + 4;
  Rat rad = abs_upper(ComplexBall::exact(a.re, a.im), guard) * b.rad +
            abs_upper(ComplexBall::exact(b.re, b.im), guard) * a.rad + a.rad * b.rad;
  rad += (re - out.re) + (im - out.im);
  out.rad = round_up(rad, guard);
  return out;
}

ComplexBall scale(const ComplexBall& a, const Int& k) {
  return {a.re * Rat(k), a.im * Rat(k), a.rad * Rat(abs_int(k))};
}

namespace {

using cd = std::complex<double>;

std::vector<cd> double_seeds(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<cd> a(static_cast<std::size_t>(n) + 1);
  const double lead = p.leading().get_d();
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = p.coeff(i).get_d() / lead;
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]));
  radius = std::min(1.0 + radius, 1e150);

  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.9, 2.0 * M_PI * k / n + 0.4);
  }
  auto eval = [&](cd x) {
    cd acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + a[static_cast<std::size_t>(i)];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0;
    for (int i = 0; i < n; ++i) {
      cd den = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      }
      if (std::abs(den) == 0) den = 1e-300;
      const cd w = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= w;
      change = std::max(change, std::abs(w) / std::max(1.0, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (change < 1e-15) break;
  }
  for (auto& x : z) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) x = 0;
  }
  return z;
}

struct CRat {
  Rat re;
  Rat im;
};

CRat cmul(const CRat& a, const CRat& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

CRat cdiv(const CRat& a, const CRat& b) {
  const Rat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

CRat ceval(const IntPolynomial& p, const CRat& x) {
  CRat acc{Rat(0), Rat(0)};
  for (int i = p.degree(); i >= 0; --i) {
    acc = cmul(acc, x);
    acc.re += Rat(p.coeff(i));
  }
  return acc;
}

// Weierstrass corrections W_i = p(z_i) / (lead * prod_{j != i}(z_i - z_j)).
std::vector<CRat> corrections(const IntPolynomial& p, const std::vector<CRat>& z) {
  const std::size_t n = z.size();
  std::vector<CRat> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    CRat den{Rat(p.leading()), Rat(0)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) den = cmul(den, {z[i].re - z[j].re, z[i].im - z[j].im});
    }
    if (den.re == 0 && den.im == 0) {
      w[i] = {Rat(1), Rat(0)};  // coincident approximations; forces another round
      continue;
    }
    w[i] = cdiv(ceval(p, z[i]), den);
  }
  return w;
}

bool ball_order(const ComplexBall& a, const ComplexBall& b) {
  const double ma = std::hypot(a.re.get_d(), a.im.get_d());
  const double mb = std::hypot(b.re.get_d(), b.im.get_d());
  const double tol = 1e-9 * std::max(1.0, std::max(ma, mb));
  if (std::abs(ma - mb) > tol) return ma > mb;
  if (a.im != b.im) return a.im > b.im;
  return a.re < b.re;
}

}  // namespace

std::vector<ComplexBall> isolate_roots(const IntPolynomial& p, int target_bits, int max_bits) {
  const int n = p.degree();
  if (n < 1) fail(ErrorKind::Precondition, "root isolation needs a nonconstant polynomial");
  if (n == 1) {
    Rat r(-p.coeff(0), p.coeff(1));
    r.canonicalize();
    return {ComplexBall::exact(r)};
  }
  std::vector<CRat> z;
  for (const cd& s : double_seeds(p)) z.push_back({Rat(s.real()), Rat(s.imag())});

  int bits = std::max(64, target_bits + 16);
  const Rat target = pow2_neg(target_bits);
  while (true) {
    const Rat tiny = pow2_neg(2 * (bits - 4));
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<CRat> w = corrections(p, z);
      bool converged = true;
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (w[i].re * w[i].re + w[i].im * w[i].im > tiny) converged = false;
        z[i].re = round_down(z[i].re - w[i].re, bits);
        z[i].im = round_down(z[i].im - w[i].im, bits);
      }
      if (converged) break;
    }
    // Inclusion disks |z - z_i| <= n |W_i|; pairwise disjoint disks hold one root each.
    std::vector<CRat> w = corrections(p, z);
    std::vector<ComplexBall> balls;
    bool ok = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Rat r = Rat(n) * sqrt_upper(w[i].re * w[i].re + w[i].im * w[i].im, bits + 8);
      r = round_up(r, bits + 8);
      if (r > target) ok = false;
      balls.push_back({z[i].re, z[i].im, r});
    }
    for (std::size_t i = 0; ok && i < balls.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < balls.size(); ++j) {
        const Rat dr = balls[i].re - balls[j].re;
        const Rat di = balls[i].im - balls[j].im;
        const Rat rr = balls[i].rad + balls[j].rad;
        if (!(dr * dr + di * di > rr * rr)) ok = false;
      }
    }
    if (ok) {
      // When the disks meeting the real axis match the exact real root count,
      // each of them holds a real root.
      std::size_t touching = 0;
      for (const auto& b : balls) {
        if (abs(b.im) <= b.rad) ++touching;
      }
      const Rat cauchy = 1 + Rat(p.height(), abs_int(p.leading()));
      if (touching == static_cast<std::size_t>(count_real_roots(p, -cauchy, cauchy))) {
        for (auto& b : balls) {
          if (abs(b.im) <= b.rad) {
            b.rad += abs(b.im);
            b.im = 0;
          }
        }
      }
      std::sort(balls.begin(), balls.end(), ball_order);
      return balls;
    }
    bits *= 2;
    if (bits > max_bits) {
      fail(ErrorKind::Resource, "root isolation of " + p.to_string() + " exceeded " +
                                    std::to_string(max_bits) + " bits of working precision");
    }
  }
}

namespace {

int unit_circle_count(const IntPolynomial& p) {
  IntPolynomial g = gcd(p, p.reversed());
  if (g.degree() <= 0) return 0;
  int count = 0;
  for (long s : {1L, -1L}) {
    if (g.eval(Int(s)) == 0) {
      ++count;
      g = *exact_quotient(g, IntPolynomial{-s, 1});
    }
  }
  if (g.degree() <= 0) return count;
  if (g.degree() % 2 != 0 || !(g.reversed() == g)) {
    fail(ErrorKind::Precondition, "unit-circle count expects a squarefree input polynomial");
  }
  // g(x) = x^m T(x + 1/x), using x^j + x^-j = V_j(x + 1/x).
  const int m = g.degree() / 2;
  IntPolynomial t = IntPolynomial::monomial(g.coeff(m), 0);
  IntPolynomial v_prev{2};
  IntPolynomial v_cur{0, 1};
  const IntPolynomial y{0, 1};
  for (int j = 1; j <= m; ++j) {
    t = t + IntPolynomial::monomial(g.coeff(m + j), 0) * v_cur;
    IntPolynomial next = y * v_cur - v_prev;
    v_prev = v_cur;
    v_cur = next;
  }
  int inside = count_real_roots(t, Rat(-2), Rat(2));
  if (t.eval(Int(2)) == 0) --inside;
  return count + 2 * inside;
}

}  // namespace

int count_roots_on_circle(const IntPolynomial& p, const Rat& t) {
  if (t <= 0) fail(ErrorKind::Precondition, "circle radius must be positive");
  const int d = p.degree();
  std::vector<Int> c;
  Int num_pow = 1;
  for (int i = 0; i <= d; ++i) {
    Int den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), t.get_den().get_mpz_t(), static_cast<unsigned long>(d - i));
    c.push_back(p.coeff(i) * num_pow * den_pow);
    num_pow *= t.get_num();
  }
  return unit_circle_count(IntPolynomial(std::move(c)));
}

CircleSplit split_by_circle(const IntPolynomial& p, const Rat& t, int start_bits, int max_bits) {
  const int on = count_roots_on_circle(p, t);
  int bits = std::max(start_bits, 16);
  while (true) {
    CircleSplit out;
    out.bits = bits;
    out.roots = isolate_roots(p, bits, max_bits);
    int undecided = 0;
    for (const auto& r : out.roots) {
      const Interval m = modulus(r, bits + 8);
      if (m.lo > t) {
        out.side.push_back(1);
      } else if (m.hi < t) {
        out.side.push_back(-1);
      } else {
        out.side.push_back(0);
        ++undecided;
      }
    }
    if (undecided == on) return out;
    bits *= 2;
    if (bits > max_bits) {
      fail(ErrorKind::Resource, "could not separate the roots of " + p.to_string() + " from |z| = " +
                                    to_string(t) + " within " + std::to_string(max_bits) + " bits");
    }
  }
}

}  // namespace algradix

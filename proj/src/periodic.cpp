#include "algradix/periodic.hpp"

#include "algradix/error.hpp"
#include "algradix/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace algradix {

namespace {

void require_expanding(const AlgebraicBase& base) {
  require_elements(base);
  const bool rational_ok = base.rational_view() && base.rational_view()->a > abs_int(base.rational_view()->b);
  if (base.classification() != Classification::ExpandingInteger && !rational_ok) {
    fail(ErrorKind::Unsupported, "periodic points need an expanding integer or a rational base with |alpha| > 1; " +
                                     base.min_poly().to_string() + " is " + to_string(base.classification()));
  }
}

Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

}  // namespace

BoundsReport orbit_bounds(const AlgebraicBase& base, const DigitSet& digits) {
  require_expanding(base);
  BoundsReport out;
  const ConjugateData& data = base.conjugate_data();
  const int bits = data.bits + 8;
  std::vector<std::vector<ComplexBall>> digit_balls;
  for (const auto& r : digits.digits()) digit_balls.push_back(eval_conjugates(r, data));
  for (std::size_t k = 0; k < data.conjugates.size(); ++k) {
    Rat kmax = 0;
    for (const auto& balls : digit_balls) kmax = std::max(kmax, abs_upper(balls[k], bits));
    Rat mod_lo;
    if (base.degree() == 1) {
      const auto& r = *base.rational_view();
      mod_lo = Rat(r.a, abs_int(r.b));
      mod_lo.canonicalize();
    } else {
      mod_lo = data.conjugates[k].modulus.lo;
    }
    Rat bound = 1 + kmax / (mod_lo - 1);
    if (base.degree() > 1) bound = round_up(bound, bits);
    out.k_sigma.push_back(kmax);
    out.orbit_bounds.push_back(bound);
    out.c_alpha_r = std::max(out.c_alpha_r, bound);
  }
  return out;
}

namespace {

// Half-widths B_i with |coords_i| <= B_i whenever |sigma_k(x)| <= c_k for every k.
// coords = V^{-1} (sigma_k(x))_k and column k of V^{-1} holds the coefficients of
// the Lagrange polynomial M(x) / ((x - alpha_k) M'(alpha_k)), found by synthetic division.
std::vector<Int> coordinate_box(const AlgebraicBase& base, const std::vector<Rat>& c) {
  const ConjugateData& data = base.conjugate_data();
  const int d = base.degree();
  const int bits = data.bits + 8;
  if (d == 1) return {floor_rat(c.front())};
  const IntPolynomial& m = base.min_poly();
  std::vector<Rat> row_sum(static_cast<std::size_t>(d), Rat(0));
  for (int k = 0; k < d; ++k) {
    const ComplexBall& alpha = data.conjugates[static_cast<std::size_t>(k)].ball;
    // quotient q with M(x) = (x - alpha) q(x); q[i] is the x^i coefficient
    std::vector<ComplexBall> q(static_cast<std::size_t>(d));
    q[static_cast<std::size_t>(d - 1)] = ComplexBall::exact(Rat(m.coeff(d)));
    for (int i = d - 1; i > 0; --i) {
      q[static_cast<std::size_t>(i - 1)] =
          add(ComplexBall::exact(Rat(m.coeff(i))), mul(alpha, q[static_cast<std::size_t>(i)], bits));
    }
    // M'(alpha) = q(alpha)
    ComplexBall deriv = q[static_cast<std::size_t>(d - 1)];
    for (int i = d - 2; i >= 0; --i) deriv = add(q[static_cast<std::size_t>(i)], mul(alpha, deriv, bits));
    const Rat den = abs_lower(deriv, bits);
    if (den <= 0) fail(ErrorKind::Resource, "conjugate disks of " + m.to_string() + " overlap");
    for (int i = 0; i < d; ++i) {
      row_sum[static_cast<std::size_t>(i)] += abs_upper(q[static_cast<std::size_t>(i)], bits) / den * c[static_cast<std::size_t>(k)];
    }
  }
  std::vector<Int> out;
  for (const auto& r : row_sum) out.push_back(floor_rat(r));
  return out;
}

struct CycleCollector {
  std::vector<std::vector<ZAlphaElt>> cycles;
};

std::vector<ZAlphaElt> rotate_to_min(std::vector<ZAlphaElt> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

// Monic base with integer digits and a box that fits machine words: walk J on
// int64 coordinates with a dense visited table over the box. Returns false when
// not applicable or when a walk leaves the safe range.
bool walk_box_fast(const AlgebraicBase& base, const DigitSet& digits, const std::vector<Int>& box, std::size_t n,
                   std::size_t max_walk, std::vector<std::vector<ZAlphaElt>>& cycles) {
  using i64 = std::int64_t;
  constexpr i64 kLimit = i64(1) << 50;
  if (!base.is_monic() || n > (std::size_t(1) << 32) - 2) return false;
  const int d = base.degree();
  const i64 m0 = base.abs_const_term().get_si();
  if (!base.abs_const_term().fits_slong_p() || m0 > kLimit) return false;
  std::vector<i64> a(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const Int c = base.min_poly().coeff(i);
    if (!c.fits_slong_p() || abs_int(c) > Int(static_cast<long>(1 << 20))) return false;
    a[static_cast<std::size_t>(i)] = c.get_si();
  }
  std::vector<i64> digit_for(static_cast<std::size_t>(m0));
  for (i64 r = 0; r < m0; ++r) {
    const ZAlphaElt& dg = digits.for_residue(Int(static_cast<long>(r)));
    for (std::size_t i = 1; i < dg.coords().size(); ++i) {
      if (dg.coords()[i] != 0) return false;
    }
    if (!dg.coords()[0].fits_slong_p() || abs_int(dg.coords()[0]) > Int(static_cast<long>(kLimit))) return false;
    digit_for[static_cast<std::size_t>(r)] = dg.coords()[0].get_si();
  }
  std::vector<i64> half(static_cast<std::size_t>(d));
  std::vector<i64> width(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    half[static_cast<std::size_t>(i)] = box[static_cast<std::size_t>(i)].get_si();
    width[static_cast<std::size_t>(i)] = 2 * half[static_cast<std::size_t>(i)] + 1;
  }
  const auto index_of = [&](const std::vector<i64>& c) -> std::int64_t {
    std::int64_t idx = 0;
    for (int i = d - 1; i >= 0; --i) {
      const auto u = static_cast<std::size_t>(i);
      if (c[u] < -half[u] || c[u] > half[u]) return -1;
      idx = idx * width[u] + (c[u] + half[u]);
    }
    return idx;
  };

  std::vector<std::uint32_t> mark(n, 0);  // walk id + 1
  std::vector<i64> path;  // flattened states of the current walk
  std::vector<i64> cur(static_cast<std::size_t>(d));
  std::vector<i64> next(static_cast<std::size_t>(d));
  for (std::size_t start = 0; start < n; ++start) {
    if (mark[start] != 0) continue;
    const auto walk = static_cast<std::uint32_t>(start + 1);
    std::size_t rest = start;
    for (int i = 0; i < d; ++i) {
      const auto u = static_cast<std::size_t>(i);
      cur[u] = static_cast<i64>(rest % static_cast<std::size_t>(width[u])) - half[u];
      rest /= static_cast<std::size_t>(width[u]);
    }
    path.clear();
    while (true) {
      const std::int64_t idx = index_of(cur);
      // states outside the box are never periodic and are not recorded
      const std::uint32_t seen = idx >= 0 ? mark[static_cast<std::size_t>(idx)] : 0;
      if (seen != 0) {
        if (seen == walk) {
          std::size_t pos = 0;
          while (!std::equal(cur.begin(), cur.end(), path.begin() + static_cast<long>(pos))) pos += cur.size();
          std::vector<ZAlphaElt> cyc;
          for (; pos < path.size(); pos += cur.size()) {
            std::vector<Int> coords;
            for (std::size_t i = 0; i < cur.size(); ++i) coords.emplace_back(static_cast<long>(path[pos + i]));
            cyc.push_back(ZAlphaElt::power_basis(std::move(coords)));
          }
          cycles.push_back(rotate_to_min(std::move(cyc)));
        }
        break;
      }
      if (path.size() >= max_walk * cur.size()) {
        fail(ErrorKind::Resource, "J-orbit exceeded " + std::to_string(max_walk) + " steps");
      }
      if (idx >= 0) mark[static_cast<std::size_t>(idx)] = walk;
      path.insert(path.end(), cur.begin(), cur.end());
      // cur - r = alpha * next
      i64 r0 = cur[0] % m0;
      if (r0 < 0) r0 += m0;
      const i64 c0 = cur[0] - digit_for[static_cast<std::size_t>(r0)];
      const i64 top = -(c0 / a[0]);
      next[static_cast<std::size_t>(d - 1)] = top;
      for (int i = d - 1; i >= 1; --i) {
        next[static_cast<std::size_t>(i - 1)] = cur[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(i)] * top;
      }
      for (i64 v : next) {
        if (v > kLimit || v < -kLimit) return false;
      }
      std::swap(cur, next);
    }
  }
  return true;
}

}  // namespace

PeriodicSet periodic_points(const AlgebraicBase& base, const DigitSet& digits, const PeriodicOptions& opts) {
  require_expanding(base);
  PeriodicSet out;
  out.bounds = orbit_bounds(base, digits);
  out.coordinate_bounds = coordinate_box(base, out.bounds.orbit_bounds);

  Int total = 1;
  for (const auto& b : out.coordinate_bounds) total *= 2 * b + 1;
  if (total > Int(static_cast<unsigned long>(opts.max_candidates))) {
    fail(ErrorKind::Resource, "periodic point search needs " + total.get_str() + " candidates, cap is " +
                                  std::to_string(opts.max_candidates));
  }
  const std::size_t n = total.get_ui();
  out.candidates = n;
  const std::size_t dim = out.coordinate_bounds.size();

  auto candidate = [&](std::size_t index) {
    std::vector<Int> coords(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t width = 2 * out.coordinate_bounds[i].get_ui() + 1;
      coords[i] = Int(static_cast<unsigned long>(index % width)) - out.coordinate_bounds[i];
      index /= width;
    }
    return base.is_monic() ? ZAlphaElt::power_basis(std::move(coords)) : ZAlphaElt::rational(Rat(coords[0]));
  };

  std::vector<CycleCollector> found(1);
  if (!walk_box_fast(base, digits, out.coordinate_bounds, n, opts.max_walk, found[0].cycles)) {
    found.assign(chunk_count(n, opts.threads), CycleCollector{});
    parallel_chunks(n, opts.threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      // Walk J from each candidate until reaching a state seen in this chunk;
      // a revisit within the current walk closes a new cycle.
      std::unordered_map<ZAlphaElt, std::pair<std::size_t, std::size_t>, ZAlphaEltHash> seen;  // walk, position
      std::vector<ZAlphaElt> path;
      for (std::size_t idx = begin; idx < end; ++idx) {
        ZAlphaElt cur = candidate(idx);
        if (seen.count(cur)) continue;
        path.clear();
        while (true) {
          auto it = seen.find(cur);
          if (it != seen.end()) {
            if (it->second.first == idx) {
              found[chunk].cycles.push_back(
                  rotate_to_min({path.begin() + static_cast<long>(it->second.second), path.end()}));
            }
            break;
          }
          if (path.size() >= opts.max_walk) {
            fail(ErrorKind::Resource, "J-orbit exceeded " + std::to_string(opts.max_walk) + " steps");
          }
          seen.emplace(cur, std::make_pair(idx, path.size()));
          path.push_back(cur);
          cur = j_step(cur, digits, base).next;
        }
      }
    });
  }

  std::map<ZAlphaElt, std::vector<ZAlphaElt>> unique;
  for (auto& f : found) {
    for (auto& c : f.cycles) unique.emplace(c.front(), std::move(c));
  }
  for (auto& [head, cyc] : unique) {
    out.elements.insert(out.elements.end(), cyc.begin(), cyc.end());
    out.cycles.push_back(std::move(cyc));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<ZAlphaElt> zero_orbit(const AlgebraicBase& base, const DigitSet& digits) {
  std::vector<ZAlphaElt> out;
  std::unordered_map<ZAlphaElt, int, ZAlphaEltHash> seen;
  ZAlphaElt cur = from_int(base, Int(0));
  while (seen.emplace(cur, 0).second) {
    out.push_back(cur);
    cur = j_step(cur, digits, base).next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_number_system(const PeriodicSet& periodic, const DigitSet& digits) {
  return digits.contains_zero() && periodic.elements.size() == 1 && periodic.elements.front().is_zero();
}

bool is_number_system(const AlgebraicBase& base, const DigitSet& digits, const PeriodicOptions& opts) {
  return is_number_system(periodic_points(base, digits, opts), digits);
}

bool spans_ring(const PeriodicSet& periodic, const AlgebraicBase& base, const DigitSet& digits) {
  return periodic.elements == zero_orbit(base, digits);
}

bool spans_ring(const AlgebraicBase& base, const DigitSet& digits, const PeriodicOptions& opts) {
  return spans_ring(periodic_points(base, digits, opts), base, digits);
}

}  // namespace algradix

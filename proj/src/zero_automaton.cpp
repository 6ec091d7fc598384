#include "algradix/zero_automaton.hpp"

#include "algradix/error.hpp"
#include "algradix/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace algradix {

void require_automaton_base(const AlgebraicBase& base) {
  if (base.has_unit_circle_conjugate()) {
    fail(ErrorKind::Precondition, base.min_poly().to_string() +
                                      " has a conjugate on the unit circle; no zero automaton exists for such bases");
  }
  if (!base.is_monic() && base.degree() > 1) {
    fail(ErrorKind::Unsupported, "zero automata for non-monic bases of degree > 1 need prime ideal valuations; " +
                                     base.min_poly().to_string() + " is not supported");
  }
  if (!base.is_monic() && !base.hrp()) {
    fail(ErrorKind::Unsupported, "zero automata for rational bases need |alpha| > 1");
  }
}

namespace {

enum class Verdict { Keep, Undecided, Reject };

// Bound test |sigma_k(x)| <= H / (|alpha_k| - 1) on the expanding conjugates.
class Pruner {
 public:
  Pruner(const AlgebraicBase& base, long h, int refine_rounds) : h_(h) {
    if (base.degree() == 1) {
      const auto& r = *base.rational_view();
      rational_bound_ = Rat(Int(h) * abs_int(r.b), r.a - abs_int(r.b));
      rational_bound_.canonicalize();
      rational_ = true;
      return;
    }
    int bits = base.conjugate_data().bits;
    levels_.push_back(base.conjugate_data());
    for (int i = 0; i < refine_rounds && bits * 4 <= base.options().max_bits; ++i) {
      bits *= 4;
      levels_.push_back(base.refined(bits));
    }
    for (const auto& data : levels_) {
      std::vector<Bound> bs;
      for (std::size_t k = 0; k < data.conjugates.size(); ++k) {
        const Conjugate& c = data.conjugates[k];
        if (c.side != 1) continue;
        bs.push_back({k, Rat(h) / (c.modulus.hi - 1), Rat(h) / (c.modulus.lo - 1)});
      }
      bounds_.push_back(std::move(bs));
    }
  }

  Verdict check(const ZAlphaElt& x) const {
    if (rational_) {
      const Rat v = x.kind() == ZAlphaElt::Kind::Rational ? x.value() : Rat(x.coords()[0]);
      return abs(v) <= rational_bound_ ? Verdict::Keep : Verdict::Reject;
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const ConjugateData& data = levels_[l];
      const std::vector<ComplexBall> balls = eval_conjugates(x, data);
      bool all_keep = true;
      for (const Bound& b : bounds_[l]) {
        const ComplexBall& z = balls[b.k];
        if (abs_lower(z, data.bits + 8) > b.hi) return Verdict::Reject;
        if (abs_upper(z, data.bits + 8) > b.lo) all_keep = false;
      }
      if (all_keep) return Verdict::Keep;
    }
    return Verdict::Undecided;
  }

 private:
  struct Bound {
    std::size_t k;
    Rat lo;  // H / (|alpha_k|_hi - 1)
    Rat hi;  // H / (|alpha_k|_lo - 1)
  };
  long h_;
  bool rational_ = false;
  Rat rational_bound_;
  std::vector<ConjugateData> levels_;
  std::vector<std::vector<Bound>> bounds_;
};

struct Candidate {
  std::size_t from;
  long digit;
  ZAlphaElt to;
  Verdict verdict;
};

}  // namespace

std::optional<std::size_t> ZeroAutomaton::next(std::size_t state, long digit) const {
  if (digit < -h_ || digit > h_ || state >= states_.size()) return std::nullopt;
  const long t = table_[state * static_cast<std::size_t>(2 * h_ + 1) + static_cast<std::size_t>(digit + h_)];
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

void ZeroAutomaton::index_transitions() {
  const std::size_t width = static_cast<std::size_t>(2 * h_ + 1);
  table_.assign(states_.size() * width, -1);
  for (const auto& t : transitions_) {
    table_[t.from * width + static_cast<std::size_t>(t.digit + h_)] = static_cast<long>(t.to);
  }
}

ZeroAutomaton build_zero_automaton(const AlgebraicBase& base, long h, const AutomatonOptions& opts) {
  require_automaton_base(base);
  if (h < 1) fail(ErrorKind::Precondition, "automaton height must be at least 1");
  const Pruner pruner(base, h, opts.refine_rounds);
  const bool rational = !base.is_monic();

  std::unordered_map<ZAlphaElt, std::size_t, ZAlphaEltHash> index;
  std::vector<ZAlphaElt> found;
  std::vector<std::size_t> level;
  std::vector<ZeroTransition> edges;
  std::size_t undecided = 0;

  const ZAlphaElt zero = from_int(base, Int(0));
  index.emplace(zero, 0);
  found.push_back(zero);
  level.push_back(1);
  std::vector<std::size_t> frontier{0};
  std::size_t j = 1;
  while (!frontier.empty()) {
    const std::size_t chunks = chunk_count(frontier.size(), opts.threads);
    std::vector<std::vector<Candidate>> results(chunks);
    parallel_chunks(frontier.size(), opts.threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const std::size_t from = frontier[i];
        const ZAlphaElt ay = mul_alpha(found[from], base);
        if (rational && !ay.is_integer()) continue;
        for (long d = -h; d <= h; ++d) {
          ZAlphaElt x = add_int(ay, Int(d));
          const Verdict v = pruner.check(x);
          if (v != Verdict::Reject) results[chunk].push_back({from, d, std::move(x), v});
        }
      }
    });
    std::vector<std::size_t> next;
    ++j;
    for (auto& chunk : results) {
      for (auto& c : chunk) {
        auto [it, fresh] = index.emplace(c.to, found.size());
        if (fresh) {
          if (found.size() >= opts.max_states) {
            fail(ErrorKind::Resource, "zero automaton exceeded " + std::to_string(opts.max_states) + " states");
          }
          if (c.verdict == Verdict::Undecided) ++undecided;
          next.push_back(found.size());
          found.push_back(std::move(c.to));
          level.push_back(j);
        }
        edges.push_back({c.from, c.digit, it->second});
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return found[x] < found[y]; });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  ZeroAutomaton a;
  a.h_ = h;
  a.undecided_kept_ = undecided;
  for (std::size_t i : order) {
    a.states_.push_back(found[i]);
    a.levels_.push_back(level[i]);
  }
  for (auto& e : edges) a.transitions_.push_back({rank[e.from], e.digit, rank[e.to]});
  std::sort(a.transitions_.begin(), a.transitions_.end(), [](const ZeroTransition& x, const ZeroTransition& y) {
    return std::tie(x.from, x.digit, x.to) < std::tie(y.from, y.digit, y.to);
  });
  a.zero_ = rank[0];
  a.index_transitions();
  return a;
}

ZeroAutomaton trim(const ZeroAutomaton& a) {
  const std::size_t n = a.states_.size();
  std::vector<std::vector<std::size_t>> preds(n);
  for (const auto& t : a.transitions_) preds[t.to].push_back(t.from);
  std::vector<char> live(n, 0);
  std::deque<std::size_t> queue{a.zero_};
  live[a.zero_] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t p : preds[u]) {
      if (!live[p]) {
        live[p] = 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<long> rank(n, -1);
  ZeroAutomaton out;
  out.h_ = a.h_;
  out.trimmed_ = true;
  out.undecided_kept_ = a.undecided_kept_;
  for (std::size_t i = 0; i < n; ++i) {
    if (!live[i]) continue;
    rank[i] = static_cast<long>(out.states_.size());
    out.states_.push_back(a.states_[i]);
    out.levels_.push_back(a.levels_[i]);
  }
  for (const auto& t : a.transitions_) {
    if (live[t.from] && live[t.to]) {
      out.transitions_.push_back({static_cast<std::size_t>(rank[t.from]), t.digit, static_cast<std::size_t>(rank[t.to])});
    }
  }
  out.zero_ = static_cast<std::size_t>(rank[a.zero_]);
  out.index_transitions();
  return out;
}

namespace {

void check_digits(long h, const std::vector<long>& word) {
  for (long d : word) {
    if (d < -h || d > h) {
      fail(ErrorKind::Precondition, "digit " + std::to_string(d) + " is outside {-" + std::to_string(h) + ".." +
                                        std::to_string(h) + "}");
    }
  }
}

}  // namespace

bool accepts(const ZeroAutomaton& a, const std::vector<long>& msb_first) {
  check_digits(a.height(), msb_first);
  std::size_t cur = a.zero_state();
  for (long d : msb_first) {
    const auto nxt = a.next(cur, d);
    if (!nxt) return false;
    cur = *nxt;
  }
  return cur == a.zero_state();
}

MirrorAutomaton mirror(const ZeroAutomaton& a) {
  MirrorAutomaton m;
  m.n_states = a.size();
  m.start = a.zero_state();
  m.height = a.height();
  for (const auto& t : a.transitions()) m.transitions.push_back({t.to, t.digit, t.from});
  std::sort(m.transitions.begin(), m.transitions.end(), [](const ZeroTransition& x, const ZeroTransition& y) {
    return std::tie(x.from, x.digit, x.to) < std::tie(y.from, y.digit, y.to);
  });
  return m;
}

bool accepts(const MirrorAutomaton& m, const std::vector<long>& lsb_first) {
  check_digits(m.height, lsb_first);
  std::vector<char> cur(m.n_states, 0);
  cur[m.start] = 1;
  for (long d : lsb_first) {
    std::vector<char> nxt(m.n_states, 0);
    for (const auto& t : m.transitions) {
      if (t.digit == d && cur[t.from]) nxt[t.to] = 1;
    }
    cur = std::move(nxt);
  }
  return cur[m.start] != 0;
}

IntPolynomial word_polynomial(const std::vector<long>& msb_first) {
  std::vector<Int> coeffs;
  for (auto it = msb_first.rbegin(); it != msb_first.rend(); ++it) coeffs.emplace_back(*it);
  return IntPolynomial(coeffs);
}

bool word_is_zero(const AlgebraicBase& base, const std::vector<long>& msb_first) {
  return from_polynomial(base, word_polynomial(msb_first)).is_zero();
}

WordSearchResult shortest_nonzero_word(const ZeroAutomaton& a, const AlgebraicBase& base) {
  WordSearchResult out;
  out.height = a.height();
  const long h = a.height();
  std::vector<long> digit_order;
  for (long k = 1; k <= h; ++k) {
    digit_order.push_back(k);
    digit_order.push_back(-k);
  }
  const std::size_t n = a.size();
  const std::size_t z = a.zero_state();
  std::vector<long> parent(n, -2);  // -1 marks a root reached from 0 by the first digit
  std::vector<long> via(n, 0);
  std::deque<std::size_t> queue;
  for (long d : digit_order) {
    const auto t = a.next(z, d);
    if (t && *t != z && parent[*t] == -2) {
      parent[*t] = -1;
      via[*t] = d;
      queue.push_back(*t);
    }
  }
  std::vector<long> all_digits{0};
  all_digits.insert(all_digits.end(), digit_order.begin(), digit_order.end());
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (long d : all_digits) {
      const auto t = a.next(u, d);
      if (!t) continue;
      if (*t == z) {
        std::vector<long> word{d};
        for (long s = static_cast<long>(u); s >= 0; s = parent[static_cast<std::size_t>(s)]) {
          word.push_back(via[static_cast<std::size_t>(s)]);
        }
        std::reverse(word.begin(), word.end());
        if (word.front() < 0) {
          for (long& x : word) x = -x;
        }
        out.value_check = word_is_zero(base, word);
        out.word = std::move(word);
        return out;
      }
      if (parent[*t] == -2) {
        parent[*t] = static_cast<long>(u);
        via[*t] = d;
        queue.push_back(*t);
      }
    }
  }
  return out;
}

MinHeightResult min_height(const AlgebraicBase& base, long h_max, const AutomatonOptions& opts) {
  require_automaton_base(base);
  if (h_max <= 0) h_max = base.min_poly().height().get_si();
  MinHeightResult out;
  for (long h = 1; h <= h_max; ++h) {
    const ZeroAutomaton a = build_zero_automaton(base, h, opts);
    out.automaton_sizes.push_back(a.size());
    const WordSearchResult w = shortest_nonzero_word(a, base);
    if (!w.word) continue;
    if (!w.value_check) {
      fail(ErrorKind::Resource, "automaton word for height " + std::to_string(h) + " failed exact evaluation");
    }
    out.h_star = h;
    out.witness = word_polynomial(*w.word);
    out.divisible = exact_quotient(out.witness, base.min_poly()).has_value();
    return out;
  }
  fail(ErrorKind::Resource, "no polynomial of height <= " + std::to_string(h_max) + " vanishes at a root of " +
                                base.min_poly().to_string());
}

Int count_words(const ZeroAutomaton& a, std::size_t length) {
  std::vector<Int> v(a.size(), Int(0));
  v[a.zero_state()] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Int> w(a.size(), Int(0));
    for (const auto& t : a.transitions()) {
      if (v[t.from] != 0) w[t.to] += v[t.from];
    }
    v = std::move(w);
  }
  return v[a.zero_state()];
}

GrowthEstimate growth_rate(const ZeroAutomaton& a_in, int max_iterations, double tolerance) {
  const ZeroAutomaton a = a_in.trimmed() ? a_in : trim(a_in);
  const std::size_t n = a.size();
  const auto apply = [&](const std::vector<double>& v) {
    std::vector<double> w(n, 0.0);
    for (const auto& t : a.transitions()) w[t.to] += v[t.from];
    return w;
  };
  const auto norm = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  GrowthEstimate out;
  // Power iteration on A + I, which shares the Perron vector of A and is aperiodic.
  for (int it = 1; it <= max_iterations; ++it) {
    std::vector<double> av = apply(v);
    double rate = 0;
    for (std::size_t i = 0; i < n; ++i) rate += av[i] * v[i];
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = av[i] - rate * v[i];
    out.rate = rate;
    out.residual = norm(r);
    out.iterations = it;
    if (out.residual < tolerance * std::max(1.0, rate)) break;
    for (std::size_t i = 0; i < n; ++i) av[i] += v[i];
    const double nw = norm(av);
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / nw;
  }
  return out;
}

std::string to_dot(const ZeroAutomaton& a, const AlgebraicBase& base) {
  std::ostringstream os;
  os << "digraph zero_automaton {\n";
  os << "  label=\"" << base.min_poly().to_string() << ", H=" << a.height() << "\";\n";
  os << "  rankdir=LR;\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << "  s" << i << " [label=\"" << a.states()[i].to_string() << "\""
       << (i == a.zero_state() ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  os << "  start [shape=point];\n  start -> s" << a.zero_state() << ";\n";
  for (const auto& t : a.transitions()) {
    os << "  s" << t.from << " -> s" << t.to << " [label=\"" << t.digit << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace algradix

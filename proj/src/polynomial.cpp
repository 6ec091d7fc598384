#include "algradix/polynomial.hpp"

#include "algradix/error.hpp"

#include <cctype>
#include <sstream>

namespace algradix {

namespace {

void trim_ints(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim_ints(coeffs_);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim_ints(coeffs_);
}

IntPolynomial IntPolynomial::monomial(const Int& c, int k) {
  std::vector<Int> v(static_cast<std::size_t>(k) + 1, Int(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

Int IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Int(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Int IntPolynomial::leading() const { return is_zero() ? Int(0) : coeffs_.back(); }

Int IntPolynomial::height() const {
  Int h = 0;
  for (const auto& c : coeffs_) {
    if (abs_int(c) > h) h = abs_int(c);
  }
  return h;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> c = coeffs_;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Int> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::negated() const {
  std::vector<Int> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs_int(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? '-' : '+');
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + b.negated(); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  IntPolynomial parse() {
    if (s_.empty()) error("empty polynomial");
    if (s_.front() == '[') return parse_list();
    std::vector<Int> acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_++] == '-') ? -1 : 1;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, acc);
    }
    return IntPolynomial(std::move(acc));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Syntax,
         "polynomial syntax error at offset " + std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s_[pos_++]);
    return out;
  }

  void parse_term(int sign, std::vector<Int>& acc) {
    std::string num = digits();
    Int coef = num.empty() ? Int(1) : Int(num, 10);
    int power = 0;
    if (peek() == '*') {
      ++pos_;
      if (num.empty()) error("dangling '*'");
      if (peek() != 'x') error("expected 'x' after '*'");
    }
    if (peek() == 'x') {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        std::string e = digits();
        if (e.empty()) error("missing exponent");
        if (e.size() > 6) error("exponent too large");
        power = std::stoi(e);
      }
    } else if (num.empty()) {
      error("expected coefficient or 'x'");
    }
    if (acc.size() <= static_cast<std::size_t>(power)) acc.resize(static_cast<std::size_t>(power) + 1, Int(0));
    acc[static_cast<std::size_t>(power)] += sign * coef;
  }

  IntPolynomial parse_list() {
    if (s_.back() != ']') error("unterminated coefficient list");
    std::vector<Int> c;
    std::string body = s_.substr(1, s_.size() - 2);
    if (body.empty()) return {};
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
      c.push_back(parse_int(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return IntPolynomial(std::move(c));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// Rational polynomials

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  for (const auto& c : p.coeffs()) coeffs.emplace_back(c);
}

RatPolynomial::RatPolynomial(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

void RatPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat RatPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  std::vector<Rat> c;
  for (std::size_t i = 1; i < coeffs.size(); ++i) c.push_back(coeffs[i] * static_cast<unsigned long>(i));
  return RatPolynomial(std::move(c));
}

IntPolynomial RatPolynomial::to_primitive() const {
  Int l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  for (const auto& c : coeffs) {
    Rat scaled = c * Rat(l);
    v.push_back(scaled.get_num());
  }
  return IntPolynomial(std::move(v)).primitive_part();
}

RatDivision divide(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) fail(ErrorKind::Precondition, "polynomial division by zero");
  RatDivision out;
  std::vector<Rat> rem = num.coeffs;
  const int dd = den.degree();
  const int qd = num.degree() - dd;
  if (qd < 0) {
    out.remainder = num;
    return out;
  }
  std::vector<Rat> q(static_cast<std::size_t>(qd) + 1);
  const Rat& lead = den.coeffs.back();
  for (int k = qd; k >= 0; --k) {
    Rat f = rem[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * den.coeffs[static_cast<std::size_t>(j)];
  }
  out.quotient = RatPolynomial(std::move(q));
  out.remainder = RatPolynomial(std::move(rem));
  return out;
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    RatPolynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return gcd(RatPolynomial(a), RatPolynomial(b)).to_primitive();
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  RatDivision d = divide(RatPolynomial(a), RatPolynomial(b));
  if (!d.remainder.is_zero()) return std::nullopt;
  std::vector<Int> q;
  for (const auto& c : d.quotient.coeffs) {
    if (c.get_den() != 1) return std::nullopt;
    q.push_back(c.get_num());
  }
  return IntPolynomial(std::move(q));
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

int sign_changes(const std::vector<RatPolynomial>& seq, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Rat& lo, const Rat& hi) {
  if (p.degree() <= 0 || !(lo < hi)) return 0;
  std::vector<RatPolynomial> seq;
  seq.emplace_back(p);
  seq.push_back(seq.back().derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPolynomial r = divide(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    for (auto& c : r.coeffs) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

}  // namespace algradix

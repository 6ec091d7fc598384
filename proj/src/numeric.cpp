#include "algradix/numeric.hpp"

#include "algradix/error.hpp"

#include <algorithm>
#include <cctype>

namespace algradix {

std::size_t hash_int(const Int& v) {
  const mpz_srcptr z = v.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ULL;
  const int n = std::abs(z->_mp_size);
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_ints(const std::vector<Int>& v) {
  std::size_t h = v.size();
  for (const auto& x : v) {
    h ^= hash_int(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  Int am = abs_int(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Rat pow2_neg(int bits) {
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Rat r(Int(1), den);
  r.canonicalize();
  return r;
}

namespace {

Int scaled_floor(const Rat& q, int bits) {
  Int num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return floor_div(num, q.get_den());
}

Rat from_scaled(const Int& k, int bits) {
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Rat r(k, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rat round_down(const Rat& q, int bits) { return from_scaled(scaled_floor(q, bits), bits); }

Rat round_up(const Rat& q, int bits) {
  Int k = scaled_floor(q, bits);
  Rat r = from_scaled(k, bits);
  if (r < q) r = from_scaled(k + 1, bits);
  return r;
}

Rat sqrt_lower(const Rat& q, int bits) {
  if (q <= 0) return Rat(0);
  Int s = scaled_floor(q, 2 * bits);
  Int root;
  mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
  return from_scaled(root, bits);
}

Rat sqrt_upper(const Rat& q, int bits) {
  if (q <= 0) return Rat(0);
  Int s = scaled_floor(q, 2 * bits) + 1;
  Int root;
  mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
  if (root * root < s) root += 1;
  return from_scaled(root, bits);
}

Int parse_int(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start ||
      !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    fail(ErrorKind::Syntax, "not an integer: '" + raw + "'");
  }
  return Int(text, 10);
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Syntax, "zero denominator in '" + text + "'");
  Rat r(parse_int(text.substr(0, slash)), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(10); }
std::string to_string(const Rat& v) { return v.get_str(10); }

}  // namespace algradix

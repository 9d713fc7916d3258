#include "rhoqes/rational.hpp"

#include "rhoqes/errors.hpp"

#include <cctype>

namespace rhoqes {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ConfigError("empty rational");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw ConfigError("malformed rational: " + s);
    bool neg = s[0] == '-';
    std::string body = (neg || s[0] == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) ||
        ip.find_first_not_of("0123456789") != std::string::npos ||
        fp.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("malformed rational: " + s);
    Integer num(ip + fp, 10);
    Integer den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  Rational r;
  auto ok = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string p = s.substr(0, slash);
  std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok(p) || !ok(q) || q[0] == '-' || q[0] == '+') throw ConfigError("malformed rational: " + s);
  if (p[0] == '+') p = p.substr(1);
  Integer den(q, 10);
  if (den == 0) throw ConfigError("zero denominator: " + s);
  r = Rational(Integer(p, 10), den);
  r.canonicalize();
  return r;
}

std::string to_pq(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational pow(const Rational& x, long n) {
  if (n < 0) {
    if (x == 0) throw SingularPoint("0 raised to a negative power");
    Rational inv = 1 / x;
    return pow(inv, -n);
  }
  Rational out = 1, base = x;
  while (n) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

bool exact_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  Integer n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

}  // namespace rhoqes

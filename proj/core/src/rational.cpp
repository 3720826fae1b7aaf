#include "crn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace crn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view body) {
  std::string_view mantissa = body;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view ex = body.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
      neg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) throw std::invalid_argument("bad exponent");
    exponent = std::stol(std::string(ex));
    if (neg) exponent = -exponent;
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot), fp = mantissa.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw std::invalid_argument("bad decimal");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("bad number");
    digits = std::string(mantissa);
  }
  mpz_class num(digits, 10);
  long shift = exponent - frac_len;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  Rational q;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw std::invalid_argument("bad fraction '" + std::string(text) + "'");
    mpz_class den(std::string(d), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    q = Rational(mpz_class(std::string(n), 10), den);
    q.canonicalize();
  } else {
    try {
      q = parse_decimal(text);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad number '" + std::string(text) + "'");
    }
  }
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator-(const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVector operator*(const Rational& s, const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

QVector primitive(const QVector& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    ints[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  QVector r(v.size());
  if (g == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

std::vector<double> to_double(const QVector& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

std::string to_string(const QVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

bool QVectorLess::operator()(const QVector& a, const QVector& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace crn

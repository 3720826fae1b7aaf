#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace crn {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

// Accepts "3", "-1/3", "+2", "0.25", "1e-3" (decimal forms are converted exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Canonicalized num/den.
inline Rational ratio(long num, long den) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational dot(const QVector& a, const QVector& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& a);
bool is_zero(const QVector& v);

// Positive multiple of v with coprime integer entries (zero stays zero).
QVector primitive(const QVector& v);

std::vector<double> to_double(const QVector& v);
std::string to_string(const QVector& v);

// Lexicographic order so vectors can key ordered containers.
struct QVectorLess {
  bool operator()(const QVector& a, const QVector& b) const;
};

}  // namespace crn

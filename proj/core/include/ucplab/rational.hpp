#pragma once

#include <string>

namespace ucplab {

// Exact rational arithmetic on 64-bit components. Covering-number and
// probability computations in this project never get close to overflow;
// comparisons cross-multiply through __int128.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);

}  // namespace ucplab

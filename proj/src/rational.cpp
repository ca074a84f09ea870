#include "hocard/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hocard {

namespace {

using int128 = __int128;

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  int128 n = numerator;
  int128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

namespace {

Rational make_reduced(int128 n, int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  // Re-reduce through the public constructor to keep one code path.
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  int128 n = int128(a.num_) * b.den_ + int128(b.num_) * a.den_;
  int128 d = int128(a.den_) * b.den_;
  return make_reduced(n, d);
}

Rational operator-(const Rational& a, const Rational& b) {
  int128 n = int128(a.num_) * b.den_ - int128(b.num_) * a.den_;
  int128 d = int128(a.den_) * b.den_;
  return make_reduced(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return make_reduced(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace hocard

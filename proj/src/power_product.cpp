#include "hocard/power_product.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hocard {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<long long, long long> factorize(long long n) {
  if (n < 1) throw std::domain_error("factorize expects a positive integer");
  std::map<long long, long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

void PowerProduct::set(long long prime, const Rational& e) {
  if (e.is_zero()) {
    factors_.erase(prime);
  } else {
    factors_[prime] = e;
  }
}

PowerProduct PowerProduct::from_rational(const Rational& q) {
  if (!q.is_positive()) {
    throw std::domain_error("power product of a non-positive rational");
  }
  PowerProduct out;
  for (auto [p, k] : factorize(q.num())) out.set(p, Rational(k));
  for (auto [p, k] : factorize(q.den())) {
    out.set(p, out.exponent_of(p) - Rational(k));
  }
  return out;
}

PowerProduct PowerProduct::factor(long long prime, const Rational& exponent) {
  if (!is_prime(prime)) throw std::domain_error("power product base must be prime");
  PowerProduct out;
  out.set(prime, exponent);
  return out;
}

Rational PowerProduct::exponent_of(long long prime) const {
  auto it = factors_.find(prime);
  return it == factors_.end() ? Rational(0) : it->second;
}

PowerProduct PowerProduct::operator*(const PowerProduct& other) const {
  PowerProduct out = *this;
  for (const auto& [p, e] : other.factors_) {
    out.set(p, out.exponent_of(p) + e);
  }
  return out;
}

PowerProduct PowerProduct::operator/(const PowerProduct& other) const {
  PowerProduct out = *this;
  for (const auto& [p, e] : other.factors_) {
    out.set(p, out.exponent_of(p) - e);
  }
  return out;
}

PowerProduct PowerProduct::pow(const Rational& e) const {
  PowerProduct out;
  if (e.is_zero()) return out;
  for (const auto& [p, c] : factors_) out.set(p, c * e);
  return out;
}

ExactLog PowerProduct::log2() const {
  ExactLog out;
  out.terms_ = factors_;
  return out;
}

double PowerProduct::approx() const { return std::exp2(log2().approx()); }

bool PowerProduct::is_rational(Rational* out) const {
  Rational v(1);
  for (const auto& [p, e] : factors_) {
    if (!e.is_integer()) return false;
    long long k = e.num();
    Rational base = k > 0 ? Rational(p) : Rational(1, p);
    for (long long i = 0; i < std::abs(k); ++i) v *= base;
  }
  if (out) *out = v;
  return true;
}

std::string PowerProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p << "^";
    if (e.is_integer() && !e.is_negative()) {
      os << e.to_string();
    } else {
      os << "(" << e.to_string() << ")";
    }
  }
  return os.str();
}

ExactLog ExactLog::term(long long prime, const Rational& coeff) {
  if (!is_prime(prime)) throw std::domain_error("exact log base must be prime");
  ExactLog out;
  if (!coeff.is_zero()) out.terms_[prime] = coeff;
  return out;
}

ExactLog ExactLog::operator+(const ExactLog& other) const {
  ExactLog out = *this;
  for (const auto& [p, c] : other.terms_) {
    auto it = out.terms_.find(p);
    Rational sum = (it == out.terms_.end() ? Rational(0) : it->second) + c;
    if (sum.is_zero()) {
      if (it != out.terms_.end()) out.terms_.erase(it);
    } else {
      out.terms_[p] = sum;
    }
  }
  return out;
}

ExactLog ExactLog::operator-(const ExactLog& other) const {
  return *this + other.scaled(Rational(-1));
}

ExactLog ExactLog::scaled(const Rational& c) const {
  ExactLog out;
  if (c.is_zero()) return out;
  for (const auto& [p, coeff] : terms_) out.terms_[p] = coeff * c;
  return out;
}

PowerProduct ExactLog::exp2() const {
  PowerProduct out;
  out = PowerProduct();
  for (const auto& [p, c] : terms_) {
    out = out * PowerProduct::factor(p, c);
  }
  return out;
}

double ExactLog::approx() const {
  long double acc = 0.0L;
  for (const auto& [p, c] : terms_) {
    long double coeff =
        static_cast<long double>(c.num()) / static_cast<long double>(c.den());
    acc += coeff * std::log2(static_cast<long double>(p));
  }
  return static_cast<double>(acc);
}

std::string ExactLog::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (p == 2) {
      os << c.to_string();
    } else if (c == Rational(1)) {
      os << "log2(" << p << ")";
    } else {
      os << "(" << c.to_string() << ") log2(" << p << ")";
    }
  }
  return os.str();
}

ExtendedValue ExtendedValue::finite(PowerProduct v) {
  ExtendedValue out(Tag::finite);
  out.value_ = std::move(v);
  return out;
}

ExtendedValue ExtendedValue::from_rational(const Rational& q) {
  if (q.is_negative()) {
    throw std::domain_error("extended value from a negative rational");
  }
  if (q.is_zero()) return zero();
  return finite(PowerProduct::from_rational(q));
}

const PowerProduct& ExtendedValue::value() const {
  if (tag_ != Tag::finite) {
    throw std::domain_error("extended value is not finite");
  }
  return value_;
}

ExtendedValue ExtendedValue::operator*(const ExtendedValue& other) const {
  if ((is_zero() && other.is_infinite()) || (is_infinite() && other.is_zero())) {
    throw std::domain_error("zero times infinite is undefined");
  }
  if (is_zero() || other.is_zero()) return zero();
  if (is_infinite() || other.is_infinite()) return infinite();
  return finite(value_ * other.value_);
}

ExtendedValue ExtendedValue::operator/(const ExtendedValue& other) const {
  if (other.is_zero()) {
    if (is_zero()) throw std::domain_error("zero divided by zero is undefined");
    return infinite();
  }
  if (other.is_infinite()) {
    if (is_infinite()) throw std::domain_error("infinite divided by infinite is undefined");
    return zero();
  }
  if (is_zero()) return zero();
  if (is_infinite()) return infinite();
  return finite(value_ / other.value_);
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.tag_ != b.tag_) return false;
  if (a.tag_ != ExtendedValue::Tag::finite) return true;
  return a.value_ == b.value_;
}

std::string ExtendedValue::to_string() const {
  switch (tag_) {
    case Tag::zero:
      return "0";
    case Tag::infinite:
      return "inf";
    case Tag::finite:
      return value_.to_string();
  }
  return "?";
}

}  // namespace hocard

#pragma once

#include <map>
#include <string>

#include "hocard/rational.hpp"

namespace hocard {

class ExactLog;

// Exact positive real of the form prod p_i^{e_i} with prime bases and
// rational exponents, stored as a normalized map prime -> exponent
// (no zero exponents; the empty map is 1). Because logarithms of distinct
// primes are rationally independent, structural equality of normalized maps
// decides value equality, so identities can be verified exactly.
class PowerProduct {
 public:
  PowerProduct() = default;

  static PowerProduct one() { return PowerProduct(); }

  // Prime factorization of a positive rational. Throws std::domain_error
  // for q <= 0.
  static PowerProduct from_rational(const Rational& q);

  // Single factor p^e; p must be prime.
  static PowerProduct factor(long long prime, const Rational& exponent);

  bool is_one() const { return factors_.empty(); }
  const std::map<long long, Rational>& factors() const { return factors_; }

  // Exponent of a given prime (0 if absent).
  Rational exponent_of(long long prime) const;

  PowerProduct operator*(const PowerProduct& other) const;
  PowerProduct operator/(const PowerProduct& other) const;
  PowerProduct pow(const Rational& e) const;

  // Reinterpret factors as coefficients of log2(prime).
  ExactLog log2() const;

  // Numerical evaluation, for display and inequality smoke-tests only.
  double approx() const;

  // The exact rational value, if all exponents are integers.
  bool is_rational(Rational* out = nullptr) const;

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const PowerProduct& a, const PowerProduct& b) {
    return !(a == b);
  }

  // "2^(2/3) * 3^(1/2)"; "1" for the empty product.
  std::string to_string() const;

 private:
  void set(long long prime, const Rational& e);

  std::map<long long, Rational> factors_;
};

// Exact value of the form sum c_i * log2(p_i) over primes p_i, normalized
// (no zero coefficients). Zero iff the map is empty.
class ExactLog {
 public:
  ExactLog() = default;

  static ExactLog zero() { return ExactLog(); }
  static ExactLog term(long long prime, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Rational>& terms() const { return terms_; }

  ExactLog operator+(const ExactLog& other) const;
  ExactLog operator-(const ExactLog& other) const;
  ExactLog scaled(const Rational& c) const;

  // 2^(this) as an exact power product.
  PowerProduct exp2() const;

  double approx() const;

  friend bool operator==(const ExactLog& a, const ExactLog& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExactLog& a, const ExactLog& b) { return !(a == b); }

  // "2/3 + (1/2) log2(3)"; "0" when empty.
  std::string to_string() const;

 private:
  friend class PowerProduct;
  std::map<long long, Rational> terms_;
};

// PowerProduct extended with absorbing 0 and +infinity, the two tags needed
// when a cross-entropy term hits an empty outcome. Multiplying zero by
// infinite is a domain error.
class ExtendedValue {
 public:
  enum class Tag { zero, finite, infinite };

  ExtendedValue() : tag_(Tag::finite) {}

  static ExtendedValue zero() { return ExtendedValue(Tag::zero); }
  static ExtendedValue infinite() { return ExtendedValue(Tag::infinite); }
  static ExtendedValue finite(PowerProduct v);
  static ExtendedValue from_rational(const Rational& q);

  Tag tag() const { return tag_; }
  bool is_zero() const { return tag_ == Tag::zero; }
  bool is_finite() const { return tag_ == Tag::finite; }
  bool is_infinite() const { return tag_ == Tag::infinite; }

  // Valid only when finite.
  const PowerProduct& value() const;

  ExtendedValue operator*(const ExtendedValue& other) const;
  ExtendedValue operator/(const ExtendedValue& other) const;

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  explicit ExtendedValue(Tag t) : tag_(t) {}

  Tag tag_;
  PowerProduct value_;
};

bool is_prime(long long n);

// Trial-division factorization of n >= 1 into prime -> multiplicity.
std::map<long long, long long> factorize(long long n);

}  // namespace hocard

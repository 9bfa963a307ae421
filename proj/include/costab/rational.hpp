#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "costab/errors.hpp"

namespace costab {

using BigInt = mpz_class;

/// Exact rational number. Stored in lowest terms with a positive
/// denominator; every operation is exact. No floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a" or "a/b" (optionally signed). Returns nullopt on syntax
  /// errors or a zero denominator.
  static std::optional<Rational> parse(std::string_view s);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// Smallest integer >= *this.
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  /// Largest integer <= *this.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// "a/b" in lowest terms; integers print without the "/1".
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // canonical: lowest terms, positive denominator
};

inline std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
    if (t.empty()) return std::nullopt;
    std::size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (start == t.size()) return std::nullopt;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return std::nullopt;
    return BigInt(std::string(t), 10);
  };
  if (slash == std::string_view::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace costab

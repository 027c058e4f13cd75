#ifndef QROOT_CORE_RATIONAL_HPP
#define QROOT_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "qroot/core/errors.hpp"

namespace qroot {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = mpz_class(static_cast<long>(value));
    } else {
      value_ = mpz_class(static_cast<unsigned long>(value));
    }
  }

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) throw ArithmeticError("Rational: zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  explicit Rational(const mpz_class& value) : value_(value) {}

  /// Parses "p" or "p/q" (optional leading sign, decimal digits).
  static Rational parse(std::string_view text) {
    std::string s(text);
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0) {
      throw UsageError("Rational: cannot parse '" + s + "'");
    }
    if (v.get_den() == 0) throw ArithmeticError("Rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }

  Rational inverse() const {
    if (is_zero()) throw ArithmeticError("Rational: inverse of zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational pow(unsigned e) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(mpq_class(num, den));
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return value_.get_str(10); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

}  // namespace qroot

#endif  // QROOT_CORE_RATIONAL_HPP

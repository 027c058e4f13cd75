#ifndef QROOT_CORE_UPOLY_HPP
#define QROOT_CORE_UPOLY_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroot/core/errors.hpp"

namespace qroot {

/// Field element usable as a UPoly coefficient. Elements carry whatever
/// context they need, so zero and one are obtained from an exemplar.
template <class F>
concept FieldElement = requires(const F& x) {
  { x + x } -> std::convertible_to<F>;
  { x - x } -> std::convertible_to<F>;
  { x * x } -> std::convertible_to<F>;
  { -x } -> std::convertible_to<F>;
  { x.inverse() } -> std::convertible_to<F>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.zero_like() } -> std::convertible_to<F>;
  { x.one_like() } -> std::convertible_to<F>;
};

/// Dense univariate polynomial over a field; coefficient i multiplies x^i.
/// Trailing zero coefficients are never stored.
template <FieldElement F>
class UPoly {
 public:
  explicit UPoly(F zero) : zero_(std::move(zero)) {}
  UPoly(F zero, std::vector<F> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& c) { return UPoly(c.zero_like(), {c}); }

  /// c * x^degree
  static UPoly monomial(const F& c, std::size_t degree) {
    std::vector<F> v(degree + 1, c.zero_like());
    v[degree] = c;
    return UPoly(c.zero_like(), std::move(v));
  }

  /// c0 + c1 * x
  static UPoly linear(const F& c0, const F& c1) { return UPoly(c0.zero_like(), {c0, c1}); }

  const F& zero() const { return zero_; }
  F one() const { return zero_.one_like(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const F& lead() const {
    if (c_.empty()) throw UsageError("UPoly: zero polynomial has no leading coefficient");
    return c_.back();
  }

  friend UPoly operator+(const UPoly& p, const UPoly& r) {
    std::vector<F> v(std::max(p.c_.size(), r.c_.size()), p.zero_);
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] = p.c_[i];
    for (std::size_t i = 0; i < r.c_.size(); ++i) v[i] = v[i] + r.c_[i];
    return UPoly(p.zero_, std::move(v));
  }
  friend UPoly operator-(const UPoly& p, const UPoly& r) {
    std::vector<F> v(std::max(p.c_.size(), r.c_.size()), p.zero_);
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] = p.c_[i];
    for (std::size_t i = 0; i < r.c_.size(); ++i) v[i] = v[i] - r.c_[i];
    return UPoly(p.zero_, std::move(v));
  }
  UPoly operator-() const {
    UPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  friend UPoly operator*(const UPoly& p, const UPoly& r) {
    if (p.is_zero() || r.is_zero()) return UPoly(p.zero_);
    std::vector<F> v(p.c_.size() + r.c_.size() - 1, p.zero_);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < r.c_.size(); ++j) v[i + j] = v[i + j] + p.c_[i] * r.c_[j];
    }
    return UPoly(p.zero_, std::move(v));
  }
  friend UPoly operator*(const F& s, const UPoly& p) {
    if (s.is_zero()) return UPoly(p.zero_);
    UPoly out = p;
    for (auto& c : out.c_) c = s * c;
    out.trim();
    return out;
  }
  friend UPoly operator*(const UPoly& p, const F& s) { return s * p; }

  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly pow(unsigned e) const {
    UPoly result = constant(one());
    UPoly base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Multiplication by x^k.
  UPoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<F> v(k, zero_);
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(zero_, std::move(v));
  }

  /// x^pad * p(1/x); requires pad >= degree().
  UPoly reversed(std::size_t pad) const {
    if (static_cast<int>(pad) < degree()) throw UsageError("UPoly::reversed: pad below degree");
    std::vector<F> v(pad + 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) v[pad - i] = c_[i];
    return UPoly(zero_, std::move(v));
  }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw ArithmeticError("UPoly: division by zero polynomial");
    UPoly rem = *this;
    if (degree() < d.degree()) return {UPoly(zero_), rem};
    std::vector<F> q(c_.size() - d.c_.size() + 1, zero_);
    const F inv_lead = d.lead().inverse();
    for (int i = rem.degree(); i >= d.degree(); --i) {
      const F c = rem.c_[i] * inv_lead;
      std::size_t shift = static_cast<std::size_t>(i - d.degree());
      q[shift] = c;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem.c_[shift + j] = rem.c_[shift + j] - c * d.c_[j];
    }
    rem.trim();
    return {UPoly(zero_, std::move(q)), rem};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
  }

  F eval(const F& x) const {
    F acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const UPoly& p, const UPoly& r) { return (p - r).is_zero(); }

  /// Descending powers of `var`, e.g. "3*a^2 - a + 1/2". Coefficients are
  /// rendered by `fmt`; a coefficient string containing an inner sign or space
  /// is parenthesized.
  std::string to_string(std::string_view var, const std::function<std::string(const F&)>& fmt) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string cs = fmt(c_[i]);
      bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
      bool neg = !compound && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (compound) cs = "(" + cs + ")";
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += std::string(var);
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F zero_;
  std::vector<F> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <FieldElement F>
UPoly<F> poly_gcd_univar(const UPoly<F>& p, const UPoly<F>& r) {
  if (p.is_zero() && r.is_zero()) throw UsageError("poly_gcd_univar: both inputs are zero");
  UPoly<F> a = p;
  UPoly<F> b = r;
  while (!b.is_zero()) {
    UPoly<F> rem = a.divmod(b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

template <FieldElement F>
struct ExtGcd {
  UPoly<F> gcd;  // monic
  UPoly<F> s;    // s*p + t*r == gcd
  UPoly<F> t;
};

template <FieldElement F>
ExtGcd<F> poly_ext_gcd(const UPoly<F>& p, const UPoly<F>& r) {
  if (p.is_zero() && r.is_zero()) throw UsageError("poly_ext_gcd: both inputs are zero");
  const F zero = p.zero();
  UPoly<F> old_r = p, cur_r = r;
  UPoly<F> old_s = UPoly<F>::constant(zero.one_like()), cur_s(zero);
  UPoly<F> old_t(zero), cur_t = UPoly<F>::constant(zero.one_like());
  while (!cur_r.is_zero()) {
    auto [q, rem] = old_r.divmod(cur_r);
    old_r = std::exchange(cur_r, rem);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
    old_t = std::exchange(cur_t, old_t - q * cur_t);
  }
  F inv = old_r.lead().inverse();
  return {inv * old_r, inv * old_s, inv * old_t};
}

}  // namespace qroot

#endif  // QROOT_CORE_UPOLY_HPP

#ifndef QROOT_CORE_RAT_FUN_HPP
#define QROOT_CORE_RAT_FUN_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/core/multi_poly.hpp"
#include "qroot/core/rational.hpp"

namespace qroot {

/// Unreduced quotient of two polynomials over one context. No gcd is ever
/// taken; equality is decided by cross-multiplication.
class RatFun {
 public:
  RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!(num_.context() == den_.context())) throw UsageError("RatFun: context mismatch");
    if (den_.is_zero()) throw UsageError("RatFun: zero denominator");
  }

  explicit RatFun(MultiPoly num)
      : num_(std::move(num)), den_(MultiPoly::constant(num_.context(), Rational(1))) {}

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarContext& context() const { return num_.context(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& f, const RatFun& g) {
    if (f.den_ == g.den_) return RatFun(f.num_ + g.num_, f.den_);
    return RatFun(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RatFun operator-(const RatFun& f, const RatFun& g) {
    if (f.den_ == g.den_) return RatFun(f.num_ - g.num_, f.den_);
    return RatFun(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RatFun operator*(const RatFun& f, const RatFun& g) {
    return RatFun(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RatFun operator/(const RatFun& f, const RatFun& g) {
    if (g.num_.is_zero()) throw ArithmeticError("RatFun: division by zero");
    return RatFun(f.num_ * g.den_, f.den_ * g.num_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }

  /// Value at a point in context order; nullopt when the denominator vanishes.
  std::optional<Rational> eval(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) / d;
  }

  RatFun substitute(std::string_view var, const MultiPoly& value) const {
    return RatFun(num_.substitute(var, value), den_.substitute(var, value));
  }

 private:
  MultiPoly num_;
  MultiPoly den_;
};

/// f.num * g.den - g.num * f.den; zero iff f == g as rational functions.
inline MultiPoly cross_difference(const RatFun& f, const RatFun& g) {
  if (!(f.context() == g.context())) throw UsageError("ratfun_eq: context mismatch");
  return f.num() * g.den() - g.num() * f.den();
}

inline bool ratfun_eq(const RatFun& f, const RatFun& g) { return cross_difference(f, g).is_zero(); }

/// Rational function kept as  residual * prod(factor_i ^ e_i)  with e_i of
/// either sign. Factors are compared syntactically after normalization to a
/// unit leading coefficient, so identical factors cancel on multiplication and
/// a sum only multiplies each summand by the factors it is missing. This keeps
/// the cleared numerators of telescoping identities small without any
/// polynomial gcd.
class FactoredRatFun {
 public:
  using Factor = std::pair<MultiPoly, int>;

  explicit FactoredRatFun(MultiPoly residual) : residual_(std::move(residual)) {}

  static FactoredRatFun constant(const VarContext& ctx, const Rational& c) {
    return FactoredRatFun(MultiPoly::constant(ctx, c));
  }

  /// p^exponent as a single factor (constants fold into the residual).
  static FactoredRatFun factor(const MultiPoly& p, int exponent = 1) {
    if (p.is_zero()) {
      if (exponent < 0) throw ArithmeticError("FactoredRatFun: zero factor in denominator");
      return FactoredRatFun(MultiPoly(p.context()));
    }
    FactoredRatFun out(MultiPoly::constant(p.context(), Rational(1)));
    if (exponent == 0) return out;
    const Rational lead = p.leading_term().second;
    if (p.is_constant()) {
      out.residual_ = MultiPoly::constant(p.context(), exponent > 0 ? lead.pow(exponent)
                                                                    : lead.inverse().pow(-exponent));
      return out;
    }
    MultiPoly normalized = p * lead.inverse();
    out.residual_ = MultiPoly::constant(
        p.context(), exponent > 0 ? lead.pow(exponent) : lead.inverse().pow(-exponent));
    out.factors_.emplace_back(std::move(normalized), exponent);
    return out;
  }

  const VarContext& context() const { return residual_.context(); }
  const MultiPoly& residual() const { return residual_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return residual_.is_zero(); }

  friend FactoredRatFun operator*(const FactoredRatFun& f, const FactoredRatFun& g) {
    if (f.is_zero() || g.is_zero()) return FactoredRatFun(MultiPoly(f.context()));
    FactoredRatFun out(f.residual_ * g.residual_);
    out.factors_ = merge_exponents(f.factors_, g.factors_, 1);
    return out;
  }

  friend FactoredRatFun operator/(const FactoredRatFun& f, const FactoredRatFun& g) {
    return f * g.inverse();
  }

  FactoredRatFun inverse() const {
    if (is_zero()) throw ArithmeticError("FactoredRatFun: inverse of zero");
    // A non-constant residual becomes a denominator factor of its own.
    FactoredRatFun out = factor(residual_, -1);
    std::vector<Factor> flipped = factors_;
    for (auto& [p, e] : flipped) e = -e;
    out.factors_ = merge_exponents(out.factors_, flipped, 1);
    return out;
  }

  FactoredRatFun pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FactoredRatFun out(residual_.pow(static_cast<unsigned>(e)));
    if (e == 0) return out;
    out.factors_ = factors_;
    for (auto& [p, k] : out.factors_) k *= e;
    return out;
  }

  friend FactoredRatFun operator+(const FactoredRatFun& f, const FactoredRatFun& g) { return combine(f, g, false); }
  friend FactoredRatFun operator-(const FactoredRatFun& f, const FactoredRatFun& g) { return combine(f, g, true); }
  FactoredRatFun operator-() const {
    FactoredRatFun out = *this;
    out.residual_ = -residual_;
    return out;
  }

  /// Substitutes a polynomial for one variable in the residual and in every
  /// factor, re-normalizing factors afterwards.
  FactoredRatFun substitute(std::string_view var, const MultiPoly& value) const {
    FactoredRatFun out(residual_.substitute(var, value));
    for (const auto& [p, e] : factors_) out = out * factor(p.substitute(var, value), e);
    return out;
  }

  /// Expanded numerator: residual times all positive-exponent factors.
  MultiPoly numerator() const {
    MultiPoly out = residual_;
    for (const auto& [p, e] : factors_) {
      if (e > 0) out = out * p.pow(static_cast<unsigned>(e));
    }
    return out;
  }

  /// Expanded denominator: product of all negative-exponent factors.
  MultiPoly denominator() const {
    MultiPoly out = MultiPoly::constant(context(), Rational(1));
    for (const auto& [p, e] : factors_) {
      if (e < 0) out = out * p.pow(static_cast<unsigned>(-e));
    }
    return out;
  }

  /// Monomial part of the denominator: the Laurent clearing multiplier.
  MultiPoly clearing_monomial() const {
    MultiPoly out = MultiPoly::constant(context(), Rational(1));
    for (const auto& [p, e] : factors_) {
      if (e < 0 && p.size() == 1) out = out * p.pow(static_cast<unsigned>(-e));
    }
    return out;
  }

  RatFun to_ratfun() const { return RatFun(numerator(), denominator()); }

  /// Value at a point; nullopt when a denominator factor vanishes there.
  std::optional<Rational> eval(std::span<const Rational> point) const {
    Rational value = residual_.eval(point);
    for (const auto& [p, e] : factors_) {
      Rational v = p.eval(point);
      if (e < 0) {
        if (v.is_zero()) return std::nullopt;
        value /= v.pow(static_cast<unsigned>(-e));
      } else {
        value *= v.pow(static_cast<unsigned>(e));
      }
    }
    return value;
  }

 private:
  static std::vector<Factor> merge_exponents(const std::vector<Factor>& a, const std::vector<Factor>& b, int sign) {
    std::vector<Factor> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      std::strong_ordering c = std::strong_ordering::equal;
      if (i == a.size()) {
        c = std::strong_ordering::greater;
      } else if (j == b.size()) {
        c = std::strong_ordering::less;
      } else {
        c = compare(a[i].first, b[j].first);
      }
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.emplace_back(b[j].first, sign * b[j].second);
        ++j;
      } else {
        int e = a[i].second + sign * b[j].second;
        if (e != 0) out.emplace_back(a[i].first, e);
        ++i;
        ++j;
      }
    }
    return out;
  }

  static int exponent_of(const std::vector<Factor>& fs, const MultiPoly& p) {
    for (const auto& [q, e] : fs) {
      if (q == p) return e;
    }
    return 0;
  }

  static FactoredRatFun combine(const FactoredRatFun& f, const FactoredRatFun& g, bool subtract) {
    if (!(f.context() == g.context())) throw UsageError("FactoredRatFun: context mismatch");
    if (g.is_zero()) return f;
    if (f.is_zero()) return subtract ? -g : g;
    // Common part: the minimum exponent of every factor seen in either operand.
    std::vector<Factor> common;
    for (const auto& [p, e] : f.factors_) common.emplace_back(p, std::min(e, exponent_of(g.factors_, p)));
    for (const auto& [p, e] : g.factors_) {
      if (exponent_of(f.factors_, p) == 0) common.emplace_back(p, std::min(e, 0));
    }
    auto cofactor = [&](const FactoredRatFun& x) {
      MultiPoly m = x.residual_;
      for (const auto& [p, emin] : common) {
        int d = exponent_of(x.factors_, p) - emin;
        if (d > 0) m = m * p.pow(static_cast<unsigned>(d));
      }
      return m;
    };
    MultiPoly sum = subtract ? cofactor(f) - cofactor(g) : cofactor(f) + cofactor(g);
    FactoredRatFun out(std::move(sum));
    if (out.residual_.is_zero()) return out;
    std::sort(common.begin(), common.end(),
              [](const Factor& x, const Factor& y) { return compare(x.first, y.first) < 0; });
    for (auto& fe : common) {
      if (fe.second != 0) out.factors_.push_back(std::move(fe));
    }
    return out;
  }

  MultiPoly residual_;
  std::vector<Factor> factors_;  // sorted by compare(), nonzero exponents, unit leading coefficient
};

}  // namespace qroot

#endif  // QROOT_CORE_RAT_FUN_HPP

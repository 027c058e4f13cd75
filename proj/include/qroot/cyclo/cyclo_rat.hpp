#ifndef QROOT_CYCLO_CYCLO_RAT_HPP
#define QROOT_CYCLO_CYCLO_RAT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/core/upoly.hpp"
#include "qroot/cyclo/cyclotomic.hpp"

namespace qroot {

/// Polynomial in the free variable a with coefficients in Q(zeta_n).
using APoly = UPoly<CycloNum>;

inline APoly apoly_constant(const CycloNum& c) { return APoly::constant(c); }
inline APoly apoly_constant(const CycloContextPtr& ctx, const Rational& c) { return APoly::constant(CycloNum(ctx, c)); }
inline APoly apoly_a(const CycloContextPtr& ctx) { return APoly::monomial(CycloNum(ctx, Rational(1)), 1); }

inline std::string cyclo_coeff_string(const CycloNum& c) { return c.to_string("z"); }

/// Quotient of two polynomials in a over Q(zeta_n). Kept unreduced; equality
/// is cross-multiplication followed by coefficient-wise zero tests.
class CycloRatA {
 public:
  CycloRatA(APoly num, APoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("CycloRatA: zero denominator");
  }
  explicit CycloRatA(APoly num) : num_(std::move(num)), den_(APoly::constant(num_.one())) {}

  static CycloRatA constant(const CycloNum& c) { return CycloRatA(APoly::constant(c)); }

  const APoly& num() const { return num_; }
  const APoly& den() const { return den_; }
  const CycloContextPtr& context() const { return num_.zero().context(); }
  bool is_zero() const { return num_.is_zero(); }

  friend CycloRatA operator+(const CycloRatA& f, const CycloRatA& g) {
    if (f.den_ == g.den_) return CycloRatA(f.num_ + g.num_, f.den_);
    return CycloRatA(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend CycloRatA operator-(const CycloRatA& f, const CycloRatA& g) {
    if (f.den_ == g.den_) return CycloRatA(f.num_ - g.num_, f.den_);
    return CycloRatA(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
  }
  friend CycloRatA operator*(const CycloRatA& f, const CycloRatA& g) {
    return CycloRatA(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend CycloRatA operator/(const CycloRatA& f, const CycloRatA& g) {
    if (g.num_.is_zero()) throw ArithmeticError("CycloRatA: division by zero");
    return CycloRatA(f.num_ * g.den_, f.den_ * g.num_);
  }
  friend CycloRatA operator*(const CycloNum& c, const CycloRatA& f) { return CycloRatA(c * f.num_, f.den_); }
  CycloRatA operator-() const { return CycloRatA(-num_, den_); }

  /// f(1/a), cleared by a^max(deg num, deg den).
  CycloRatA reciprocal_argument() const {
    std::size_t pad = static_cast<std::size_t>(std::max(num_.degree(), den_.degree()));
    return CycloRatA(num_.reversed(pad), den_.reversed(pad));
  }

  /// Value at a = x; nullopt when the (unreduced) denominator vanishes there.
  std::optional<CycloNum> eval(const CycloNum& x) const {
    CycloNum d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
  }

  /// Common factors cancelled via the univariate gcd over Q(zeta_n); the
  /// denominator is made monic.
  CycloRatA reduced() const {
    if (num_.is_zero()) return CycloRatA(num_, APoly::constant(num_.one()));
    APoly g = poly_gcd_univar(num_, den_);
    APoly n = num_.divmod(g).first;
    APoly d = den_.divmod(g).first;
    CycloNum inv = d.lead().inverse();
    return CycloRatA(inv * n, inv * d);
  }

  std::string to_string() const {
    std::string n = num_.to_string("a", cyclo_coeff_string);
    if (den_.degree() == 0 && den_.lead().is_one()) return n;
    return "(" + n + ") / (" + den_.to_string("a", cyclo_coeff_string) + ")";
  }

 private:
  APoly num_;
  APoly den_;
};

inline APoly cross_difference(const CycloRatA& f, const CycloRatA& g) {
  if (f.context()->n() != g.context()->n()) throw UsageError("cyclorat_eq: context mismatch");
  return f.num() * g.den() - g.num() * f.den();
}

inline bool cyclorat_eq(const CycloRatA& f, const CycloRatA& g) { return cross_difference(f, g).is_zero(); }

/// a^m * prod_j (1 - zeta^j a)^(e_j) over j in Z/n, with zeta the context's
/// generator. Every denominator met in the series at a root of unity has this
/// shape, which makes least common multiples syntactic.
class RootProduct {
 public:
  explicit RootProduct(CycloContextPtr ctx)
      : ctx_(std::move(ctx)), exps_(static_cast<std::size_t>(ctx_->n()), 0) {}

  /// (1 - zeta^j a)^e
  static RootProduct linear(const CycloContextPtr& ctx, long j, int e = 1) {
    RootProduct r(ctx);
    r.exps_[index(ctx, j)] = e;
    return r;
  }

  static RootProduct a_power(const CycloContextPtr& ctx, int m) {
    RootProduct r(ctx);
    r.a_power_ = m;
    return r;
  }

  const CycloContextPtr& context() const { return ctx_; }
  int exponent(long j) const { return exps_[index(ctx_, j)]; }
  int a_exponent() const { return a_power_; }

  friend RootProduct operator*(const RootProduct& x, const RootProduct& y) {
    RootProduct r = x;
    r.a_power_ += y.a_power_;
    for (std::size_t j = 0; j < r.exps_.size(); ++j) r.exps_[j] += y.exps_[j];
    return r;
  }

  friend RootProduct lcm(const RootProduct& x, const RootProduct& y) {
    RootProduct r = x;
    r.a_power_ = std::max(x.a_power_, y.a_power_);
    for (std::size_t j = 0; j < r.exps_.size(); ++j) r.exps_[j] = std::max(x.exps_[j], y.exps_[j]);
    return r;
  }

  friend bool operator==(const RootProduct& x, const RootProduct& y) {
    return x.a_power_ == y.a_power_ && x.exps_ == y.exps_;
  }

  /// Expanded product of the factors in `multiple` that are missing from
  /// *this; `multiple` must be a multiple of *this.
  APoly cofactor_in(const RootProduct& multiple) const {
    RootProduct missing(ctx_);
    missing.a_power_ = multiple.a_power_ - a_power_;
    if (missing.a_power_ < 0) throw UsageError("RootProduct: not a multiple");
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      missing.exps_[j] = multiple.exps_[j] - exps_[j];
      if (missing.exps_[j] < 0) throw UsageError("RootProduct: not a multiple");
    }
    return missing.expand();
  }

  APoly expand() const {
    CycloNum one(ctx_, Rational(1));
    APoly out = APoly::monomial(one, static_cast<std::size_t>(a_power_));
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      if (exps_[j] == 0) continue;
      APoly lin = APoly::linear(one, -CycloNum::zeta_pow(ctx_, static_cast<long>(j)));
      out = out * lin.pow(static_cast<unsigned>(exps_[j]));
    }
    return out;
  }

 private:
  static std::size_t index(const CycloContextPtr& ctx, long j) {
    long r = j % ctx->n();
    if (r < 0) r += ctx->n();
    return static_cast<std::size_t>(r);
  }

  CycloContextPtr ctx_;
  int a_power_ = 0;
  std::vector<int> exps_;
};

/// num / den with a RootProduct denominator. Sums use the lcm of the
/// denominators, so n-term sums stay at the degree of the largest term.
class CycloFraction {
 public:
  CycloFraction(APoly num, RootProduct den) : num_(std::move(num)), den_(std::move(den)) {}
  explicit CycloFraction(APoly num) : num_(std::move(num)), den_(num_.zero().context()) {}

  const APoly& num() const { return num_; }
  const RootProduct& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend CycloFraction operator+(const CycloFraction& f, const CycloFraction& g) { return combine(f, g, false); }
  friend CycloFraction operator-(const CycloFraction& f, const CycloFraction& g) { return combine(f, g, true); }
  friend CycloFraction operator*(const CycloFraction& f, const CycloFraction& g) {
    return CycloFraction(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend CycloFraction operator*(const APoly& p, const CycloFraction& f) { return CycloFraction(p * f.num_, f.den_); }
  friend CycloFraction operator*(const CycloNum& c, const CycloFraction& f) { return CycloFraction(c * f.num_, f.den_); }
  CycloFraction operator-() const { return CycloFraction(-num_, den_); }

  CycloFraction over(const RootProduct& extra) const { return CycloFraction(num_, den_ * extra); }

  CycloRatA to_rat() const { return CycloRatA(num_, den_.expand()); }

  /// Value at a = x; nullopt when the denominator vanishes there.
  std::optional<CycloNum> eval(const CycloNum& x) const {
    CycloNum d = den_.expand().eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
  }

 private:
  static CycloFraction combine(const CycloFraction& f, const CycloFraction& g, bool subtract) {
    if (f.den_ == g.den_) return CycloFraction(subtract ? f.num_ - g.num_ : f.num_ + g.num_, f.den_);
    RootProduct common = lcm(f.den_, g.den_);
    APoly a = f.num_ * f.den_.cofactor_in(common);
    APoly b = g.num_ * g.den_.cofactor_in(common);
    return CycloFraction(subtract ? a - b : a + b, common);
  }

  APoly num_;
  RootProduct den_;
};

}  // namespace qroot

#endif  // QROOT_CYCLO_CYCLO_RAT_HPP

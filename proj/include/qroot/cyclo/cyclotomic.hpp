#ifndef QROOT_CYCLO_CYCLOTOMIC_HPP
#define QROOT_CYCLO_CYCLOTOMIC_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/core/rational.hpp"
#include "qroot/core/upoly.hpp"

namespace qroot {

namespace detail {

inline UPoly<Rational> cyclotomic_poly_memo(int n, std::map<int, UPoly<Rational>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  UPoly<Rational> p = UPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(n)) -
                      UPoly<Rational>::constant(Rational(1));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = p.divmod(cyclotomic_poly_memo(d, memo));
    if (!r.is_zero()) throw ArithmeticError("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  memo.emplace(n, p);
  return p;
}

}  // namespace detail

/// The n-th cyclotomic polynomial over the integers (stored with Rational
/// coefficients).
inline UPoly<Rational> cyclotomic_poly(int n) {
  if (n < 1) throw UsageError("cyclotomic_poly: n must be positive");
  std::map<int, UPoly<Rational>> memo;
  return detail::cyclotomic_poly_memo(n, memo);
}

inline int euler_phi(int n) {
  int count = 0;
  for (int t = 1; t <= n; ++t) count += std::gcd(t, n) == 1 ? 1 : 0;
  return count;
}

class CycloNum;

/// Model of Q(zeta_n) as Q[z]/Phi_n. Immutable; share through CycloContextPtr.
/// Phi_n is monic with integer coefficients, so reduction of integer
/// polynomials stays integral.
class CycloContext {
 public:
  explicit CycloContext(int n) : n_(n), phi_(cyclotomic_poly(n)) {
    degree_ = phi_.degree();
    for (const auto& c : phi_.coeffs()) phi_int_.push_back(c.numerator());
    // zeta^j reduced mod Phi_n for j = 0..n-1.
    std::vector<mpz_class> power(static_cast<std::size_t>(degree_));
    power[0] = 1;
    for (int j = 0; j < n; ++j) {
      zeta_powers_.push_back(power);
      power.insert(power.begin(), mpz_class(0));
      reduce(power);
    }
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const UPoly<Rational>& phi() const { return phi_; }

  /// Integer coefficients of zeta^j reduced mod Phi_n; any integer j.
  const std::vector<mpz_class>& zeta_power(long j) const {
    long r = j % n_;
    if (r < 0) r += n_;
    return zeta_powers_[static_cast<std::size_t>(r)];
  }

  /// Reduces an integer coefficient vector of any length modulo Phi_n in
  /// place, leaving exactly degree() entries.
  void reduce(std::vector<mpz_class>& c) const {
    const std::size_t d = static_cast<std::size_t>(degree_);
    for (std::size_t i = c.size(); i-- > d;) {
      if (sgn(c[i]) == 0) continue;
      const mpz_class lead = c[i];
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn(phi_int_[j]) != 0) c[i - d + j] -= lead * phi_int_[j];
      }
      c[i] = 0;
    }
    c.resize(d);
  }

 private:
  int n_;
  UPoly<Rational> phi_;
  std::vector<mpz_class> phi_int_;
  int degree_ = 0;
  std::vector<std::vector<mpz_class>> zeta_powers_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

inline CycloContextPtr make_cyclo_context(int n) {
  if (n < 1) throw UsageError("CycloContext: n must be positive");
  return std::make_shared<const CycloContext>(n);
}

/// Element of Q(zeta_n): a polynomial in zeta of degree < phi(n), stored as
/// integer coefficients over one positive common denominator, normalized so
/// that the representation is canonical.
class CycloNum {
 public:
  explicit CycloNum(CycloContextPtr ctx)
      : ctx_(std::move(ctx)), num_(static_cast<std::size_t>(ctx_->degree())), den_(1) {}

  CycloNum(CycloContextPtr ctx, const Rational& value) : CycloNum(std::move(ctx)) {
    num_[0] = value.numerator();
    den_ = value.denominator();
  }

  /// From coefficients of an arbitrary-degree polynomial in zeta.
  CycloNum(CycloContextPtr ctx, const std::vector<Rational>& coeffs) : ctx_(std::move(ctx)), den_(1) {
    for (const auto& r : coeffs) den_ = lcm(den_, r.denominator());
    num_.reserve(std::max<std::size_t>(coeffs.size(), static_cast<std::size_t>(ctx_->degree())));
    for (const auto& r : coeffs) num_.push_back(r.numerator() * (den_ / r.denominator()));
    num_.resize(std::max<std::size_t>(num_.size(), static_cast<std::size_t>(ctx_->degree())));
    ctx_->reduce(num_);
    normalize();
  }

  /// zeta^j for any integer j.
  static CycloNum zeta_pow(const CycloContextPtr& ctx, long j) {
    CycloNum out(ctx);
    out.num_ = ctx->zeta_power(j);
    return out;
  }

  const CycloContextPtr& context() const { return ctx_; }
  int n() const { return ctx_->n(); }

  /// Rational coefficients of 1, zeta, ..., zeta^(phi(n)-1).
  std::vector<Rational> coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.emplace_back(mpq_class(c, den_));
    return out;
  }

  bool is_zero() const {
    for (const auto& c : num_) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }
  bool is_one() const { return *this == one_like(); }
  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i) {
      if (sgn(num_[i]) != 0) return false;
    }
    return true;
  }

  CycloNum zero_like() const { return CycloNum(ctx_); }
  CycloNum one_like() const { return CycloNum(ctx_, Rational(1)); }

  friend CycloNum operator+(const CycloNum& u, const CycloNum& v) { return add(u, v, false); }
  friend CycloNum operator-(const CycloNum& u, const CycloNum& v) { return add(u, v, true); }
  CycloNum operator-() const {
    CycloNum out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
  }
  friend CycloNum operator*(const CycloNum& u, const CycloNum& v) {
    check_same(u, v);
    const std::size_t d = u.num_.size();
    CycloNum out(u.ctx_);
    if (d == 1) {
      out.num_[0] = u.num_[0] * v.num_[0];
    } else {
      std::vector<mpz_class> prod(2 * d - 1);
      for (std::size_t i = 0; i < d; ++i) {
        if (sgn(u.num_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (sgn(v.num_[j]) != 0) mpz_addmul(prod[i + j].get_mpz_t(), u.num_[i].get_mpz_t(), v.num_[j].get_mpz_t());
        }
      }
      u.ctx_->reduce(prod);
      out.num_ = std::move(prod);
    }
    out.den_ = u.den_ * v.den_;
    out.normalize();
    return out;
  }
  friend CycloNum operator*(const Rational& r, const CycloNum& u) {
    CycloNum out = u;
    for (auto& c : out.num_) c *= r.numerator();
    out.den_ *= r.denominator();
    out.normalize();
    return out;
  }
  friend CycloNum operator/(const CycloNum& u, const CycloNum& v) { return u * v.inverse(); }

  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  /// Field inverse via the extended Euclidean algorithm against Phi_n.
  CycloNum inverse() const {
    if (is_zero()) throw ArithmeticError("CycloNum: inverse of zero");
    if (is_rational()) return CycloNum(ctx_, Rational(mpq_class(den_, num_[0])));
    UPoly<Rational> u(Rational(), coeffs());
    auto eg = poly_ext_gcd(u, ctx_->phi());
    if (eg.gcd.degree() != 0) throw ArithmeticError("CycloNum: element not invertible");
    return CycloNum(ctx_, eg.s.divmod(ctx_->phi()).second.coeffs());
  }

  CycloNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum result = one_like();
    CycloNum base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const CycloNum& u, const CycloNum& v) {
    return u.n() == v.n() && u.den_ == v.den_ && u.num_ == v.num_;
  }

  /// Polynomial in `z`, e.g. "1/2*z^3 - 2".
  std::string to_string(std::string_view symbol = "z") const {
    UPoly<Rational> p(Rational(), coeffs());
    return p.to_string(symbol, [](const Rational& r) { return r.to_string(); });
  }

 private:
  static void check_same(const CycloNum& u, const CycloNum& v) {
    if (u.ctx_ != v.ctx_ && u.n() != v.n()) throw UsageError("CycloNum: context mismatch");
  }

  static CycloNum add(const CycloNum& u, const CycloNum& v, bool subtract) {
    check_same(u, v);
    CycloNum out = u;
    if (u.den_ == v.den_) {
      for (std::size_t i = 0; i < out.num_.size(); ++i) {
        if (subtract) out.num_[i] -= v.num_[i];
        else out.num_[i] += v.num_[i];
      }
    } else {
      for (std::size_t i = 0; i < out.num_.size(); ++i) {
        out.num_[i] = u.num_[i] * v.den_;
        if (subtract) out.num_[i] -= v.num_[i] * u.den_;
        else out.num_[i] += v.num_[i] * u.den_;
      }
      out.den_ = u.den_ * v.den_;
    }
    out.normalize();
    return out;
  }

  /// Divides numerators and denominator by their common content; zero gets
  /// denominator 1.
  void normalize() {
    if (den_ == 1) return;
    if (is_zero()) {
      den_ = 1;
      return;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (sgn(c) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  CycloContextPtr ctx_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

inline CycloNum cyclo_add(const CycloNum& u, const CycloNum& v) { return u + v; }
inline CycloNum cyclo_mul(const CycloNum& u, const CycloNum& v) { return u * v; }
inline CycloNum cyclo_inv(const CycloNum& u) { return u.inverse(); }

/// zeta^t for t coprime to n: one particular primitive n-th root of unity.
struct PrimitiveRoot {
  CycloContextPtr context;
  int t = 1;
  CycloNum value;

  int n() const { return context->n(); }

  /// value^j = zeta^(t*j), any integer j.
  CycloNum pow(long j) const { return CycloNum::zeta_pow(context, static_cast<long>(t) * j); }
};

inline PrimitiveRoot make_primitive_root(const CycloContextPtr& ctx, int t) {
  const int n = ctx->n();
  if (n == 1) {
    if (t != 0 && t != 1) throw UsageError("primitive root: t must be 0 or 1 for n = 1");
    return {ctx, 0, CycloNum::zeta_pow(ctx, 0)};
  }
  if (t < 1 || t >= n || std::gcd(t, n) != 1) {
    throw UsageError("primitive root: t = " + std::to_string(t) + " is not coprime to n = " + std::to_string(n));
  }
  return {ctx, t, CycloNum::zeta_pow(ctx, t)};
}

/// All phi(n) primitive n-th roots of unity, ordered by exponent.
inline std::vector<PrimitiveRoot> primitive_roots(const CycloContextPtr& ctx) {
  std::vector<PrimitiveRoot> out;
  if (ctx->n() == 1) {
    out.push_back(make_primitive_root(ctx, 0));
    return out;
  }
  for (int t = 1; t < ctx->n(); ++t) {
    if (std::gcd(t, ctx->n()) == 1) out.push_back(make_primitive_root(ctx, t));
  }
  return out;
}

inline std::vector<PrimitiveRoot> primitive_roots(int n) { return primitive_roots(make_cyclo_context(n)); }

}  // namespace qroot

#endif  // QROOT_CYCLO_CYCLOTOMIC_HPP

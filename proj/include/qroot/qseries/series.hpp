#ifndef QROOT_QSERIES_SERIES_HPP
#define QROOT_QSERIES_SERIES_HPP

#include <algorithm>
#include <array>
#include <string>

#include "qroot/core/errors.hpp"
#include "qroot/cyclo/cyclo_rat.hpp"
#include "qroot/qseries/scene.hpp"

// Builders for the truncated sum F_n, its terms f_k, the product G, the short
// sum at a = 1, and the auxiliary terms h_k / sum H, all with q = zeta.

namespace qroot {

namespace detail {

/// Shifts e with (zeta^e a; zeta)_k in the numerator of f_k.
inline std::array<long, 4> f_numerator_shifts(const LSpec& ls) {
  return {ls.l1, 1L - ls.l1, ls.l2, 1L - ls.l2};
}

}  // namespace detail

/// f_k(a, zeta; l1, l2) with denominator (zeta a; zeta)_k^4 kept factored.
/// Any k >= 0 is accepted; k = n is used by the telescoping checks.
inline CycloFraction term_f_fraction(int k, const LSpec& ls, const SeriesScene& s) {
  if (k < 0) throw UsageError("term_f: k must be non-negative");
  APoly num = APoly::constant(s.zeta(k));
  RootProduct den(s.context());
  for (long e : detail::f_numerator_shifts(ls)) {
    for (int j = 0; j < k; ++j) num = num * s.one_minus_zeta_a(e + j);
  }
  for (int j = 1; j <= k; ++j) den = den * RootProduct::linear(s.context(), s.gen_index(j), 4);
  return CycloFraction(std::move(num), std::move(den));
}

inline CycloRatA term_f(int k, const LSpec& ls, const SeriesScene& s) { return term_f_fraction(k, ls, s).to_rat(); }

/// F_n(a, zeta; l1, l2) over the common denominator (zeta a; zeta)_{n-1}^4.
/// The denominators are nested, so the sum is accumulated Horner-style:
/// acc_k = acc_{k-1} (1 - zeta^k a)^4 + num_k, with num_k obtained from
/// num_{k-1} by one step of each q-Pochhammer symbol.
inline CycloFraction sum_F_fraction(const LSpec& ls, const SeriesScene& s) {
  const auto shifts = detail::f_numerator_shifts(ls);
  APoly num = APoly::constant(s.one());
  APoly acc = num;
  for (int k = 1; k < s.n(); ++k) {
    APoly step = APoly::constant(s.zeta(1));
    for (long e : shifts) step = step * s.one_minus_zeta_a(e + k - 1);
    num = num * step;
    acc = acc * s.one_minus_zeta_a(k).pow(4) + num;
  }
  RootProduct den(s.context());
  for (int j = 1; j < s.n(); ++j) den = den * RootProduct::linear(s.context(), s.gen_index(j), 4);
  return CycloFraction(std::move(acc), std::move(den));
}

inline CycloRatA sum_F(const LSpec& ls, const SeriesScene& s) { return sum_F_fraction(ls, s).to_rat(); }

/// f_k evaluated at a = x by substituting into each factor, never through an
/// unreduced quotient.
inline CycloNum term_f_at(int k, const LSpec& ls, const SeriesScene& s, const CycloNum& x) {
  CycloNum num = s.zeta(k);
  for (long e : detail::f_numerator_shifts(ls)) {
    for (int j = 0; j < k; ++j) num = num * (s.one() - s.zeta(e + j) * x);
  }
  if (num.is_zero()) return num;
  CycloNum den = s.one();
  for (int j = 1; j <= k; ++j) {
    CycloNum d = s.one() - s.zeta(j) * x;
    den = den * d * d * d * d;
  }
  if (den.is_zero()) throw ArithmeticError("term_f_at: (zeta a; zeta)_k vanishes at this point");
  return num / den;
}

/// F_n(x, zeta; l1, l2) summed termwise; F_n(1, zeta) is the normalizer of
/// the main identity.
inline CycloNum sum_F_at(const LSpec& ls, const SeriesScene& s, const CycloNum& x) {
  CycloNum sum = s.one().zero_like();
  for (int k = 0; k < s.n(); ++k) sum += term_f_at(k, ls, s, x);
  return sum;
}

inline CycloNum sum_F_at_one(const LSpec& ls, const SeriesScene& s) { return sum_F_at(ls, s, s.one()); }

/// One parameter's half of G: prod_{j=0}^{l-1} (a - zeta^j)/(1 - zeta^j a),
/// with an empty product for l = 0 and the reciprocal of
/// prod_{j=l}^{-1} for l < 0.
inline CycloFraction product_G_half(int l, const SeriesScene& s) {
  APoly num = APoly::constant(s.one());
  RootProduct den(s.context());
  if (l > 0) {
    for (int j = 0; j < l; ++j) {
      num = num * s.a_minus_zeta(j);
      den = den * RootProduct::linear(s.context(), s.gen_index(j));
    }
  } else {
    // (1 - zeta^j a)/(a - zeta^j) with a - zeta^j = -zeta^j (1 - zeta^-j a).
    for (int j = l; j < 0; ++j) {
      num = num * s.one_minus_zeta_a(j);
      num = -s.zeta(-j) * num;
      den = den * RootProduct::linear(s.context(), s.gen_index(-j));
    }
  }
  return CycloFraction(std::move(num), std::move(den));
}

inline CycloFraction product_G_fraction(const LSpec& ls, const SeriesScene& s) {
  return product_G_half(ls.l1, s) * product_G_half(ls.l2, s);
}

inline CycloRatA product_G(const LSpec& ls, const SeriesScene& s) { return product_G_fraction(ls, s).to_rat(); }

/// sum_{k < min(l1,l2)} (zeta^l1, zeta^(1-l1), zeta^l2, zeta^(1-l2); zeta)_k
///   / (zeta; zeta)_k^4 * zeta^k, for 0 < l1, l2 < n.
inline CycloNum short_sum(const LSpec& ls, const SeriesScene& s) {
  const int n = s.n();
  if (ls.l1 <= 0 || ls.l1 >= n || ls.l2 <= 0 || ls.l2 >= n) {
    throw UsageError("short_sum: requires 0 < l1, l2 < n");
  }
  const CycloNum one = s.one();
  CycloNum sum = one.zero_like();
  for (int k = 0; k < std::min(ls.l1, ls.l2); ++k) {
    CycloNum num = s.zeta(k);
    CycloNum den = one;
    for (long e : detail::f_numerator_shifts(ls)) {
      for (int j = 0; j < k; ++j) num = num * (one - s.zeta(e + j));
    }
    for (int j = 1; j <= k; ++j) {
      CycloNum d = one - s.zeta(j);
      den = den * d * d * d * d;
    }
    sum += num / den;
  }
  return sum;
}

/// h_k(a, zeta; l) = (1 - a)(zeta^l a, zeta^(1-l) a; zeta)_k
///   / ((1 - zeta^k a)(zeta a; zeta)_k^2) * zeta^k.
inline CycloFraction term_h_fraction(int k, int l, const SeriesScene& s) {
  if (k < 0) throw UsageError("term_h: k must be non-negative");
  APoly num = s.zeta(k) * s.one_minus_zeta_a(0);
  for (int j = 0; j < k; ++j) num = num * s.one_minus_zeta_a(l + j) * s.one_minus_zeta_a(1L - l + j);
  RootProduct den = RootProduct::linear(s.context(), s.gen_index(k));
  for (int j = 1; j <= k; ++j) den = den * RootProduct::linear(s.context(), s.gen_index(j), 2);
  return CycloFraction(std::move(num), std::move(den));
}

inline CycloRatA term_h(int k, int l, const SeriesScene& s) { return term_h_fraction(k, l, s).to_rat(); }

inline CycloFraction sum_H_fraction(int l, const SeriesScene& s) {
  CycloFraction sum = term_h_fraction(0, l, s);
  for (int k = 1; k < s.n(); ++k) sum = sum + term_h_fraction(k, l, s);
  return sum;
}

inline CycloRatA sum_H(int l, const SeriesScene& s) { return sum_H_fraction(l, s).to_rat(); }

/// 1 + a + ... + a^(n-1)
inline APoly geometric_a(const SeriesScene& s) {
  std::vector<CycloNum> c(static_cast<std::size_t>(s.n()), s.one());
  return APoly(s.one().zero_like(), std::move(c));
}

/// n^2 a^(n-1) / (1 + a + ... + a^(n-1))^2, the closed-form factor of the
/// main identity.
inline CycloRatA closed_form_factor(const SeriesScene& s) {
  const long n = s.n();
  APoly num = APoly::monomial(s.scalar(Rational(n * n)), static_cast<std::size_t>(n - 1));
  return CycloRatA(std::move(num), geometric_a(s).pow(2));
}

}  // namespace qroot

#endif  // QROOT_QSERIES_SERIES_HPP

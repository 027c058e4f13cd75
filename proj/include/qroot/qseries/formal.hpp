#ifndef QROOT_QSERIES_FORMAL_HPP
#define QROOT_QSERIES_FORMAL_HPP

#include <array>
#include <string>
#include <string_view>

#include "qroot/core/errors.hpp"
#include "qroot/core/multi_poly.hpp"
#include "qroot/core/rat_fun.hpp"
#include "qroot/qseries/scene.hpp"

// Formal-variable objects: term ratios of f in (a, q, L, K) or
// (a, q, L1, L2, K), the three-term operator in the diagonal parameter, and
// the telescoping certificate. Negative powers of q, L, K are carried as
// negative-exponent factors and cleared when a FactoredRatFun is expanded.

namespace qroot {

enum class StepMode { k_step, l1_shift, l2_shift, diag_shift };

inline std::string_view to_string(StepMode m) {
  switch (m) {
    case StepMode::k_step: return "k-step";
    case StepMode::l1_shift: return "l1-shift";
    case StepMode::l2_shift: return "l2-shift";
    case StepMode::diag_shift: return "diag-shift";
  }
  return "?";
}

namespace detail {

inline FactoredRatFun fpoly(const MultiPoly& p) { return FactoredRatFun(p); }
inline FactoredRatFun ffac(const MultiPoly& p, int e = 1) { return FactoredRatFun::factor(p, e); }

inline void require_vars(const FormalScene& s, std::initializer_list<std::string_view> names) {
  for (auto n : names) {
    if (!s.has(n)) throw UsageError("formal scene lacks variable '" + std::string(n) + "'");
  }
}

/// f(l + 1)/f(l) in one parameter whose q-power is the variable `lname`:
/// (1 - K P a)(1 - a/P) / ((1 - P a)(1 - K a/P)).
inline FactoredRatFun parameter_shift(const FormalScene& s, std::string_view lname) {
  const MultiPoly a = s.var("a");
  const MultiPoly P = s.var(lname);
  const MultiPoly K = s.var("K");
  // 1 - a/P = (P - a) P^-1 and 1 - K a/P = (P - K a) P^-1; the P^-1 cancel.
  return ffac(1 - K * P * a) * ffac(P - a) * ffac(P, -1) / (ffac(1 - P * a) * ffac(P - K * a) * ffac(P, -1));
}

}  // namespace detail

/// Term ratios of f_k as factored rational functions.
///   k-step (diagonal):  f_{k+1}/f_k = q (1 - K L a)^2 (1 - q K a/L)^2 / (1 - q K a)^4
///   l1-shift / l2-shift: f(l_i + 1)/f(l_i)
///   diag-shift:          f(l + 1, l + 1)/f(l, l)
inline FactoredRatFun step_ratio_f_factored(const FormalScene& s, StepMode mode) {
  using detail::ffac;
  switch (mode) {
    case StepMode::k_step: {
      detail::require_vars(s, {"a", "q", "L", "K"});
      const MultiPoly a = s.var("a"), q = s.var("q"), L = s.var("L"), K = s.var("K");
      return ffac(q) * ffac(1 - K * L * a, 2) * ffac(L - q * K * a, 2) * ffac(L, -2) * ffac(1 - q * K * a, -4);
    }
    case StepMode::l1_shift:
      detail::require_vars(s, {"a", "L1", "K"});
      return detail::parameter_shift(s, "L1");
    case StepMode::l2_shift:
      detail::require_vars(s, {"a", "L2", "K"});
      return detail::parameter_shift(s, "L2");
    case StepMode::diag_shift:
      detail::require_vars(s, {"a", "L", "K"});
      return detail::parameter_shift(s, "L").pow(2);
  }
  throw UsageError("step_ratio_f: unknown mode");
}

inline RatFun step_ratio_f(const FormalScene& s, StepMode mode) { return step_ratio_f_factored(s, mode).to_ratfun(); }

/// f_k(a, q; l1, l2) for concrete k, l1, l2 with q left formal, in a context
/// containing a and q. Negative powers of q become factors.
inline FactoredRatFun term_f_formal(int k, const LSpec& ls, const VarContext& ctx) {
  if (k < 0) throw UsageError("term_f_formal: k must be non-negative");
  const MultiPoly a = MultiPoly::variable(ctx, "a");
  const MultiPoly one = MultiPoly::constant(ctx, Rational(1));
  // 1 - q^e a, written as (q^-e - a) q^e when e < 0.
  auto one_minus_qpow_a = [&](long e) {
    if (e >= 0) return detail::ffac(one - MultiPoly::monomial(ctx, "q", static_cast<unsigned>(e)) * a);
    return detail::ffac(MultiPoly::monomial(ctx, "q", static_cast<unsigned>(-e)) - a) *
           detail::ffac(MultiPoly::variable(ctx, "q"), static_cast<int>(e));
  };
  FactoredRatFun out = detail::ffac(MultiPoly::monomial(ctx, "q", static_cast<unsigned>(k)));
  for (long e : {long(ls.l1), 1L - ls.l1, long(ls.l2), 1L - ls.l2}) {
    for (int j = 0; j < k; ++j) out = out * one_minus_qpow_a(e + j);
  }
  for (int j = 1; j <= k; ++j) out = out / one_minus_qpow_a(j).pow(4);
  return out;
}

/// Coefficients of the three-term operator c2 S^2 + c1 S + c0 in the
/// diagonal parameter (S: l -> l + 1, L = q^l).
struct OperatorLq {
  MultiPoly c2;
  MultiPoly c1;
  MultiPoly c0;
};

/// The three coefficients in factored form, in a context containing a, q, L.
inline std::array<FactoredRatFun, 3> operator_Lq_factored(const FormalScene& s) {
  using detail::ffac;
  detail::require_vars(s, {"a", "q", "L"});
  const MultiPoly a = s.var("a"), q = s.var("q"), L = s.var("L");
  const MultiPoly q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  const MultiPoly L2 = L * L;

  FactoredRatFun c2 = ffac(-1 * q) * ffac(L, 2) * ffac(1 + L) * ffac(1 + 4 * L + L2) * ffac(1 - q * L, 3) *
                      ffac(1 - L * a, 2) * ffac(1 - q * L * a, 2);

  MultiPoly octic = 1 + 5 * (1 + q) * L + (5 + 16 * q + 5 * q2) * L.pow(2) + (1 + q) * (1 - 5 * q + q2) * L.pow(3) -
                    2 * q * (3 + 25 * q + 3 * q2) * L.pow(4) + q * (1 + q) * (1 - 5 * q + q2) * L.pow(5) +
                    q2 * (5 + 16 * q + 5 * q2) * L.pow(6) + 5 * q3 * (1 + q) * L.pow(7) + q4 * L.pow(8);
  FactoredRatFun c1 = ffac(1 - q * L2) * ffac(octic) * ffac(1 - L * a, 2) * ffac(a - q * L, 2);

  FactoredRatFun c0 = ffac(-1 * q) * ffac(L, 2) * ffac(1 - L, 3) * ffac(1 + q * L) * ffac(1 + 4 * q * L + q2 * L2) *
                      ffac(a - L, 2) * ffac(a - q * L, 2);
  return {c2, c1, c0};
}

inline OperatorLq operator_Lq(const FormalScene& s) {
  auto [c2, c1, c0] = operator_Lq_factored(s);
  return {c2.numerator(), c1.numerator(), c0.numerator()};
}

/// The certificate s(a, q, L, K) as a product of factors: the quartic-in-L
/// cofactor times q(1+L)(1+qL)(1-qL^2)(a-L)^2(a-qL)^2 L^2 (1-K)^4, over
/// K (K - qL)^2 (K - L)^2.
inline FactoredRatFun certificate_s_factored(const FormalScene& s) {
  using detail::ffac;
  detail::require_vars(s, {"a", "q", "L", "K"});
  const MultiPoly a = s.var("a"), q = s.var("q"), L = s.var("L"), K = s.var("K");
  const MultiPoly q2 = q * q, q3 = q2 * q, K2 = K * K, L2 = L * L;

  MultiPoly cofactor = K * (1 + q3 * L.pow(6)) + 4 * K * (1 + q) * (1 + q2 * L.pow(4)) * L -
                       (4 * q2 - K - 13 * q * K - q2 * K + 4 * K2) * (1 + q * L2) * L2 -
                       2 * (q3 + 7 * q * (q + K2) + K2) * L.pow(3);

  FactoredRatFun numerator = ffac(q) * ffac(1 + L) * ffac(1 + q * L) * ffac(1 - q * L2) * ffac(a - L, 2) *
                             ffac(a - q * L, 2) * ffac(L, 2) * ffac(1 - K, 4) * ffac(cofactor);
  return numerator / (ffac(K) * ffac(K - q * L, 2) * ffac(K - L, 2));
}

/// s(a, q, L, K) as num/den, expanded directly from the factored display.
inline RatFun certificate_s(const FormalScene& s) {
  const MultiPoly q = s.var("q"), L = s.var("L"), K = s.var("K");
  FactoredRatFun f = certificate_s_factored(s);
  MultiPoly den = K * (K - q * L).pow(2) * (K - L).pow(2);
  // Denominator factors normalize to unit-leading form; with even powers and
  // the monomial K the expanded product is the displayed one.
  return RatFun(f.numerator(), den);
}

/// h_k ratios in the diagonal scene.
///   l-shift: h_k(l + 1)/h_k(l) = (1 - K L a)(1 - a/L) / ((1 - L a)(1 - K a/L))
///   k-step:  h_{k+1}/h_k = q (1 - K L a)(1 - q K a/L)(1 - K a) / (1 - q K a)^3
inline FactoredRatFun h_shift_ratio(const FormalScene& s) { return detail::parameter_shift(s, "L"); }

inline FactoredRatFun h_step_ratio(const FormalScene& s) {
  using detail::ffac;
  detail::require_vars(s, {"a", "q", "L", "K"});
  const MultiPoly a = s.var("a"), q = s.var("q"), L = s.var("L"), K = s.var("K");
  return ffac(q) * ffac(1 - K * L * a) * ffac(L - q * K * a) * ffac(L, -1) * ffac(1 - K * a) *
         ffac(1 - q * K * a, -3);
}

/// h~_k / h_k = (1 - K a)^p (1 + L)(a - L) L K^-1 / (a (1 - L)^2 (L - K a)),
/// where p = 3 in the true relation; other powers exist for checker tests.
inline FactoredRatFun h_certificate(const FormalScene& s, const MultiPoly& K, int power = 3) {
  using detail::ffac;
  const MultiPoly a = s.var("a"), L = s.var("L");
  return ffac(1 - K * a, power) * ffac(1 + L) * ffac(a - L) * ffac(L) * ffac(K, -1) /
         (ffac(a) * ffac(1 - L, 2) * ffac(L - K * a));
}

}  // namespace qroot

#endif  // QROOT_QSERIES_FORMAL_HPP

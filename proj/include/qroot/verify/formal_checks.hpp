#ifndef QROOT_VERIFY_FORMAL_CHECKS_HPP
#define QROOT_VERIFY_FORMAL_CHECKS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qroot/core/multi_poly.hpp"
#include "qroot/core/rat_fun.hpp"
#include "qroot/qseries/formal.hpp"
#include "qroot/verify/report.hpp"

// Identities in formal variables, independent of n. Each identity is a list of
// summands (both sides moved to one side) and is decided by an exact zero test
// of the cleared numerator of their sum, after a deterministic evaluation
// pre-filter at random rational points.

namespace qroot {

struct PrefilterResult {
  int points = 0;       // points where every denominator was nonzero
  int zero_values = 0;  // of those, points where the expression vanished
  bool all_zero() const { return points > 0 && zero_values == points; }
};

/// Evaluates `expr` at `count` deterministic pseudo-random rational points.
inline PrefilterResult prefilter(const FactoredRatFun& expr, int count = 20, std::uint64_t seed = 0x5eed2024) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  PrefilterResult out;
  const std::size_t arity = expr.context().size();
  for (int attempt = 0; out.points < count && attempt < 50 * count; ++attempt) {
    std::vector<Rational> point;
    point.reserve(arity);
    for (std::size_t v = 0; v < arity; ++v) point.emplace_back(num(rng), den(rng));
    auto value = expr.eval(point);
    if (!value) continue;
    ++out.points;
    if (value->is_zero()) ++out.zero_values;
  }
  return out;
}

/// Summands whose total must vanish identically.
using FormalIdentity = std::vector<FactoredRatFun>;

/// Least common multiple of the summands' monomial denominators: the Laurent
/// clearing multiplier of the identity.
inline MultiPoly clearing_monomial(const FormalIdentity& terms) {
  Monomial lcm;
  for (const auto& t : terms) {
    MultiPoly m = t.clearing_monomial();
    const Monomial& e = m.leading_term().first;
    for (std::size_t v = 0; v < kMaxVars; ++v) lcm.exps[v] = std::max(lcm.exps[v], e.exps[v]);
  }
  return MultiPoly::from_terms(terms.front().context(), {{lcm, Rational(1)}});
}

inline FactoredRatFun total(const FormalIdentity& terms) {
  FactoredRatFun sum = FactoredRatFun::constant(terms.front().context(), Rational(0));
  for (const auto& t : terms) sum = sum + t;
  return sum;
}

struct FormalOutcome {
  PrefilterResult prefilter;
  bool identically_zero = false;
  MultiPoly residual;         // cleared numerator of the sum
  MultiPoly clearing;         // Laurent clearing monomial
};

inline FormalOutcome decide_formal(const FormalIdentity& terms) {
  FactoredRatFun sum = total(terms);
  return {prefilter(sum), sum.is_zero(), sum.residual(), clearing_monomial(terms)};
}

inline VerificationReport formal_report(IdentityId id, const FormalIdentity& terms) {
  FormalOutcome o = decide_formal(terms);
  std::string detail = "prefilter " + std::to_string(o.prefilter.zero_values) + "/" +
                       std::to_string(o.prefilter.points) + " zero; clearing monomial " + o.clearing.to_string();
  if (o.identically_zero && o.prefilter.all_zero()) return {id, {}, Status::pass, {}, detail};
  if (o.identically_zero) {
    return {id, {}, Status::fail, "prefilter disagrees with zero expansion", detail};
  }
  detail += "; residual has " + std::to_string(o.residual.size()) + " terms";
  return {id, {}, Status::fail, clip_witness(o.residual.to_string()), detail};
}

/// The five-term polynomial identity in (a, b, c, d, K). `drop_last` omits
/// the final summand (checker self-test).
inline FormalIdentity formal5_identity(bool drop_last = false) {
  VarContext ctx({"a", "b", "c", "d", "K"});
  auto v = [&](const char* name) { return MultiPoly::variable(ctx, name); };
  const MultiPoly a = v("a"), b = v("b"), c = v("c"), d = v("d"), K = v("K");
  FormalIdentity terms{
      FactoredRatFun((d - b) * (1 - a * K) * (1 - c * K)),
      FactoredRatFun((a - d) * (1 - b * K) * (1 - c * K)),
      FactoredRatFun((b - c) * (1 - a * K) * (1 - d * K)),
      FactoredRatFun((c - a) * (1 - b * K) * (1 - d * K)),
  };
  if (drop_last) terms.pop_back();
  return terms;
}

inline VerificationReport check_formal5(bool drop_last = false) {
  return timed([&] { return formal_report(IdentityId::formal5, formal5_identity(drop_last)); });
}

/// Termwise four-term relation divided by f_k(l1, l2), in (a, q, L1, L2, K).
/// `flip_term` in 0..3 negates that summand (checker self-test).
inline FormalIdentity fourterm_identity(int flip_term = -1) {
  using detail::ffac;
  FormalScene s = FormalScene::two_parameter();
  const MultiPoly a = s.var("a"), L1 = s.var("L1"), L2 = s.var("L2");
  const FactoredRatFun r1 = step_ratio_f_factored(s, StepMode::l1_shift);
  const FactoredRatFun r2 = step_ratio_f_factored(s, StepMode::l2_shift);
  // 1 - a/Li = (Li - a) Li^-1
  const FactoredRatFun one_minus_a_over_L1 = ffac(L1 - a) * ffac(L1, -1);
  const FactoredRatFun one_minus_a_over_L2 = ffac(L2 - a) * ffac(L2, -1);

  FactoredRatFun terms[4] = {
      // (L2^-1 - L1^-1)(1 - L1 a)(1 - L2 a) f(l1+1, l2+1)/f
      ffac(L1 - L2) * ffac(L1, -1) * ffac(L2, -1) * ffac(1 - L1 * a) * ffac(1 - L2 * a) * r1 * r2,
      // (L1 - L2^-1)(1 - a/L1)(1 - L2 a) f(l1, l2+1)/f
      ffac(L1 * L2 - 1) * ffac(L2, -1) * one_minus_a_over_L1 * ffac(1 - L2 * a) * r2,
      // (L1^-1 - L2)(1 - L1 a)(1 - a/L2) f(l1+1, l2)/f
      ffac(1 - L1 * L2) * ffac(L1, -1) * ffac(1 - L1 * a) * one_minus_a_over_L2 * r1,
      // (L2 - L1)(1 - a/L1)(1 - a/L2)
      ffac(L2 - L1) * one_minus_a_over_L1 * one_minus_a_over_L2,
  };
  FormalIdentity out;
  for (int i = 0; i < 4; ++i) out.push_back(i == flip_term ? -terms[i] : terms[i]);
  return out;
}

inline VerificationReport check_fourterm_termwise(int flip_term = -1) {
  return timed([&] { return formal_report(IdentityId::fourterm_termwise, fourterm_identity(flip_term)); });
}

struct CertificateOptions {
  Rational scale = Rational(1);  // multiplies s (checker self-test when != 1)
  bool fourth_argument_times_a = true;  // s(a, q, L, q^k a) versus s(a, q, L, q^k)
};

/// L_q f_k(l, l) - (f~_{k+1} - f~_k), divided by f_k(l, l), in (a, q, L, K).
inline FormalIdentity diag_certificate_identity(const CertificateOptions& opt = {}) {
  FormalScene s = FormalScene::diagonal();
  const MultiPoly a = s.var("a"), q = s.var("q"), L = s.var("L"), K = s.var("K");
  auto [c2, c1, c0] = operator_Lq_factored(s);
  const FactoredRatFun shift = step_ratio_f_factored(s, StepMode::diag_shift);
  const FactoredRatFun shift_next = shift.substitute("L", q * L);

  const FactoredRatFun cert = FactoredRatFun::constant(s.context(), opt.scale) * certificate_s_factored(s);
  const MultiPoly k_arg = opt.fourth_argument_times_a ? K * a : K;
  const FactoredRatFun s_k = cert.substitute("K", k_arg);
  const FactoredRatFun s_k1 = cert.substitute("K", q * k_arg);
  return {c2 * shift * shift_next, c1 * shift, c0, -(s_k1 * step_ratio_f_factored(s, StepMode::k_step)), s_k};
}

inline VerificationReport check_diag_certificate(const CertificateOptions& opt = {}) {
  return timed([&] { return formal_report(IdentityId::diag_certificate, diag_certificate_identity(opt)); });
}

/// (1 - L a) h_k(l+1) - (a - L) h_k(l) - (h~_{k+1} - h~_k), divided by
/// h_k(l), in (a, q, L, K). `power` is the exponent of (1 - q^k a) in h~.
inline FormalIdentity h_telescope_identity(int power = 3) {
  using detail::fpoly;
  FormalScene s = FormalScene::diagonal();
  const MultiPoly a = s.var("a"), q = s.var("q"), L = s.var("L"), K = s.var("K");
  return {fpoly(1 - L * a) * h_shift_ratio(s), -fpoly(a - L), -(h_certificate(s, q * K, power) * h_step_ratio(s)),
          h_certificate(s, K, power)};
}

inline VerificationReport check_h_telescope(int power = 3) {
  return timed([&] { return formal_report(IdentityId::h_telescope, h_telescope_identity(power)); });
}

}  // namespace qroot

#endif  // QROOT_VERIFY_FORMAL_CHECKS_HPP

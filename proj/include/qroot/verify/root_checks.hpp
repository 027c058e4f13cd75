#ifndef QROOT_VERIFY_ROOT_CHECKS_HPP
#define QROOT_VERIFY_ROOT_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qroot/cyclo/cyclo_rat.hpp"
#include "qroot/qseries/formal.hpp"
#include "qroot/qseries/series.hpp"
#include "qroot/qseries/specialize.hpp"
#include "qroot/verify/report.hpp"

// Checks at q = zeta, a primitive n-th root of unity, with a symbolic. Every
// equality is decided by an exact zero test over Q(zeta_n)[a]: either of a
// sum of CycloFractions, or of a cross-multiplied difference of CycloRatAs.

namespace qroot {

namespace detail {

inline Params root_params(const SeriesScene& s, std::optional<int> l1 = {}, std::optional<int> l2 = {}) {
  return {s.n(), s.t(), l1, l2};
}

inline SeriesScene scene(int n, int t) { return SeriesScene(make_primitive_root(make_cyclo_context(n), t)); }

inline std::string poly_witness(const APoly& p) { return clip_witness(p.to_string("a", cyclo_coeff_string)); }

/// The diagonal operator coefficients and certificate with q -> zeta,
/// L -> zeta^l and K -> zeta^k a.
struct DiagonalSpecialization {
  APoly c2, c1, c0;
};

inline SubstitutionMap diagonal_substitution(const SeriesScene& s, int l, long k) {
  return {{"a", {s.one(), 1}}, {"q", {s.zeta(1), 0}}, {"L", {s.zeta(l), 0}}, {"K", {s.zeta(k), 1}}};
}

inline DiagonalSpecialization specialize_operator(const SeriesScene& s, int l) {
  static const OperatorLq op = operator_Lq(FormalScene::diagonal());
  const SubstitutionMap m = diagonal_substitution(s, l, 0);
  return {specialize(op.c2, m), specialize(op.c1, m), specialize(op.c0, m)};
}

/// f~_k(a, zeta; l) = s(a, zeta, zeta^l, zeta^k a) f_k(a, zeta; l, l).
inline CycloRatA term_f_tilde(int k, int l, const SeriesScene& s) {
  static const RatFun cert = certificate_s(FormalScene::diagonal());
  return specialize(cert, diagonal_substitution(s, l, k)) * term_f(k, LSpec{l, l}, s);
}

/// c2 X(l+2) + c1 X(l+1) + c0 X(l).
template <class Seq>
CycloFraction apply_operator(const DiagonalSpecialization& op, int l, Seq&& x) {
  return op.c2 * x(l + 2) + op.c1 * x(l + 1) + op.c0 * x(l);
}

inline bool in_core_region(int n, const LSpec& ls) {
  if (ls.l1 == 0 && ls.l2 == 0) return true;
  return ls.l1 >= 1 && ls.l1 <= n && ls.l2 >= 1 && ls.l2 <= n;
}

}  // namespace detail

/// The four-term contiguous relation on full sums, for F = F_n(a) and for
/// F = G * F_n(1). When l1 == l2 mod n the outer coefficients vanish and the
/// inner two cancel by symmetry, so the relation carries no information.
inline VerificationReport check_eq4_on_sums(const SeriesScene& s, int l1, int l2) {
  return timed([&] {
    if (s.n() < 2) throw UsageError("check_eq4_on_sums: requires n >= 2");
    const Params p = detail::root_params(s, l1, l2);
    auto coeff = [&](long u, long v, long x, long y) {
      // (zeta^u - zeta^v)(1 - zeta^x a)(1 - zeta^y a)
      return APoly::constant(s.zeta(u) - s.zeta(v)) * s.one_minus_zeta_a(x) * s.one_minus_zeta_a(y);
    };
    const APoly k11 = coeff(-l2, -l1, l1, l2);
    const APoly k01 = coeff(l1, -l2, -l1, l2);
    const APoly k10 = coeff(-l1, l2, l1, -l2);
    const APoly k00 = coeff(l2, l1, -l1, -l2);
    auto relation = [&](auto&& F) {
      return k11 * F(l1 + 1, l2 + 1) + k01 * F(l1, l2 + 1) + k10 * F(l1 + 1, l2) + k00 * F(l1, l2);
    };
    const CycloFraction f_side = relation([&](int x, int y) { return sum_F_fraction(LSpec{x, y}, s); });
    const CycloFraction g_side = relation([&](int x, int y) {
      const LSpec ls{x, y};
      return sum_F_at_one(ls, s) * product_G_fraction(ls, s);
    });
    const bool degenerate = s.zeta(l1) == s.zeta(l2);
    std::string detail = std::string("F-side ") + (f_side.is_zero() ? "0" : "nonzero") + ", G-side " +
                         (g_side.is_zero() ? "0" : "nonzero");
    if (!f_side.is_zero()) return VerificationReport(IdentityId::eq4_numeric, p, Status::fail, detail::poly_witness(f_side.num()), detail);
    if (!g_side.is_zero()) return VerificationReport(IdentityId::eq4_numeric, p, Status::fail, detail::poly_witness(g_side.num()), detail);
    if (degenerate) {
      return VerificationReport(IdentityId::eq4_numeric, p, Status::degenerate, {},
                                detail + "; l1 = l2 mod n: relation is 0 = 0");
    }
    return VerificationReport(IdentityId::eq4_numeric, p, Status::pass, {}, detail);
  });
}

inline VerificationReport check_eq4_on_sums(int n, int t, int l1, int l2) {
  return check_eq4_on_sums(detail::scene(n, t), l1, l2);
}

/// (i) f~_n = f~_0, (ii) L_zeta F_n(a; l, l) = 0, (iii) L_zeta (G F_n(1)) = 0.
/// Values of l where c2 or c0 vanishes at q = zeta make the recursion
/// degenerate; the sub-checks are still run and listed in the detail.
inline VerificationReport check_diag_annihilation(const SeriesScene& s, int l) {
  return timed([&] {
    if (s.n() < 2) throw UsageError("check_diag_annihilation: requires n >= 2");
    const Params p = detail::root_params(s, l, l);
    const auto op = detail::specialize_operator(s, l);

    const APoly telescoped = cross_difference(detail::term_f_tilde(s.n(), l, s), detail::term_f_tilde(0, l, s));
    const CycloFraction on_F =
        detail::apply_operator(op, l, [&](int x) { return sum_F_fraction(LSpec{x, x}, s); });
    const CycloFraction on_G = detail::apply_operator(op, l, [&](int x) {
      const LSpec ls{x, x};
      return sum_F_at_one(ls, s) * product_G_fraction(ls, s);
    });

    auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
    std::string detail = std::string("(i) ") + mark(telescoped.is_zero()) + ", (ii) " + mark(on_F.is_zero()) +
                         ", (iii) " + mark(on_G.is_zero());
    const bool degenerate = op.c2.is_zero() || op.c0.is_zero();
    if (degenerate) {
      detail += op.c2.is_zero() ? "; c2 vanishes" : "; c0 vanishes";
      return VerificationReport(IdentityId::diag_annihilation, p, Status::degenerate, {}, detail);
    }
    if (!telescoped.is_zero()) {
      return VerificationReport(IdentityId::diag_annihilation, p, Status::fail, detail::poly_witness(telescoped), detail);
    }
    if (!on_F.is_zero()) {
      return VerificationReport(IdentityId::diag_annihilation, p, Status::fail, detail::poly_witness(on_F.num()), detail);
    }
    if (!on_G.is_zero()) {
      return VerificationReport(IdentityId::diag_annihilation, p, Status::fail, detail::poly_witness(on_G.num()), detail);
    }
    return VerificationReport(IdentityId::diag_annihilation, p, Status::pass, {}, detail);
  });
}

inline VerificationReport check_diag_annihilation(int n, int t, int l) {
  return check_diag_annihilation(detail::scene(n, t), l);
}

/// (1 - zeta^l a) H(l + 1) = (a - zeta^l) H(l) for l = 1 .. n-1.
inline VerificationReport check_H_recursion(const SeriesScene& s) {
  return timed([&] {
    if (s.n() < 2) throw UsageError("check_H_recursion: requires n >= 2");
    const Params p = detail::root_params(s);
    std::vector<CycloFraction> H;
    for (int l = 1; l <= s.n(); ++l) H.push_back(sum_H_fraction(l, s));
    for (int l = 1; l < s.n(); ++l) {
      CycloFraction diff = s.one_minus_zeta_a(l) * H[l] - s.a_minus_zeta(l) * H[l - 1];
      if (!diff.is_zero()) {
        return VerificationReport(IdentityId::H_recursion, p, Status::fail, detail::poly_witness(diff.num()),
                                  "first failure at l = " + std::to_string(l));
      }
    }
    return VerificationReport(IdentityId::H_recursion, p, Status::pass, {},
                              "l = 1.." + std::to_string(s.n() - 1));
  });
}

inline VerificationReport check_H_recursion(int n, int t) { return check_H_recursion(detail::scene(n, t)); }

/// sum_k zeta^k / (1 - zeta^k a)^2 = n^2 a^(n-1) / (1 - a^n)^2, checked over
/// the common root-product denominator, against the expanded (1 - a^n)^2, and
/// by exact evaluation at a = 1/3.
inline VerificationReport check_partial_fraction(const SeriesScene& s) {
  return timed([&] {
    const Params p = detail::root_params(s);
    const int n = s.n();
    const auto& ctx = s.context();
    CycloFraction lhs(APoly::constant(s.one().zero_like()));
    RootProduct all(ctx);
    for (int k = 0; k < n; ++k) {
      lhs = lhs + CycloFraction(APoly::constant(s.zeta(k)), RootProduct::linear(ctx, s.gen_index(k), 2));
      all = all * RootProduct::linear(ctx, k, 2);
    }
    const APoly top = APoly::monomial(s.scalar(Rational(static_cast<long>(n) * n)), static_cast<std::size_t>(n - 1));
    const CycloFraction diff = lhs - CycloFraction(top, all);
    if (!diff.is_zero()) {
      return VerificationReport(IdentityId::partial_fraction, p, Status::fail, detail::poly_witness(diff.num()),
                                "root-product form");
    }
    const APoly one_minus_an = APoly::constant(s.one()) - APoly::monomial(s.one(), static_cast<std::size_t>(n));
    const APoly expanded = cross_difference(lhs.to_rat(), CycloRatA(top, one_minus_an.pow(2)));
    if (!expanded.is_zero()) {
      return VerificationReport(IdentityId::partial_fraction, p, Status::fail, detail::poly_witness(expanded),
                                "expanded (1 - a^n)^2 form");
    }
    const CycloNum third = s.scalar(Rational(1, 3));
    const CycloNum left = *lhs.eval(third);
    const CycloNum right = top.eval(third) / one_minus_an.eval(third).pow(2);
    if (!(left == right)) {
      return VerificationReport(IdentityId::partial_fraction, p, Status::fail, (left - right).to_string("z"),
                                "evaluation at a = 1/3");
    }
    return VerificationReport(IdentityId::partial_fraction, p, Status::pass, {},
                              "value at a = 1/3: " + left.to_string("z"));
  });
}

inline VerificationReport check_partial_fraction(int n, int t) { return check_partial_fraction(detail::scene(n, t)); }

/// H(l) = n^2 a^(n-1)/(1 + ... + a^(n-1))^2 * prod_{j=1}^{l-1} (a - zeta^j)/(1 - zeta^j a).
inline VerificationReport check_eq5(const SeriesScene& s, int l) {
  return timed([&] {
    if (s.n() < 2 || l < 1 || l > s.n()) throw UsageError("check_eq5: requires n >= 2 and 1 <= l <= n");
    const Params p = detail::root_params(s, l);
    APoly num = APoly::constant(s.one());
    APoly den = APoly::constant(s.one());
    for (int j = 1; j < l; ++j) {
      num = num * s.a_minus_zeta(j);
      den = den * s.one_minus_zeta_a(j);
    }
    const CycloRatA rhs = closed_form_factor(s) * CycloRatA(num, den);
    const APoly diff = cross_difference(sum_H(l, s), rhs);
    if (!diff.is_zero()) return VerificationReport(IdentityId::eq5, p, Status::fail, detail::poly_witness(diff));
    return VerificationReport(IdentityId::eq5, p, Status::pass);
  });
}

inline VerificationReport check_eq5(int n, int t, int l) { return check_eq5(detail::scene(n, t), l); }

/// Both sides of the main identity, multiplied through by F_n(1, zeta).
struct TheoremSides {
  CycloRatA lhs;       // F_n(a, zeta)
  CycloRatA rhs;       // F_n(1, zeta) n^2 a^(n-1) / (1 + ... + a^(n-1))^2 G(a, zeta)
  CycloNum f_at_one;   // F_n(1, zeta)
};

inline TheoremSides theorem_sides(const SeriesScene& s, const LSpec& ls) {
  CycloNum f1 = sum_F_at_one(ls, s);
  CycloRatA rhs = f1 * (closed_form_factor(s) * product_G(ls, s));
  return {sum_F(ls, s), std::move(rhs), std::move(f1)};
}

/// F_n(a)/F_n(1) = n^2 a^(n-1)/(1 + ... + a^(n-1))^2 G, decided as
/// F_n(a) * den(rhs) = num(rhs) * den(F_n). A result of LHS = -RHS is a sign
/// anomaly: a failure inside 1 <= l1, l2 <= n (or at (0, 0)), a boundary
/// record outside it. F_n(1) = 0 makes the identity inapplicable; n = 1 is
/// informational.
inline VerificationReport check_theorem(const SeriesScene& s, const LSpec& ls) {
  return timed([&] {
    const Params p = detail::root_params(s, ls.l1, ls.l2);
    const TheoremSides sides = theorem_sides(s, ls);
    if (s.n() == 1) {
      const bool holds = cyclorat_eq(sides.lhs, sides.rhs);
      return VerificationReport(IdentityId::theorem, p, Status::informational, {},
                                std::string("n = 1: identity ") + (holds ? "holds" : "fails") + " (G = " +
                                    product_G(ls, s).reduced().to_string() + ")");
    }
    if (sides.f_at_one.is_zero()) {
      return VerificationReport(IdentityId::theorem, p, Status::inapplicable, {}, "F_n(1, zeta) = 0");
    }
    const APoly diff = cross_difference(sides.lhs, sides.rhs);
    if (diff.is_zero()) return VerificationReport(IdentityId::theorem, p, Status::pass);
    if (cyclorat_eq(sides.lhs, -sides.rhs)) {
      const bool core = detail::in_core_region(s.n(), ls);
      return VerificationReport(IdentityId::theorem, p, core ? Status::fail : Status::boundary,
                                detail::poly_witness(diff), "LHS = -RHS");
    }
    return VerificationReport(IdentityId::theorem, p, Status::fail, detail::poly_witness(diff));
  });
}

inline VerificationReport check_theorem(int n, int t, int l1, int l2) {
  return check_theorem(detail::scene(n, t), LSpec{l1, l2});
}

/// F_n(a) F_n(1/a) / F_n(1)^2 with common factors cancelled.
inline CycloRatA corollary_value(const SeriesScene& s, const LSpec& ls) {
  const CycloRatA f = sum_F(ls, s);
  const CycloNum f1 = sum_F_at_one(ls, s);
  if (f1.is_zero()) throw ArithmeticError("corollary_value: F_n(1, zeta) = 0");
  return ((f1 * f1).inverse() * (f * f.reciprocal_argument())).reduced();
}

/// F_n(a) F_n(1/a) (1 + ... + a^(n-1))^4 = F_n(1)^2 n^4 a^(2(n-1)).
inline VerificationReport check_corollary(const SeriesScene& s, const LSpec& ls) {
  return timed([&] {
    const Params p = detail::root_params(s, ls.l1, ls.l2);
    const CycloRatA f = sum_F(ls, s);
    const CycloNum f1 = sum_F_at_one(ls, s);
    if (s.n() >= 2 && f1.is_zero()) {
      return VerificationReport(IdentityId::corollary, p, Status::inapplicable, {}, "F_n(1, zeta) = 0");
    }
    const long n = s.n();
    const CycloRatA lhs = f * f.reciprocal_argument() * CycloRatA(geometric_a(s).pow(4));
    const CycloRatA rhs(APoly::monomial(f1 * f1 * s.scalar(Rational(n * n * n * n)), static_cast<std::size_t>(2 * (n - 1))));
    const APoly diff = cross_difference(lhs, rhs);
    const Status status = diff.is_zero() ? Status::pass : Status::fail;
    if (s.n() == 1) {
      return VerificationReport(IdentityId::corollary, p, Status::informational, {},
                                std::string("n = 1: identity ") + (diff.is_zero() ? "holds" : "fails"));
    }
    if (status == Status::pass) return VerificationReport(IdentityId::corollary, p, Status::pass);
    return VerificationReport(IdentityId::corollary, p, Status::fail, detail::poly_witness(diff));
  });
}

inline VerificationReport check_corollary(int n, int t, int l1, int l2) {
  return check_corollary(detail::scene(n, t), LSpec{l1, l2});
}

/// The corollary's value F_n(a) F_n(1/a)/F_n(1)^2 compared across every
/// primitive root for fixed n; reported with t unset.
inline VerificationReport check_corollary_t_independence(int n, const LSpec& ls) {
  return timed([&] {
    const Params p{n, std::nullopt, ls.l1, ls.l2};
    const auto roots = primitive_roots(n);
    std::optional<CycloRatA> first;
    int first_t = 0;
    for (const auto& r : roots) {
      const SeriesScene s(r);
      if (sum_F_at_one(ls, s).is_zero()) {
        return VerificationReport(IdentityId::corollary, p, Status::inapplicable, {},
                                  "F_n(1, zeta) = 0 at t = " + std::to_string(r.t));
      }
      CycloRatA v = corollary_value(s, ls);
      if (!first) {
        first = std::move(v);
        first_t = r.t;
        continue;
      }
      const APoly diff = cross_difference(*first, v);
      if (!diff.is_zero()) {
        return VerificationReport(IdentityId::corollary, p, Status::fail, detail::poly_witness(diff),
                                  "t = " + std::to_string(first_t) + " vs t = " + std::to_string(r.t));
      }
    }
    return VerificationReport(IdentityId::corollary, p, Status::pass, {},
                              "identical for " + std::to_string(roots.size()) + " primitive roots: " +
                                  first->to_string());
  });
}

/// The shortened a = 1 sum (k < min(l1, l2)) equals the full F_n(1, zeta).
inline VerificationReport check_short_sum(const SeriesScene& s, const LSpec& ls) {
  return timed([&] {
    const Params p = detail::root_params(s, ls.l1, ls.l2);
    const CycloNum full = sum_F_at_one(ls, s);
    const CycloNum shortened = short_sum(ls, s);
    if (!(full == shortened)) {
      return VerificationReport(IdentityId::short_sum, p, Status::fail, (full - shortened).to_string("z"));
    }
    return VerificationReport(IdentityId::short_sum, p, Status::pass, {}, "value " + full.to_string("z"));
  });
}

inline VerificationReport check_short_sum(int n, int t, int l1, int l2) {
  return check_short_sum(detail::scene(n, t), LSpec{l1, l2});
}

/// F_n(a; -l1, l2) = F_n(a; l1 + 1, l2).
inline VerificationReport check_reflection(const SeriesScene& s, const LSpec& ls) {
  return timed([&] {
    const Params p = detail::root_params(s, ls.l1, ls.l2);
    const CycloFraction diff =
        sum_F_fraction(LSpec{-ls.l1, ls.l2}, s) - sum_F_fraction(LSpec{ls.l1 + 1, ls.l2}, s);
    if (!diff.is_zero()) return VerificationReport(IdentityId::reflection, p, Status::fail, detail::poly_witness(diff.num()));
    return VerificationReport(IdentityId::reflection, p, Status::pass, {},
                              "F(" + std::to_string(-ls.l1) + "," + std::to_string(ls.l2) + ") = F(" +
                                  std::to_string(ls.l1 + 1) + "," + std::to_string(ls.l2) + ")");
  });
}

inline VerificationReport check_reflection(int n, int t, int l1, int l2) {
  return check_reflection(detail::scene(n, t), LSpec{l1, l2});
}

/// G(-l1, l2) against G(l1 + 1, l2) under the reciprocal-product
/// convention: equal -> pass, equal up to sign -> boundary (witness: the
/// ratio), anything else -> fail.
inline VerificationReport check_convention_G(const SeriesScene& s, const LSpec& ls) {
  return timed([&] {
    if (ls.l1 < 0) throw UsageError("check_convention_G: requires l1 >= 0");
    const Params p = detail::root_params(s, ls.l1, ls.l2);
    const CycloRatA reflected = product_G(LSpec{-ls.l1, ls.l2}, s);
    const CycloRatA shifted = product_G(LSpec{ls.l1 + 1, ls.l2}, s);
    if (cyclorat_eq(reflected, shifted)) return VerificationReport(IdentityId::convention_G, p, Status::pass);
    const std::string ratio = (reflected / shifted).reduced().to_string();
    if (cyclorat_eq(reflected, -shifted)) {
      return VerificationReport(IdentityId::convention_G, p, Status::boundary, "ratio " + ratio, "equal up to sign");
    }
    return VerificationReport(IdentityId::convention_G, p, Status::fail, "ratio " + clip_witness(ratio));
  });
}

inline VerificationReport check_convention_G(int n, int t, int l1, int l2) {
  return check_convention_G(detail::scene(n, t), LSpec{l1, l2});
}

}  // namespace qroot

#endif  // QROOT_VERIFY_ROOT_CHECKS_HPP

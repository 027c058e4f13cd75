#include <gtest/gtest.h>

#include <vector>

#include "qroot/qseries/formal.hpp"
#include "qroot/qseries/series.hpp"
#include "qroot/qseries/specialize.hpp"

using qroot::CycloNum;
using qroot::CycloRatA;
using qroot::FormalScene;
using qroot::LSpec;
using qroot::MultiPoly;
using qroot::RatFun;
using qroot::Rational;
using qroot::SeriesScene;
using qroot::StepMode;
using qroot::Substitution;
using qroot::SubstitutionMap;

namespace {

SeriesScene make_scene(int n, int t) { return SeriesScene(qroot::make_primitive_root(qroot::make_cyclo_context(n), t)); }

// a stays free; every other variable becomes a power of the scene's root.
SubstitutionMap at_root(const SeriesScene& s, std::initializer_list<std::pair<const char*, long>> powers) {
  SubstitutionMap m;
  m.emplace("a", Substitution{s.one(), 1});
  for (const auto& [name, e] : powers) m.emplace(name, Substitution{s.zeta(e), 0});
  return m;
}

CycloRatA quotient(const CycloRatA& x, const CycloRatA& y) { return x / y; }

// s(a, q, L, K) evaluated factor by factor from the display.
Rational certificate_by_hand(Rational a, Rational q, Rational L, Rational K) {
  const Rational one(1);
  Rational front = q * (one + L) * (one + q * L) * (one - q * L * L) * (a - L).pow(2) * (a - q * L).pow(2) * L * L *
                   (one - K).pow(4) / (K * (K - q * L).pow(2) * (K - L).pow(2));
  Rational tail = K * (one + q.pow(3) * L.pow(6)) + Rational(4) * K * (one + q) * (one + q * q * L.pow(4)) * L -
                  (Rational(4) * q * q - K - Rational(13) * q * K - q * q * K + Rational(4) * K * K) * (one + q * L * L) * L * L -
                  Rational(2) * (q.pow(3) + Rational(7) * q * (q + K * K) + K * K) * L.pow(3);
  return front * tail;
}

}  // namespace

TEST(StepRatio, KStepAtKOneIsFirstTerm) {
  FormalScene sc = FormalScene::diagonal();
  MultiPoly a = sc.var("a"), q = sc.var("q"), L = sc.var("L");
  RatFun ratio = qroot::step_ratio_f(sc, StepMode::k_step).substitute("K", sc.constant(Rational(1)));
  RatFun f1(q * (1 - L * a).pow(2) * (L - q * a).pow(2), L * L * (1 - q * a).pow(4));
  EXPECT_TRUE(qroot::ratfun_eq(ratio, f1));
}

TEST(StepRatio, ShiftAtParameterOneIsOne) {
  FormalScene sc = FormalScene::two_parameter();
  RatFun one(sc.constant(Rational(1)));
  EXPECT_TRUE(qroot::ratfun_eq(qroot::step_ratio_f(sc, StepMode::l1_shift).substitute("L1", sc.constant(Rational(1))), one));
  EXPECT_TRUE(qroot::ratfun_eq(qroot::step_ratio_f(sc, StepMode::l2_shift).substitute("L2", sc.constant(Rational(1))), one));
}

TEST(StepRatio, FirstShiftAtFifthRootAgainstDirectQuotient) {
  SeriesScene s = make_scene(5, 1);
  FormalScene sc = FormalScene::two_parameter();
  CycloRatA ratio = qroot::specialize(qroot::step_ratio_f(sc, StepMode::l1_shift),
                                      at_root(s, {{"q", 1}, {"L1", 2}, {"L2", 2}, {"K", 2}}));
  CycloRatA direct = quotient(qroot::term_f(2, {3, 2}, s), qroot::term_f(2, {2, 2}, s));
  EXPECT_TRUE(qroot::cyclorat_eq(ratio, direct));
}

TEST(StepRatio, AllModesAgainstDirectQuotients) {
  FormalScene two = FormalScene::two_parameter();
  FormalScene diag = FormalScene::diagonal();
  const RatFun r1 = qroot::step_ratio_f(two, StepMode::l1_shift);
  const RatFun r2 = qroot::step_ratio_f(two, StepMode::l2_shift);
  const RatFun rk = qroot::step_ratio_f(diag, StepMode::k_step);
  const RatFun rd = qroot::step_ratio_f(diag, StepMode::diag_shift);
  for (int n : {4, 7}) {
    for (const auto& root : qroot::primitive_roots(n)) {
      SeriesScene s(root);
      for (int k = 0; k < n; ++k) {
        for (int l1 = -1; l1 <= 3; ++l1) {
          for (int l2 = 0; l2 <= 2; ++l2) {
            auto sub = at_root(s, {{"q", 1}, {"L1", l1}, {"L2", l2}, {"K", k}});
            EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(r1, sub),
                                           quotient(qroot::term_f(k, {l1 + 1, l2}, s), qroot::term_f(k, {l1, l2}, s))));
            EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(r2, sub),
                                           quotient(qroot::term_f(k, {l1, l2 + 1}, s), qroot::term_f(k, {l1, l2}, s))));
          }
          auto dsub = at_root(s, {{"q", 1}, {"L", l1}, {"K", k}});
          const CycloRatA fk = qroot::term_f(k, {l1, l1}, s);
          EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(rk, dsub), quotient(qroot::term_f(k + 1, {l1, l1}, s), fk)));
          EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(rd, dsub), quotient(qroot::term_f(k, {l1 + 1, l1 + 1}, s), fk)));
        }
      }
    }
  }
}

TEST(TermFFormal, SpecializesToRootTerm) {
  qroot::VarContext ctx({"a", "q"});
  for (int n : {3, 5, 6}) {
    for (const auto& root : qroot::primitive_roots(n)) {
      SeriesScene s(root);
      for (LSpec ls : {LSpec{1, 2}, LSpec{-2, 3}, LSpec{0, 0}}) {
        for (int k = 0; k < n; ++k) {
          RatFun formal = qroot::term_f_formal(k, ls, ctx).to_ratfun();
          EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(formal, at_root(s, {{"q", 1}})), qroot::term_f(k, ls, s)));
        }
      }
    }
  }
}

TEST(OperatorLq, CoefficientVanishingProbes) {
  FormalScene sc = FormalScene::diagonal();
  qroot::OperatorLq op = qroot::operator_Lq(sc);
  EXPECT_TRUE(op.c2.substitute("L", Rational(-1)).is_zero());
  EXPECT_TRUE(op.c0.substitute("L", Rational(1)).is_zero());
  EXPECT_FALSE(op.c1.substitute("L", Rational(1)).is_zero());
  // (1 - qL)^3 in c2 and (a - L)^2 in c0.
  EXPECT_TRUE(op.c2.substitute("q", sc.var("L")).substitute("L", Rational(1)).is_zero());
  EXPECT_TRUE(op.c0.substitute("a", sc.var("L")).is_zero());
}

TEST(OperatorLq, MiddleCoefficientAtQOne) {
  // Setting q = 1 in the octic gives 1 + 10L + 26L^2 - 6L^3 - 62L^4 - 6L^5 + 26L^6 + 10L^7 + L^8.
  FormalScene sc = FormalScene::diagonal();
  MultiPoly a = sc.var("a"), L = sc.var("L");
  MultiPoly octic = 1 + 10 * L + 26 * L.pow(2) - 6 * L.pow(3) - 62 * L.pow(4) - 6 * L.pow(5) + 26 * L.pow(6) +
                    10 * L.pow(7) + L.pow(8);
  MultiPoly expected = (1 - L * L) * octic * (1 - L * a).pow(2) * (a - L).pow(2);
  MultiPoly c1 = qroot::operator_Lq(sc).c1.substitute("q", Rational(1));
  EXPECT_EQ(c1, expected);
  // At a = 0, L = 2: (1 - 4) * octic(2) * 1 * 4.
  std::map<std::string, Rational, std::less<>> pt{{"a", Rational(0)}, {"q", Rational(1)}, {"L", Rational(2)}, {"K", Rational(0)}};
  Rational octic2 = Rational(1 + 20 + 104 - 48 - 992 - 192 + 1664 + 1280 + 256);
  EXPECT_EQ(qroot::operator_Lq(sc).c1.eval(pt), Rational(-3) * octic2 * Rational(4));
}

TEST(Certificate, DenominatorShape) {
  FormalScene sc = FormalScene::diagonal();
  MultiPoly q = sc.var("q"), L = sc.var("L"), K = sc.var("K");
  RatFun s = qroot::certificate_s(sc);
  EXPECT_EQ(s.den(), K * (K - q * L).pow(2) * (K - L).pow(2));
}

TEST(Certificate, EvaluationMatchesHandTranscription) {
  FormalScene sc = FormalScene::diagonal();
  RatFun s = qroot::certificate_s(sc);
  std::vector<std::vector<Rational>> points{{Rational(2), Rational(3), Rational(5), Rational(7)},
                                            {Rational(1, 2), Rational(-3), Rational(2, 5), Rational(11, 3)},
                                            {Rational(-4), Rational(7, 2), Rational(-1, 3), Rational(5)}};
  for (const auto& p : points) {
    auto v = s.eval(p);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, certificate_by_hand(p[0], p[1], p[2], p[3]));
  }
}

TEST(Certificate, FactoredAndExpandedAgree) {
  FormalScene sc = FormalScene::diagonal();
  EXPECT_TRUE(qroot::ratfun_eq(qroot::certificate_s_factored(sc).to_ratfun(), qroot::certificate_s(sc)));
}

TEST(HRatios, AgainstDirectQuotients) {
  FormalScene sc = FormalScene::diagonal();
  const RatFun shift = qroot::h_shift_ratio(sc).to_ratfun();
  const RatFun step = qroot::h_step_ratio(sc).to_ratfun();
  for (int n : {5, 6}) {
    for (const auto& root : qroot::primitive_roots(n)) {
      SeriesScene s(root);
      for (int k = 0; k + 1 < n; ++k) {
        for (int l = -1; l <= n; ++l) {
          auto sub = at_root(s, {{"q", 1}, {"L", l}, {"K", k}});
          const CycloRatA hk = qroot::term_h(k, l, s);
          EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(shift, sub), quotient(qroot::term_h(k, l + 1, s), hk)));
          EXPECT_TRUE(qroot::cyclorat_eq(qroot::specialize(step, sub), quotient(qroot::term_h(k + 1, l, s), hk)));
        }
      }
    }
  }
}

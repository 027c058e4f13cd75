#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qroot/verify/root_checks.hpp"

using qroot::APoly;
using qroot::CycloRatA;
using qroot::IdentityId;
using qroot::LSpec;
using qroot::Rational;
using qroot::SeriesScene;
using qroot::Status;
using qroot::VerificationReport;

namespace {

std::vector<int> ts(int n) {
  std::vector<int> out;
  for (const auto& r : qroot::primitive_roots(n)) out.push_back(r.t);
  return out;
}

}  // namespace

TEST(Eq4OnSums, NThreeAllParameters) {
  for (int t : ts(3)) {
    for (int l1 = 1; l1 <= 3; ++l1) {
      for (int l2 = 1; l2 <= 3; ++l2) {
        VerificationReport r = qroot::check_eq4_on_sums(3, t, l1, l2);
        Status want = l1 == l2 ? Status::degenerate : Status::pass;
        EXPECT_EQ(r.status(), want) << t << " " << l1 << " " << l2 << " " << r.detail();
      }
    }
  }
}

TEST(Eq4OnSums, NTwoAndFiveExamples) {
  EXPECT_EQ(qroot::check_eq4_on_sums(2, 1, 1, 2).status(), Status::pass);
  for (int t : ts(5)) EXPECT_EQ(qroot::check_eq4_on_sums(5, t, 1, 2).status(), Status::pass);
}

TEST(Eq4OnSums, FiveRootAgainstComplexOracle) {
  // The F-side relation evaluated numerically from the series definition.
  const int n = 5, l1 = 1, l2 = 2;
  for (int t : ts(n)) {
    for (long double a : {0.3L, -0.7L, 1.9L}) {
      auto z = [&](long e) { return oracle::zeta_pow(n, t, e); };
      auto F = [&](int x, int y) { return oracle::F(a, n, t, x, y); };
      auto k = [&](long u, long v, long x, long y) { return (z(u) - z(v)) * (1.0L - z(x) * a) * (1.0L - z(y) * a); };
      auto total = k(-l2, -l1, l1, l2) * F(l1 + 1, l2 + 1) + k(l1, -l2, -l1, l2) * F(l1, l2 + 1) +
                   k(-l1, l2, l1, -l2) * F(l1 + 1, l2) + k(l2, l1, -l1, -l2) * F(l1, l2);
      EXPECT_LT(std::abs(total), 1e-9L);
    }
  }
}

TEST(DiagAnnihilation, Examples) {
  VerificationReport r = qroot::check_diag_annihilation(3, 1, 1);
  EXPECT_EQ(r.status(), Status::pass) << r.detail();
  EXPECT_EQ(r.detail(), "(i) ok, (ii) ok, (iii) ok");

  VerificationReport b = qroot::check_diag_annihilation(4, 1, 3);
  EXPECT_EQ(b.status(), Status::degenerate);
  EXPECT_NE(b.detail().find("c2 vanishes"), std::string::npos);

  VerificationReport c = qroot::check_diag_annihilation(2, 1, 1);
  EXPECT_NE(c.detail().find("(ii) ok"), std::string::npos);
}

TEST(DiagAnnihilation, AllNonDegenerateUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for (int t : ts(n)) {
      for (int l = 1; l < n; ++l) {
        VerificationReport r = qroot::check_diag_annihilation(n, t, l);
        EXPECT_FALSE(r.failed()) << n << " " << t << " " << l << " " << r.witness();
        EXPECT_EQ(r.detail().substr(0, 25), "(i) ok, (ii) ok, (iii) ok") << n << " " << t << " " << l;
      }
    }
  }
}

TEST(HRecursion, FifthRootSecondPower) {
  VerificationReport r = qroot::check_H_recursion(5, 2);
  EXPECT_EQ(r.status(), Status::pass);
  EXPECT_EQ(r.detail(), "l = 1..4");
}

TEST(PartialFraction, SmallCases) {
  VerificationReport one = qroot::check_partial_fraction(1, 0);
  EXPECT_EQ(one.status(), Status::pass);
  EXPECT_EQ(one.detail(), "value at a = 1/3: 9/4");
  VerificationReport two = qroot::check_partial_fraction(2, 1);
  EXPECT_EQ(two.status(), Status::pass);
  // 1/(1 - 1/3)^2 - 1/(1 + 1/3)^2 = 9/4 - 9/16
  EXPECT_EQ(two.detail(), "value at a = 1/3: 27/16");
}

TEST(PartialFraction, TwelfthRootsAllT) {
  for (int t : ts(12)) EXPECT_EQ(qroot::check_partial_fraction(12, t).status(), Status::pass) << t;
}

TEST(PartialFraction, ValueAtThirdMatchesClosedForm) {
  for (int n = 1; n <= 10; ++n) {
    // n^2 (1/3)^(n-1) / (1 - (1/3)^n)^2
    Rational third(1, 3);
    Rational want = Rational(n * n) * third.pow(static_cast<unsigned>(n - 1)) /
                    (Rational(1) - third.pow(static_cast<unsigned>(n))).pow(2);
    int t = n == 1 ? 0 : 1;
    EXPECT_EQ(qroot::check_partial_fraction(n, t).detail(), "value at a = 1/3: " + want.to_string()) << n;
  }
}

TEST(Eq5, Examples) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(qroot::check_eq5(n, 1, 1).status(), Status::pass) << n;
  EXPECT_EQ(qroot::check_eq5(3, 1, 2).status(), Status::pass);
  EXPECT_EQ(qroot::check_eq5(4, 3, 3).status(), Status::pass);
  EXPECT_THROW(qroot::check_eq5(4, 1, 5), qroot::UsageError);
}

TEST(Theorem, NTwoDiagonalOneHandExpansion) {
  SeriesScene s(qroot::make_primitive_root(qroot::make_cyclo_context(2), 1));
  auto sides = qroot::theorem_sides(s, {1, 1});
  CycloRatA expected(APoly::monomial(s.scalar(Rational(4)), 1), APoly::linear(s.one(), s.one()).pow(2));
  EXPECT_TRUE(sides.f_at_one.is_one());
  EXPECT_TRUE(qroot::cyclorat_eq(sides.lhs, expected));
  EXPECT_TRUE(qroot::cyclorat_eq(sides.rhs, expected));
  EXPECT_EQ(qroot::check_theorem(2, 1, 1, 1).status(), Status::pass);
}

TEST(Theorem, ZeroZeroPassesUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for (int t : ts(n)) EXPECT_EQ(qroot::check_theorem(n, t, 0, 0).status(), Status::pass) << n << " " << t;
  }
}

TEST(Theorem, CoreRegionUpToFive) {
  for (int n = 2; n <= 5; ++n) {
    for (int t : ts(n)) {
      for (int l1 = 1; l1 <= n; ++l1) {
        for (int l2 = 1; l2 <= n; ++l2) {
          VerificationReport r = qroot::check_theorem(n, t, l1, l2);
          EXPECT_EQ(r.status(), Status::pass) << n << " " << t << " " << l1 << " " << l2 << " " << r.witness();
        }
      }
    }
  }
}

TEST(Theorem, SignAnomalyAtNTwoZeroOne) {
  VerificationReport r = qroot::check_theorem(2, 1, 0, 1);
  EXPECT_EQ(r.status(), Status::boundary);
  EXPECT_EQ(r.detail(), "LHS = -RHS");
  EXPECT_EQ(r.witness(), "-8*a^6 - 24*a^5 - 16*a^4 + 16*a^3 + 24*a^2 + 8*a");
  SeriesScene s(qroot::make_primitive_root(qroot::make_cyclo_context(2), 1));
  auto sides = qroot::theorem_sides(s, {0, 1});
  EXPECT_TRUE(qroot::cyclorat_eq(sides.lhs, -sides.rhs));
}

TEST(Theorem, AgainstComplexOracle) {
  // F(a)/F(1) and closed form * G from the series definitions, numerically.
  for (int n = 2; n <= 6; ++n) {
    for (int t : ts(n)) {
      for (LSpec ls : {LSpec{1, n}, LSpec{n, 2}, LSpec{0, 0}}) {
        for (long double a : {0.25L, -0.6L}) {
          auto lhs = oracle::F(a, n, t, ls.l1, ls.l2) / oracle::F(1.0L, n, t, ls.l1, ls.l2);
          auto rhs = oracle::closed_form(a, n) * oracle::G(a, n, t, ls.l1, ls.l2);
          EXPECT_TRUE(oracle::close(lhs, rhs, 1e-8L)) << n << " " << t << " " << ls.l1 << " " << ls.l2;
        }
      }
    }
  }
}

TEST(Theorem, NOneIsInformational) {
  VerificationReport r = qroot::check_theorem(1, 0, 1, 1);
  EXPECT_EQ(r.status(), Status::informational);
}

TEST(Corollary, NTwoDiagonalOne) {
  EXPECT_EQ(qroot::check_corollary(2, 1, 1, 1).status(), Status::pass);
  SeriesScene s(qroot::make_primitive_root(qroot::make_cyclo_context(2), 1));
  // F(a) F(1/a) = 16 a^2 / (1 + a)^4 with F(1) = 1.
  CycloRatA expected(APoly::monomial(s.scalar(Rational(16)), 2), APoly::linear(s.one(), s.one()).pow(4));
  EXPECT_TRUE(qroot::cyclorat_eq(qroot::corollary_value(s, {1, 1}), expected));
}

TEST(Corollary, ZeroZeroAndIndependenceOfRoot) {
  for (int n = 2; n <= 6; ++n) {
    for (int t : ts(n)) EXPECT_EQ(qroot::check_corollary(n, t, 0, 0).status(), Status::pass);
    VerificationReport r = qroot::check_corollary_t_independence(n, {2, 1});
    EXPECT_EQ(r.status(), Status::pass) << n << " " << r.witness();
    EXPECT_FALSE(r.params().t.has_value());
  }
}

TEST(ShortSumCheck, Passes) {
  for (int n = 2; n <= 6; ++n) {
    for (int t : ts(n)) {
      for (int l1 = 1; l1 < n; ++l1) {
        EXPECT_EQ(qroot::check_short_sum(n, t, l1, n - 1).status(), Status::pass);
      }
    }
  }
}

TEST(Reflection, Passes) {
  VerificationReport r = qroot::check_reflection(3, 2, 1, 2);
  EXPECT_EQ(r.status(), Status::pass);
  EXPECT_EQ(r.detail(), "F(-1,2) = F(2,2)");
}

TEST(ConventionG, SignOnlyDifference) {
  VerificationReport r = qroot::check_convention_G(4, 1, 0, 2);
  EXPECT_EQ(r.status(), Status::boundary);
  EXPECT_EQ(r.witness(), "ratio -1");
  EXPECT_EQ(r.detail(), "equal up to sign");

  VerificationReport r3 = qroot::check_convention_G(3, 1, 1, 1);
  EXPECT_FALSE(r3.failed());
  EXPECT_FALSE(r3.witness().empty());
  EXPECT_THROW(qroot::check_convention_G(3, 1, -1, 1), qroot::UsageError);
}

TEST(Reports, IdentityIdsAndParams) {
  VerificationReport r = qroot::check_theorem(3, 2, 1, 3);
  EXPECT_EQ(r.id(), IdentityId::theorem);
  EXPECT_EQ(r.params().n, 3);
  EXPECT_EQ(r.params().t, 2);
  EXPECT_EQ(r.params().l1, 1);
  EXPECT_EQ(r.params().l2, 3);
}

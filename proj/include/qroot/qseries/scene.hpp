#ifndef QROOT_QSERIES_SCENE_HPP
#define QROOT_QSERIES_SCENE_HPP

#include <string>
#include <utility>

#include "qroot/core/multi_poly.hpp"
#include "qroot/cyclo/cyclo_rat.hpp"
#include "qroot/cyclo/cyclotomic.hpp"

namespace qroot {

/// The pair (l1, l2) of integer parameters; negative values follow the
/// reciprocal-product convention. l1 == l2 is the diagonal case.
struct LSpec {
  int l1 = 0;
  int l2 = 0;

  bool diagonal() const { return l1 == l2; }
  friend bool operator==(const LSpec&, const LSpec&) = default;
};

/// q specialized to a primitive n-th root of unity zeta = zeta_n^t, with a
/// left symbolic.
class SeriesScene {
 public:
  explicit SeriesScene(PrimitiveRoot root) : root_(std::move(root)) {}

  const PrimitiveRoot& root() const { return root_; }
  const CycloContextPtr& context() const { return root_.context; }
  int n() const { return root_.n(); }
  int t() const { return root_.t; }

  /// zeta^j for the scene's root.
  CycloNum zeta(long j) const { return root_.pow(j); }

  /// Index of zeta^j in terms of the context generator, for RootProduct.
  long gen_index(long j) const { return static_cast<long>(root_.t) * j; }

  CycloNum one() const { return CycloNum(context(), Rational(1)); }
  CycloNum scalar(const Rational& r) const { return CycloNum(context(), r); }
  APoly a() const { return apoly_a(context()); }

  /// 1 - zeta^j a
  APoly one_minus_zeta_a(long j) const { return APoly::linear(one(), -zeta(j)); }

  /// a - zeta^j
  APoly a_minus_zeta(long j) const { return APoly::linear(-zeta(j), one()); }

 private:
  PrimitiveRoot root_;
};

/// Formal scene: q, K = q^k and L = q^l (or L1, L2) are independent
/// variables alongside a.
class FormalScene {
 public:
  explicit FormalScene(VarContext ctx) : ctx_(std::move(ctx)) {}

  /// Variables (a, q, L, K) for the diagonal l1 = l2 = l.
  static FormalScene diagonal() { return FormalScene(VarContext({"a", "q", "L", "K"})); }

  /// Variables (a, q, L1, L2, K).
  static FormalScene two_parameter() { return FormalScene(VarContext({"a", "q", "L1", "L2", "K"})); }

  const VarContext& context() const { return ctx_; }
  bool has(std::string_view name) const { return ctx_.find(name).has_value(); }
  MultiPoly var(std::string_view name) const { return MultiPoly::variable(ctx_, name); }
  MultiPoly constant(const Rational& c) const { return MultiPoly::constant(ctx_, c); }

 private:
  VarContext ctx_;
};

}  // namespace qroot

#endif  // QROOT_QSERIES_SCENE_HPP

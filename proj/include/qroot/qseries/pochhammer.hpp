#ifndef QROOT_QSERIES_POCHHAMMER_HPP
#define QROOT_QSERIES_POCHHAMMER_HPP

#include "qroot/core/multi_poly.hpp"
#include "qroot/core/rational.hpp"
#include "qroot/cyclo/cyclo_rat.hpp"

namespace qroot {

inline Rational ring_one(const Rational&) { return Rational(1); }
inline CycloNum ring_one(const CycloNum& x) { return x.one_like(); }
inline MultiPoly ring_one(const MultiPoly& x) { return MultiPoly::constant(x.context(), Rational(1)); }
inline APoly ring_one(const APoly& x) { return APoly::constant(x.one()); }

/// (x; q)_k = (1 - x)(1 - x q)...(1 - x q^(k-1)); the empty product is 1.
template <class R>
R qpochhammer(const R& x, const R& q, unsigned k) {
  const R one = ring_one(x);
  R result = one;
  R term = x;
  for (unsigned j = 0; j < k; ++j) {
    result = result * (one - term);
    term = term * q;
  }
  return result;
}

}  // namespace qroot

#endif  // QROOT_QSERIES_POCHHAMMER_HPP

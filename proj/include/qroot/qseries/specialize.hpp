#ifndef QROOT_QSERIES_SPECIALIZE_HPP
#define QROOT_QSERIES_SPECIALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/core/multi_poly.hpp"
#include "qroot/core/rat_fun.hpp"
#include "qroot/cyclo/cyclo_rat.hpp"

namespace qroot {

/// A formal variable replaced by scalar * a^a_degree.
struct Substitution {
  CycloNum scalar;
  unsigned a_degree = 0;
};

using SubstitutionMap = std::map<std::string, Substitution, std::less<>>;

/// Maps a formal polynomial to a polynomial in a over Q(zeta_n). Every
/// context variable must be assigned.
inline APoly specialize(const MultiPoly& p, const SubstitutionMap& subst) {
  const VarContext& ctx = p.context();
  if (subst.empty()) throw UsageError("specialize: empty substitution");
  const CycloNum zero = subst.begin()->second.scalar.zero_like();
  std::vector<const Substitution*> by_index(ctx.size(), nullptr);
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    auto it = subst.find(ctx.name(v));
    if (it == subst.end()) throw UsageError("specialize: no value for '" + ctx.name(v) + "'");
    by_index[v] = &it->second;
  }
  std::vector<std::vector<CycloNum>> powers(ctx.size());
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    powers[v].push_back(zero.one_like());
    for (unsigned e = 1; e <= p.degree(v); ++e) powers[v].push_back(powers[v].back() * by_index[v]->scalar);
  }
  std::vector<CycloNum> coeffs;
  for (const auto& [m, c] : p.terms()) {
    CycloNum value = CycloNum(zero.context(), c);
    std::size_t deg = 0;
    for (std::size_t v = 0; v < ctx.size(); ++v) {
      if (m.exps[v] == 0) continue;
      value = value * powers[v][m.exps[v]];
      deg += static_cast<std::size_t>(by_index[v]->a_degree) * m.exps[v];
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, zero);
    coeffs[deg] += value;
  }
  return APoly(zero, std::move(coeffs));
}

inline CycloRatA specialize(const RatFun& f, const SubstitutionMap& subst) {
  APoly den = specialize(f.den(), subst);
  if (den.is_zero()) throw ArithmeticError("specialize: denominator vanishes identically");
  return CycloRatA(specialize(f.num(), subst), std::move(den));
}

}  // namespace qroot

#endif  // QROOT_QSERIES_SPECIALIZE_HPP

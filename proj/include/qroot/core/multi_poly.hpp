#ifndef QROOT_CORE_MULTI_POLY_HPP
#define QROOT_CORE_MULTI_POLY_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/core/rational.hpp"

namespace qroot {

inline constexpr std::size_t kMaxVars = 8;

/// Ordered list of distinct variable names shared by every polynomial built in
/// it. Copies share storage; two contexts are compatible iff the name lists
/// are identical.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->empty()) throw UsageError("VarContext: no variables");
    if (names_->size() > kMaxVars) throw UsageError("VarContext: too many variables");
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i].empty()) throw UsageError("VarContext: empty variable name");
      for (std::size_t j = 0; j < i; ++j) {
        if ((*names_)[i] == (*names_)[j]) {
          throw UsageError("VarContext: duplicate variable '" + (*names_)[i] + "'");
        }
      }
    }
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UsageError("VarContext: unknown variable '" + std::string(name) + "'");
  }

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps[i] > other.exps[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = unsigned(a.exps[i]) + b.exps[i];
      if (e > 0xFFFFu) throw ArithmeticError("Monomial: exponent overflow");
      m.exps[i] = static_cast<std::uint16_t>(e);
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison: total degree first, then the first
/// variable of the context is most significant.
inline std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps <=> b.exps;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto e : m.exps) {
      h ^= e + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Sparse multivariate polynomial with Rational coefficients.
///
/// Terms are stored in descending graded-lex order with no zero coefficients;
/// the zero polynomial has no terms. All operations are pure.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit MultiPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly constant(const VarContext& ctx, const Rational& c) {
    MultiPoly p(ctx);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }

  static MultiPoly variable(const VarContext& ctx, std::string_view name) {
    return monomial(ctx, name, 1);
  }

  static MultiPoly monomial(const VarContext& ctx, std::string_view name, unsigned exponent,
                            const Rational& c = Rational(1)) {
    Monomial m;
    m.exps[ctx.index_of(name)] = static_cast<std::uint16_t>(exponent);
    MultiPoly p(ctx);
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Canonicalizes an arbitrary term list: merges duplicates, drops zeros, sorts.
  static MultiPoly from_terms(const VarContext& ctx, std::vector<Term> terms) {
    for (const auto& [m, c] : terms) check_arity(ctx, m);
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
      return grlex_compare(x.first, y.first) > 0;
    });
    MultiPoly p(ctx);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    return p;
  }

  const VarContext& context() const { return ctx_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  /// Constant term (zero if absent).
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Rational();
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw UsageError("MultiPoly: zero polynomial has no leading term");
    return terms_.front();
  }

  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exps[var]);
    return d;
  }
  unsigned degree(std::string_view var) const { return degree(ctx_.index_of(var)); }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& r) { return merge(p, r, false); }
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& r) { return merge(p, r, true); }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& r) {
    check_same(p, r);
    if (p.is_zero() || r.is_zero()) return MultiPoly(p.ctx_);
    if (p.size() == 1) return r.times_term(p.terms_[0]);
    if (r.size() == 1) return p.times_term(r.terms_[0]);
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
    acc.reserve(p.size() * r.size() / 2 + 16);
    mpq_class tmp;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mr, cr] : r.terms_) {
        tmp = cp.value() * cr.value();
        auto [it, fresh] = acc.try_emplace(mp * mr);
        if (fresh) {
          it->second = tmp;
        } else {
          it->second += tmp;
        }
      }
    }
    MultiPoly out(p.ctx_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (sgn(c) != 0) out.terms_.emplace_back(m, Rational(std::move(c)));
    }
    std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& x, const Term& y) {
      return grlex_compare(x.first, y.first) > 0;
    });
    return out;
  }

  friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    if (c.is_zero()) return MultiPoly(p.ctx_);
    MultiPoly r = p;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

  friend MultiPoly operator+(const MultiPoly& p, const Rational& c) { return p + constant(p.ctx_, c); }
  friend MultiPoly operator+(const Rational& c, const MultiPoly& p) { return constant(p.ctx_, c) + p; }
  friend MultiPoly operator-(const MultiPoly& p, const Rational& c) { return p - constant(p.ctx_, c); }
  friend MultiPoly operator-(const Rational& c, const MultiPoly& p) { return constant(p.ctx_, c) - p; }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(ctx_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& p, const MultiPoly& r) {
    return p.ctx_ == r.ctx_ && p.terms_ == r.terms_;
  }

  /// Total order on polynomials of one context (used to key factor tables).
  friend std::strong_ordering compare(const MultiPoly& p, const MultiPoly& r) {
    std::size_t n = std::min(p.size(), r.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = grlex_compare(p.terms_[i].first, r.terms_[i].first); c != 0) return c;
      if (auto c = p.terms_[i].second <=> r.terms_[i].second; c != 0) return c;
    }
    return p.size() <=> r.size();
  }

  /// Exact value at a point given in context order.
  Rational eval(std::span<const Rational> point) const {
    if (point.size() != ctx_.size()) throw UsageError("MultiPoly::eval: point has wrong arity");
    std::vector<std::vector<Rational>> powers(ctx_.size());
    for (std::size_t v = 0; v < ctx_.size(); ++v) {
      unsigned d = degree(v);
      powers[v].reserve(d + 1);
      powers[v].emplace_back(1);
      for (unsigned e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * point[v]);
    }
    mpq_class sum = 0;
    mpq_class term;
    for (const auto& [m, c] : terms_) {
      term = c.value();
      for (std::size_t v = 0; v < ctx_.size(); ++v) {
        if (m.exps[v] != 0) term *= powers[v][m.exps[v]].value();
      }
      sum += term;
    }
    return Rational(std::move(sum));
  }

  Rational eval(const std::map<std::string, Rational, std::less<>>& point) const {
    std::vector<Rational> pt;
    pt.reserve(ctx_.size());
    for (const auto& name : ctx_.names()) {
      auto it = point.find(name);
      if (it == point.end()) throw UsageError("MultiPoly::eval: no value for '" + name + "'");
      pt.push_back(it->second);
    }
    return eval(pt);
  }

  /// Replaces one variable by a polynomial of the same context.
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const {
    check_same(*this, value);
    std::size_t v = ctx_.index_of(var);
    std::vector<MultiPoly> powers{constant(ctx_, Rational(1))};
    for (unsigned e = 1; e <= degree(v); ++e) powers.push_back(powers.back() * value);
    // Group terms by exponent of v so each power is multiplied once.
    std::map<unsigned, std::vector<Term>> groups;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest.exps[v] = 0;
      groups[m.exps[v]].emplace_back(rest, c);
    }
    MultiPoly out(ctx_);
    for (auto& [e, ts] : groups) out += from_terms(ctx_, std::move(ts)) * powers[e];
    return out;
  }

  MultiPoly substitute(std::string_view var, const Rational& value) const {
    return substitute(var, constant(ctx_, value));
  }

  /// Canonical text: graded-lex descending terms, each `c * v1^e1*...*vm^em`
  /// (exponent 1 written bare, constant terms as just `c`), joined with
  /// " + " / " - ". The zero polynomial is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      out += mag.to_string();
      if (!m.is_one()) {
        out += " * ";
        out += monomial_string(m);
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t v = 0; v < ctx_.size(); ++v) {
      if (m.exps[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += ctx_.name(v);
      if (m.exps[v] != 1) s += "^" + std::to_string(m.exps[v]);
    }
    return s;
  }

 private:
  static void check_arity(const VarContext& ctx, const Monomial& m) {
    for (std::size_t i = ctx.size(); i < kMaxVars; ++i) {
      if (m.exps[i] != 0) throw UsageError("MultiPoly: exponent tuple exceeds context arity");
    }
  }

  static void check_same(const MultiPoly& p, const MultiPoly& r) {
    if (!(p.ctx_ == r.ctx_)) throw UsageError("MultiPoly: variable context mismatch");
  }

  MultiPoly times_term(const Term& t) const {
    MultiPoly out(ctx_);
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m * t.first, c * t.second);
    return out;  // multiplying by a monomial preserves the order
  }

  static MultiPoly merge(const MultiPoly& p, const MultiPoly& r, bool subtract) {
    check_same(p, r);
    MultiPoly out(p.ctx_);
    out.terms_.reserve(p.size() + r.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < p.size() || j < r.size()) {
      std::strong_ordering c = std::strong_ordering::equal;
      if (i == p.size()) {
        c = std::strong_ordering::less;
      } else if (j == r.size()) {
        c = std::strong_ordering::greater;
      } else {
        c = grlex_compare(p.terms_[i].first, r.terms_[j].first);
      }
      if (c > 0) {
        out.terms_.push_back(p.terms_[i++]);
      } else if (c < 0) {
        const auto& [m, coef] = r.terms_[j++];
        out.terms_.emplace_back(m, subtract ? -coef : coef);
      } else {
        Rational s = subtract ? p.terms_[i].second - r.terms_[j].second
                              : p.terms_[i].second + r.terms_[j].second;
        if (!s.is_zero()) out.terms_.emplace_back(p.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  VarContext ctx_;
  std::vector<Term> terms_;
};

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& r) { return p + r; }
inline MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& r) { return p - r; }
inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& r) { return p * r; }
inline MultiPoly poly_neg(const MultiPoly& p) { return -p; }

inline Rational poly_eval(const MultiPoly& p, const std::map<std::string, Rational, std::less<>>& point) {
  return p.eval(point);
}

}  // namespace qroot

#endif  // QROOT_CORE_MULTI_POLY_HPP

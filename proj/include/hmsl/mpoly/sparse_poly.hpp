#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/scalar.hpp"

namespace hmsl {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Graded-lex descending: higher total degree first, then lexicographically
// larger exponent vectors first.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <class T>
T embed(const T& c, const T&) {
  return c;
}

// Sparse multivariate polynomial; never stores a zero coefficient.
template <class R>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, R, GrlexDescending>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const R& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static SparsePoly variable(std::size_t nvars, std::size_t i, const R& one) {
    if (i >= nvars) throw DomainError("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    SparsePoly p(nvars);
    p.add_term(std::move(e), one);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponent e, const R& c) {
    if (e.size() != nvars_) throw DomainError("exponent length mismatch");
    if (hmsl::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
      return;
    }
    it->second += c;
    if (hmsl::is_zero(it->second)) terms_.erase(it);
  }

  std::optional<R> coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  // Leading term in graded-lex descending order.
  const std::pair<const Exponent, R>& leading() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.begin();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, hmsl::total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = hmsl::total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
      return hmsl::total_degree(t.first) == d;
    });
  }

  // The common degree of a homogeneous polynomial; throws otherwise.
  int homogeneous_degree() const {
    if (!is_homogeneous()) throw DomainError("polynomial is not homogeneous");
    return total_degree();
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_vars(b);
    SparsePoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const R& s) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  SparsePoly pow(unsigned e, const R& one) const {
    SparsePoly r = constant(nvars_, one);
    SparsePoly b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> SparsePoly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    SparsePoly<S> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // f(point), with coefficients embedded into the ring of the point.
  template <class S>
  S evaluate(std::span<const S> point) const {
    if (point.size() != nvars_) throw DomainError("evaluation point has wrong length");
    if (point.empty()) throw DomainError("evaluation needs at least one variable");
    const S& like = point.front();
    std::vector<std::vector<S>> powers = power_table(point, like);
    S acc = zero_like(like);
    for (const auto& [e, c] : terms_) {
      S term = embed(c, like);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
      }
      acc += term;
    }
    return acc;
  }
  template <class S>
  S evaluate(const std::vector<S>& point) const {
    return evaluate(std::span<const S>(point));
  }

  // f(g_0, ..., g_{n-1}) for polynomials g_i in a common ring of variables.
  template <class S>
  SparsePoly<S> substitute(const std::vector<SparsePoly<S>>& forms,
                           const S& like) const {
    if (forms.size() != nvars_) throw DomainError("substitution arity mismatch");
    const std::size_t m = forms.empty() ? 0 : forms.front().nvars();
    std::vector<std::vector<SparsePoly<S>>> powers(nvars_);
    std::vector<int> maxdeg(nvars_, 0);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    const S one = one_like(like);
    for (std::size_t i = 0; i < nvars_; ++i) {
      powers[i].push_back(SparsePoly<S>::constant(m, one));
      for (int k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * forms[i]);
    }
    SparsePoly<S> r(m);
    for (const auto& [e, c] : terms_) {
      SparsePoly<S> term = SparsePoly<S>::constant(m, embed(c, like));
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] > 0) term *= powers[i][static_cast<std::size_t>(e[i])];
      }
      r += term;
    }
    return r;
  }

  SparsePoly derivative(std::size_t i) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      d[i] -= 1;
      r.add_term(std::move(d), c * embed(Rational(e[i]), c));
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Human-readable form using the given variable names (x0, x1, ... by
  // default).
  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = c.str();
      bool neg = !cs.empty() && cs.front() == '-' && cs.find_first_of("+w", 1) == std::string::npos;
      if (!first) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      if (neg) cs = cs.substr(1);
      bool has_cs = cs.find_first_of("+-w") != std::string::npos;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.size() > i ? names[i] : "x" + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) s += cs;
      else if (cs == "1") s += mono;
      else s += (has_cs ? "(" + cs + ")" : cs) + "*" + mono;
      first = false;
    }
    return s;
  }

 private:
  void check_vars(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw DomainError("polynomial arity mismatch");
  }

  template <class S>
  std::vector<std::vector<S>> power_table(std::span<const S> point,
                                          const S& like) const {
    std::vector<int> maxdeg(nvars_, 0);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    std::vector<std::vector<S>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      powers[i].push_back(one_like(like));
      for (int k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    return powers;
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace hmsl

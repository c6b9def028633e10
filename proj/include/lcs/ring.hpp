#ifndef LCS_RING_HPP
#define LCS_RING_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcs/error.hpp"
#include "lcs/scalar.hpp"

namespace lcs {

// Variable classes, ordered T1<...<Tr < l1<...<lr < m1<...<mr < params-by-name.
enum class VarClass : std::uint8_t { T = 0, Lam = 1, Mu = 2, Param = 3 };

struct VarId {
  VarClass cls = VarClass::T;
  std::uint32_t index = 0;  // 1-based, unused for Param
  std::string name;         // Param only

  static VarId t(std::uint32_t i) { return {VarClass::T, i, {}}; }
  static VarId lam(std::uint32_t i) { return {VarClass::Lam, i, {}}; }
  static VarId mu(std::uint32_t i) { return {VarClass::Mu, i, {}}; }
  static VarId param(std::string n) { return {VarClass::Param, 0, std::move(n)}; }

  friend bool operator<(const VarId& a, const VarId& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.cls == VarClass::Param) return a.name < b.name;
    return a.index < b.index;
  }
  friend bool operator==(const VarId& a, const VarId& b) {
    return a.cls == b.cls && a.index == b.index && a.name == b.name;
  }
  friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }

  std::string to_string() const {
    switch (cls) {
      case VarClass::T: return "T" + std::to_string(index);
      case VarClass::Lam: return "l" + std::to_string(index);
      case VarClass::Mu: return "m" + std::to_string(index);
      case VarClass::Param: return name;
    }
    return "?";
  }
};

// Exponent map; no zero exponents stored.
struct Monomial {
  std::map<VarId, int> exp;

  bool is_one() const { return exp.empty(); }
  int total_degree() const {
    int d = 0;
    for (const auto& [v, e] : exp) d += e;
    return d;
  }
  int degree_of(const VarId& v) const {
    auto it = exp.find(v);
    return it == exp.end() ? 0 : it->second;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b.exp) {
      int& slot = r.exp[v];
      slot += e;
      if (slot == 0) r.exp.erase(v);
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }

  // graded lex: total degree first, then the earliest differing variable
  // (in the fixed variable order) with the larger exponent wins
  static int cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.exp.begin(), ib = b.exp.begin();
    while (ia != a.exp.end() && ib != b.exp.end()) {
      if (ia->first != ib->first) {
        // the monomial owning the earlier variable has the larger power of it
        return ia->first < ib->first ? 1 : -1;
      }
      if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
      ++ia;
      ++ib;
    }
    if (ia != a.exp.end()) return 1;
    if (ib != b.exp.end()) return -1;
    return 0;
  }
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) < 0; }
};

// Sparse multivariate polynomial over Scalar; empty term map is zero.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(Scalar c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
  }
  static Poly variable(const VarId& v, int e = 1) {
    Poly p;
    Monomial m;
    if (e != 0) m.exp[v] = e;
    p.terms_.emplace(std::move(m), Scalar(1));
    return p;
  }
  static Poly term(Monomial m, Scalar c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw error("poly: not a constant");
    return terms_.begin()->second;
  }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend Poly operator*(const Scalar& c, const Poly& a) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, c * cc);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const {
    Poly r = Poly::constant(Scalar(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  // Simultaneous substitution; unmapped variables pass through.
  Poly subst(const std::map<VarId, Poly>& map) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      Poly term = Poly::constant(c);
      Monomial passthrough;
      for (const auto& [v, e] : m.exp) {
        auto it = map.find(v);
        if (it == map.end()) {
          passthrough.exp[v] = e;
        } else {
          term = term * it->second.pow(static_cast<unsigned>(e));
        }
      }
      out = out + term * Poly::term(passthrough, Scalar(1));
    }
    return out;
  }

  // Evaluation = substitution by constants for every variable present.
  Scalar eval(const std::map<VarId, Scalar>& point) const {
    std::map<VarId, Poly> m;
    for (const auto& [v, c] : point) m.emplace(v, Poly::constant(c));
    Poly r = subst(m);
    if (!r.is_constant()) throw error("poly: evaluation left free variables");
    return r.constant_value();
  }

  bool uses_class(VarClass cls) const {
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.exp)
        if (v.cls == cls) return true;
    return false;
  }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.exp) vs.insert(v);
    return vs;
  }

  // max over monomials of the summed degree in variables accepted by pred
  template <class Pred>
  int max_degree_in(Pred pred) const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
      int d = 0;
      for (const auto& [v, e] : m.exp)
        if (pred(v)) d += e;
      if (d > best) best = d;
    }
    return best;
  }

  // the sub-polynomial of monomials accepted by pred
  template <class Pred>
  Poly filter(Pred pred) const {
    Poly r;
    for (const auto& [m, c] : terms_)
      if (pred(m)) r.terms_.emplace(m, c);
    return r;
  }

  // Splits off the coefficient of v^1 and the v-free remainder; requires
  // degree <= 1 in v.
  void split_linear(const VarId& v, Poly& coeff_out, Poly& rest_out) const {
    coeff_out = Poly();
    rest_out = Poly();
    for (const auto& [m, c] : terms_) {
      int d = m.degree_of(v);
      if (d == 0) {
        rest_out.terms_.emplace(m, c);
      } else if (d == 1) {
        Monomial stripped = m;
        stripped.exp.erase(v);
        coeff_out.add_term(stripped, c);
      } else {
        throw error("poly: degree > 1 in " + v.to_string());
      }
    }
  }

  // deterministic total order (leading terms compared first)
  static int cmp(const Poly& a, const Poly& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
      int c = Monomial::cmp(ia->first, ib->first);
      if (c != 0) return c;
      if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
  }

  // Descending graded-lex; unit coefficients elided except on the constant
  // term; factors inside a term in ascending variable order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Monomial& m = it->first;
      const Scalar& c = it->second;
      Scalar a = c.is_negative() ? -c : c;
      if (it == terms_.rbegin()) {
        if (c.is_negative()) out += "-";
      } else {
        out += c.is_negative() ? "-" : "+";
      }
      if (m.is_one()) {
        out += a.to_string();
        continue;
      }
      bool first_factor = true;
      if (!a.is_one()) {
        out += a.to_string();
        first_factor = false;
      }
      for (const auto& [v, e] : m.exp) {
        if (!first_factor) out += "*";
        out += v.to_string();
        if (e > 1) out += "^" + std::to_string(e);
        first_factor = false;
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

inline Poly operator*(const Poly& a, const Scalar& c) { return c * a; }

}  // namespace lcs

#endif

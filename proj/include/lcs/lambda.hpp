#ifndef LCS_LAMBDA_HPP
#define LCS_LAMBDA_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcs/error.hpp"
#include "lcs/freemod.hpp"
#include "lcs/ring.hpp"

namespace lcs {

// Table of lambda-products on generator pairs; absent pairs are zero.
// Entries of finite (T/lambda-free) structures live in the same type.
class ProductTable {
 public:
  ProductTable() = default;
  ProductTable(SigPtr sig, VarClass family = VarClass::Lam)
      : sig_(std::move(sig)), family_(family), zero_(ModValue::zero(sig_)) {
    if (family_ != VarClass::Lam && family_ != VarClass::Mu)
      throw error("table: family must be a lambda class");
  }

  const SigPtr& signature() const { return sig_; }
  VarClass family() const { return family_; }
  const std::map<std::pair<std::string, std::string>, ModValue>& entries() const {
    return entries_;
  }

  const ModValue& entry(const std::string& a, const std::string& b) const {
    auto it = entries_.find({a, b});
    return it != entries_.end() ? it->second : zero_;
  }

  void set_entry(const std::string& a, const std::string& b, ModValue v) {
    if (sig_->gen_index(a) < 0 || sig_->gen_index(b) < 0)
      throw error("table: unknown generator in pair (" + a + ", " + b + ")");
    check_entry_value(a, b, v);
    if (v.is_zero()) {
      entries_.erase({a, b});
    } else {
      entries_.insert_or_assign({a, b}, std::move(v));
    }
  }

  bool has_const_entries() const {
    for (const auto& [k, v] : entries_)
      for (const auto& [g, p] : v.components())
        if (p.uses_class(VarClass::T) || p.uses_class(VarClass::Lam) || p.uses_class(VarClass::Mu))
          return false;
    return true;
  }

  ProductTable scaled(const Scalar& c) const {
    ProductTable r(sig_, family_);
    for (const auto& [k, v] : entries_) r.set_entry(k.first, k.second, c * v);
    return r;
  }

 private:
  SigPtr sig_;
  VarClass family_ = VarClass::Lam;
  std::map<std::pair<std::string, std::string>, ModValue> entries_;
  ModValue zero_;

  void check_entry_value(const std::string& a, const std::string& b, const ModValue& v) const {
    ParityClass pc = v.parity_class();
    if (pc == ParityClass::Mixed)
      throw error("table: entry (" + a + ", " + b + ") is parity-inhomogeneous");
    if (pc != ParityClass::Zero) {
      Parity expect = sig_->parity_of(a) + sig_->parity_of(b);
      Parity got = pc == ParityClass::Even ? Parity::Even : Parity::Odd;
      if (expect != got)
        throw error("table: entry (" + a + ", " + b + ") has parity inconsistent with " + a +
                    ", " + b);
    }
    VarClass other = family_ == VarClass::Lam ? VarClass::Mu : VarClass::Lam;
    for (const auto& [g, p] : v.components()) {
      if (p.uses_class(other))
        throw error("table: entry (" + a + ", " + b + ") uses a foreign lambda family");
      for (const auto& var : p.variables()) {
        if (var.cls == VarClass::Param && !sig_->has_param(var.name))
          throw error("table: entry (" + a + ", " + b + ") references undeclared parameter '" +
                      var.name + "'");
        if (var.cls != VarClass::Param && var.index > sig_->rank)
          throw error("table: entry (" + a + ", " + b + ") variable " + var.to_string() +
                      " exceeds rank");
      }
    }
  }
};

// Formal evaluation points nu for the lambda-product, one polynomial per
// coordinate. The named points cover every shift the axioms use.
enum class FormalPoint {
  Lam,            // nu_i = l_i
  Mu,             // nu_i = m_i
  LamPlusMu,      // nu_i = l_i + m_i
  MinusLamT,      // nu_i = -l_i - T_i
  MinusMuT,       // nu_i = -m_i - T_i
  MinusLamMuT,    // nu_i = -l_i - m_i - T_i
};

inline std::vector<Poly> formal_point(std::uint32_t rank, FormalPoint p) {
  std::vector<Poly> nu;
  nu.reserve(rank);
  for (std::uint32_t i = 1; i <= rank; ++i) {
    Poly li = Poly::variable(VarId::lam(i));
    Poly mi = Poly::variable(VarId::mu(i));
    Poly ti = Poly::variable(VarId::t(i));
    switch (p) {
      case FormalPoint::Lam: nu.push_back(li); break;
      case FormalPoint::Mu: nu.push_back(mi); break;
      case FormalPoint::LamPlusMu: nu.push_back(li + mi); break;
      case FormalPoint::MinusLamT: nu.push_back(-(li + ti)); break;
      case FormalPoint::MinusMuT: nu.push_back(-(mi + ti)); break;
      case FormalPoint::MinusLamMuT: nu.push_back(-(li + mi + ti)); break;
    }
  }
  return nu;
}

// Evaluates the product x_nu y for module values x, y. Writing x = sum f_a a
// and y = sum g_b b, the sesquilinearity rules give
//   x_nu y = sum f_a(T -> -nu) g_b(T -> T+nu) entry(a,b)(family -> nu).
// All other variables in the coefficients pass through as scalars.
inline ModValue apply_at(const ProductTable& tab, const ModValue& x, const ModValue& y,
                         const std::vector<Poly>& nu) {
  const SigPtr& sig = tab.signature();
  if (nu.size() != sig->rank) throw error("apply_at: nu has wrong length");
  for (const ModValue* v : {&x, &y})
    if (v->signature() && v->signature() != sig && !(*v->signature() == *sig))
      throw error("apply_at: signature mismatch");

  std::map<VarId, Poly> left_subst, right_subst, entry_subst;
  for (std::uint32_t i = 1; i <= sig->rank; ++i) {
    left_subst.emplace(VarId::t(i), -nu[i - 1]);
    right_subst.emplace(VarId::t(i), Poly::variable(VarId::t(i)) + nu[i - 1]);
    entry_subst.emplace(VarId{tab.family(), i, {}}, nu[i - 1]);
  }

  ModValue result = ModValue::zero(sig);
  for (const auto& [ga, fa] : x.components()) {
    Poly fa_shifted = fa.subst(left_subst);
    if (fa_shifted.is_zero()) continue;
    for (const auto& [gb, gb_coeff] : y.components()) {
      const ModValue& e = tab.entry(ga, gb);
      if (e.is_zero()) continue;
      Poly gb_shifted = gb_coeff.subst(right_subst);
      if (gb_shifted.is_zero()) continue;
      Poly scale = fa_shifted * gb_shifted;
      result = result + scale * e.map_components(entry_subst);
    }
  }
  return result;
}

inline ModValue apply_at(const ProductTable& tab, const ModValue& x, const ModValue& y,
                         FormalPoint p) {
  return apply_at(tab, x, y, formal_point(tab.signature()->rank, p));
}

// Sesquilinear extension of the table to module elements with T-only
// coefficients, evaluated at the table's own formal family.
inline ModValue extend_bilinear(const ProductTable& tab, const ModValue& x, const ModValue& y) {
  VarClass fam = tab.family();
  for (const ModValue* v : {&x, &y})
    for (const auto& [g, p] : v->components()) {
      if (p.uses_class(fam))
        throw error("extend_bilinear: argument already involves the table's lambda family");
      if (p.uses_class(fam == VarClass::Lam ? VarClass::Mu : VarClass::Lam))
        throw error("extend_bilinear: argument coefficients must be T-only");
    }
  return apply_at(tab, x, y,
                  fam == VarClass::Lam ? FormalPoint::Lam : FormalPoint::Mu);
}

// The substitution lambda_i -> -lambda_i - T_i in the named family; T acts by
// ordinary multiplication on the module coefficients, so this is a plain
// polynomial substitution componentwise. An involution.
inline ModValue subst_minus_lambda_T(const ModValue& v, VarClass family) {
  if (family != VarClass::Lam && family != VarClass::Mu)
    throw error("subst_minus_lambda_T: family must be a lambda class");
  if (!v.signature()) return v;
  std::map<VarId, Poly> subst;
  for (std::uint32_t i = 1; i <= v.signature()->rank; ++i)
    subst.emplace(VarId{family, i, {}},
                  -(Poly::variable({family, i, {}}) + Poly::variable(VarId::t(i))));
  return v.map_components(subst);
}

// Left-slot application at a shifted formal variable, e.g. the middle Jacobi
// term [[a_l b]_{l+m} c].
inline ModValue outer_apply(const ProductTable& tab, const ModValue& v, FormalPoint at,
                            const ModValue& c) {
  if (at != FormalPoint::Lam && at != FormalPoint::Mu && at != FormalPoint::LamPlusMu)
    throw error("outer_apply: evaluation point must be l, m or l+m");
  return apply_at(tab, v, c, at);
}

// Divided-power coefficient a_(m)b = m! * (coefficient of family^m).
inline ModValue coeff_extract(const ModValue& v, VarClass family,
                              const std::vector<unsigned>& m) {
  if (!v.signature()) return v;
  const SigPtr& sig = v.signature();
  if (m.size() != sig->rank) throw error("coeff_extract: index vector has wrong length");

  Scalar mfact(1);
  for (unsigned mi : m) mfact = mfact * Scalar::factorial(mi);

  ModValue out = ModValue::zero(sig);
  for (const auto& [g, p] : v.components()) {
    Poly picked;
    for (const auto& [mono, coeff] : p.terms()) {
      std::vector<unsigned> fam(sig->rank, 0);
      Monomial stripped;
      for (const auto& [var, e] : mono.exp) {
        if (var.cls == family) {
          fam[var.index - 1] = static_cast<unsigned>(e);
        } else {
          stripped.exp[var] = e;
        }
      }
      if (fam == m) picked.add_term(stripped, coeff);
    }
    out.add_component(g, mfact * picked);
  }
  return out;
}

// All family-exponent vectors present in v (the support of the expansion).
inline std::set<std::vector<unsigned>> family_support(const ModValue& v, VarClass family) {
  std::set<std::vector<unsigned>> out;
  if (!v.signature()) return out;
  std::uint32_t rank = v.signature()->rank;
  for (const auto& [g, p] : v.components())
    for (const auto& [mono, c] : p.terms()) {
      std::vector<unsigned> key(rank, 0);
      for (const auto& [var, e] : mono.exp)
        if (var.cls == family) key[var.index - 1] = static_cast<unsigned>(e);
      out.insert(std::move(key));
    }
  return out;
}

}  // namespace lcs

#endif

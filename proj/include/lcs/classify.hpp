#ifndef LCS_CLASSIFY_HPP
#define LCS_CLASSIFY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lcs/axioms.hpp"
#include "lcs/structure.hpp"

namespace lcs {

// Primitive integer coefficients, positive leading coefficient.
inline Poly normalize_constraint(const Poly& p) {
  if (p.is_zero()) return p;
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : p.terms()) {
    num_gcd = BigInt::gcd(num_gcd, c.num());
    den_lcm = den_lcm / BigInt::gcd(den_lcm, c.den()) * c.den();
  }
  Scalar factor(den_lcm, num_gcd);
  Poly out = factor * p;
  // leading coefficient = coefficient of the largest monomial
  if (out.terms().rbegin()->second.is_negative()) out = -out;
  return out;
}

// Normalized, deduplicated, sorted list of parameter polynomials; a point
// satisfies the set iff every polynomial vanishes there.
struct ConstraintSet {
  std::vector<Poly> polys;

  bool satisfied_at(const std::map<VarId, Scalar>& point) const {
    for (const auto& p : polys)
      if (!p.eval(point).is_zero()) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& p : polys) out += p.to_string() + "\n";
    return out;
  }
};

inline ConstraintSet normalize_set(std::vector<Poly> polys) {
  std::vector<Poly> out;
  for (auto& p : polys) {
    Poly q = normalize_constraint(p);
    if (q.is_zero()) continue;
    bool dup = false;
    for (const auto& r : out)
      if (r == q) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return Poly::cmp(a, b) < 0;
  });
  return {std::move(out)};
}

enum class ConstraintSuite {
  GdCompatOnly,      // the bracket/product compatibility identity alone
  NovikovSuper,      // the two Novikov identities on the unknown table
  GeneralizedGdPair  // the mixed identities across product_i pairs
};

inline ConstraintSuite constraint_suite_from_name(const std::string& s) {
  if (s == "gd-compat" || s == "xx1") return ConstraintSuite::GdCompatOnly;
  if (s == "novikov-super") return ConstraintSuite::NovikovSuper;
  if (s == "generalized-gd-pair") return ConstraintSuite::GeneralizedGdPair;
  throw error("unknown constraint suite '" + s + "'");
}

// Collects every generator-component coefficient of every residual of the
// chosen suite into a normalized constraint set. Tables must be constant;
// unknowns are the declared parameters.
inline ConstraintSet symbolic_constraints(const Structure& s, const std::string& unknown_role,
                                          ConstraintSuite suite) {
  const ProductTable& unknown = s.table(unknown_role);
  if (!unknown.has_const_entries())
    throw error("constraints: table '" + unknown_role + "' is not a symbolic (constant) table");

  CheckReport rep{"constraints", {}};
  switch (suite) {
    case ConstraintSuite::GdCompatOnly:
      detail::require_finite(s.table("bracket"), "bracket");
      detail::finite_gd_compat_axiom(rep, s.table("bracket"), unknown, "gd-compat");
      break;
    case ConstraintSuite::NovikovSuper:
      detail::finite_novikov_axioms(rep, unknown, "");
      break;
    case ConstraintSuite::GeneralizedGdPair: {
      std::uint32_t r = s.sig->rank;
      if (r < 2) throw error("constraints: generalized-gd-pair needs rank >= 2");
      for (std::uint32_t i = 1; i <= r; ++i)
        for (std::uint32_t j = 1; j <= r; ++j) {
          if (i == j) continue;
          const ProductTable& oi = s.table("product_" + std::to_string(i));
          const ProductTable& oj = s.table("product_" + std::to_string(j));
          std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
          detail::finite_mixed_symmetry_axiom(rep, oi, oj, "mixed-symmetry" + ij);
          detail::finite_mixed_commutativity_axiom(rep, oi, oj, "mixed-commutativity" + ij);
        }
      break;
    }
  }

  std::vector<Poly> polys;
  for (const auto& f : rep.findings)
    for (const auto& [g, p] : f.residual.components()) polys.push_back(p);
  return normalize_set(std::move(polys));
}

// One classification case: a substitution of some parameters by polynomials
// in the remaining ones.
struct FamilyCase {
  std::string label;
  std::map<std::string, Poly> subst;
};

struct FamilyReport {
  struct CaseResult {
    std::string label;
    std::vector<Poly> failed;  // constraints not annihilated by the case
  };
  std::vector<CaseResult> cases;

  bool pass() const {
    for (const auto& c : cases)
      if (!c.failed.empty()) return false;
    return true;
  }
};

inline FamilyReport verify_family(const ConstraintSet& constraints,
                                  const std::vector<FamilyCase>& cases) {
  FamilyReport rep;
  for (const auto& fc : cases) {
    std::map<VarId, Poly> sub;
    for (const auto& [name, val] : fc.subst) {
      for (const auto& var : val.variables())
        if (var.cls == VarClass::Param && fc.subst.count(var.name))
          throw error("verify-family: case '" + fc.label + "' leaves '" + var.name +
                      "' both free and bound");
      sub.emplace(VarId::param(name), val);
    }
    FamilyReport::CaseResult res{fc.label, {}};
    for (const auto& p : constraints.polys)
      if (!p.subst(sub).is_zero()) res.failed.push_back(p);
    rep.cases.push_back(std::move(res));
  }
  return rep;
}

// Test helper for comparing constraint sets: identical zero/nonzero verdict
// at a sample point.
inline bool sets_agree_at(const ConstraintSet& a, const ConstraintSet& b,
                          const std::map<VarId, Scalar>& point) {
  bool za = true, zb = true;
  for (const auto& p : a.polys)
    if (!p.eval(point).is_zero()) {
      za = false;
      break;
    }
  for (const auto& p : b.polys)
    if (!p.eval(point).is_zero()) {
      zb = false;
      break;
    }
  return za == zb;
}

}  // namespace lcs

#endif

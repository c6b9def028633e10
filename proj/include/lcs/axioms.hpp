#ifndef LCS_AXIOMS_HPP
#define LCS_AXIOMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "lcs/lambda.hpp"
#include "lcs/structure.hpp"

namespace lcs {

// One nonzero axiom residual on one generator tuple.
struct Finding {
  std::string axiom;
  std::vector<std::string> tuple;
  ModValue residual;
};

struct CheckReport {
  std::string suite;
  std::vector<Finding> findings;

  bool pass() const { return findings.empty(); }
  void note(const std::string& axiom, std::vector<std::string> tuple, ModValue residual) {
    if (!residual.is_zero()) findings.push_back({axiom, std::move(tuple), std::move(residual)});
  }
  void absorb(const CheckReport& sub, const std::string& prefix) {
    for (const auto& f : sub.findings)
      findings.push_back({prefix + f.axiom, f.tuple, f.residual});
  }
};

namespace detail {

inline void require_homogeneous(const ProductTable& tab) {
  for (const auto& [pair, v] : tab.entries())
    if (v.parity_class() == ParityClass::Mixed)
      throw error("table entry (" + pair.first + ", " + pair.second + ") is parity-inhomogeneous");
}

inline void for_pairs(const SigPtr& sig,
                      const std::function<void(const Generator&, const Generator&)>& fn) {
  for (const auto& a : sig->generators)
    for (const auto& b : sig->generators) fn(a, b);
}

inline void for_triples(
    const SigPtr& sig,
    const std::function<void(const Generator&, const Generator&, const Generator&)>& fn) {
  for (const auto& a : sig->generators)
    for (const auto& b : sig->generators)
      for (const auto& c : sig->generators) fn(a, b, c);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Conformal suites. Residuals are computed on generator tuples only;
// sesquilinearity extends every identity to the whole module.
// ---------------------------------------------------------------------------

// [a_l b] + (-1)^{ab} [b_{-l-T} a]
inline CheckReport check_skew(const ProductTable& bracket) {
  detail::require_homogeneous(bracket);
  CheckReport rep{"skew", {}};
  detail::for_pairs(bracket.signature(), [&](const Generator& a, const Generator& b) {
    ModValue res = bracket.entry(a.name, b.name) +
                   parity_sign(a.parity, b.parity) *
                       subst_minus_lambda_T(bracket.entry(b.name, a.name), bracket.family());
    rep.note("skew", {a.name, b.name}, std::move(res));
  });
  return rep;
}

// [a_l [b_m c]] - [[a_l b]_{l+m} c] - (-1)^{ab} [b_m [a_l c]]
inline CheckReport check_jacobi(const ProductTable& bracket) {
  detail::require_homogeneous(bracket);
  CheckReport rep{"jacobi", {}};
  detail::for_triples(bracket.signature(), [&](const Generator& a, const Generator& b,
                                               const Generator& c) {
    ModValue bc = apply_at(bracket, ModValue::gen(bracket.signature(), b.name),
                           ModValue::gen(bracket.signature(), c.name), FormalPoint::Mu);
    ModValue ab = bracket.entry(a.name, b.name);
    ModValue ac = bracket.entry(a.name, c.name);
    ModValue lhs = apply_at(bracket, ModValue::gen(bracket.signature(), a.name), bc,
                            FormalPoint::Lam);
    ModValue mid = apply_at(bracket, ab, ModValue::gen(bracket.signature(), c.name),
                            FormalPoint::LamPlusMu);
    ModValue last = apply_at(bracket, ModValue::gen(bracket.signature(), b.name), ac,
                             FormalPoint::Mu);
    rep.note("jacobi", {a.name, b.name, c.name},
             lhs - mid - parity_sign(a.parity, b.parity) * last);
  });
  return rep;
}

enum class Side { Left, Right };

// Left:  (a_l b)_{l+m} c - a_l (b_m c) = (-1)^{ab} ((b_m a)_{l+m} c - b_m (a_l c))
//        (a_l b)_{l+m} c = (-1)^{bc} (a_l c)_{-m-T} b
// Right: a_l (b_m c) - (a_l b)_{l+m} c = (-1)^{bc} (a_l (c_{-m-T} b) - (a_l c)_{-m-T} b)
//        a_l (b_m c) = (-1)^{ab} b_m (a_l c)
inline CheckReport check_novikov_conformal(const ProductTable& product, Side side) {
  detail::require_homogeneous(product);
  CheckReport rep{side == Side::Left ? "novikov-conformal-left" : "novikov-conformal-right", {}};
  const SigPtr& sig = product.signature();
  detail::for_triples(sig, [&](const Generator& a, const Generator& b, const Generator& c) {
    auto gen = [&](const Generator& g) { return ModValue::gen(sig, g.name); };
    ModValue a_bc = apply_at(product, gen(a), apply_at(product, gen(b), gen(c), FormalPoint::Mu),
                             FormalPoint::Lam);
    ModValue ab_c = apply_at(product, apply_at(product, gen(a), gen(b), FormalPoint::Lam), gen(c),
                             FormalPoint::LamPlusMu);
    ModValue ac = apply_at(product, gen(a), gen(c), FormalPoint::Lam);
    ModValue ac_b = apply_at(product, ac, gen(b), FormalPoint::MinusMuT);
    Scalar s_ab = parity_sign(a.parity, b.parity);
    Scalar s_bc = parity_sign(b.parity, c.parity);
    if (side == Side::Left) {
      ModValue ba_c = apply_at(product, apply_at(product, gen(b), gen(a), FormalPoint::Mu), gen(c),
                               FormalPoint::LamPlusMu);
      ModValue b_ac = apply_at(product, gen(b), ac, FormalPoint::Mu);
      rep.note("left-symmetry", {a.name, b.name, c.name},
               ab_c - a_bc - s_ab * (ba_c - b_ac));
      rep.note("right-commutativity", {a.name, b.name, c.name}, ab_c - s_bc * ac_b);
    } else {
      ModValue a_cb = apply_at(product, gen(a),
                               apply_at(product, gen(c), gen(b), FormalPoint::MinusMuT),
                               FormalPoint::Lam);
      ModValue b_ac = apply_at(product, gen(b), ac, FormalPoint::Mu);
      rep.note("right-symmetry", {a.name, b.name, c.name},
               a_bc - ab_c - s_bc * (a_cb - ac_b));
      rep.note("left-commutativity", {a.name, b.name, c.name}, a_bc - s_ab * b_ac);
    }
  });
  return rep;
}

// Gel'fand-Dorfman conformal compatibility, the five-term identity
//   [(a_{-m-T} b)_{-l-T} c] + [a_{-m-T} b]_{-l-T} c - a_{-l-m-T} [b_{-l-T} c]
//   - (-1)^{bc} [(a_{-l-T} c)_{-m-T} b] - (-1)^{bc} [a_{-l-T} c]_{-m-T} b = 0,
// plus the prerequisite suites for the bracket and the product.
inline CheckReport check_gd_conformal(const ProductTable& bracket, const ProductTable& product) {
  if (!(*bracket.signature() == *product.signature()))
    throw error("gd-conformal: tables have different signatures");
  detail::require_homogeneous(bracket);
  detail::require_homogeneous(product);
  CheckReport rep{"gd-conformal", {}};
  rep.absorb(check_skew(bracket), "lie.");
  rep.absorb(check_jacobi(bracket), "lie.");
  rep.absorb(check_novikov_conformal(product, Side::Left), "novikov.");

  const SigPtr& sig = bracket.signature();
  detail::for_triples(sig, [&](const Generator& a, const Generator& b, const Generator& c) {
    auto gen = [&](const Generator& g) { return ModValue::gen(sig, g.name); };
    ModValue t1 = apply_at(bracket, apply_at(product, gen(a), gen(b), FormalPoint::MinusMuT),
                           gen(c), FormalPoint::MinusLamT);
    ModValue t2 = apply_at(product, apply_at(bracket, gen(a), gen(b), FormalPoint::MinusMuT),
                           gen(c), FormalPoint::MinusLamT);
    ModValue t3 = apply_at(product, gen(a),
                           apply_at(bracket, gen(b), gen(c), FormalPoint::MinusLamT),
                           FormalPoint::MinusLamMuT);
    ModValue t4 = apply_at(bracket, apply_at(product, gen(a), gen(c), FormalPoint::MinusLamT),
                           gen(b), FormalPoint::MinusMuT);
    ModValue t5 = apply_at(product, apply_at(bracket, gen(a), gen(c), FormalPoint::MinusLamT),
                           gen(b), FormalPoint::MinusMuT);
    Scalar s_bc = parity_sign(b.parity, c.parity);
    rep.note("gd-compat", {a.name, b.name, c.name}, t1 + t2 - t3 - s_bc * (t4 + t5));
  });
  return rep;
}

// Entry shape for an i-linear bracket: total degree <= 1 in {T_i, l_i}.
inline CheckReport check_ilinear_shape(const ProductTable& bracket, std::uint32_t i) {
  const SigPtr& sig = bracket.signature();
  if (i < 1 || i > sig->rank) throw error("ilinear-shape: index out of range");
  CheckReport rep{"ilinear-shape(" + std::to_string(i) + ")", {}};
  VarId ti = VarId::t(i), li = VarId::lam(i);
  detail::for_pairs(sig, [&](const Generator& a, const Generator& b) {
    const ModValue& v = bracket.entry(a.name, b.name);
    ModValue bad = ModValue::zero(sig);
    for (const auto& [g, p] : v.components())
      bad.add_component(g, p.filter([&](const Monomial& m) {
        return m.degree_of(ti) + m.degree_of(li) > 1;
      }));
    rep.note(rep.suite, {a.name, b.name}, std::move(bad));
  });
  return rep;
}

// Linear shape: total degree <= 1 jointly in all T's and lambdas.
inline CheckReport check_linear_shape(const ProductTable& bracket) {
  CheckReport rep{"linear-shape", {}};
  detail::for_pairs(bracket.signature(), [&](const Generator& a, const Generator& b) {
    const ModValue& v = bracket.entry(a.name, b.name);
    ModValue bad = ModValue::zero(bracket.signature());
    for (const auto& [g, p] : v.components())
      bad.add_component(g, p.filter([&](const Monomial& m) {
        int d = 0;
        for (const auto& [var, e] : m.exp)
          if (var.cls == VarClass::T || var.cls == VarClass::Lam) d += e;
        return d > 1;
      }));
    rep.note("linear-shape", {a.name, b.name}, std::move(bad));
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Finite suites (constant tables).
// ---------------------------------------------------------------------------

// Bilinear composition for constant tables.
inline ModValue finite_compose(const ProductTable& tab, const ModValue& x, const ModValue& y) {
  std::vector<Poly> nu(tab.signature()->rank, Poly::zero());
  return apply_at(tab, x, y, nu);
}

namespace detail {

inline void require_finite(const ProductTable& tab, const std::string& role) {
  require_homogeneous(tab);
  if (!tab.has_const_entries())
    throw error("finite table '" + role + "' has non-constant entries");
}

struct FiniteOps {
  const SigPtr& sig;
  ModValue gen(const Generator& g) const { return ModValue::gen(sig, g.name); }
  ModValue op(const ProductTable& t, const ModValue& x, const ModValue& y) const {
    return finite_compose(t, x, y);
  }
};

inline void finite_lie_axioms(CheckReport& rep, const ProductTable& bk, const std::string& prefix) {
  FiniteOps ops{bk.signature()};
  for_pairs(bk.signature(), [&](const Generator& a, const Generator& b) {
    rep.note(prefix + "skew", {a.name, b.name},
             bk.entry(a.name, b.name) +
                 parity_sign(a.parity, b.parity) * bk.entry(b.name, a.name));
  });
  for_triples(bk.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    ModValue res = ops.op(bk, ops.gen(a), ops.op(bk, ops.gen(b), ops.gen(c))) -
                   ops.op(bk, ops.op(bk, ops.gen(a), ops.gen(b)), ops.gen(c)) -
                   parity_sign(a.parity, b.parity) *
                       ops.op(bk, ops.gen(b), ops.op(bk, ops.gen(a), ops.gen(c)));
    rep.note(prefix + "jacobi", {a.name, b.name, c.name}, std::move(res));
  });
}

inline void finite_novikov_axioms(CheckReport& rep, const ProductTable& pr,
                                  const std::string& prefix) {
  FiniteOps ops{pr.signature()};
  for_triples(pr.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    ModValue ab_c = ops.op(pr, ops.op(pr, ops.gen(a), ops.gen(b)), ops.gen(c));
    ModValue ac_b = ops.op(pr, ops.op(pr, ops.gen(a), ops.gen(c)), ops.gen(b));
    rep.note(prefix + "right-commutativity", {a.name, b.name, c.name},
             ab_c - parity_sign(b.parity, c.parity) * ac_b);
    ModValue a_bc = ops.op(pr, ops.gen(a), ops.op(pr, ops.gen(b), ops.gen(c)));
    ModValue ba_c = ops.op(pr, ops.op(pr, ops.gen(b), ops.gen(a)), ops.gen(c));
    ModValue b_ac = ops.op(pr, ops.gen(b), ops.op(pr, ops.gen(a), ops.gen(c)));
    rep.note(prefix + "left-symmetry", {a.name, b.name, c.name},
             ab_c - a_bc - parity_sign(a.parity, b.parity) * (ba_c - b_ac));
  });
}

inline void finite_comm_assoc_axioms(CheckReport& rep, const ProductTable& mu,
                                     const std::string& prefix) {
  FiniteOps ops{mu.signature()};
  for_pairs(mu.signature(), [&](const Generator& a, const Generator& b) {
    rep.note(prefix + "commutativity", {a.name, b.name},
             mu.entry(a.name, b.name) -
                 parity_sign(a.parity, b.parity) * mu.entry(b.name, a.name));
  });
  for_triples(mu.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    rep.note(prefix + "associativity", {a.name, b.name, c.name},
             ops.op(mu, ops.op(mu, ops.gen(a), ops.gen(b)), ops.gen(c)) -
                 ops.op(mu, ops.gen(a), ops.op(mu, ops.gen(b), ops.gen(c))));
  });
}

// [a o b, c] + [a,b] o c - a o [b,c] - (-1)^{bc} [a o c, b] - (-1)^{bc} [a,c] o b
inline void finite_gd_compat_axiom(CheckReport& rep, const ProductTable& bk,
                                   const ProductTable& pr, const std::string& axiom) {
  FiniteOps ops{bk.signature()};
  for_triples(bk.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    Scalar s_bc = parity_sign(b.parity, c.parity);
    ModValue res = ops.op(bk, ops.op(pr, ops.gen(a), ops.gen(b)), ops.gen(c)) +
                   ops.op(pr, bk.entry(a.name, b.name), ops.gen(c)) -
                   ops.op(pr, ops.gen(a), bk.entry(b.name, c.name)) -
                   s_bc * ops.op(bk, ops.op(pr, ops.gen(a), ops.gen(c)), ops.gen(b)) -
                   s_bc * ops.op(pr, bk.entry(a.name, c.name), ops.gen(b));
    rep.note(axiom, {a.name, b.name, c.name}, std::move(res));
  });
}

inline void finite_np_axioms(CheckReport& rep, const ProductTable& pr, const ProductTable& mu,
                             const std::string& prefix) {
  FiniteOps ops{pr.signature()};
  for_triples(pr.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    ModValue lhs = ops.op(mu, ops.op(pr, ops.gen(a), ops.gen(b)), ops.gen(c)) -
                   ops.op(pr, ops.gen(a), ops.op(mu, ops.gen(b), ops.gen(c)));
    ModValue rhs = ops.op(mu, ops.op(pr, ops.gen(b), ops.gen(a)), ops.gen(c)) -
                   ops.op(pr, ops.gen(b), ops.op(mu, ops.gen(a), ops.gen(c)));
    rep.note(prefix + "np-compat-1", {a.name, b.name, c.name},
             lhs - parity_sign(a.parity, b.parity) * rhs);
    rep.note(prefix + "np-compat-2", {a.name, b.name, c.name},
             ops.op(pr, ops.op(mu, ops.gen(a), ops.gen(b)), ops.gen(c)) -
                 ops.op(mu, ops.gen(a), ops.op(pr, ops.gen(b), ops.gen(c))));
  });
}

// [a, b.c] - [a,b].c - (-1)^{ab} b.[a,c]
inline void finite_leibniz_axiom(CheckReport& rep, const ProductTable& bk, const ProductTable& mu,
                                 const std::string& axiom) {
  FiniteOps ops{bk.signature()};
  for_triples(bk.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    ModValue res = ops.op(bk, ops.gen(a), ops.op(mu, ops.gen(b), ops.gen(c))) -
                   ops.op(mu, bk.entry(a.name, b.name), ops.gen(c)) -
                   parity_sign(a.parity, b.parity) *
                       ops.op(mu, ops.gen(b), bk.entry(a.name, c.name));
    rep.note(axiom, {a.name, b.name, c.name}, std::move(res));
  });
}

// a o_i (b o_j c) - (a o_i b) o_j c = (-1)^{ab} [b o_j (a o_i c) - (b o_j a) o_i c]
inline void finite_mixed_symmetry_axiom(CheckReport& rep, const ProductTable& oi, const ProductTable& oj,
                            const std::string& axiom) {
  FiniteOps ops{oi.signature()};
  for_triples(oi.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    ModValue lhs = ops.op(oi, ops.gen(a), ops.op(oj, ops.gen(b), ops.gen(c))) -
                   ops.op(oj, ops.op(oi, ops.gen(a), ops.gen(b)), ops.gen(c));
    ModValue rhs = ops.op(oj, ops.gen(b), ops.op(oi, ops.gen(a), ops.gen(c))) -
                   ops.op(oi, ops.op(oj, ops.gen(b), ops.gen(a)), ops.gen(c));
    rep.note(axiom, {a.name, b.name, c.name},
             lhs - parity_sign(a.parity, b.parity) * rhs);
  });
}

// (c o_i a) o_j b + (c o_j a) o_i b = (-1)^{ab} [(c o_i b) o_j a + (c o_j b) o_i a]
inline void finite_mixed_commutativity_axiom(CheckReport& rep, const ProductTable& oi, const ProductTable& oj,
                            const std::string& axiom) {
  FiniteOps ops{oi.signature()};
  for_triples(oi.signature(), [&](const Generator& a, const Generator& b, const Generator& c) {
    ModValue lhs = ops.op(oj, ops.op(oi, ops.gen(c), ops.gen(a)), ops.gen(b)) +
                   ops.op(oi, ops.op(oj, ops.gen(c), ops.gen(a)), ops.gen(b));
    ModValue rhs = ops.op(oj, ops.op(oi, ops.gen(c), ops.gen(b)), ops.gen(a)) +
                   ops.op(oi, ops.op(oj, ops.gen(c), ops.gen(b)), ops.gen(a));
    rep.note(axiom, {a.name, b.name, c.name},
             lhs - parity_sign(a.parity, b.parity) * rhs);
  });
}

}  // namespace detail

// Runs the finite axiom suite determined by the structure's kind.
inline CheckReport check_finite(const Structure& s) {
  CheckReport rep{kind_name(s.kind), {}};
  auto tab = [&](const char* role) -> const ProductTable& {
    const ProductTable& t = s.table(role);
    detail::require_finite(t, role);
    return t;
  };
  switch (s.kind) {
    case Kind::LieSuper:
      detail::finite_lie_axioms(rep, tab("bracket"), "");
      break;
    case Kind::NovikovSuper:
      detail::finite_novikov_axioms(rep, tab("product"), "");
      break;
    case Kind::CommAssocSuper:
      detail::finite_comm_assoc_axioms(rep, tab("mult"), "");
      break;
    case Kind::GDBialgebra:
      detail::finite_lie_axioms(rep, tab("bracket"), "lie.");
      detail::finite_novikov_axioms(rep, tab("product"), "novikov.");
      detail::finite_gd_compat_axiom(rep, tab("bracket"), tab("product"), "gd-compat");
      break;
    case Kind::NovikovPoisson:
      detail::finite_novikov_axioms(rep, tab("product"), "novikov.");
      detail::finite_comm_assoc_axioms(rep, tab("mult"), "assoc.");
      detail::finite_np_axioms(rep, tab("product"), tab("mult"), "");
      break;
    case Kind::LiePoisson:
      detail::finite_lie_axioms(rep, tab("bracket"), "lie.");
      detail::finite_comm_assoc_axioms(rep, tab("mult"), "assoc.");
      detail::finite_leibniz_axiom(rep, tab("bracket"), tab("mult"), "leibniz");
      break;
    case Kind::GDNovikovPoisson:
      detail::finite_lie_axioms(rep, tab("bracket"), "lie.");
      detail::finite_novikov_axioms(rep, tab("product"), "novikov.");
      detail::finite_comm_assoc_axioms(rep, tab("mult"), "assoc.");
      detail::finite_gd_compat_axiom(rep, tab("bracket"), tab("product"), "gd-compat");
      detail::finite_np_axioms(rep, tab("product"), tab("mult"), "");
      detail::finite_leibniz_axiom(rep, tab("bracket"), tab("mult"), "leibniz");
      break;
    case Kind::GeneralizedGD: {
      detail::finite_lie_axioms(rep, tab("bracket"), "lie.");
      std::uint32_t r = s.sig->rank;
      for (std::uint32_t i = 1; i <= r; ++i) {
        std::string role = "product_" + std::to_string(i);
        detail::finite_novikov_axioms(rep, tab(role.c_str()), role + ".");
        detail::finite_gd_compat_axiom(rep, tab("bracket"), tab(role.c_str()),
                                       role + ".gd-compat");
      }
      for (std::uint32_t i = 1; i <= r; ++i)
        for (std::uint32_t j = 1; j <= r; ++j) {
          if (i == j) continue;
          std::string ri = "product_" + std::to_string(i);
          std::string rj = "product_" + std::to_string(j);
          std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
          detail::finite_mixed_symmetry_axiom(rep, tab(ri.c_str()), tab(rj.c_str()),
                                              "mixed-symmetry" + ij);
          detail::finite_mixed_commutativity_axiom(rep, tab(ri.c_str()), tab(rj.c_str()),
                                                   "mixed-commutativity" + ij);
        }
      break;
    }
    default:
      throw error(std::string("check_finite: '") + kind_name(s.kind) + "' is not a finite kind");
  }
  return rep;
}

// Dispatches the full suite matching the structure's own kind.
inline CheckReport check_structure(const Structure& s) {
  switch (s.kind) {
    case Kind::LieConformal: {
      CheckReport rep{"lie-conformal", {}};
      rep.absorb(check_skew(s.table("bracket")), "");
      rep.absorb(check_jacobi(s.table("bracket")), "");
      return rep;
    }
    case Kind::NovikovConformalLeft:
      return check_novikov_conformal(s.table("product"), Side::Left);
    case Kind::NovikovConformalRight:
      return check_novikov_conformal(s.table("product"), Side::Right);
    case Kind::GDConformal:
      return check_gd_conformal(s.table("bracket"), s.table("product"));
    default:
      return check_finite(s);
  }
}

}  // namespace lcs

#endif

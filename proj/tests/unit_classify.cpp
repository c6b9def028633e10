#include <doctest.h>

#include "lcs/classify.hpp"
#include "lcs/construct.hpp"
#include "testutil.hpp"

using namespace lcs;

namespace {

Poly PV(const std::string& name) { return Poly::variable(VarId::param(name)); }

// [e1,e2] = e2 with a fully symbolic product e_i o e_j = c<ij>1 e1 + c<ij>2 e2
Structure symbolic_2dim() {
  std::vector<std::string> params;
  for (const char* ij : {"11", "12", "21", "22"})
    for (const char* l : {"1", "2"}) params.push_back(std::string("c") + ij + l);
  SigPtr sig = make_signature(1, {{"e1", Parity::Even}, {"e2", Parity::Even}}, params);
  ProductTable bk(sig), pr(sig);
  bk.set_entry("e1", "e2", ModValue::gen(sig, "e2"));
  bk.set_entry("e2", "e1", Scalar(-1) * ModValue::gen(sig, "e2"));
  auto gens = std::vector<std::string>{"e1", "e2"};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::string base = "c" + std::to_string(i + 1) + std::to_string(j + 1);
      ModValue v = PV(base + "1") * ModValue::gen(sig, "e1") +
                   PV(base + "2") * ModValue::gen(sig, "e2");
      pr.set_entry(gens[i], gens[j], v);
    }
  return {sig, Kind::GDBialgebra, {{"bracket", bk}, {"product", pr}}};
}

ConstraintSet expected_compat() {
  return normalize_set({PV("c111") - PV("c212"), PV("c121") + PV("c211"), PV("c221"),
                        PV("c211") - PV("c222")});
}

// the two-family structure with d1 = d2 = 0
Structure two_families() {
  std::vector<std::string> params{"a1", "b1", "c1", "a2", "b2", "c2"};
  SigPtr sig = make_signature(2, {{"e1", Parity::Even}, {"e2", Parity::Even}}, params);
  ProductTable bk(sig);
  bk.set_entry("e1", "e2", ModValue::gen(sig, "e2"));
  bk.set_entry("e2", "e1", Scalar(-1) * ModValue::gen(sig, "e2"));
  Structure out{sig, Kind::GeneralizedGD, {{"bracket", bk}}};
  for (int i = 1; i <= 2; ++i) {
    std::string si = std::to_string(i);
    ProductTable pr(sig);
    pr.set_entry("e1", "e1", PV("a" + si) * ModValue::gen(sig, "e1") +
                                 PV("b" + si) * ModValue::gen(sig, "e2"));
    pr.set_entry("e1", "e2", PV("c" + si) * ModValue::gen(sig, "e2"));
    pr.set_entry("e2", "e1", PV("a" + si) * ModValue::gen(sig, "e2"));
    out.tables.emplace("product_" + si, std::move(pr));
  }
  return out;
}

std::map<VarId, Scalar> point(const SigPtr& sig, lcstest::Rng& rng) {
  std::map<VarId, Scalar> pt;
  for (const auto& p : sig->parameters) pt.emplace(VarId::param(p), rng.scalar());
  return pt;
}

}  // namespace

TEST_CASE("normalization") {
  Poly p = Scalar(-2, 3) * (PV("c") * PV("d"));
  CHECK(normalize_constraint(p) == PV("c") * PV("d"));
  CHECK(normalize_constraint(Poly::zero()).is_zero());
  // idempotent and order-independent
  std::vector<Poly> polys{Scalar(4) * PV("b") - Scalar(4) * PV("a"), PV("a") - PV("b"),
                          Poly::zero(), Scalar(2) * PV("c")};
  ConstraintSet s1 = normalize_set(polys);
  std::reverse(polys.begin(), polys.end());
  ConstraintSet s2 = normalize_set(polys);
  CHECK(s1.polys == s2.polys);
  CHECK(s1.polys.size() == 2);
  ConstraintSet s3 = normalize_set(s1.polys);
  CHECK(s3.polys == s1.polys);
}

TEST_CASE("compatibility constraints on the 2-dim bracket") {
  Structure s = symbolic_2dim();
  ConstraintSet got = symbolic_constraints(s, "product", ConstraintSuite::GdCompatOnly);
  ConstraintSet expect = expected_compat();
  CHECK(got.polys == expect.polys);
}

TEST_CASE("novikov constraints on the reduced family") {
  Structure fam = build_gd2dim("a", "b", "c", "d");
  ConstraintSet got = symbolic_constraints(fam, "product", ConstraintSuite::NovikovSuper);
  // The suite forces more than the classical cd = bd = 0: right-commutativity
  // on (e2,e1,e2) contributes d^2 and left-symmetry contributes a*d, so the
  // set cuts out exactly {d = 0}.
  ConstraintSet expect = normalize_set({PV("d") * PV("d"), PV("c") * PV("d"),
                                        PV("b") * PV("d"),
                                        Scalar(2) * PV("a") * PV("d") - PV("c") * PV("d"),
                                        Scalar(2) * PV("a") * PV("d") + PV("c") * PV("d")});
  CHECK(got.polys == expect.polys);
  ConstraintSet d_only = normalize_set({PV("d")});
  ConstraintSet cdbd = normalize_set({PV("c") * PV("d"), PV("b") * PV("d")});
  lcstest::Rng rng(57);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<VarId, Scalar> pt;
    pt.emplace(VarId::param("a"), rng.scalar());
    pt.emplace(VarId::param("b"), trial % 3 == 1 ? Scalar(0) : rng.scalar());
    pt.emplace(VarId::param("c"), trial % 3 == 1 ? Scalar(0) : rng.scalar());
    pt.emplace(VarId::param("d"), trial % 3 == 0 ? Scalar(0) : rng.scalar());
    CHECK(sets_agree_at(got, d_only, pt));
    // cd = bd = 0 is necessary: wherever the extracted set vanishes it holds
    if (got.satisfied_at(pt)) CHECK(cdbd.satisfied_at(pt));
  }
  // counterexample separating the two sets: (0,0,0,1) satisfies cd = bd = 0
  // but is not right-commutative, engine and hand computation agreeing
  std::map<VarId, Scalar> cx{{VarId::param("a"), Scalar(0)},
                             {VarId::param("b"), Scalar(0)},
                             {VarId::param("c"), Scalar(0)},
                             {VarId::param("d"), Scalar(1)}};
  CHECK(cdbd.satisfied_at(cx));
  CHECK_FALSE(got.satisfied_at(cx));
  Structure numeric = build_gd2dim("0", "0", "0", "1");
  Structure ns{numeric.sig, Kind::NovikovSuper, {{"product", numeric.table("product")}}};
  CHECK_FALSE(check_finite(ns).pass());
}

TEST_CASE("generalized-gd pair constraints reproduce the two pair relations") {
  Structure fam = two_families();
  ConstraintSet got = symbolic_constraints(fam, "product_1", ConstraintSuite::GeneralizedGdPair);
  ConstraintSet expect = normalize_set(
      {PV("a1") * PV("c2") - PV("a2") * PV("c1"),
       PV("b2") * (PV("c1") - PV("a1")) - PV("b1") * (PV("c2") - PV("a2"))});
  lcstest::Rng rng(91);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<VarId, Scalar> pt;
    if (trial % 3 == 0) {
      // proportional families satisfy both relations
      Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar(), k = rng.scalar();
      pt.emplace(VarId::param("a1"), a);
      pt.emplace(VarId::param("b1"), b);
      pt.emplace(VarId::param("c1"), c);
      pt.emplace(VarId::param("a2"), k * a);
      pt.emplace(VarId::param("b2"), k * b);
      pt.emplace(VarId::param("c2"), k * c);
    } else if (trial % 3 == 1) {
      // a non-proportional solution: (1, b1, 0) with (0, 0, 0)
      pt.emplace(VarId::param("a1"), Scalar(1));
      pt.emplace(VarId::param("b1"), rng.scalar());
      pt.emplace(VarId::param("c1"), Scalar(0));
      pt.emplace(VarId::param("a2"), Scalar(0));
      pt.emplace(VarId::param("b2"), Scalar(0));
      pt.emplace(VarId::param("c2"), Scalar(0));
    } else {
      pt = point(fam.sig, rng);
    }
    CHECK(sets_agree_at(got, expect, pt));
  }
}

TEST_CASE("soundness and completeness at sampled points") {
  // a substitution satisfies the extracted set iff the suite passes there
  Structure fam = build_gd2dim("a", "b", "c", "d");
  ConstraintSet set = symbolic_constraints(fam, "product", ConstraintSuite::NovikovSuper);
  lcstest::Rng rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    Scalar d = trial % 2 == 0 ? Scalar(0) : rng.scalar();
    std::map<VarId, Scalar> pt{{VarId::param("a"), a},
                               {VarId::param("b"), b},
                               {VarId::param("c"), c},
                               {VarId::param("d"), d}};
    Structure numeric =
        build_gd2dim(a.to_string(), b.to_string(), c.to_string(), d.to_string());
    ConstraintSet numeric_set =
        symbolic_constraints(numeric, "product", ConstraintSuite::NovikovSuper);
    CHECK(set.satisfied_at(pt) == numeric_set.polys.empty());
  }
}

TEST_CASE("verify_family case splits") {
  ConstraintSet cdbd = normalize_set({PV("c") * PV("d"), PV("b") * PV("d")});
  std::vector<FamilyCase> cases{
      {"d=0", {{"d", Poly::zero()}}},
      {"b=c=0", {{"b", Poly::zero()}, {"c", Poly::zero()}}},
  };
  FamilyReport rep = verify_family(cdbd, cases);
  CHECK(rep.pass());

  FamilyReport bad = verify_family(cdbd, {{"d=1,c=1", {{"d", Poly::constant(Scalar(1))},
                                                       {"c", Poly::constant(Scalar(1))}}}});
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.cases.size() == 1);
  // cd substitutes to 1, bd to the free parameter b; both fail
  bool has_cd = false;
  for (const auto& p : bad.cases[0].failed)
    if (p == PV("c") * PV("d")) has_cd = true;
  CHECK(has_cd);

  // bound variable appearing free in another substitution is rejected
  CHECK_THROWS_AS(verify_family(cdbd, {{"bad", {{"c", PV("d")}, {"d", Poly::zero()}}}}),
                  error);
}

TEST_CASE("zero unknown table yields no constraints") {
  SigPtr sig = make_signature(1, {{"e1", Parity::Even}, {"e2", Parity::Even}});
  ProductTable bk(sig), pr(sig);
  bk.set_entry("e1", "e2", ModValue::gen(sig, "e2"));
  bk.set_entry("e2", "e1", Scalar(-1) * ModValue::gen(sig, "e2"));
  Structure s{sig, Kind::GDBialgebra, {{"bracket", bk}, {"product", pr}}};
  CHECK(symbolic_constraints(s, "product", ConstraintSuite::GdCompatOnly).polys.empty());
  CHECK(symbolic_constraints(s, "product", ConstraintSuite::NovikovSuper).polys.empty());
}

TEST_CASE("non-constant unknown is rejected") {
  Structure v = build_virasoro(1);
  CHECK_THROWS_AS(symbolic_constraints(v, "bracket", ConstraintSuite::NovikovSuper), error);
}

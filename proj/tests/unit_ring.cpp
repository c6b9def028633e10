#include <doctest.h>

#include "lcs/parse.hpp"
#include "lcs/ring.hpp"
#include "testutil.hpp"

using namespace lcs;

namespace {

ParseContext ctx_rank(std::uint32_t r, std::set<std::string> params = {}) {
  ParseContext c;
  c.rank = r;
  c.params = std::move(params);
  c.allow_mu = true;
  return c;
}

Poly P(const std::string& s, std::uint32_t rank = 2, std::set<std::string> params = {}) {
  return parse_poly(s, ctx_rank(rank, std::move(params)));
}

}  // namespace

TEST_CASE("bigint basics") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("987654321098765432109876543210");
  CHECK((a + b).to_string() == "1111111110111111111011111111100");
  CHECK((b - a).to_string() == "864197532086419753208641975320");
  CHECK((a * BigInt(0)).to_string() == "0");
  CHECK((-a).to_string() == "-123456789012345678901234567890");
  BigInt q, r;
  BigInt::divrem(b, a, q, r);
  CHECK((q * a + r) == b);
  CHECK(BigInt::gcd(BigInt(12 * 35), BigInt(18 * 35)).to_string() == "210");

  // cross-check against int64 arithmetic on small operands
  lcstest::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    long long x = rng.integer(-100000, 100000);
    long long y = rng.integer(-100000, 100000);
    CHECK(BigInt(x) + BigInt(y) == BigInt(x + y));
    CHECK(BigInt(x) * BigInt(y) == BigInt(x * y));
    if (y != 0) {
      BigInt qq, rr;
      BigInt::divrem(BigInt(x), BigInt(y), qq, rr);
      CHECK(qq == BigInt(x / y));
      CHECK(rr == BigInt(x % y));
    }
  }
}

TEST_CASE("scalar reduced form") {
  CHECK(Scalar(6, 4).to_string() == "3/2");
  CHECK(Scalar(-6, -4).to_string() == "3/2");
  CHECK(Scalar(6, -4).to_string() == "-3/2");
  CHECK(Scalar(0, 7).to_string() == "0");
  CHECK((Scalar(1, 3) + Scalar(1, 6)).to_string() == "1/2");
  CHECK((Scalar(2, 3) * Scalar(9, 4)).to_string() == "3/2");
  CHECK((Scalar(1, 3) / Scalar(1, 6)).to_string() == "2");
  CHECK(Scalar::factorial(5) == Scalar(120));
  CHECK_THROWS_AS(Scalar(1, 0), error);
}

TEST_CASE("poly add/mul/neg canonical form") {
  // (T1+2 l1) + (-2 l1) -> T1
  CHECK(P("T1+2*l1") + P("-2*l1") == P("T1"));
  // (l1+T1)(l1-T1) -> l1^2 - T1^2
  CHECK(P("l1+T1") * P("l1-T1") == P("l1^2-T1^2"));
  // p + (-p) -> 0 with empty term map
  Poly p = P("T1+2*l1");
  CHECK((p + (-p)).is_zero());
  CHECK((p + (-p)).terms().empty());
}

TEST_CASE("poly subst") {
  std::map<VarId, Poly> m{{VarId::lam(1), P("-l1-T1")}};
  CHECK(P("l1").subst(m) == P("-l1-T1"));
  CHECK(P("l1^2").subst(m) == P("l1^2+2*l1*T1+T1^2"));
  std::map<VarId, Poly> m2{{VarId::lam(2), P("-l2-T2")}};
  CHECK(P("l2*T1").subst(m2) == P("-l2*T1-T2*T1"));
  // homomorphism on random inputs
  lcstest::Rng rng(11);
  std::vector<VarId> vars{VarId::t(1), VarId::lam(1), VarId::param("a")};
  for (int i = 0; i < 50; ++i) {
    Poly p = rng.poly(vars), q = rng.poly(vars);
    CHECK((p + q).subst(m) == p.subst(m) + q.subst(m));
    CHECK((p * q).subst(m) == p.subst(m) * q.subst(m));
  }
}

TEST_CASE("poly is_zero") {
  CHECK((P("T1+2*l1") - P("2*l1+T1")).is_zero());
  CHECK_FALSE((P("l1") - P("l2")).is_zero());
  // involution: subst twice returns the input
  std::map<VarId, Poly> m{{VarId::lam(1), P("-l1-T1")}};
  CHECK((P("l1").subst(m).subst(m) - P("l1")).is_zero());
}

TEST_CASE("ring laws on random polys") {
  lcstest::Rng rng(23);
  std::vector<VarId> vars{VarId::t(1), VarId::t(2), VarId::lam(1), VarId::param("a")};
  for (int i = 0; i < 60; ++i) {
    Poly p = rng.poly(vars), q = rng.poly(vars), r = rng.poly(vars);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("canonical uniqueness: equal iff identical term maps") {
  Poly a = P("T1*l1+1/2");
  Poly b = P("1/2+l1*T1");
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("grlex print order") {
  CHECK(P("2*l1+T1").to_string() == "T1+2*l1");
  CHECK(P("T2*l1 - T1*l2").to_string() == "-T1*l2+T2*l1");
  CHECK(P("1+T1^2").to_string() == "T1^2+1");
  CHECK(P("-T1-1").to_string() == "-T1-1");
  CHECK(P("a*T2 + T1", 2, {"a"}).to_string() == "T2*a+T1");
  CHECK(Poly::zero().to_string() == "0");
}

TEST_CASE("parse/print round trip") {
  lcstest::Rng rng(37);
  std::vector<VarId> vars{VarId::t(1), VarId::lam(1), VarId::lam(2), VarId::mu(1),
                          VarId::param("C1")};
  for (int i = 0; i < 60; ++i) {
    Poly p = rng.poly(vars, 4, 3);
    Poly q = parse_poly(p.to_string(), ctx_rank(2, {"C1"}));
    CHECK(p == q);
  }
}

TEST_CASE("parse errors carry position and name") {
  CHECK_THROWS_WITH_AS(P("T1 + q"), doctest::Contains("unknown identifier 'q'"), error);
  CHECK_THROWS_AS(P("T3"), error);         // rank 2
  CHECK_THROWS_AS(P("(T1+1"), error);      // missing paren
  CHECK_THROWS_AS(P("T1 T2"), error);      // missing operator
  ParseContext fin;
  fin.rank = 1;
  fin.allow_t_lam = false;
  CHECK_THROWS_AS(parse_poly("T1", fin), error);
  ParseContext nomu = ctx_rank(2);
  nomu.allow_mu = false;
  CHECK_THROWS_AS(parse_poly("m1", nomu), error);
}

TEST_CASE("rational literals") {
  CHECK(P("3/4*T1") == Scalar(3, 4) * P("T1"));
  CHECK(P("5/10").to_string() == "1/2");
}

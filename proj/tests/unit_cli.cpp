#include <doctest.h>

#include <sstream>

#include "lcs/cli.hpp"
#include "lcs/construct.hpp"
#include "lcs/io.hpp"
#include "testutil.hpp"

using namespace lcs;
using lcstest::TempFile;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kVirasoro1 = R"({
  "kind": "lie-conformal",
  "rank": 1,
  "generators": [{"name": "L", "parity": "even"}],
  "parameters": [],
  "tables": {
    "bracket": [{"left": "L", "right": "L", "value": "(T1+2*l1)*L"}]
  }
})";

}  // namespace

TEST_CASE("check pass/fail/error exit codes") {
  TempFile vir(kVirasoro1);
  CliResult pass = cli({"check", vir.path(), "--suite", "lie-conformal"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(pass.out.find("\"digest\"") != std::string::npos);

  // skew-violating table
  TempFile broken(R"({
    "kind": "lie-conformal", "rank": 1,
    "generators": [{"name": "L", "parity": "even"}],
    "parameters": [],
    "tables": {"bracket": [{"left": "L", "right": "L", "value": "L"}]}
  })");
  CliResult fail = cli({"check", broken.path()});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(fail.out.find("\"residual\": \"2*L\"") != std::string::npos);

  // incompatible suite: kind mismatch
  CliResult err = cli({"check", vir.path(), "--suite", "novikov-poisson"});
  CHECK(err.code == 2);
  CHECK(err.err.find("incompatible") != std::string::npos);

  // missing file
  CHECK(cli({"check", "/nonexistent.json"}).code == 2);
  // unknown option
  CHECK(cli({"check", vir.path(), "--bogus"}).code == 2);
}

TEST_CASE("check defaults to the kind's own suite") {
  TempFile gd(structure_to_string(lift_novikov_to_gd(build_rank1_novikov(Rank1Case::Va))));
  CliResult res = cli({"check", gd.path()});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"suite\": \"gd-conformal\"") != std::string::npos);
}

TEST_CASE("check output is byte-identical across runs") {
  TempFile vir(kVirasoro1);
  CliResult a = cli({"check", vir.path(), "--suite", "lie-conformal"});
  CliResult b = cli({"check", vir.path(), "--suite", "lie-conformal"});
  CHECK(a.out == b.out);
}

TEST_CASE("check --format text and --out") {
  TempFile vir(kVirasoro1);
  CliResult text = cli({"--format", "text", "check", vir.path()});
  CHECK(text.code == 0);
  CHECK(text.out.find("status: pass") != std::string::npos);

  TempFile outfile;
  CliResult piped = cli({"--out", outfile.path(), "check", vir.path()});
  CHECK(piped.code == 0);
  CHECK(piped.out.empty());
  CHECK(outfile.read().find("\"status\": \"pass\"") != std::string::npos);

  CliResult quiet = cli({"--quiet", "check", vir.path()});
  CHECK(quiet.code == 0);
  CHECK(quiet.out.empty());
  CHECK(quiet.err.empty());
}

TEST_CASE("build extend-ilinear reproduces the 2-dim bracket") {
  TempFile gd(structure_to_string(lift_novikov_to_gd(build_rank1_novikov(Rank1Case::Va))));
  TempFile out;
  CliResult res = cli({"--out", out.path(), "build", "--construction", "extend-ilinear",
                       "--i", "2", gd.path()});
  REQUIRE(res.code == 0);
  Structure ext = load_structure(out.path());
  CHECK(ext.table("bracket").entry("x", "x") ==
        parse_modvalue("T2*(-l1+a)*x+l2*(T1+2*a)*x+(T1+2*l1)*x", ext.sig, false));

  CliResult chk = cli({"check", out.path(), "--suite", "lie-conformal"});
  CHECK(chk.code == 0);
  CliResult shape = cli({"check", out.path(), "--suite", "ilinear-shape", "--i", "2"});
  CHECK(shape.code == 0);
}

TEST_CASE("build decompose-ilinear on the Hamiltonian bracket") {
  TempFile ham(structure_to_string(build_hamiltonian(1)));
  TempFile out;
  CliResult res = cli({"--out", out.path(), "build", "--construction", "decompose-ilinear",
                       "--i", "2", ham.path()});
  REQUIRE(res.code == 0);
  Structure gd = load_structure(out.path());
  CHECK(gd.kind == Kind::GDConformal);
  CHECK(gd.table("product").entry("L", "L") ==
        parse_modvalue("(l1+T1)*L", gd.sig, false));
  CHECK(gd.table("bracket").entries().empty());
}

TEST_CASE("build novikov-to-lie then check passes") {
  TempFile va(structure_to_string(build_rank1_novikov(Rank1Case::Va)));
  TempFile out;
  REQUIRE(cli({"--out", out.path(), "build", "--construction", "novikov-to-lie", va.path()})
              .code == 0);
  CHECK(cli({"check", out.path(), "--suite", "lie-conformal"}).code == 0);
}

TEST_CASE("build precondition failure embeds a report and --force overrides") {
  TempFile bad(R"({
    "kind": "novikov-conformal-left", "rank": 1,
    "generators": [{"name": "x", "parity": "even"}],
    "parameters": [],
    "tables": {"product": [{"left": "x", "right": "x", "value": "l1^2*x"}]}
  })");
  CliResult res = cli({"build", "--construction", "novikov-to-lie", bad.path()});
  CHECK(res.code == 1);
  CHECK(res.out.find("\"findings\"") != std::string::npos);
  CHECK(res.out.find("left-symmetry") != std::string::npos);

  TempFile out;
  CliResult forced = cli({"--force", "--out", out.path(), "build", "--construction",
                          "novikov-to-lie", bad.path()});
  CHECK(forced.code == 0);
  // the emitted structure fails its own suite
  CHECK(cli({"check", out.path(), "--suite", "lie-conformal"}).code == 1);
}

TEST_CASE("bracket command prints the formal sum") {
  TempFile vir(kVirasoro1);
  CliResult res = cli({"bracket", vir.path(), "--left", "L", "--m", "2", "--right", "L",
                       "--n", "3"});
  CHECK(res.code == 0);
  CHECK(res.out == "-1*L[4]\n");

  // current algebra at index 0
  SigPtr sig = make_signature(1, {{"e1", Parity::Even}, {"e2", Parity::Even}});
  ProductTable bk(sig);
  bk.set_entry("e1", "e2", ModValue::gen(sig, "e2"));
  bk.set_entry("e2", "e1", Scalar(-1) * ModValue::gen(sig, "e2"));
  Structure lie{sig, Kind::LieSuper, {{"bracket", bk}}};
  TempFile cur(structure_to_string(build_current(lie, 1)));
  CliResult at0 = cli({"bracket", cur.path(), "--left", "e1", "--m", "0", "--right", "e2",
                       "--n", "0"});
  CHECK(at0.code == 0);
  CHECK(at0.out == "1*e2[0]\n");

  // malformed index vector
  CHECK(cli({"bracket", vir.path(), "--left", "L", "--m", "1,2", "--right", "L", "--n", "3"})
            .code == 2);
  CHECK(cli({"bracket", vir.path(), "--left", "L", "--m", "x", "--right", "L", "--n", "3"})
            .code == 2);
}

TEST_CASE("loop command exports tables and runs window suites") {
  TempFile gd(structure_to_string(lift_novikov_to_gd(build_rank1_novikov(Rank1Case::Va))));
  CliResult exp = cli({"loop", gd.path(), "--window", "-1..1"});
  CHECK(exp.code == 0);
  CHECK(exp.out.find("bracket x[-1] x[0] -> -1*x[-2]") != std::string::npos);
  CHECK(exp.out.find("product x[0] x[1] -> ") != std::string::npos);

  CliResult rep = cli({"loop", gd.path(), "--window", "-2..2", "--suite", "gd-bialgebra"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(rep.out.find("\"skipped\"") != std::string::npos);

  CHECK(cli({"loop", gd.path(), "--window", "oops"}).code == 2);
}

TEST_CASE("constraints command lists normalized constraints") {
  // symbolic product over the 2-dim bracket
  std::string params;
  for (const char* ij : {"11", "12", "21", "22"})
    for (const char* l : {"1", "2"}) {
      params += params.empty() ? "" : ", ";
      params += std::string("\"c") + ij + l + "\"";
    }
  std::string sym = std::string(R"({
    "kind": "gd-bialgebra", "rank": 1,
    "generators": [{"name": "e1", "parity": "even"}, {"name": "e2", "parity": "even"}],
    "parameters": [)") + params + R"(],
    "tables": {
      "bracket": [
        {"left": "e1", "right": "e2", "value": "e2"},
        {"left": "e2", "right": "e1", "value": "-e2"}
      ],
      "product": [
        {"left": "e1", "right": "e1", "value": "c111*e1+c112*e2"},
        {"left": "e1", "right": "e2", "value": "c121*e1+c122*e2"},
        {"left": "e2", "right": "e1", "value": "c211*e1+c212*e2"},
        {"left": "e2", "right": "e2", "value": "c221*e1+c222*e2"}
      ]
    }
  })";
  TempFile f(sym);
  CliResult res = cli({"constraints", f.path(), "--unknown", "product", "--suite", "gd-compat"});
  CHECK(res.code == 0);
  // four independent linear constraints
  int lines = 0;
  for (char c : res.out)
    if (c == '\n') ++lines;
  CHECK(lines == 4);
  CHECK(res.out.find("c221") != std::string::npos);

  TempFile fam(structure_to_string(build_gd2dim("a", "b", "c", "d")));
  CliResult nov = cli({"constraints", fam.path(), "--unknown", "product", "--suite",
                       "novikov-super"});
  CHECK(nov.code == 0);
  CHECK(nov.out.find("b*d\n") != std::string::npos);
  CHECK(nov.out.find("c*d\n") != std::string::npos);

  // fully zero unknown table gives an empty listing
  TempFile zero(R"({
    "kind": "gd-bialgebra", "rank": 1,
    "generators": [{"name": "e1", "parity": "even"}, {"name": "e2", "parity": "even"}],
    "parameters": [],
    "tables": {
      "bracket": [
        {"left": "e1", "right": "e2", "value": "e2"},
        {"left": "e2", "right": "e1", "value": "-e2"}
      ],
      "product": []
    }
  })");
  CliResult empty = cli({"constraints", zero.path(), "--suite", "gd-compat"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  // non-symbolic unknown
  TempFile vir(kVirasoro1);
  CHECK(cli({"constraints", vir.path(), "--unknown", "bracket", "--suite", "novikov-super"})
            .code == 2);
}

TEST_CASE("verify-family command") {
  TempFile fam(structure_to_string(build_gd2dim("a", "b", "c", "d")));
  CliResult pass = cli({"verify-family", fam.path(), "--unknown", "product", "--suite",
                        "novikov-super", "--case", "d=0"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("\"status\": \"pass\"") != std::string::npos);

  CliResult fail = cli({"verify-family", fam.path(), "--unknown", "product", "--suite",
                        "novikov-super", "--case", "d=1,c=1"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("\"status\": \"fail\"") != std::string::npos);

  CHECK(cli({"verify-family", fam.path(), "--suite", "novikov-super", "--case", "q=0"})
            .code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);
}

TEST_CASE("catalog constructions through the cli") {
  TempFile out;
  CHECK(cli({"--out", out.path(), "build", "--construction", "virasoro", "--r", "2"}).code == 0);
  Structure v2 = load_structure(out.path());
  CHECK(v2.sig->rank == 2);
  CHECK(cli({"check", out.path()}).code == 0);

  CHECK(cli({"--out", out.path(), "build", "--construction", "hamiltonian", "--s", "1"}).code ==
        0);
  CHECK(cli({"check", out.path(), "--suite", "lie-conformal"}).code == 0);

  CHECK(cli({"--out", out.path(), "build", "--construction", "rank1", "--case", "assoc"}).code ==
        0);
  CHECK(cli({"check", out.path(), "--suite", "novikov-conformal-left"}).code == 0);

  CHECK(cli({"--out", out.path(), "build", "--construction", "ex1"}).code == 0);
  CHECK(cli({"check", out.path()}).code == 0);

  CHECK(cli({"--out", out.path(), "build", "--construction", "truncated-poly-np", "--n", "4"})
            .code == 0);
  CHECK(cli({"check", out.path()}).code == 0);

  TempFile np(out.read());
  CHECK(cli({"--out", out.path(), "build", "--construction", "np-lift", "--mode",
             "gd-conformal", np.path()})
            .code == 0);
  CHECK(cli({"check", out.path()}).code == 0);

  CHECK(cli({"--out", out.path(), "build", "--construction", "gd2dim", "--a", "1", "--b", "0",
             "--c", "1", "--d", "0"})
            .code == 0);
  CHECK(cli({"check", out.path()}).code == 0);
  TempFile gdb(out.read());

  CHECK(cli({"--out", out.path(), "build", "--construction", "scale-family", "--r", "2", "--i",
             "1", "--k", "k2", gdb.path()})
            .code == 0);
  CHECK(cli({"check", out.path()}).code == 0);

  CHECK(cli({"--out", out.path(), "build", "--construction", "gd-np-lift", gdb.path()}).code ==
        0);
  CHECK(cli({"check", out.path()}).code == 0);

  // generalized-gd assembly from a scale family
  TempFile ggd;
  CHECK(cli({"--out", ggd.path(), "build", "--construction", "scale-family", "--r", "2", "--i",
             "1", "--k", "3", gdb.path()})
            .code == 0);
  CHECK(cli({"--out", out.path(), "build", "--construction", "generalized-gd-to-linear",
             ggd.path()})
            .code == 0);
  CHECK(cli({"check", out.path(), "--suite", "lie-conformal"}).code == 0);
  CHECK(cli({"check", out.path(), "--suite", "linear-shape"}).code == 0);

  // chirality conversion round trip
  TempFile va(structure_to_string(build_rank1_novikov(Rank1Case::Va)));
  CHECK(cli({"--out", out.path(), "build", "--construction", "convert-chirality", va.path()})
            .code == 0);
  CHECK(cli({"check", out.path(), "--suite", "novikov-conformal-right"}).code == 0);
  CHECK(cli({"check", out.path(), "--suite", "novikov-conformal-left"}).code == 1);

  // derivation construction
  Structure np3 = build_truncated_poly_np(3);
  Structure lp{np3.sig, Kind::LiePoisson,
               {{"bracket", ProductTable(np3.sig)}, {"mult", np3.table("mult")}}};
  TempFile lpf(structure_to_string(lp));
  TempFile dmap(R"([
    {"gen": "x1", "value": "x1"},
    {"gen": "x2", "value": "2*x2"}
  ])");
  CHECK(cli({"--out", out.path(), "build", "--construction", "derivation-gdnp", "--map",
             dmap.path(), "--xi", "0", lpf.path()})
            .code == 0);
  CHECK(cli({"check", out.path()}).code == 0);

  // current needs a lie-super input
  SigPtr sig = make_signature(1, {{"e1", Parity::Even}, {"e2", Parity::Even}});
  ProductTable bk(sig);
  bk.set_entry("e1", "e2", ModValue::gen(sig, "e2"));
  bk.set_entry("e2", "e1", Scalar(-1) * ModValue::gen(sig, "e2"));
  TempFile lie(structure_to_string(Structure{sig, Kind::LieSuper, {{"bracket", bk}}}));
  CHECK(cli({"--out", out.path(), "build", "--construction", "current", "--r", "2", lie.path()})
            .code == 0);
  CHECK(cli({"check", out.path()}).code == 0);

  CHECK(cli({"build", "--construction", "widget"}).code == 2);
}

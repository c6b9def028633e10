#ifndef LCS_CLI_HPP
#define LCS_CLI_HPP

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcs/classify.hpp"
#include "lcs/construct.hpp"
#include "lcs/io.hpp"
#include "lcs/liefun.hpp"

namespace lcs {

namespace cli_detail {

struct Output {
  std::ostream* out;
  std::ostream* err;
  std::string out_path;
  bool quiet = false;
  std::string format = "json";

  void emit(const std::string& text) const {
    if (!out_path.empty()) {
      write_file(out_path, text);
    } else if (!quiet) {
      *out << text;
    }
  }
};

inline std::vector<long long> parse_index_vector(const std::string& s, std::uint32_t rank) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoll(item));
    } catch (...) {
      throw error("malformed index vector '" + s + "'");
    }
  if (out.size() != rank)
    throw error("index vector '" + s + "' must have " + std::to_string(rank) + " entries");
  return out;
}

inline std::pair<long long, long long> parse_window(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw error("window must be written lo..hi");
  try {
    return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
  } catch (...) {
    throw error("window must be written lo..hi");
  }
}

// "b=0,c=1/2" -> one classification case
inline FamilyCase parse_case(const std::string& s, const SigPtr& sig) {
  FamilyCase fc{s, {}};
  std::stringstream ss(s);
  std::string item;
  ParseContext ctx;
  ctx.rank = sig->rank;
  ctx.allow_t_lam = false;
  for (const auto& p : sig->parameters) ctx.params.insert(p);
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw error("case '" + s + "': expected name=value pairs");
    std::string name = item.substr(0, eq);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    if (!sig->has_param(name)) throw error("case '" + s + "': unknown parameter '" + name + "'");
    fc.subst[name] = parse_poly(item.substr(eq + 1), ctx);
  }
  return fc;
}

struct SuiteSpec {
  std::string name;
  bool conformal;
  std::vector<std::string> roles;
};

inline const std::vector<SuiteSpec>& suite_specs() {
  static const std::vector<SuiteSpec> specs{
      {"lie-conformal", true, {"bracket"}},
      {"novikov-conformal-left", true, {"product"}},
      {"novikov-conformal-right", true, {"product"}},
      {"gd-conformal", true, {"bracket", "product"}},
      {"ilinear-shape", true, {"bracket"}},
      {"linear-shape", true, {"bracket"}},
      {"lie-super", false, {"bracket"}},
      {"novikov-super", false, {"product"}},
      {"comm-assoc-super", false, {"mult"}},
      {"gd-bialgebra", false, {"bracket", "product"}},
      {"novikov-poisson", false, {"product", "mult"}},
      {"lie-poisson", false, {"bracket", "mult"}},
      {"gd-novikov-poisson", false, {"bracket", "product", "mult"}},
      {"generalized-gd", false, {"bracket", "product_1"}},
  };
  return specs;
}

// dispatches a named suite against a loaded structure
inline CheckReport run_suite(const Structure& s, const std::string& suite, std::uint32_t i) {
  const SuiteSpec* spec = nullptr;
  for (const auto& sp : suite_specs())
    if (sp.name == suite) spec = &sp;
  if (!spec) throw error("unknown suite '" + suite + "'");
  if (spec->conformal != kind_is_conformal(s.kind))
    throw error("suite '" + suite + "' is incompatible with kind '" + kind_name(s.kind) + "'");
  for (const auto& role : spec->roles)
    if (!s.tables.count(role))
      throw error("suite '" + suite + "' needs table '" + role + "' which kind '" +
                  kind_name(s.kind) + "' does not carry");

  if (suite == "lie-conformal") {
    CheckReport rep{"lie-conformal", {}};
    rep.absorb(check_skew(s.table("bracket")), "");
    rep.absorb(check_jacobi(s.table("bracket")), "");
    return rep;
  }
  if (suite == "novikov-conformal-left")
    return check_novikov_conformal(s.table("product"), Side::Left);
  if (suite == "novikov-conformal-right")
    return check_novikov_conformal(s.table("product"), Side::Right);
  if (suite == "gd-conformal") return check_gd_conformal(s.table("bracket"), s.table("product"));
  if (suite == "ilinear-shape") return check_ilinear_shape(s.table("bracket"), i);
  if (suite == "linear-shape") return check_linear_shape(s.table("bracket"));
  // finite suites run against a structure reinterpreted under the suite's kind
  Structure view{s.sig, kind_from_name(suite), s.tables};
  return check_finite(view);
}

inline int emit_report(const Output& io, ordered_json doc) {
  std::string status = doc.at("status").get<std::string>();
  io.emit(io.format == "text" ? report_text(doc) : doc.dump(2) + "\n");
  return status == "pass" ? 0 : 1;
}

}  // namespace cli_detail

// Runs one command; returns the process exit code (0 pass, 1 fail, 2 error).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"exact checker and constructor for conformal and finite algebraic structures"};
  app.require_subcommand(1);

  Output io{&out, &err, "", false, "json"};
  bool force = false;
  app.add_option("--out,-o", io.out_path, "write the result to a file instead of stdout");
  app.add_flag("--force", force, "skip precondition suites on constructions");
  app.add_flag("--quiet,-q", io.quiet, "suppress stdout output");
  app.add_option("--format", io.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // check
  auto* c_check = app.add_subcommand("check", "run an axiom suite against a structure file");
  c_check->fallthrough();
  std::string check_path, check_suite;
  std::uint32_t check_i = 1;
  c_check->add_option("path", check_path, "structure file")->required();
  c_check->add_option("--suite", check_suite, "suite name (defaults to the kind's own suite)");
  c_check->add_option("--i", check_i, "slot index for ilinear-shape");

  // build
  auto* c_build = app.add_subcommand("build", "run a construction and emit a structure file");
  c_build->fallthrough();
  std::string construction, build_input, build_lie, build_case = "va", build_mode = "gd-conformal";
  std::string build_a = "a", build_b = "b", build_c = "c", build_d = "d";
  std::string build_map, build_xi = "0", build_k;
  std::uint32_t build_r = 1, build_s = 1, build_i = 1, build_n = 4;
  c_build->add_option("--construction", construction, "construction name")->required();
  c_build->add_option("input", build_input, "input structure file");
  c_build->add_option("--r", build_r, "rank argument");
  c_build->add_option("--s", build_s, "Hamiltonian size s (rank 2s)");
  c_build->add_option("--n", build_n, "truncation order");
  c_build->add_option("--i", build_i, "slot index");
  c_build->add_option("--case", build_case, "rank-1 case: zero|assoc|va");
  c_build->add_option("--mode", build_mode, "np-lift mode: novikov-conformal|gd-conformal");
  c_build->add_option("--a", build_a, "family coefficient or parameter name");
  c_build->add_option("--b", build_b, "family coefficient or parameter name");
  c_build->add_option("--c", build_c, "family coefficient or parameter name");
  c_build->add_option("--d", build_d, "family coefficient or parameter name");
  c_build->add_option("--map", build_map, "derivation map file (json)");
  c_build->add_option("--xi", build_xi, "derivation twist: value or parameter name");
  c_build->add_option("--k", build_k, "comma-separated scale factors for scale-family");

  // bracket
  auto* c_bracket = app.add_subcommand("bracket", "annihilation-algebra bracket of two symbols");
  c_bracket->fallthrough();
  std::string br_path, br_left, br_right, br_m, br_n;
  c_bracket->add_option("path", br_path)->required();
  c_bracket->add_option("--left", br_left)->required();
  c_bracket->add_option("--m", br_m)->required();
  c_bracket->add_option("--right", br_right)->required();
  c_bracket->add_option("--n", br_n)->required();

  // loop
  auto* c_loop = app.add_subcommand("loop", "annihilation-algebra tables over a window");
  c_loop->fallthrough();
  std::string loop_path, loop_window, loop_suite;
  c_loop->add_option("path", loop_path)->required();
  c_loop->add_option("--window", loop_window, "index window lo..hi")->required();
  c_loop->add_option("--suite", loop_suite, "window suite: lie-super|novikov-super|gd-bialgebra");

  // constraints
  auto* c_cons = app.add_subcommand("constraints", "extract structure-constant constraints");
  c_cons->fallthrough();
  std::string cons_path, cons_unknown = "product", cons_suite = "gd-compat";
  c_cons->add_option("path", cons_path)->required();
  c_cons->add_option("--unknown", cons_unknown, "role of the symbolic table");
  c_cons->add_option("--suite", cons_suite, "gd-compat|novikov-super|generalized-gd-pair");

  // verify-family
  auto* c_fam = app.add_subcommand("verify-family", "check case splits against constraints");
  c_fam->fallthrough();
  std::string fam_path, fam_unknown = "product", fam_suite = "gd-compat";
  std::vector<std::string> fam_cases;
  c_fam->add_option("path", fam_path)->required();
  c_fam->add_option("--unknown", fam_unknown, "role of the symbolic table");
  c_fam->add_option("--suite", fam_suite, "gd-compat|novikov-super|generalized-gd-pair");
  c_fam->add_option("--case", fam_cases, "substitution list, e.g. \"d=0\" or \"b=0,c=0\"")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("lcs");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    if (!io.quiet) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      err << "elapsed: " << ms << " ms\n";
    }
    return code;
  };

  try {
    if (app.got_subcommand(c_check)) {
      Structure s = load_structure(check_path);
      CheckReport rep = check_suite.empty() ? check_structure(s)
                                            : run_suite(s, check_suite, check_i);
      ordered_json doc;
      doc["command"] = "check";
      doc["input"] = check_path;
      doc["digest"] = fnv1a_digest(read_file(check_path));
      ordered_json repj = report_to_json(rep);
      for (auto& [k, v] : repj.items()) doc[k] = std::move(v);
      return finish(emit_report(io, std::move(doc)));
    }

    if (app.got_subcommand(c_build)) {
      auto input = [&]() -> Structure {
        if (build_input.empty()) throw error("construction '" + construction + "' needs an input file");
        return load_structure(build_input);
      };
      Structure result = [&]() -> Structure {
        if (construction == "current") return build_current(input(), build_r, force);
        if (construction == "virasoro") return build_virasoro(build_r);
        if (construction == "hamiltonian") return build_hamiltonian(build_s);
        if (construction == "rank1") {
          Rank1Case rc = build_case == "zero"    ? Rank1Case::Zero
                         : build_case == "assoc" ? Rank1Case::Assoc
                         : build_case == "va"    ? Rank1Case::Va
                                                 : throw error("rank1: unknown case '" + build_case + "'");
          return build_rank1_novikov(rc, build_a);
        }
        if (construction == "ex1") return build_ex1_super_novikov();
        if (construction == "gd2dim") return build_gd2dim(build_a, build_b, build_c, build_d);
        if (construction == "truncated-poly-np") return build_truncated_poly_np(build_n);
        if (construction == "novikov-to-lie") return lift_novikov_to_lie(input(), force);
        if (construction == "novikov-to-gd") return lift_novikov_to_gd(input(), force);
        if (construction == "np-lift") {
          NpLiftMode mode = build_mode == "novikov-conformal" ? NpLiftMode::NovikovConformal
                            : build_mode == "gd-conformal"
                                ? NpLiftMode::GdConformal
                                : throw error("np-lift: unknown mode '" + build_mode + "'");
          return lift_np(input(), mode, force);
        }
        if (construction == "gd-np-lift") return lift_np(input(), NpLiftMode::GdNpConformal, force);
        if (construction == "extend-ilinear") return extend_to_ilinear(input(), build_i, force);
        if (construction == "decompose-ilinear") return decompose_ilinear(input(), build_i, force);
        if (construction == "generalized-gd-to-linear")
          return build_linear_from_generalized_gd(input(), force);
        if (construction == "derivation-gdnp") {
          Structure lp = input();
          if (build_map.empty()) throw error("derivation-gdnp: --map file required");
          ordered_json jm;
          try {
            jm = ordered_json::parse(read_file(build_map));
          } catch (const nlohmann::json::parse_error& e) {
            throw error(build_map + ": " + e.what());
          }
          std::map<std::string, ModValue> d;
          for (const auto& entry : jm)
            d.emplace(entry.at("gen").get<std::string>(),
                      parse_modvalue(entry.at("value").get<std::string>(), lp.sig, true));
          return derivation_gd_np(lp, d, build_xi, force);
        }
        if (construction == "scale-family") {
          std::vector<std::string> ks;
          std::stringstream ss(build_k);
          std::string item;
          while (std::getline(ss, item, ',')) ks.push_back(item);
          return scale_family(input(), build_r, build_i, ks, force);
        }
        if (construction == "convert-chirality") return convert_chirality(input());
        throw error("unknown construction '" + construction + "'");
      }();
      io.emit(structure_to_string(result));
      return finish(0);
    }

    if (app.got_subcommand(c_bracket)) {
      Structure s = load_structure(br_path);
      if (!kind_is_conformal(s.kind)) throw error("bracket: input must be a conformal structure");
      std::string role = s.tables.count("bracket") ? "bracket" : "product";
      if (s.sig->gen_index(br_left) < 0) throw error("unknown generator '" + br_left + "'");
      if (s.sig->gen_index(br_right) < 0) throw error("unknown generator '" + br_right + "'");
      FormalSum sum = annihilation_bracket(s.table(role), br_left,
                                           parse_index_vector(br_m, s.sig->rank), br_right,
                                           parse_index_vector(br_n, s.sig->rank));
      io.emit(sum.to_string() + "\n");
      return finish(0);
    }

    if (app.got_subcommand(c_loop)) {
      Structure s = load_structure(loop_path);
      auto [lo, hi] = parse_window(loop_window);
      LoopTables lt = loop_gd_structure(s, Window::uniform(s.sig->rank, lo, hi));
      if (loop_suite.empty()) {
        io.emit(export_loop_tables(lt));
        return finish(0);
      }
      Kind suite = kind_from_name(loop_suite);
      WindowReport rep = window_check(lt, suite);
      ordered_json doc;
      doc["command"] = "loop";
      doc["input"] = loop_path;
      doc["digest"] = fnv1a_digest(read_file(loop_path));
      doc["window"] = loop_window;
      ordered_json repj = report_to_json(rep);
      for (auto& [k, v] : repj.items()) doc[k] = std::move(v);
      return finish(emit_report(io, std::move(doc)));
    }

    if (app.got_subcommand(c_cons)) {
      Structure s = load_structure(cons_path);
      ConstraintSet set =
          symbolic_constraints(s, cons_unknown, constraint_suite_from_name(cons_suite));
      io.emit(set.to_string());
      return finish(0);
    }

    if (app.got_subcommand(c_fam)) {
      Structure s = load_structure(fam_path);
      ConstraintSet set =
          symbolic_constraints(s, fam_unknown, constraint_suite_from_name(fam_suite));
      std::vector<FamilyCase> cases;
      for (const auto& c : fam_cases) cases.push_back(parse_case(c, s.sig));
      FamilyReport rep = verify_family(set, cases);
      ordered_json doc;
      doc["command"] = "verify-family";
      doc["input"] = fam_path;
      doc["digest"] = fnv1a_digest(read_file(fam_path));
      doc["suite"] = fam_suite;
      doc["status"] = rep.pass() ? "pass" : "fail";
      ordered_json jcases = ordered_json::array();
      for (const auto& c : rep.cases) {
        ordered_json failed = ordered_json::array();
        for (const auto& p : c.failed) failed.push_back(p.to_string());
        jcases.push_back({{"case", c.label},
                          {"status", c.failed.empty() ? "pass" : "fail"},
                          {"failed", failed}});
      }
      doc["cases"] = std::move(jcases);
      return finish(emit_report(io, std::move(doc)));
    }
  } catch (const precondition_error& e) {
    ordered_json doc;
    doc["command"] = "build";
    doc["status"] = "fail";
    doc["error"] = e.what();
    ordered_json repj = report_to_json(e.report);
    for (auto& [k, v] : repj.items())
      if (k != "status") doc[k] = std::move(v);
    if (!io.quiet) err << "error: " << e.what() << "\n";
    io.emit(io.format == "text" ? report_text(doc) : doc.dump(2) + "\n");
    return finish(1);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return finish(2);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return finish(2);
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace lcs

#endif

#ifndef LCS_IO_HPP
#define LCS_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lcs/axioms.hpp"
#include "lcs/liefun.hpp"
#include "lcs/structure.hpp"

namespace lcs {

using ordered_json = nlohmann::ordered_json;

inline std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << bytes;
}

// ---------------------------------------------------------------------------
// Structure files.
// ---------------------------------------------------------------------------

inline Structure structure_from_json(const ordered_json& j) {
  if (!j.is_object()) throw error("structure file: top level must be an object");
  for (const char* field : {"kind", "rank", "generators", "tables"})
    if (!j.contains(field)) throw error(std::string("structure file: missing field '") + field + "'");

  Kind kind = kind_from_name(j.at("kind").get<std::string>());
  auto sig = std::make_shared<Signature>();
  sig->rank = j.at("rank").get<std::uint32_t>();
  for (const auto& g : j.at("generators")) {
    std::string parity = g.at("parity").get<std::string>();
    if (parity != "even" && parity != "odd")
      throw error("structure file: parity must be \"even\" or \"odd\"");
    sig->generators.push_back(
        {g.at("name").get<std::string>(), parity == "even" ? Parity::Even : Parity::Odd});
  }
  if (j.contains("parameters"))
    for (const auto& p : j.at("parameters")) sig->parameters.push_back(p.get<std::string>());
  sig->validate();
  SigPtr csig = sig;

  Structure out{csig, kind, {}};
  bool finite = !kind_is_conformal(kind);
  for (const auto& role : kind_roles(kind, csig->rank)) out.tables.emplace(role, ProductTable(csig));
  if (!j.at("tables").is_object()) throw error("structure file: 'tables' must be an object");
  for (const auto& [role, entries] : j.at("tables").items()) {
    auto it = out.tables.find(role);
    if (it == out.tables.end())
      throw error("structure file: table '" + role + "' is not a role of kind '" +
                  kind_name(kind) + "'");
    for (const auto& e : entries) {
      std::string left = e.at("left").get<std::string>();
      std::string right = e.at("right").get<std::string>();
      std::string value = e.at("value").get<std::string>();
      ModValue v;
      try {
        v = parse_modvalue(value, csig, finite);
      } catch (const error& err) {
        throw error("table '" + role + "' entry (" + left + ", " + right + "): " + err.what());
      }
      if (it->second.entries().count({left, right}))
        throw error("table '" + role + "' has a duplicate entry (" + left + ", " + right + ")");
      try {
        it->second.set_entry(left, right, std::move(v));
      } catch (const error& err) {
        throw error(std::string(err.what()));
      }
    }
  }
  out.validate();
  return out;
}

inline Structure load_structure(const std::string& path) {
  ordered_json j;
  std::string bytes = read_file(path);
  try {
    j = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(path + ": " + e.what());
  }
  try {
    return structure_from_json(j);
  } catch (const error& e) {
    throw error(path + ": " + e.what());
  }
}

inline ordered_json structure_to_json(const Structure& s) {
  ordered_json j;
  j["kind"] = kind_name(s.kind);
  j["rank"] = s.sig->rank;
  j["generators"] = ordered_json::array();
  for (const auto& g : s.sig->generators)
    j["generators"].push_back(
        {{"name", g.name}, {"parity", g.parity == Parity::Even ? "even" : "odd"}});
  j["parameters"] = s.sig->parameters;
  ordered_json tables = ordered_json::object();
  for (const auto& role : kind_roles(s.kind, s.sig->rank)) {
    ordered_json list = ordered_json::array();
    const ProductTable& tab = s.table(role);
    for (const auto& a : s.sig->generators)
      for (const auto& b : s.sig->generators) {
        const ModValue& v = tab.entry(a.name, b.name);
        if (v.is_zero()) continue;
        list.push_back({{"left", a.name}, {"right", b.name}, {"value", v.to_string()}});
      }
    tables[role] = std::move(list);
  }
  j["tables"] = std::move(tables);
  return j;
}

inline std::string structure_to_string(const Structure& s) {
  return structure_to_json(s).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

inline ordered_json report_to_json(const CheckReport& rep) {
  ordered_json j;
  j["suite"] = rep.suite;
  j["status"] = rep.pass() ? "pass" : "fail";
  ordered_json findings = ordered_json::array();
  for (const auto& f : rep.findings)
    findings.push_back(
        {{"axiom", f.axiom}, {"tuple", f.tuple}, {"residual", f.residual.to_string()}});
  j["findings"] = std::move(findings);
  return j;
}

inline ordered_json report_to_json(const WindowReport& rep) {
  ordered_json j;
  j["suite"] = rep.suite;
  j["status"] = rep.pass() ? "pass" : "fail";
  ordered_json findings = ordered_json::array();
  for (const auto& f : rep.findings) {
    ordered_json tuple = ordered_json::array();
    for (const auto& g : f.tuple) tuple.push_back(g.to_string());
    findings.push_back(
        {{"axiom", f.axiom}, {"tuple", tuple}, {"residual", f.residual.to_string()}});
  }
  j["findings"] = std::move(findings);
  j["checked"] = rep.checked;
  j["skipped"] = rep.skipped;
  return j;
}

inline std::string report_text(const ordered_json& doc) {
  std::string out;
  for (const auto& [key, val] : doc.items()) {
    if (key == "findings") continue;
    out += key + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
  }
  if (doc.contains("findings"))
    for (const auto& f : doc.at("findings")) {
      out += "finding: " + f.at("axiom").get<std::string>() + " [";
      bool first = true;
      for (const auto& t : f.at("tuple")) {
        if (!first) out += ",";
        out += t.get<std::string>();
        first = false;
      }
      out += "] residual: " + f.at("residual").get<std::string>() + "\n";
    }
  return out;
}

}  // namespace lcs

#endif

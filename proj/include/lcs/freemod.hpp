#ifndef LCS_FREEMOD_HPP
#define LCS_FREEMOD_HPP

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcs/error.hpp"
#include "lcs/parse.hpp"
#include "lcs/ring.hpp"

namespace lcs {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

// (-1)^{alpha beta}
inline Scalar parity_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? Scalar(-1) : Scalar(1);
}

enum class ParityClass { Zero, Even, Odd, Mixed };

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
};

// Rank, parity-graded generators and declared symbolic parameters.
struct Signature {
  std::uint32_t rank = 1;
  std::vector<Generator> generators;
  std::vector<std::string> parameters;

  int gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return static_cast<int>(i);
    return -1;
  }
  Parity parity_of(const std::string& name) const {
    int i = gen_index(name);
    if (i < 0) throw error("unknown generator '" + name + "'");
    return generators[static_cast<std::size_t>(i)].parity;
  }
  bool has_param(const std::string& name) const {
    for (const auto& p : parameters)
      if (p == name) return true;
    return false;
  }

  void validate() const {
    if (rank < 1) throw error("signature: rank must be >= 1");
    if (generators.empty()) throw error("signature: no generators");
    auto check_name = [](const std::string& n, const char* what) {
      if (n.empty()) throw error(std::string("signature: empty ") + what + " name");
      if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
        throw error(std::string("signature: bad ") + what + " name '" + n + "'");
      for (char c : n)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw error(std::string("signature: bad ") + what + " name '" + n + "'");
      VarClass cls;
      std::uint32_t idx;
      if (reserved_var_ident(n, cls, idx))
        throw error(std::string("signature: ") + what + " name '" + n + "' is a reserved variable spelling");
    };
    for (std::size_t i = 0; i < generators.size(); ++i) {
      check_name(generators[i].name, "generator");
      for (std::size_t j = i + 1; j < generators.size(); ++j)
        if (generators[i].name == generators[j].name)
          throw error("signature: duplicate generator '" + generators[i].name + "'");
    }
    for (std::size_t i = 0; i < parameters.size(); ++i) {
      check_name(parameters[i], "parameter");
      for (std::size_t j = i + 1; j < parameters.size(); ++j)
        if (parameters[i] == parameters[j])
          throw error("signature: duplicate parameter '" + parameters[i] + "'");
      if (gen_index(parameters[i]) >= 0)
        throw error("signature: parameter '" + parameters[i] + "' collides with a generator");
    }
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    if (a.rank != b.rank || a.generators.size() != b.generators.size() ||
        a.parameters != b.parameters)
      return false;
    for (std::size_t i = 0; i < a.generators.size(); ++i)
      if (a.generators[i].name != b.generators[i].name ||
          a.generators[i].parity != b.generators[i].parity)
        return false;
    return true;
  }
};

using SigPtr = std::shared_ptr<const Signature>;

inline SigPtr make_signature(std::uint32_t rank, std::vector<Generator> gens,
                             std::vector<std::string> params = {}) {
  auto sig = std::make_shared<Signature>();
  sig->rank = rank;
  sig->generators = std::move(gens);
  sig->parameters = std::move(params);
  sig->validate();
  return sig;
}

// Element of the free module: finite map generator -> polynomial coefficient.
class ModValue {
 public:
  ModValue() = default;
  explicit ModValue(SigPtr sig) : sig_(std::move(sig)) {}

  static ModValue zero(SigPtr sig) { return ModValue(std::move(sig)); }
  static ModValue gen(SigPtr sig, const std::string& name) {
    return of(std::move(sig), name, Poly::constant(Scalar(1)));
  }
  static ModValue of(SigPtr sig, const std::string& name, Poly coeff) {
    ModValue v(std::move(sig));
    v.check_gen(name);
    if (!coeff.is_zero()) v.comps_.emplace(name, std::move(coeff));
    return v;
  }

  const SigPtr& signature() const { return sig_; }
  const std::map<std::string, Poly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  const Poly& component(const std::string& name) const {
    static const Poly kZero;
    auto it = comps_.find(name);
    return it == comps_.end() ? kZero : it->second;
  }

  void add_component(const std::string& name, const Poly& p) {
    check_gen(name);
    if (p.is_zero()) return;
    auto it = comps_.find(name);
    if (it == comps_.end()) {
      comps_.emplace(name, p);
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  friend ModValue operator+(const ModValue& a, const ModValue& b) {
    if (!a.sig_) return b;
    if (!b.sig_) return a;
    a.check_compatible(b);
    ModValue r = a;
    for (const auto& [g, p] : b.comps_) r.add_component(g, p);
    return r;
  }
  friend ModValue operator-(const ModValue& a, const ModValue& b) { return a + (-b); }
  friend ModValue operator-(const ModValue& a) {
    ModValue r(a.sig_);
    for (const auto& [g, p] : a.comps_) r.comps_.emplace(g, -p);
    return r;
  }
  friend ModValue operator*(const Poly& p, const ModValue& a) {
    ModValue r(a.sig_);
    if (p.is_zero()) return r;
    for (const auto& [g, q] : a.comps_) {
      Poly prod = p * q;
      if (!prod.is_zero()) r.comps_.emplace(g, std::move(prod));
    }
    return r;
  }
  friend ModValue operator*(const Scalar& c, const ModValue& a) {
    return Poly::constant(c) * a;
  }

  friend bool operator==(const ModValue& a, const ModValue& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const ModValue& a, const ModValue& b) { return !(a == b); }

  ParityClass parity_class() const {
    if (comps_.empty()) return ParityClass::Zero;
    bool even = false, odd = false;
    for (const auto& [g, p] : comps_)
      (sig_->parity_of(g) == Parity::Even ? even : odd) = true;
    if (even && odd) return ParityClass::Mixed;
    return even ? ParityClass::Even : ParityClass::Odd;
  }

  ModValue map_components(const std::map<VarId, Poly>& subst) const {
    ModValue r(sig_);
    for (const auto& [g, p] : comps_) {
      Poly q = p.subst(subst);
      if (!q.is_zero()) r.comps_.emplace(g, std::move(q));
    }
    return r;
  }

  // Components in signature order; multi-term coefficients parenthesized.
  std::string to_string() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& gen : sig_->generators) {
      auto it = comps_.find(gen.name);
      if (it == comps_.end()) continue;
      std::string cs = it->second.to_string();
      std::string part;
      if (it->second.size() > 1) {
        part = "(" + cs + ")*" + gen.name;
      } else if (cs == "1") {
        part = gen.name;
      } else if (cs == "-1") {
        part = "-" + gen.name;
      } else {
        part = cs + "*" + gen.name;
      }
      if (!out.empty() && part[0] != '-') out += "+";
      out += part;
    }
    return out;
  }

 private:
  SigPtr sig_;
  std::map<std::string, Poly> comps_;

  void check_gen(const std::string& name) const {
    if (!sig_ || sig_->gen_index(name) < 0)
      throw error("modvalue: unknown generator '" + name + "'");
  }
  void check_compatible(const ModValue& b) const {
    if (!sig_ || !b.sig_) {
      if (!comps_.empty() && !b.comps_.empty()) throw error("modvalue: missing signature");
      return;
    }
    if (sig_ != b.sig_ && !(*sig_ == *b.sig_)) throw error("modvalue: signature mismatch");
  }
};

// Parses a module-element expression: polynomial coefficients times
// generators, linear in the generators.
inline ModValue parse_modvalue(const std::string& src, const SigPtr& sig, bool finite_table) {
  ParseContext ctx;
  ctx.rank = sig->rank;
  ctx.allow_t_lam = !finite_table;
  ctx.allow_mu = false;
  for (const auto& p : sig->parameters) ctx.params.insert(p);
  for (const auto& g : sig->generators) ctx.generators.insert(g.name);
  Poly raw = parse_poly(src, ctx);

  ModValue out(sig);
  for (const auto& [m, c] : raw.terms()) {
    std::string gen;
    int gen_deg = 0;
    Monomial rest;
    for (const auto& [v, e] : m.exp) {
      if (v.cls == VarClass::Param && sig->gen_index(v.name) >= 0) {
        gen = v.name;
        gen_deg += e;
      } else {
        rest.exp[v] = e;
      }
    }
    if (gen_deg != 1)
      throw error("value '" + src + "' is not linear in the generators");
    out.add_component(gen, Poly::term(rest, c));
  }
  return out;
}

}  // namespace lcs

#endif

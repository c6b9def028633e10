#ifndef LCS_LIEFUN_HPP
#define LCS_LIEFUN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/lambda.hpp"
#include "lcs/structure.hpp"

namespace lcs {

// Basis symbol g_n of the annihilation algebra, n an integer vector.
struct IndexedGen {
  std::string gen;
  std::vector<long long> index;

  friend bool operator<(const IndexedGen& a, const IndexedGen& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.index < b.index;
  }
  friend bool operator==(const IndexedGen& a, const IndexedGen& b) {
    return a.gen == b.gen && a.index == b.index;
  }

  std::string to_string() const {
    std::string out = gen + "[";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(index[i]);
    }
    return out + "]";
  }
};

// Finite sum of indexed generators with parameter-polynomial coefficients;
// the module relation (T_i g)_n = -n_i g_{n-e_i} is applied eagerly, so only
// plain generator symbols appear.
struct FormalSum {
  std::map<IndexedGen, Poly> terms;

  bool is_zero() const { return terms.empty(); }

  void add(const IndexedGen& g, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(g);
    if (it == terms.end()) {
      terms.emplace(g, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend FormalSum operator+(const FormalSum& a, const FormalSum& b) {
    FormalSum r = a;
    for (const auto& [g, c] : b.terms) r.add(g, c);
    return r;
  }
  friend FormalSum operator-(const FormalSum& a, const FormalSum& b) {
    FormalSum r = a;
    for (const auto& [g, c] : b.terms) r.add(g, -c);
    return r;
  }
  friend FormalSum operator*(const Poly& p, const FormalSum& a) {
    FormalSum r;
    for (const auto& [g, c] : a.terms) r.add(g, p * c);
    return r;
  }
  friend FormalSum operator*(const Scalar& s, const FormalSum& a) {
    return Poly::constant(s) * a;
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms == b.terms; }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms) {
      std::string cs = c.to_string();
      if (c.size() > 1) cs = "(" + cs + ")";
      if (!out.empty()) out += " + ";
      out += cs + "*" + g.to_string();
    }
    return out;
  }
};

// Falling-factorial binomial, valid for negative upper entries:
// C(m,j) = prod_i m_i (m_i-1) ... (m_i-j_i+1) / j_i!
inline Scalar binom_falling(const std::vector<long long>& m, const std::vector<unsigned>& j) {
  Scalar r(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (unsigned k = 0; k < j[i]; ++k)
      r = r * Scalar(m[i] - static_cast<long long>(k));
    r = r / Scalar::factorial(j[i]);
  }
  return r;
}

// (T^p g)_k = prod_i (-1)^{p_i} k_i (k_i-1) ... (k_i-p_i+1) g_{k-p}
inline Scalar t_power_factor(const std::vector<long long>& k, const std::vector<unsigned>& p) {
  Scalar r(1);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (unsigned q = 0; q < p[i]; ++q)
      r = r * Scalar(-(k[i] - static_cast<long long>(q)));
  return r;
}

// [a_m, b_n] = sum_j C(m,j) (a_(j) b)_{m+n-j}, with T-powers in the
// divided-power coefficients pushed onto indices.
inline FormalSum annihilation_bracket(const ProductTable& tab, const std::string& a,
                                      const std::vector<long long>& m, const std::string& b,
                                      const std::vector<long long>& n) {
  const SigPtr& sig = tab.signature();
  std::uint32_t rank = sig->rank;
  if (m.size() != rank || n.size() != rank)
    throw error("annihilation: index vectors must have length " + std::to_string(rank));

  FormalSum out;
  const ModValue& entry = tab.entry(a, b);
  for (const auto& j : family_support(entry, tab.family())) {
    ModValue coeff = coeff_extract(entry, tab.family(), j);  // a_(j) b, T-polynomial value
    Scalar cmj = binom_falling(m, j);
    if (cmj.is_zero()) continue;
    std::vector<long long> base(rank);
    for (std::uint32_t i = 0; i < rank; ++i)
      base[i] = m[i] + n[i] - static_cast<long long>(j[i]);
    for (const auto& [g, p] : coeff.components()) {
      for (const auto& [mono, c] : p.terms()) {
        std::vector<unsigned> tpow(rank, 0);
        Poly param_part = Poly::constant(Scalar(1));
        for (const auto& [var, e] : mono.exp) {
          if (var.cls == VarClass::T) tpow[var.index - 1] = static_cast<unsigned>(e);
          else param_part = param_part * Poly::variable(var).pow(static_cast<unsigned>(e));
        }
        Scalar tf = t_power_factor(base, tpow);
        if (tf.is_zero()) continue;
        std::vector<long long> idx(rank);
        for (std::uint32_t i = 0; i < rank; ++i)
          idx[i] = base[i] - static_cast<long long>(tpow[i]);
        out.add({g, idx}, (cmj * tf * c) * param_part);
      }
    }
  }
  return out;
}

// Integer box, one interval per dimension.
struct Window {
  std::vector<std::pair<long long, long long>> dims;

  static Window uniform(std::uint32_t rank, long long lo, long long hi) {
    if (lo > hi) throw error("window: lo > hi");
    Window w;
    w.dims.assign(rank, {lo, hi});
    return w;
  }
  bool contains(const std::vector<long long>& idx) const {
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (idx[i] < dims[i].first || idx[i] > dims[i].second) return false;
    return true;
  }
  // enumerates the box in lexicographic order
  std::vector<std::vector<long long>> points() const {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) cur[i] = dims[i].first;
    for (;;) {
      out.push_back(cur);
      std::size_t i = dims.size();
      while (i-- > 0) {
        if (cur[i] < dims[i].second) {
          ++cur[i];
          for (std::size_t k = i + 1; k < dims.size(); ++k) cur[k] = dims[k].first;
          break;
        }
        if (i == 0) return out;
      }
    }
  }
};

// Structure constants of the annihilation algebra over all window pairs,
// one table per conformal role. Outputs may leave the window.
struct LoopTables {
  SigPtr sig;
  Window window;
  std::map<std::string, std::map<std::pair<IndexedGen, IndexedGen>, FormalSum>> tables;

  // nullopt marks an out-of-window operand
  std::optional<FormalSum> lookup(const std::string& role, const IndexedGen& x,
                                  const IndexedGen& y) const {
    if (!window.contains(x.index) || !window.contains(y.index)) return std::nullopt;
    const auto& tab = tables.at(role);
    auto it = tab.find({x, y});
    return it == tab.end() ? FormalSum{} : it->second;
  }

  // bilinear extension; nullopt if any nonzero operand leaves the window
  std::optional<FormalSum> compose(const std::string& role, const FormalSum& x,
                                   const IndexedGen& y) const {
    FormalSum out;
    for (const auto& [g, c] : x.terms) {
      auto r = lookup(role, g, y);
      if (!r) return std::nullopt;
      out = out + c * *r;
    }
    return out;
  }
  std::optional<FormalSum> compose(const std::string& role, const IndexedGen& x,
                                   const FormalSum& y) const {
    FormalSum out;
    for (const auto& [g, c] : y.terms) {
      auto r = lookup(role, x, g);
      if (!r) return std::nullopt;
      out = out + c * *r;
    }
    return out;
  }
};

// Evaluates the annihilation-algebra operations on every pair of window
// indices (Lie bracket for "bracket", Novikov operation for "product").
inline LoopTables loop_gd_structure(const Structure& s, const Window& window) {
  if (!kind_is_conformal(s.kind)) throw error("loop: input must be a conformal structure");
  LoopTables out{s.sig, window, {}};
  auto pts = window.points();
  for (const auto& [role, tab] : s.tables) {
    auto& table = out.tables[role];
    for (const auto& a : s.sig->generators)
      for (const auto& b : s.sig->generators)
        for (const auto& m : pts)
          for (const auto& n : pts) {
            FormalSum v = annihilation_bracket(tab, a.name, m, b.name, n);
            if (!v.is_zero())
              table.emplace(std::make_pair(IndexedGen{a.name, m}, IndexedGen{b.name, n}),
                            std::move(v));
          }
  }
  return out;
}

struct WindowFinding {
  std::string axiom;
  std::vector<IndexedGen> tuple;
  FormalSum residual;
};

struct WindowReport {
  std::string suite;
  std::vector<WindowFinding> findings;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool pass() const { return findings.empty(); }
};

// Runs a finite suite over all window tuples whose intermediate terms stay
// inside the window; tuples that escape are skipped and counted.
inline WindowReport window_check(const LoopTables& lt, Kind suite) {
  WindowReport rep{kind_name(suite), {}, 0, 0};
  const SigPtr& sig = lt.sig;
  auto pts = lt.window.points();

  std::vector<IndexedGen> univ;
  for (const auto& g : sig->generators)
    for (const auto& m : pts) univ.push_back({g.name, m});
  auto parity_of = [&](const IndexedGen& g) { return sig->parity_of(g.gen); };
  auto note = [&](const std::string& axiom, std::vector<IndexedGen> tuple,
                  std::optional<FormalSum> residual) {
    if (!residual) {
      ++rep.skipped;
      return;
    }
    ++rep.checked;
    if (!residual->is_zero()) rep.findings.push_back({axiom, std::move(tuple), *residual});
  };
  auto entry = [&](const std::string& role, const IndexedGen& x, const IndexedGen& y) {
    return *lt.lookup(role, x, y);
  };

  auto lie_suite = [&](const std::string& role) {
    for (const auto& x : univ)
      for (const auto& y : univ) {
        FormalSum skew = entry(role, x, y) +
                         parity_sign(parity_of(x), parity_of(y)) * entry(role, y, x);
        note("skew", {x, y}, skew);
      }
    for (const auto& x : univ)
      for (const auto& y : univ)
        for (const auto& z : univ) {
          auto t1 = lt.compose(role, x, entry(role, y, z));
          auto t2 = lt.compose(role, entry(role, x, y), z);
          auto t3 = lt.compose(role, y, entry(role, x, z));
          if (!t1 || !t2 || !t3) {
            ++rep.skipped;
            continue;
          }
          ++rep.checked;
          FormalSum res = *t1 - *t2 - parity_sign(parity_of(x), parity_of(y)) * *t3;
          if (!res.is_zero()) rep.findings.push_back({"jacobi", {x, y, z}, res});
        }
  };

  auto novikov_suite = [&](const std::string& role) {
    for (const auto& x : univ)
      for (const auto& y : univ)
        for (const auto& z : univ) {
          auto ab_c = lt.compose(role, entry(role, x, y), z);
          auto ac_b = lt.compose(role, entry(role, x, z), y);
          if (ab_c && ac_b)
            note("right-commutativity", {x, y, z},
                 *ab_c - parity_sign(parity_of(y), parity_of(z)) * *ac_b);
          else
            ++rep.skipped;
          auto a_bc = lt.compose(role, x, entry(role, y, z));
          auto ba_c = lt.compose(role, entry(role, y, x), z);
          auto b_ac = lt.compose(role, y, entry(role, x, z));
          if (ab_c && a_bc && ba_c && b_ac)
            note("left-symmetry", {x, y, z},
                 (*ab_c - *a_bc) -
                     parity_sign(parity_of(x), parity_of(y)) * (*ba_c - *b_ac));
          else
            ++rep.skipped;
        }
  };

  auto compat_suite = [&] {
    for (const auto& x : univ)
      for (const auto& y : univ)
        for (const auto& z : univ) {
          auto t1 = lt.compose("bracket", entry("product", x, y), z);
          auto t2 = lt.compose("product", entry("bracket", x, y), z);
          auto t3 = lt.compose("product", x, entry("bracket", y, z));
          auto t4 = lt.compose("bracket", entry("product", x, z), y);
          auto t5 = lt.compose("product", entry("bracket", x, z), y);
          if (!t1 || !t2 || !t3 || !t4 || !t5) {
            ++rep.skipped;
            continue;
          }
          ++rep.checked;
          Scalar s_bc = parity_sign(parity_of(y), parity_of(z));
          FormalSum res = *t1 + *t2 - *t3 - s_bc * *t4 - s_bc * *t5;
          if (!res.is_zero()) rep.findings.push_back({"gd-compat", {x, y, z}, res});
        }
  };

  switch (suite) {
    case Kind::LieSuper:
      lie_suite("bracket");
      break;
    case Kind::NovikovSuper:
      novikov_suite("product");
      break;
    case Kind::GDBialgebra:
      lie_suite("bracket");
      novikov_suite("product");
      compat_suite();
      break;
    default:
      throw error("window_check: unsupported suite");
  }
  return rep;
}

// Deterministic structure-constant export, one record per nonzero result.
inline std::string export_loop_tables(const LoopTables& lt) {
  std::string out;
  for (const auto& [role, table] : lt.tables)
    for (const auto& [pair, sum] : table) {
      out += role + " " + pair.first.to_string() + " " + pair.second.to_string() + " -> " +
             sum.to_string() + "\n";
    }
  return out;
}

}  // namespace lcs

#endif

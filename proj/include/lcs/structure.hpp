#ifndef LCS_STRUCTURE_HPP
#define LCS_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "lcs/error.hpp"
#include "lcs/lambda.hpp"

namespace lcs {

enum class Kind {
  LieConformal,
  NovikovConformalLeft,
  NovikovConformalRight,
  GDConformal,
  LieSuper,
  NovikovSuper,
  CommAssocSuper,
  GDBialgebra,
  NovikovPoisson,
  LiePoisson,
  GDNovikovPoisson,
  GeneralizedGD,
};

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::LieConformal: return "lie-conformal";
    case Kind::NovikovConformalLeft: return "novikov-conformal-left";
    case Kind::NovikovConformalRight: return "novikov-conformal-right";
    case Kind::GDConformal: return "gd-conformal";
    case Kind::LieSuper: return "lie-super";
    case Kind::NovikovSuper: return "novikov-super";
    case Kind::CommAssocSuper: return "comm-assoc-super";
    case Kind::GDBialgebra: return "gd-bialgebra";
    case Kind::NovikovPoisson: return "novikov-poisson";
    case Kind::LiePoisson: return "lie-poisson";
    case Kind::GDNovikovPoisson: return "gd-novikov-poisson";
    case Kind::GeneralizedGD: return "generalized-gd";
  }
  return "?";
}

inline Kind kind_from_name(const std::string& s) {
  for (Kind k : {Kind::LieConformal, Kind::NovikovConformalLeft, Kind::NovikovConformalRight,
                 Kind::GDConformal, Kind::LieSuper, Kind::NovikovSuper, Kind::CommAssocSuper,
                 Kind::GDBialgebra, Kind::NovikovPoisson, Kind::LiePoisson,
                 Kind::GDNovikovPoisson, Kind::GeneralizedGD})
    if (s == kind_name(k)) return k;
  throw error("unknown structure kind '" + s + "'");
}

inline bool kind_is_conformal(Kind k) {
  switch (k) {
    case Kind::LieConformal:
    case Kind::NovikovConformalLeft:
    case Kind::NovikovConformalRight:
    case Kind::GDConformal:
      return true;
    default:
      return false;
  }
}

// Table roles a structure of the given kind carries. For GeneralizedGD the
// rank counts the Novikov operations.
inline std::vector<std::string> kind_roles(Kind k, std::uint32_t rank) {
  switch (k) {
    case Kind::LieConformal:
    case Kind::LieSuper: return {"bracket"};
    case Kind::NovikovConformalLeft:
    case Kind::NovikovConformalRight:
    case Kind::NovikovSuper: return {"product"};
    case Kind::GDConformal:
    case Kind::GDBialgebra: return {"bracket", "product"};
    case Kind::CommAssocSuper: return {"mult"};
    case Kind::NovikovPoisson: return {"product", "mult"};
    case Kind::LiePoisson: return {"bracket", "mult"};
    case Kind::GDNovikovPoisson: return {"bracket", "product", "mult"};
    case Kind::GeneralizedGD: {
      std::vector<std::string> roles{"bracket"};
      for (std::uint32_t i = 1; i <= rank; ++i)
        roles.push_back("product_" + std::to_string(i));
      return roles;
    }
  }
  return {};
}

// A kind tag plus its role-named product tables over one signature.
struct Structure {
  SigPtr sig;
  Kind kind = Kind::LieConformal;
  std::map<std::string, ProductTable> tables;

  const ProductTable& table(const std::string& role) const {
    auto it = tables.find(role);
    if (it == tables.end())
      throw error(std::string(kind_name(kind)) + ": missing table '" + role + "'");
    return it->second;
  }

  void validate() const {
    sig->validate();
    for (const auto& role : kind_roles(kind, sig->rank)) table(role);
    for (const auto& [role, tab] : tables) {
      if (!(*tab.signature() == *sig)) throw error("table '" + role + "' signature mismatch");
      if (!kind_is_conformal(kind) && !tab.has_const_entries())
        throw error(std::string(kind_name(kind)) + ": table '" + role +
                    "' must have constant entries");
      if (kind_is_conformal(kind))
        for (const auto& [pair, v] : tab.entries())
          for (const auto& [g, p] : v.components())
            if (p.uses_class(VarClass::Mu))
              throw error("table '" + role + "' entry (" + pair.first + ", " + pair.second +
                          ") uses internal m-variables");
    }
  }
};

}  // namespace lcs

#endif

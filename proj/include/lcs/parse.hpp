#ifndef LCS_PARSE_HPP
#define LCS_PARSE_HPP

#include <cctype>
#include <set>
#include <string>

#include "lcs/error.hpp"
#include "lcs/ring.hpp"

namespace lcs {

// Recognizes the reserved spellings T<n>, l<n>, m<n>.
inline bool reserved_var_ident(const std::string& s, VarClass& cls, std::uint32_t& idx) {
  if (s.size() < 2) return false;
  char h = s[0];
  if (h != 'T' && h != 'l' && h != 'm') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  cls = h == 'T' ? VarClass::T : h == 'l' ? VarClass::Lam : VarClass::Mu;
  idx = static_cast<std::uint32_t>(std::stoul(s.substr(1)));
  return true;
}

struct ParseContext {
  std::uint32_t rank = 1;
  std::set<std::string> params;
  std::set<std::string> generators;  // resolved as Param-class markers, split by caller
  bool allow_t_lam = true;           // finite tables forbid T/l/m
  bool allow_mu = false;             // files never carry m-variables
};

// Recursive-descent parser for the expression grammar:
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := nat | nat "/" nat | ident | "(" expr ")"
class ExprParser {
 public:
  ExprParser(const std::string& src, const ParseContext& ctx) : src_(src), ctx_(ctx) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& src_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw error("parse error at position " + std::to_string(pos_) + ": " + msg + " in '" + src_ + "'");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else break;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly p = atom();
    if (eat('^')) {
      std::string n = nat();
      unsigned long e = std::stoul(n);
      if (e > 64) fail("exponent too large");
      p = p.pow(static_cast<unsigned>(e));
    }
    return p;
  }

  std::string nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected number");
    return src_.substr(start, pos_ - start);
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n = nat();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        std::string d = nat();
        return Poly::constant(Scalar(BigInt::from_string(n), BigInt::from_string(d)));
      }
      return Poly::constant(Scalar(BigInt::from_string(n), BigInt(1)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail("unexpected character");
  }

  Poly ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    VarClass cls;
    std::uint32_t idx;
    if (reserved_var_ident(name, cls, idx)) {
      if (!ctx_.allow_t_lam) fail("variable '" + name + "' not allowed in a finite table");
      if (cls == VarClass::Mu && !ctx_.allow_mu) fail("m-variables are internal only");
      if (idx < 1 || idx > ctx_.rank) fail("variable '" + name + "' out of rank range");
      return Poly::variable({cls, idx, {}});
    }
    if (ctx_.generators.count(name)) return Poly::variable(VarId::param(name));
    if (ctx_.params.count(name)) return Poly::variable(VarId::param(name));
    fail("unknown identifier '" + name + "'");
  }
};

inline Poly parse_poly(const std::string& src, const ParseContext& ctx) {
  return ExprParser(src, ctx).parse();
}

}  // namespace lcs

#endif

#include "valsg/parser.hpp"

#include <cctype>

namespace valsg {

namespace {

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& vars, std::uint32_t cap)
      : s_(text), vars_(vars), cap_(cap) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw parse_error(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = MPoly::mul(acc, unary(), cap_);
      } else if (accept('/')) {
        std::size_t at = pos_;
        MPoly d = unary();
        if (d.is_zero()) throw parse_error("division by zero", at);
        if (d.total_degree() != 0) throw parse_error("division by a non-constant polynomial", at);
        acc = Rat(1 / d.leading_coeff()) * acc;
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (at >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[at])))
        throw parse_error("expected a natural exponent", at);
      Int e = natural();
      if (e > cap_) throw parse_error("exponent exceeds degree cap", at);
      try {
        return base.pow(static_cast<unsigned>(e.get_ui()), cap_);
      } catch (const domain_error& err) {
        throw parse_error(err.what(), at);
      }
    }
    return base;
  }

  Int natural() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(s_.substr(start, pos_ - start));
  }

  MPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) throw parse_error("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(vars_, Rat(natural()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (const auto& v : vars_)
        if (v == name) return MPoly::variable(vars_, name);
      throw parse_error("unknown variable '" + name + "'", start);
    }
    throw parse_error(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::uint32_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, std::uint32_t degree_cap) {
  return Parser(text, vars, degree_cap).parse();
}

}  // namespace valsg

#ifndef FPINV_PARSE_HPP
#define FPINV_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>

#include "fpinv/common.hpp"
#include "fpinv/polynomial.hpp"

namespace fpinv {

// Recursive-descent parser for the polynomial grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := identifier | natural | '(' expr ')'
// There is no implicit multiplication and no unary minus; coefficients are
// naturals reduced mod p.  All errors carry the byte offset of the problem.
namespace detail {

class PolyParser {
 public:
  PolyParser(const ContextPtr& ctx, const std::string& src)
      : ctx_(ctx), src_(src) {}

  Polynomial run() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character after expression");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " +
                         what,
                     pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial f = term();
    for (;;) {
      if (at('+')) {
        ++pos_;
        f = f + term();
      } else if (at('-')) {
        ++pos_;
        f = f - term();
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (at('*')) {
      ++pos_;
      f = f * factor();
    }
    return f;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (at('^')) {
      ++pos_;
      std::uint64_t n = natural_exponent();
      b = b.pow(n);
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (std::isdigit(static_cast<unsigned char>(c))) return natural_constant();
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return f;
    }
    fail("expected identifier, number, or '('");
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    std::size_t idx = ctx_->var_index(name);
    if (idx == VariableContext::npos)
      throw ParseError("unknown identifier '" + name + "' at offset " +
                           std::to_string(start),
                       start);
    Monomial m(ctx_->nvars());
    m.e[idx] = 1;
    return Polynomial::from_term(ctx_, m, 1);
  }

  // Coefficient literal: folded mod p while scanning, so arbitrarily long
  // digit strings are fine.
  Polynomial natural_constant() {
    std::uint64_t p = ctx_->p();
    std::uint64_t v = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = (v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0')) % p;
      ++pos_;
    }
    return Polynomial::constant(ctx_, static_cast<std::int64_t>(v));
  }

  // Exponent literal: must fit; values above 2^31 are rejected here.
  std::uint64_t natural_exponent() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= src_.size() ||
        !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a natural number exponent");
    std::uint64_t v = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > (1ull << 31))
        throw ParseError("exponent overflow at offset " +
                             std::to_string(start) + ": literal exceeds 2^31",
                         start);
      ++pos_;
    }
    return v;
  }

  ContextPtr ctx_;
  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(const ContextPtr& ctx, const std::string& src) {
  return detail::PolyParser(ctx, src).run();
}

}  // namespace fpinv

#endif  // FPINV_PARSE_HPP

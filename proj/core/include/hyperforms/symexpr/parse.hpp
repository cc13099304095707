#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperforms/symexpr/expr.hpp"

namespace hyperforms::symexpr {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string what, std::size_t position)
      : std::runtime_error(std::move(what)), position(position) {}
  std::size_t position;
};

class SymbolOutOfRange : public std::runtime_error {
 public:
  SymbolOutOfRange(std::string what, int index, int limit)
      : std::runtime_error(std::move(what)), index(index), limit(limit) {}
  int index;
  int limit;
};

// Grammar (whitespace insignificant):
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := "-" unary | factor
//   factor := base ("^" integer)?
//   base   := number | symbol | "(" expr ")" | ("sin"|"cos"|"sqrt") "(" expr ")"
//   symbol := "f" digits          with 1 <= digits <= 2m+1
//   number := digits ["." digits]  (exact rational)
ExprPtr parse_expr(std::string_view text, int m);

}  // namespace hyperforms::symexpr

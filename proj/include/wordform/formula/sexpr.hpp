#pragma once

#include <string>
#include <string_view>

#include "wordform/formula/formula.hpp"

namespace wordform {

/// Text form: `0`, `1`, `x:I`, `!x:I`, `(and F...)`, `(or F...)`, `(maj F...)`.
/// Literal indices are one-based. Children print in canonical order.
std::string to_sexpr(const Formula& f);
/// Accepts children in any order. Throws ParseError.
Formula parse_sexpr(std::string_view text);

}  // namespace wordform

#pragma once

#include <string_view>

#include "cyclecalc/dsl/ast.hpp"

namespace cyclecalc::dsl {

/// Throws SyntaxError (kind "lexical" or "syntax") with the byte offset and
/// the set of tokens that would have been accepted there.
ExprPtr parse(std::string_view source);

}  // namespace cyclecalc::dsl

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "cyclecalc/dsl/ast.hpp"
#include "cyclecalc/graded.hpp"
#include "cyclecalc/ring.hpp"

namespace cyclecalc::dsl {

enum class Type { scalar, ring, cycle, w };
std::string to_string(Type t);

/// Static types; throws SyntaxError of kind "type" at the offending node.
Type typecheck(const Expr& e);

struct EvalContext {
    int genus = 1;
    std::optional<int> gonality;
    EquivalenceLevel level = EquivalenceLevel::chow();

    /// level_name is chow|hom|aj|alg; alg needs a gonality.
    static EvalContext make(int genus, std::optional<int> gonality, const std::string& level_name);
};

using Value = std::variant<Rational, RingElement, CurveClass, WDecomposition>;

/// Typechecks, evaluates exactly, then applies the context's equivalence
/// level to cycle-valued results. Math-level failures surface as the
/// library's exceptions (DomainError, GenusMismatch, ...).
Value evaluate(const Expr& e, const EvalContext& ctx);
Value evaluate(std::string_view source, const EvalContext& ctx);

std::string render(const Value& v);
Type type_of(const Value& v);

}  // namespace cyclecalc::dsl

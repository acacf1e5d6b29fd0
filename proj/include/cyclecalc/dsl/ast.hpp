#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclecalc/rational.hpp"

namespace cyclecalc::dsl {

/// Integer expression in the reserved symbol g, used for indices and exponents.
struct Index {
    enum class Kind { literal, genus, add, sub, mul, neg };
    Kind kind = Kind::literal;
    long value = 0;
    std::vector<Index> args;
    std::size_t offset = 0;

    long eval(int genus) const;
    bool mentions_genus() const;
};

bool same_shape(const Index& a, const Index& b);

enum class Node {
    scalar,
    gamma,
    pi,
    log1,
    transpose,
    mul,  // Pontryagin product, or scaling when one side is a scalar
    compose,
    power,
    add,
    sub,
    neg,
    apply,
    curve,
    curve_minus,
    push,
    w,
    ceresa,
    gs,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    Node kind;
    std::size_t offset = 0;
    Rational scalar;             // Node::scalar
    std::optional<Index> index;  // gamma, pi, power exponent, push, w
    std::vector<ExprPtr> args;
};

/// Structural equality, ignoring source offsets.
bool same_shape(const Expr& a, const Expr& b);

/// True for expressions built from literals only; decides scale vs pontryagin.
bool is_constant(const Expr& e);

std::string pretty(const Index& i);
std::string pretty(const Expr& e);
/// S-expression dump, e.g. apply(pontryagin_power(sub(gamma(1), gamma(0)), 3), C).
std::string tree(const Expr& e);

}  // namespace cyclecalc::dsl

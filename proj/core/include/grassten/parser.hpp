#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "grassten/freealg.hpp"

namespace grassten {

/// Expression AST over the free graded algebra. Variables come in three
/// spellings: y<i> (even), z<i> (odd) and x<i>, a parity placeholder that has
/// to be bound before expansion.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Constant, Var, XVar, Sum, Product, Power, Commutator, Jordan };

    Kind kind = Kind::Constant;

    // Constant (field-independent; realized as a Scalar at expansion time).
    std::int64_t num = 0;
    std::int64_t den = 1;

    Variable var;          // Var
    std::uint32_t xindex = 0;  // XVar

    std::vector<ExprPtr> args;        // Sum, Product, Commutator (arity >= 2), Jordan (2), Power (1)
    std::vector<bool> negated;        // Sum: per-summand sign
    unsigned exponent = 0;            // Power

    static ExprPtr constant(std::int64_t num, std::int64_t den = 1);
    static ExprPtr variable(Variable v);
    static ExprPtr xvar(std::uint32_t index);
    static ExprPtr sum(std::vector<ExprPtr> terms, std::vector<bool> negated);
    static ExprPtr product(std::vector<ExprPtr> factors);
    static ExprPtr power(ExprPtr base, unsigned e);
    static ExprPtr commutator(std::vector<ExprPtr> parts);
    static ExprPtr jordan(ExprPtr a, ExprPtr b);
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position(position) {}
    std::size_t position;
};

/// Grammar (whitespace insignificant, 'o' is the Jordan product):
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := jfactor (['*'] jfactor)*
///   jfactor := pfactor ('o' pfactor)*
///   pfactor := primary ('^' uint)*
///   primary := scalar | var | '(' expr ')' | '[' expr (',' expr)+ ']'
///   scalar  := uint ['/' uint]
///   var     := ('y'|'z'|'x') uint
ExprPtr parse(const std::string& text);

/// Round-trips through parse().
std::string render(const ExprPtr& e);

/// Indices of the parity placeholders occurring in e.
std::set<std::uint32_t> x_indices(const ExprPtr& e);

/// Replaces each x<i> by y<i> or z<i> according to the binding. Every
/// placeholder must be bound.
ExprPtr bind_x(const ExprPtr& e, const std::map<std::uint32_t, Variable::Parity>& binding);

/// All 2^k parity instantiations of the placeholders, in a deterministic
/// order; returns {e} when there are none.
std::vector<ExprPtr> instantiate_parities(const ExprPtr& e);

/// Full distribution into the canonical word map. Commutators expand
/// left-normed; placeholders must be bound. Coefficients are realized in the
/// session field.
GradedPolynomial expand(const ExprPtr& e);

}  // namespace grassten

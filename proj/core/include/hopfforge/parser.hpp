#pragma once

#include <map>
#include <string>

#include "hopfforge/freealg.hpp"

namespace hopfforge {

// Expression grammar for presentation files and CLI input.
//
//   expr   := term (('+' | '-') term)*
//   term   := ('-')* factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
//
// Identifiers are generator names or named field constants ("xi", "zeta",
// "w", ...). Juxtaposition is not multiplication; write "g*x", not "gx".
// Tensor expressions use "(#)" as the tensor separator between factor
// expressions of one term, e.g. "x(#)1 + g(#)x".
struct ExprEnv {
    const FieldCtx* F = nullptr;
    const GenSet* gens = nullptr;  // may be null: scalar-only expressions
    std::map<std::string, Fq> scalars;
};

NcPoly parse_expr(const std::string& text, const ExprEnv& env);
TensorPoly parse_tensor_expr(const std::string& text, const ExprEnv& env, int rank = 2);
// Scalar-valued expression (no generators allowed).
Fq parse_scalar(const std::string& text, const ExprEnv& env);

}  // namespace hopfforge

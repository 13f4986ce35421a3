#pragma once

// Exact-recipe expressions for algebraic arguments, evaluated in complex
// arithmetic at the working precision:
//
//     "4*i", "(1+sqrt(17))^2/4", "t=12^(1/4); (4-2t-2t^2+t^3)/sqrt(2)"
//
// Bindings before the last ';' name intermediate values. Multiplication may be
// implicit ("2t", "4i(7+t)"). Functions: sqrt cbrt exp log abs re im conj,
// and alpha(x), the singular modulus. Constants: i, pi.

#include "latticelab/complex.hpp"

#include <map>
#include <string>
#include <string_view>

namespace latticelab {

using RecipeBindings = std::map<std::string, Complex>;

/// Evaluates a recipe; `bindings` supplies extra named values.
Complex evaluate_recipe(std::string_view recipe, const RecipeBindings& bindings = {});

}  // namespace latticelab

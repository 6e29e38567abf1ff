#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepdiff/diffpoly.hpp"
#include "sepdiff/presentation.hpp"
#include "sepdiff/rational.hpp"

namespace sepdiff {

// Field presentation grammar: GF(<p>)(<c1>,<c2>,...;t). Names before ";"
// are constant generators; a trailing ";t" enables delta(t)=1, its absence
// means the trivial derivation. Errors carry the offending position.
FieldPresentation parse_field(std::string_view text);

// Expression grammar shared by elements of K and differential polynomials:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] base ('^' uint)*
//   base   := name | uint | d(var,k) | '(' expr ')'
// Ring variables may carry primes (x, x', x''); d(x,k) addresses higher
// derivatives. Any other name must be a generator of the presentation.
// Division is only defined by elements of K.
DiffPoly parse_dpoly(std::string_view text, const FieldPresentation& K,
                     std::span<const std::string> var_names);

RationalFunction parse_element(std::string_view text, const FieldPresentation& K);

}  // namespace sepdiff

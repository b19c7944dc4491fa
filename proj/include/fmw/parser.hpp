#pragma once

#include <string_view>

#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// Grammar (loosest to tightest): implication `->` (right associative),
// disjunction `|`, conjunction `&`, negation `!`. Quantifiers `E x.` and
// `A x.` scope as far right as possible. `true` and `false` are constants.
// Throws ParseError with line/column on bad syntax.
Formula parse(std::string_view text);

// As above, then checks every atom against `sig`: unknown symbols and arity
// mismatches raise InputError, as does `s` when the signature lacks it.
Formula parse(std::string_view text, const Signature& sig);

// The signature check used by parse(text, sig).
void check_signature(const Formula& f, const Signature& sig);

}  // namespace fmw

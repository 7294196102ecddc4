#pragma once

#include <string>
#include <string_view>

#include "ffgeom/ratfunc.hpp"

namespace ffgeom {

/// Parse a rational function in the ASCII grammar
///
///   ratfunc := sum
///   sum     := prod (('+'|'-') prod)*
///   prod    := atom (('*'|'/') atom)*
///   atom    := coeff ('*'? mono)? | mono | '(' sum ')'
///   mono    := 'x' ('^' int)?
///   coeff   := int               (digits, reduced mod p)
///
/// Whitespace is ignored. '/' and '*' bind tighter than '+'/'-', so
/// "1/x+1/x^2" is the sum of two fractions; negative powers of x arise only
/// through division. Throws ParseError (with byte offset and the expected
/// token) or ZeroDenominator.
RatFunc parse_ratfunc(const FieldSpec& field, std::string_view text);

/// Canonical text form; parse(format(f)) == f.
std::string format_ratfunc(const RatFunc& f);

std::string format_poly(const Poly& f);

/// Tails print as "a1/x + a2/x^2 + ..." with zero terms skipped ("0" when
/// empty); the result is valid parser input.
std::string format_tail(const LaurentTail& t);

}  // namespace ffgeom

#pragma once

#include <string_view>

#include "polyeuler/interval_sets.hpp"

namespace polyeuler {

/// Parses a set literal such as "(0,1) u {2, 5/2} & !(-inf,0]".
///   expr    := diff (('u' | '|') diff)*
///   diff    := meet ('\' meet)*
///   meet    := unary ('&' unary)*
///   unary   := '!' unary | atom
///   atom    := interval | '{' [value (',' value)*] '}' | '(' expr ')'
///   interval:= ('(' | '[') end ',' end (')' | ']')
///   end     := ['+' | '-'] (integer ['/' integer] | 'inf')
/// Throws InputError with the column and the expected tokens.
PolyhedralSet1D parse_set_expression(std::string_view text);

}  // namespace polyeuler

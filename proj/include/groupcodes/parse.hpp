#pragma once

// Text formats shared by the CLI and the tests.
//
//   field     q=<int>,m=<int>[,modulus=c0,c1,...]   (commas or spaces)
//   group     cyclic:k | dihedral:k | symmetric:k | table:<path>
//             product:<group>x<group>[x...]
//   element   sums and products of integers, a, a^k, g, g<i>, g^k and
//             parenthesized subexpressions, e.g. "(a^2)*g2 + a*g4"
//
// In element literals `a` is the generator of K, `g<i>` is the group element
// with table index i and `g` alone means g1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groupcodes/finite_field.hpp"
#include "groupcodes/fp_matrix.hpp"
#include "groupcodes/group.hpp"
#include "groupcodes/group_algebra.hpp"

namespace groupcodes {

FieldTowerPtr parse_field(std::string_view text);
GroupPtr parse_group(std::string_view text);
AlgebraElement parse_element(const GroupAlgebraPtr& algebra, std::string_view text);

/// Comma separated list of group indices, e.g. "2,4".
std::vector<std::size_t> parse_index_list(std::string_view text);
/// Comma separated form names, e.g. "TE,TH".
std::vector<FormKind> parse_form_list(std::string_view text);

/// Hex packing of an F_p row: each entry takes b bits, b the bit length of
/// p − 1, written most significant first and padded with zero bits to a
/// whole number of hex digits.
std::string pack_row(std::span<const Scalar> row, Scalar p);
FpVector unpack_row(std::string_view hex, Scalar p, std::size_t length);

}  // namespace groupcodes

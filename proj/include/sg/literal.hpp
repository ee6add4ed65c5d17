#pragma once

#include <string>
#include <string_view>

#include "sg/quat.hpp"

namespace sg {

// Exact text forms for every scalar domain.  All parsers are
// whitespace-insensitive; printers emit canonical fully-reduced literals so
// that parse(print(x)) == x and regenerated files are byte-identical.
//
//   rational    -?INT(/INT)?
//   quadratic   RAT(+|-)RAT*rt(INT)   (plain RAT accepted and emitted
//                                      whenever the rt-part vanishes)
//   complex     QUAD(+|-)QUAD*i
//   quaternion  (F; F; F; F)          components in the base field

Rat parse_rat(std::string_view s);
Quad parse_quad(std::string_view s);
CPair parse_cpair(std::string_view s);
Quat parse_quat(std::string_view s);

std::string print_rat(const Rat& r);
std::string print_quad(const Quad& q);
std::string print_cpair(const CPair& c);
std::string print_quat(const Quat& q);

}  // namespace sg

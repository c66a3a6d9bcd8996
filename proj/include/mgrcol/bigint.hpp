#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mgrcol {

// Exact integer type used for coloring counts and Seifert matrix entries.
// Counts grow multiplicatively with free arcs and congruence transforms
// blow entries up well past 64 bits.
using BigInt = boost::multiprecision::cpp_int;

} // namespace mgrcol

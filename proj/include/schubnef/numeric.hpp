#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubnef {

// Exact arithmetic everywhere: counts and cone data must never overflow or round.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace schubnef

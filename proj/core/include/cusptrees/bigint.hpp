#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cusptrees {

// Counting values grow exponentially with the tip count; all counting
// paths use exact arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace cusptrees

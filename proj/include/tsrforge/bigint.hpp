#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tsrforge {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace tsrforge

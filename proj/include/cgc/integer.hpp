#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgc {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer &i) { return i.str(); }

} // namespace cgc

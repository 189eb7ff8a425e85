#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace invtree {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace invtree

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace greenseq {

// Arrow multiplicities grow without bound under repeated mutation and scaling.
using Integer = boost::multiprecision::cpp_int;

inline int sign(const Integer& x) { return x.sign(); }

} // namespace greenseq

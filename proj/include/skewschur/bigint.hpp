#ifndef SKEWSCHUR_BIGINT_HPP
#define SKEWSCHUR_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace skewschur {

/// Exact arbitrary-precision integer used for every coefficient.
using Int = boost::multiprecision::cpp_int;

}  // namespace skewschur

#endif

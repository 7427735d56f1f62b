#ifndef KZRING_NUMERIC_HPP
#define KZRING_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace kzring {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long to_ll(const Integer& v) { return v.convert_to<long long>(); }

// Exact rational -> long long; throws if not an integer or out of range.
long long rational_to_ll(const Rational& r);

} // namespace kzring

#endif

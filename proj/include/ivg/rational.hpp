#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ivg {

/// Exact endpoint value. All interval comparisons are exact; there are no
/// floating-point endpoints anywhere.
using Rational = boost::rational<std::int64_t>;

/// Simplest rational strictly between `lo` and `hi` (smallest denominator,
/// then smallest numerator), found by Stern-Brocot descent. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

std::string to_string(const Rational& r);

}  // namespace ivg
